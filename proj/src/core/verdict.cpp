#include "core/verdict.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "core/appendix.hpp"
#include "core/chartab.hpp"
#include "core/errors.hpp"
#include "core/quotients.hpp"

namespace eichler {

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::PC: return "PC";
    case VerdictStatus::FailsSFC: return "fails-SFC";
    case VerdictStatus::SfcHoldsPcOpen: return "SFC, PC open";
    case VerdictStatus::Open: return "open";
    }
    return "open";
}

namespace {

// Rule justifications, phrased by what each rule checks.
constexpr const char* kCiteR1 =
    "a quaternionic-count-preserving surjection onto a verified cancellation "
    "group transfers cancellation back";
constexpr const char* kCiteR1b =
    "a direct product of a binary polyhedral group with a group that has no "
    "quaternionic characters and no order-2 quotient keeps projective "
    "cancellation";
constexpr const char* kCiteR2 = "isomorphic to a group with verified projective cancellation";
constexpr const char* kCiteR3 =
    "stably free cancellation failure lifts through quotients, and the named "
    "quotient is a verified failure";
constexpr const char* kCiteR4 =
    "isomorphic to a group where stably free cancellation is verified but "
    "projective cancellation remains undetermined";
constexpr const char* kCiteR5 =
    "no verified criterion applies; quotients with unresolved cancellation "
    "block further reduction";
constexpr const char* kCite2G =
    "a 2-group keeps projective cancellation unless it maps onto one of the "
    "four exceptional 2-groups or a generalized quaternion group of order at "
    "least 32";
constexpr const char* kCiteC22 =
    "for groups mapping onto the Klein four-group, stably free cancellation "
    "fails exactly when one of the listed groups is a quotient";
constexpr const char* kCitePeriodicPC =
    "groups with periodic cohomology and at most two quaternionic characters "
    "keep projective cancellation";
constexpr const char* kCitePeriodicEvery =
    "every stable class of projectives witnesses non-cancellation";
constexpr const char* kCitePeriodicKernel =
    "projectives whose stable class lies in the kernel subgroup of the "
    "projective class group witness non-cancellation";

const char* const kBinaryPolyhedral[] = {"Q(8)", "Q(12)", "Q(16)", "Q(20)", "BT", "BO", "BI"};

// First named-list member dividing |g| that is a quotient of g.
std::optional<std::string> scan_named_quotients(const Group& g,
                                                const std::vector<std::string>& names,
                                                const Zoo& zoo, const Config& cfg) {
    for (const std::string& name : names) {
        GroupPtr h = zoo.parse(name, cfg);
        if (h->order() == 0 || g.order() % h->order() != 0) continue;
        if (h->order() == g.order()) {
            if (is_isomorphic(g, *h, cfg)) return name;
            continue;
        }
        if (has_quotient(g, *h, cfg)) return name;
    }
    return std::nullopt;
}

// First dicyclic quotient Q(4n) of g with accept(n), ascending n.  Candidates
// are pre-filtered without building Q(4n): a dicyclic quotient forces the
// abelianization onto C4 (n odd) or C2 x C2 (n even), and a proper quotient
// of order 4n needs a normal subgroup of order |g|/4n.
std::optional<std::string> scan_dicyclic_quotients(const Group& g, const Zoo& zoo,
                                                   const Config& cfg, auto accept) {
    const std::uint64_t go = g.order();
    if (go % 4 != 0) return std::nullopt;
    unsigned evens = 0;
    bool has4 = false;
    for (std::uint64_t d : g.perm.abelian_invariants()) {
        if (d % 2 == 0) ++evens;
        if (d % 4 == 0) has4 = true;
    }
    if (!has4 && evens < 2) return std::nullopt;

    std::set<std::uint64_t> kernel_orders;
    for (const NormalSubgroup& n : normal_subgroups(g, cfg)) kernel_orders.insert(n.order);

    for (std::uint64_t n = 2; 4 * n <= go; ++n) {
        if (go % (4 * n) != 0 || !accept(n)) continue;
        if (n % 2 == 0 ? evens < 2 : !has4) continue;
        if (4 * n == go) {
            const auto ab = g.perm.abelian_invariants();
            const bool shape = (n % 2 == 1 && ab == std::vector<std::uint64_t>{4}) ||
                               (n % 2 == 0 && ab == std::vector<std::uint64_t>{2, 2});
            if (!shape) continue;
        } else if (kernel_orders.count(go / (4 * n)) == 0) {
            continue;
        }
        const std::string name = "Q(" + std::to_string(4 * n) + ")";
        GroupPtr h = zoo.parse(name, cfg);
        if (4 * n == go ? is_isomorphic(g, *h, cfg) : has_quotient(g, *h, cfg).has_value())
            return name;
    }
    return std::nullopt;
}

// Witness for the product rule: some direct factor is binary polyhedral and
// every other factor has odd abelianization (so no order-2 quotient) and no
// quaternionic character.  Both conditions are needed: a complement with a
// quaternionic character contributes quaternionic characters to the product
// beyond those of the polyhedral factor, and such products can fail
// cancellation (Q8 x BT maps onto BT x C2 x C2, which fails stably free
// cancellation).
std::optional<std::string> swan_product_witness(const Group& g, const Zoo& zoo,
                                                const Config& cfg) {
    if (g.factors.size() < 2) return std::nullopt;
    auto eichler_odd = [&](const Group& k) {
        for (std::uint64_t d : k.perm.abelian_invariants())
            if (d % 2 == 0) return false;
        return quaternionic_character_count(k, cfg) == 0;
    };
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const Group& f = *g.factors[i];
        std::string polyhedral_name;
        for (const char* name : kBinaryPolyhedral) {
            GroupPtr h = zoo.parse(name, cfg);
            if (h->order() == f.order() && is_isomorphic(f, *h, cfg)) {
                polyhedral_name = name;
                break;
            }
        }
        if (polyhedral_name.empty()) continue;
        bool rest_ok = true;
        for (std::size_t j = 0; j < g.factors.size() && rest_ok; ++j)
            if (j != i) rest_ok = eichler_odd(*g.factors[j]);
        if (rest_ok)
            return polyhedral_name + " x K with K of odd abelianization and no "
                                     "quaternionic character";
    }
    return std::nullopt;
}

bool sylow2_is_cyclic(const Group& g) {
    std::uint64_t two_part = 1;
    for (std::uint64_t n = g.order(); n % 2 == 0; n /= 2) two_part *= 2;
    if (two_part == 1) return true;
    auto cls = g.classes();
    for (unsigned i = 0; i < cls->count(); ++i)
        if (cls->rep_order(i) == two_part) return true;
    return false;
}

} // namespace

const FactTables& FactTables::bundled() {
    static const FactTables t = [] {
        FactTables f;
        f.family = {"C(1)", "Q(8)", "Q(12)", "Q(16)", "Q(20)", "BT", "BO", "BI"};
        for (const FactRow& r : fact_table())
            if (r.level >= 1 && r.cancellation == Cancellation::PC) f.pc_isomorphs.push_back(r.name);
        f.sfc_fail_quotients = {"Q8xC2",     "Q12xC2",    "Q16xC2",   "Q20xC2",
                                "BOxC2",     "BIxC2",     "BTxC2^2",  "SG(32,14)",
                                "SG(36,7)",  "SG(64,14)", "SG(100,7)"};
        f.sfc_holds_pc_open = {"SG(96,66)", "Q8:BT", "BT x C(8)", "BTxQ12", "BTxQ20"};
        f.open_blockers = {"BTxC2", "SG(96,66)", "SG(384,18129)", "SG(1152,155476)",
                           "Q8:BT", "Q8:BT^2"};
        return f;
    }();
    return t;
}

// ---------------------------------------------------------------------------
// Family membership and known covers
// ---------------------------------------------------------------------------

std::optional<std::string> family_eichler_quotient(const Group& g, const Zoo& zoo,
                                                   const Config& cfg) {
    const std::uint64_t go = g.order();
    const std::uint64_t count = quaternionic_character_count(g, cfg);

    auto reaches = [&](const std::string& spec) {
        GroupPtr h = zoo.parse(spec, cfg);
        if (quaternionic_character_count(*h, cfg) != count) return false;
        if (h->order() == go) return is_isomorphic(g, *h, cfg);
        return has_quotient(g, *h, cfg).has_value();
    };

    for (const std::string& name : FactTables::bundled().family) {
        GroupPtr h = zoo.parse(name, cfg);
        if (go % h->order() != 0) continue;
        if (reaches(name)) return name;
    }

    // products BT^n x BI^m with n+m >= 2; count must be n + 2m
    struct Candidate {
        std::uint64_t order;
        unsigned n, m;
    };
    std::vector<Candidate> candidates;
    std::uint64_t pow_bi = 1;
    for (unsigned m = 0; pow_bi <= go; ++m, pow_bi *= 120) {
        std::uint64_t order = pow_bi;
        for (unsigned n = 0; order <= go; ++n, order *= 24) {
            if (n + m >= 2 && go % order == 0 && count == n + 2ull * m)
                candidates.push_back({order, n, m});
            if (order > go / 24) break;
        }
        if (pow_bi > go / 120) break;
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.order, a.n) < std::tie(b.order, b.n);
    });
    for (const Candidate& c : candidates) {
        std::string spec;
        for (unsigned i = 0; i < c.n; ++i) spec += (spec.empty() ? "BT" : " x BT");
        for (unsigned i = 0; i < c.m; ++i) spec += (spec.empty() ? "BI" : " x BI");
        if (reaches(spec)) return spec;
    }
    return std::nullopt;
}

bool is_family_eichler(const Group& g, const Zoo& zoo, const Config& cfg) {
    return family_eichler_quotient(g, zoo, cfg).has_value();
}

std::optional<std::string> known_cover_quotient(const Group& g, const Zoo& zoo,
                                                const Config& cfg) {
    if (auto w = scan_dicyclic_quotients(g, zoo, cfg, [](std::uint64_t n) { return n >= 6; }))
        return w;
    static const std::vector<std::string> named = {
        "Q8xC2",     "Q12xC2",   "Q16xC2",    "Q20xC2",    "BTxC2",         "BOxC2",
        "BIxC2",     "SG(32,14)", "SG(36,7)", "SG(64,14)", "SG(96,66)",     "SG(100,7)",
        "SG(384,18129)", "SG(1152,155476)", "Q8:BT", "Q8:BT^2"};
    return scan_named_quotients(g, named, zoo, cfg);
}

// ---------------------------------------------------------------------------
// General classifier
// ---------------------------------------------------------------------------

Verdict classify(const Group& g, const Zoo& zoo, const Config& cfg) {
    const FactTables& tables = FactTables::bundled();
    Verdict v;
    v.mode = "general";

    bool pc_matched = false, fail_matched = false, open_iso_matched = false;

    if (auto w = family_eichler_quotient(g, zoo, cfg)) {
        v.trace.push_back({"R1", kCiteR1, *w});
        pc_matched = true;
    }
    if (auto w = swan_product_witness(g, zoo, cfg)) {
        v.trace.push_back({"R1b", kCiteR1b, *w});
        pc_matched = true;
    }
    for (const std::string& name : tables.pc_isomorphs) {
        GroupPtr h = zoo.parse(name, cfg);
        if (h->order() != g.order() || !is_isomorphic(g, *h, cfg)) continue;
        v.trace.push_back({"R2", kCiteR2, name});
        pc_matched = true;
        break;
    }

    std::optional<std::string> fail_witness =
        scan_dicyclic_quotients(g, zoo, cfg, [](std::uint64_t n) { return n >= 6; });
    if (!fail_witness)
        fail_witness = scan_named_quotients(g, tables.sfc_fail_quotients, zoo, cfg);
    if (fail_witness) {
        v.trace.push_back({"R3", kCiteR3, *fail_witness});
        fail_matched = true;
    }

    for (const std::string& name : tables.sfc_holds_pc_open) {
        GroupPtr h = zoo.parse(name, cfg);
        if (h->order() != g.order() || !is_isomorphic(g, *h, cfg)) continue;
        v.trace.push_back({"R4", kCiteR4, name});
        open_iso_matched = true;
        break;
    }

    if ((pc_matched && (fail_matched || open_iso_matched)) || (fail_matched && open_iso_matched))
        throw InternalError("contradictory classification rules matched for '" + g.spec + "'");

    if (pc_matched) {
        v.status = VerdictStatus::PC;
    } else if (fail_matched) {
        v.status = VerdictStatus::FailsSFC;
    } else if (open_iso_matched) {
        v.status = VerdictStatus::SfcHoldsPcOpen;
    } else {
        v.status = VerdictStatus::Open;
        std::string blockers;
        for (const std::string& name : tables.open_blockers) {
            GroupPtr h = zoo.parse(name, cfg);
            if (h->order() == 0 || g.order() % h->order() != 0) continue;
            const bool hit = h->order() == g.order() ? is_isomorphic(g, *h, cfg)
                                                     : has_quotient(g, *h, cfg).has_value();
            if (!hit) continue;
            if (!blockers.empty()) blockers += ", ";
            blockers += name;
        }
        v.trace.push_back({"R5", kCiteR5, blockers.empty() ? "none" : blockers});
    }
    return v;
}

// ---------------------------------------------------------------------------
// Prescribed-shape classifiers
// ---------------------------------------------------------------------------

Verdict classify_two_group(const Group& g, const Zoo& zoo, const Config& cfg) {
    std::uint64_t n = g.order();
    while (n % 2 == 0) n /= 2;
    if (n != 1)
        throw NotATwoGroup("|G| = " + std::to_string(g.order()) + " is not a power of 2");

    Verdict v;
    v.mode = "two-group";
    static const std::vector<std::string> named = {"Q8xC2", "Q16xC2", "SG(32,14)", "SG(64,14)"};
    std::optional<std::string> witness = scan_named_quotients(g, named, zoo, cfg);
    if (!witness)
        witness = scan_dicyclic_quotients(
            g, zoo, cfg, [](std::uint64_t m) { return m >= 8 && (m & (m - 1)) == 0; });
    if (witness) {
        v.status = VerdictStatus::FailsSFC;
        v.trace.push_back({"2G-fail", kCite2G, *witness});
    } else {
        v.status = VerdictStatus::PC;
        v.trace.push_back({"2G-pass", kCite2G, "no listed quotient"});
    }
    return v;
}

Verdict classify_c22(const Group& g, const Zoo& zoo, const Config& cfg) {
    unsigned evens = 0;
    for (std::uint64_t d : g.perm.abelian_invariants())
        if (d % 2 == 0) ++evens;
    if (evens < 2)
        throw NoC22Quotient("the abelianization of '" + g.spec +
                            "' has fewer than two even invariants");

    Verdict v;
    v.mode = "c22";
    // dicyclic: Q(4n) with n >= 6 even
    std::optional<std::string> witness = scan_dicyclic_quotients(
        g, zoo, cfg, [](std::uint64_t m) { return m >= 6 && m % 2 == 0; });
    // dicyclic x C2: Q(4n) x C2 with n in {2,4} or n >= 3 odd.  The target's
    // abelianization is C2^3 (n = 2, 4) or C4 x C2 (n odd), which must be a
    // quotient of g's; proper quotients also need a kernel of matching order.
    if (!witness) {
        const std::uint64_t go = g.order();
        bool has4 = false;
        for (std::uint64_t d : g.perm.abelian_invariants())
            if (d % 4 == 0) has4 = true;
        std::set<std::uint64_t> kernel_orders;
        for (const NormalSubgroup& n : normal_subgroups(g, cfg)) kernel_orders.insert(n.order);
        for (std::uint64_t m = 2; !witness && 8 * m <= go; ++m) {
            if (go % (8 * m) != 0) continue;
            if (!(m == 2 || m == 4 || (m >= 3 && m % 2 == 1))) continue;
            if (m % 2 == 0 ? evens < 3 : !has4) continue;
            if (8 * m < go && kernel_orders.count(go / (8 * m)) == 0) continue;
            const std::string spec = "Q(" + std::to_string(4 * m) + ") x C(2)";
            GroupPtr h = zoo.parse(spec, cfg);
            const bool hit = h->order() == go ? is_isomorphic(g, *h, cfg)
                                              : has_quotient(g, *h, cfg).has_value();
            if (hit) witness = spec;
        }
    }
    if (!witness) {
        static const std::vector<std::string> named = {"BTxC2^2", "BOxC2", "BIxC2", "SG(32,14)",
                                                       "SG(64,14)"};
        witness = scan_named_quotients(g, named, zoo, cfg);
    }
    if (witness) {
        v.status = VerdictStatus::FailsSFC;
        v.trace.push_back({"C22-fail", kCiteC22, *witness});
    } else {
        v.status = VerdictStatus::PC;
        v.trace.push_back({"C22-pass", kCiteC22, "no listed quotient"});
    }
    return v;
}

Verdict classify_periodic(const Group& g, const Zoo& zoo, const Config& cfg) {
    (void)zoo;
    if (!has_periodic_cohomology(g, cfg))
        throw NotPeriodic("'" + g.spec + "' contains C_p x C_p for some prime p");

    Verdict v;
    v.mode = "periodic";
    const std::uint64_t count = quaternionic_character_count(g, cfg);
    if (count <= 2) {
        v.status = VerdictStatus::PC;
        v.trace.push_back(
            {"P1", kCitePeriodicPC, "quaternionic count " + std::to_string(count)});
        return v;
    }
    v.status = VerdictStatus::FailsSFC;
    if (count == 3) {
        if (sylow2_is_cyclic(g))
            v.trace.push_back({"P2a", kCitePeriodicEvery, "cyclic Sylow 2-subgroup"});
        else
            v.trace.push_back(
                {"P2b", kCitePeriodicKernel, "generalized quaternion Sylow 2-subgroup"});
    } else {
        v.trace.push_back(
            {"P3", kCitePeriodicEvery, "quaternionic count " + std::to_string(count)});
    }
    return v;
}

// ---------------------------------------------------------------------------
// BT x C2 equivalence cross-check
// ---------------------------------------------------------------------------

TxC2Report txc2_equivalence_check(const Group& g, const Zoo& zoo, const Config& cfg) {
    GroupPtr txc2 = zoo.parse("BT x C(2)", cfg);
    const bool onto = g.order() % txc2->order() == 0 &&
                      (g.order() == txc2->order() ? is_isomorphic(g, *txc2, cfg)
                                                  : has_quotient(g, *txc2, cfg).has_value());
    if (!onto)
        throw NotApplicable("'" + g.spec + "' does not map onto BT x C2");

    TxC2Report report;
    report.eichler_txc2 =
        quaternionic_character_count(g, cfg) == quaternionic_character_count(*txc2, cfg);
    report.obstruction =
        scan_dicyclic_quotients(g, zoo, cfg, [](std::uint64_t n) { return n >= 6; });
    if (!report.obstruction) {
        static const std::vector<std::string> named = {"BTxC2^2", "BTxQ12", "(Q8:BT)xC2",
                                                       "BTxQ20",  "BTxBO",  "BT^2xC2"};
        report.obstruction = scan_named_quotients(g, named, zoo, cfg);
    }
    report.agree = report.eichler_txc2 != report.obstruction.has_value();
    return report;
}

// ---------------------------------------------------------------------------
// Fact-table reproduction
// ---------------------------------------------------------------------------

std::vector<TableCheckRow> check_table(const Zoo& zoo, const Config& cfg) {
    std::vector<TableCheckRow> rows;
    for (const FactRow& r : fact_table()) {
        if (r.level == 0) continue;
        VerdictStatus expected = VerdictStatus::Open;
        switch (r.cancellation) {
        case Cancellation::PC: expected = VerdictStatus::PC; break;
        case Cancellation::FailsSFC: expected = VerdictStatus::FailsSFC; break;
        case Cancellation::SfcHoldsPcOpen: expected = VerdictStatus::SfcHoldsPcOpen; break;
        case Cancellation::Unknown: expected = VerdictStatus::Open; break;
        }
        GroupPtr g = zoo.parse(r.name, cfg);
        const Verdict v = classify(*g, zoo, cfg);
        TableCheckRow row;
        row.name = r.name;
        row.expected = to_string(expected);
        row.got = to_string(v.status);
        row.ok = v.status == expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace eichler
