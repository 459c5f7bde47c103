#include "core/mnec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "core/appendix.hpp"
#include "core/chartab.hpp"
#include "core/errors.hpp"

namespace eichler {

namespace {

using ordered_json = nlohmann::ordered_json;

// Dicyclic specs look like "Q(m)" or "Qm"; yields m on match.
bool dicyclic_order_of_spec(const std::string& s, std::uint64_t& m) {
    std::string digits;
    if (s.size() >= 4 && s[0] == 'Q' && s[1] == '(' && s.back() == ')')
        digits = s.substr(2, s.size() - 3);
    else if (s.size() >= 2 && s[0] == 'Q')
        digits = s.substr(1);
    else
        return false;
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        return false;
    m = 0;
    for (char c : digits) {
        m = m * 10 + static_cast<std::uint64_t>(c - '0');
        if (m > 1'000'000'000) return false;
    }
    return m >= 8 && m % 4 == 0;
}

// All kernels in g's lattice whose quotient is isomorphic to h.
std::vector<const NormalSubgroup*> kernels_onto(const Group& g, const Group& h,
                                                const Config& cfg) {
    std::vector<const NormalSubgroup*> out;
    const std::uint64_t go = g.order();
    const std::uint64_t ho = h.order();
    if (ho == 0 || go % ho != 0) return out;
    const std::uint64_t kernel_order = go / ho;
    for (const NormalSubgroup& n : normal_subgroups(g, cfg)) {
        if (n.order != kernel_order) continue;
        GroupPtr q = quotient_group(g, n, cfg);
        if (is_isomorphic(*q, h, cfg)) out.push_back(&n);
    }
    return out;
}

struct CoverTarget {
    const Group* group = nullptr;
    std::uint64_t mh = 0;
};

// True when some proper quotient of g is a non-Eichler cover of one of the
// targets.  A proper quotient g/N maps onto a target h exactly when N lies
// below some kernel realizing h, and its quaternionic count is read off g's
// own character table, so no quotient beyond the realizing ones is built.
bool has_blocking_quotient(const Group& g, const std::vector<CoverTarget>& targets,
                           const Config& cfg) {
    if (targets.empty()) return false;
    const auto& lattice = normal_subgroups(g, cfg);
    auto table = CharacterTable::of(g.classes(), cfg);

    std::vector<std::vector<const NormalSubgroup*>> realizers;
    realizers.reserve(targets.size());
    for (const CoverTarget& t : targets) realizers.push_back(kernels_onto(g, *t.group, cfg));

    for (const NormalSubgroup& n : lattice) {
        if (n.order <= 1 || n.order >= g.order()) continue;
        const unsigned count = table->quaternionic_count_of_quotient(n.class_indices);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (count <= targets[t].mh) continue;
            for (const NormalSubgroup* m : realizers[t]) {
                if (std::includes(m->class_indices.begin(), m->class_indices.end(),
                                  n.class_indices.begin(), n.class_indices.end()))
                    return true;
            }
        }
    }
    return false;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Exclusion sets
// ---------------------------------------------------------------------------

ExclusionSet ExclusionSet::none() { return ExclusionSet{}; }

ExclusionSet ExclusionSet::known_failures() {
    ExclusionSet e;
    e.names = {"Q8xC2",     "Q12xC2",   "Q16xC2",    "Q20xC2",    "BOxC2",    "BIxC2",
               "BTxC2^2",   "SG(32,14)", "SG(36,7)", "SG(64,14)", "SG(100,7)"};
    e.dicyclic_min_n = 6;
    return e;
}

bool ExclusionSet::contains_name(const std::string& name) const {
    if (std::find(names.begin(), names.end(), name) != names.end()) return true;
    std::uint64_t m = 0;
    return dicyclic_order_of_spec(name, m) && covers_dicyclic_order(m);
}

bool ExclusionSet::covers_dicyclic_order(std::uint64_t order) const {
    return dicyclic_min_n > 0 && order % 4 == 0 && order / 4 >= dicyclic_min_n;
}

// ---------------------------------------------------------------------------
// Cover predicates
// ---------------------------------------------------------------------------

bool is_non_eichler_cover(const Group& g, const Group& h, const Config& cfg) {
    if (quaternionic_character_count(g, cfg) <= quaternionic_character_count(h, cfg))
        return false;
    return has_quotient(g, h, cfg).has_value();
}

bool is_minimal_nec(const Group& g, const Group& h, const Config& cfg) {
    if (!is_non_eichler_cover(g, h, cfg)) return false;
    std::vector<CoverTarget> targets{{&h, quaternionic_character_count(h, cfg)}};
    return !has_blocking_quotient(g, targets, cfg);
}

// ---------------------------------------------------------------------------
// Graph construction
// ---------------------------------------------------------------------------

EichlerGraph gamma_levels(const Zoo& zoo, unsigned depth, const ExclusionSet& excl,
                          const Config& cfg) {
    struct Node {
        std::string name;
        std::vector<std::string> aliases;
        GroupPtr group;
        std::uint64_t order = 0;
        std::uint64_t mh = 0;
        int level = -1;
    };

    std::vector<Node> nodes;
    {
        Node c1;
        c1.name = "C1";
        c1.group = zoo.parse("C(1)", cfg);
        c1.order = 1;
        c1.mh = 0;
        c1.level = 0;
        nodes.push_back(std::move(c1));
    }

    // Catalog nodes in (order, name) order, merged up to isomorphism; the
    // parametric exclusion family never enters the graph.
    std::vector<const CatalogEntry*> entries;
    for (const CatalogEntry& e : zoo.catalog()) entries.push_back(&e);
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
        return std::tie(a->order, a->name) < std::tie(b->order, b->name);
    });
    for (const CatalogEntry* e : entries) {
        std::uint64_t m = 0;
        if ((dicyclic_order_of_spec(e->name, m) || dicyclic_order_of_spec(e->construction, m)) &&
            excl.covers_dicyclic_order(m))
            continue;
        GroupPtr gp = zoo.parse(e->name, cfg);
        bool merged = false;
        for (Node& n : nodes) {
            if (n.order != gp->order()) continue;
            if (is_isomorphic(*n.group, *gp, cfg)) {
                n.aliases.push_back(e->name);
                merged = true;
                break;
            }
        }
        if (merged) continue;
        Node n;
        n.name = e->name;
        n.group = std::move(gp);
        n.order = n.group->order();
        n.mh = quaternionic_character_count(*n.group, cfg);
        nodes.push_back(std::move(n));
    }

    // Level-by-level expansion.  Nodes placed at level k become targets for
    // round k unless excluded by name; candidates must cover one target and
    // have no proper quotient covering any target of the round.
    auto named_excluded = [&excl](const Node& n) {
        if (excl.contains_name(n.name)) return true;
        for (const std::string& a : n.aliases)
            if (excl.contains_name(a)) return true;
        return false;
    };
    for (unsigned k = 0; k < depth; ++k) {
        std::vector<const Node*> expand;
        for (const Node& n : nodes)
            if (n.level == static_cast<int>(k) && !named_excluded(n)) expand.push_back(&n);
        if (expand.empty()) break;

        for (Node& cand : nodes) {
            if (cand.level >= 0) continue;
            bool covers = false;
            for (const Node* h : expand) {
                if (cand.order % h->order != 0 || cand.mh <= h->mh) continue;
                if (is_non_eichler_cover(*cand.group, *h->group, cfg)) {
                    covers = true;
                    break;
                }
            }
            if (!covers) continue;
            std::vector<CoverTarget> targets;
            for (const Node* h : expand)
                if (cand.order % h->order == 0) targets.push_back({h->group.get(), h->mh});
            if (has_blocking_quotient(*cand.group, targets, cfg)) continue;
            cand.level = static_cast<int>(k) + 1;
        }
    }

    // Assemble: placed nodes sorted by (level, order, name), then per-pair
    // minimal-cover edges toward strictly lower levels.
    std::vector<const Node*> placed;
    for (const Node& n : nodes)
        if (n.level >= 0) placed.push_back(&n);
    std::sort(placed.begin(), placed.end(), [](const Node* a, const Node* b) {
        return std::tie(a->level, a->order, a->name) < std::tie(b->level, b->order, b->name);
    });

    EichlerGraph graph;
    for (const Node* n : placed) {
        GraphNode gn;
        gn.name = n->name;
        gn.aliases = n->aliases;
        gn.order = n->order;
        gn.mh = n->mh;
        gn.level = static_cast<unsigned>(n->level);
        const FactRow* row = fact_row(n->name);
        gn.status = row ? to_string(row->cancellation) : "unknown";
        graph.nodes.push_back(std::move(gn));
    }
    for (const Node* from : placed) {
        if (from->level < 1) continue;
        for (const Node* to : placed) {
            if (to->level >= from->level) continue;
            if (from->order % to->order != 0) continue;
            if (is_minimal_nec(*from->group, *to->group, cfg))
                graph.edges.push_back(GraphEdge{from->name, to->name,
                                                static_cast<unsigned>(from->level),
                                                static_cast<unsigned>(to->level)});
        }
    }
    return graph;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string EichlerGraph::to_json() const {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (const GraphNode& n : nodes) {
        ordered_json jn;
        jn["name"] = n.name;
        jn["aliases"] = n.aliases;
        jn["order"] = n.order;
        jn["mH"] = n.mh;
        jn["level"] = n.level;
        jn["status"] = n.status;
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = ordered_json::array();
    for (const GraphEdge& e : edges) {
        ordered_json je;
        je["from"] = e.from;
        je["to"] = e.to;
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

std::string EichlerGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph minimal_covers {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, style=filled, fontname=\"Helvetica\"];\n";

    std::map<unsigned, std::vector<const GraphNode*>> by_level;
    for (const GraphNode& n : nodes) by_level[n.level].push_back(&n);
    for (const auto& [level, members] : by_level) {
        out << "  { rank=same;";
        for (const GraphNode* n : members) out << " \"" << dot_escape(n->name) << "\";";
        out << " }\n";
    }
    for (const GraphNode& n : nodes) {
        std::string fill = "white";
        if (n.status == "PC")
            fill = "lightskyblue";
        else if (n.status == "fails-SFC")
            fill = "lightcoral";
        else if (n.status == "SFC, PC open")
            fill = "white:lightskyblue";
        out << "  \"" << dot_escape(n.name) << "\" [fillcolor=\"" << fill << "\", label=\""
            << dot_escape(n.name) << "\\n|G|=" << n.order << "  m=" << n.mh << "\"];\n";
    }
    for (const GraphEdge& e : edges) {
        out << "  \"" << dot_escape(e.from) << "\" -> \"" << dot_escape(e.to) << "\"";
        if (e.from_level > e.to_level + 1) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Covering-principle cross-check
// ---------------------------------------------------------------------------

LemmaReport fundamental_lemma_check(
    const Group& g, const std::vector<std::pair<std::string, GroupPtr>>& family,
    const std::vector<std::pair<std::string, GroupPtr>>& minimal_covers, const Config& cfg) {
    // Closure requirement: for each member h and each proper quotient q of h
    // that has no strictly smaller quotient of equal quaternionic count, q
    // must again be a member.  Such q are detected inside h's lattice: the
    // kernels N (proper, nontrivial) with no normal subgroup strictly above
    // N of equal quotient count.
    for (const auto& [hname, h] : family) {
        const auto& lattice = normal_subgroups(*h, cfg);
        auto table = CharacterTable::of(h->classes(), cfg);
        for (const NormalSubgroup& n : lattice) {
            if (n.order <= 1 || n.order >= h->order()) continue;
            const unsigned count = table->quaternionic_count_of_quotient(n.class_indices);
            bool terminal = true;
            for (const NormalSubgroup& m : lattice) {
                if (m.order <= n.order) continue;
                if (!std::includes(m.class_indices.begin(), m.class_indices.end(),
                                   n.class_indices.begin(), n.class_indices.end()))
                    continue;
                if (table->quaternionic_count_of_quotient(m.class_indices) == count) {
                    terminal = false;
                    break;
                }
            }
            if (!terminal) continue;
            const std::uint64_t q_order = h->order() / n.order;
            GroupPtr q;
            bool matched = false;
            for (const auto& [kname, k] : family) {
                if (k->order() != q_order) continue;
                if (!q) q = quotient_group(*h, n, cfg);
                if (is_isomorphic(*q, *k, cfg)) {
                    matched = true;
                    break;
                }
            }
            if (!matched)
                throw NotQuotientClosed(
                    "family member '" + hname + "' has a terminal quotient of order " +
                    std::to_string(q_order) + " outside the family");
        }
    }

    LemmaReport report;
    for (const auto& [name, h] : family) {
        if (is_eichler_quotient(g, *h, cfg)) {
            report.s_eichler = true;
            report.eichler_witness = name;
            break;
        }
    }
    for (const auto& [name, k] : minimal_covers) {
        if (has_quotient(g, *k, cfg)) {
            report.cover_witness = name;
            break;
        }
    }
    report.agree = report.s_eichler != report.cover_witness.has_value();
    return report;
}

} // namespace eichler
