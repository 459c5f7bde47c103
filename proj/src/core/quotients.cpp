#include "core/quotients.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/chartab.hpp"
#include "core/errors.hpp"
#include "core/presentation.hpp"

namespace eichler {

namespace {

// Safety cap on the number of normal subgroups enumerated for one group;
// past this the lattice is almost certainly elementary-abelian blowup.
constexpr std::size_t kLatticeCap = 4096;

// Operation budget for the prime-square search in has_periodic_cohomology.
constexpr std::uint64_t kPairScanBudget = 50'000'000;

std::vector<unsigned> class_signature(const ConjugacyClasses& cls, const PermGroup& s) {
    std::vector<unsigned> sig;
    for (unsigned j = 0; j < cls.count(); ++j)
        if (s.contains(cls.rep(j))) sig.push_back(j);
    return sig;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Extend a permutation of one factor's points to the product's points,
// fixing everything outside the block starting at `offset`.
Perm extend_to_block(const Perm& p, unsigned total_degree, unsigned offset) {
    std::vector<Point> img(total_degree);
    for (unsigned x = 0; x < total_degree; ++x) img[x] = static_cast<Point>(x);
    for (unsigned x = 0; x < p.degree(); ++x)
        img[offset + x] = static_cast<Point>(offset + p[static_cast<Point>(x)]);
    return Perm(std::move(img));
}

} // namespace

// ---------------------------------------------------------------------------
// Normal subgroup lattice
// ---------------------------------------------------------------------------

const std::vector<NormalSubgroup>& normal_subgroups(const Group& g, const Config& cfg) {
    (void)cfg; // limits are enforced by the subgroup machinery and the lattice cap
    struct CacheEntry {
        std::shared_ptr<const ConjugacyClasses> keeper; // pins the key's address
        std::shared_ptr<std::vector<NormalSubgroup>> list;
    };
    static std::unordered_map<const ConjugacyClasses*, CacheEntry> cache;

    auto cls = g.classes();
    if (auto it = cache.find(cls.get()); it != cache.end()) return *it->second.list;

    // Normal subgroups are unions of classes, and every one is the join of
    // the normal closures of the single classes it contains.  So: close the
    // single-class closures under joins, identifying each subgroup by the
    // set of classes it contains.
    std::map<std::vector<unsigned>, PermGroup> found;
    std::vector<std::pair<std::vector<unsigned>, PermGroup>> atoms;
    std::deque<std::vector<unsigned>> queue;

    auto record = [&](const std::vector<unsigned>& sig, const PermGroup& s) {
        auto [it, fresh] = found.emplace(sig, s);
        if (fresh) {
            if (found.size() > kLatticeCap)
                throw ResourceExceeded("normal subgroup lattice exceeds " +
                                       std::to_string(kLatticeCap) + " entries");
            queue.push_back(it->first);
        }
        return fresh;
    };

    for (unsigned j = 0; j < cls->count(); ++j) {
        PermGroup closure = g.perm.normal_closure({cls->rep(j)});
        auto sig = class_signature(*cls, closure);
        if (record(sig, closure)) atoms.emplace_back(std::move(sig), std::move(closure));
    }

    while (!queue.empty()) {
        std::vector<unsigned> sig = queue.front();
        queue.pop_front();
        const PermGroup& current = found.at(sig);
        for (const auto& [asig, asub] : atoms) {
            if (std::includes(sig.begin(), sig.end(), asig.begin(), asig.end()))
                continue; // the atom is already inside; the join is `current`
            std::vector<Perm> gens = current.generators();
            const auto& extra = asub.generators();
            gens.insert(gens.end(), extra.begin(), extra.end());
            PermGroup join = g.perm.subgroup(std::move(gens));
            record(class_signature(*cls, join), join);
        }
    }

    auto list = std::make_shared<std::vector<NormalSubgroup>>();
    list->reserve(found.size());
    for (auto& [sig, sub] : found) {
        NormalSubgroup n;
        n.order = sub.order();
        n.subgroup = std::move(sub);
        n.class_indices = sig;
        list->push_back(std::move(n));
    }
    std::stable_sort(list->begin(), list->end(),
                     [](const NormalSubgroup& a, const NormalSubgroup& b) {
                         return a.order < b.order;
                     });

    auto [it, ok] = cache.emplace(cls.get(), CacheEntry{cls, list});
    (void)ok;
    return *it->second.list;
}

// ---------------------------------------------------------------------------
// Quotient construction
// ---------------------------------------------------------------------------

namespace {

// Faithful image of g / n as a Group whose i-th permutation generator is the
// image of g's i-th generator.  Direct products split factor by factor when
// the kernel is a product of factor subgroups (detected on the class
// tuples); otherwise the quotient is the action on the kernel's cosets.
GroupPtr quotient_wrapper(const Group& g, const NormalSubgroup& n, const Config& cfg) {
    if (n.order == g.order()) {
        auto q = std::make_shared<Group>();
        q->spec = g.spec + "/" + std::to_string(n.order);
        q->provenance = "derived";
        q->perm = PermGroup(1, std::vector<Perm>(g.perm.generators().size(), Perm(1)), cfg);
        return q;
    }
    if (n.order == 1) return std::make_shared<Group>(g);

    auto cls = g.classes();
    if (cls->is_product() && g.factors.size() >= 2) {
        const std::size_t parts = g.factors.size();
        std::vector<std::set<unsigned>> factor_sets(parts);
        for (unsigned c : n.class_indices) {
            const auto& tuple = cls->tuple_of(c);
            for (std::size_t f = 0; f < parts; ++f) factor_sets[f].insert(tuple[f]);
        }
        std::uint64_t rectangle = 1;
        for (const auto& s : factor_sets) rectangle *= s.size();
        if (rectangle == n.class_indices.size()) {
            // kernel = product of its factor projections; quotient factors too
            std::vector<GroupPtr> parts_out;
            std::vector<PermGroup> perms;
            std::uint64_t kernel_order = 1;
            for (std::size_t f = 0; f < parts; ++f) {
                const Group& gf = *g.factors[f];
                auto fcls = gf.classes();
                std::vector<Perm> seeds;
                NormalSubgroup nf;
                for (unsigned j : factor_sets[f]) {
                    seeds.push_back(fcls->rep(j));
                    nf.class_indices.push_back(j);
                }
                // the factor kernel is a union of whole conjugacy classes, so
                // it is the normal closure of the class representatives (the
                // reps alone can generate a smaller, non-normal subgroup)
                nf.subgroup = gf.perm.normal_closure(seeds);
                nf.order = nf.subgroup.order();
                kernel_order *= nf.order;
                parts_out.push_back(quotient_wrapper(gf, nf, cfg));
                perms.push_back(parts_out.back()->perm);
            }
            if (kernel_order != n.order)
                throw InternalError("factor-split kernel order mismatch");
            auto q = std::make_shared<Group>();
            for (std::size_t f = 0; f < parts; ++f) {
                if (f) q->spec += " x ";
                q->spec += parts_out[f]->spec;
            }
            q->provenance = "derived";
            PermGroup prod = direct_product(perms);
            q->perm = PermGroup(prod.degree(), prod.generators(), cfg);
            q->factors = std::move(parts_out);
            return q;
        }
    }

    const std::uint64_t index = g.order() / n.order;
    if (index > cfg.max_coset_index)
        throw ResourceExceeded("quotient of index " + std::to_string(index) +
                               " exceeds the coset cap");
    PermGroup action = g.perm.coset_action(n.subgroup);
    if (action.order() != index)
        throw InternalError("coset action of a normal subgroup has the wrong order");
    auto q = std::make_shared<Group>();
    q->spec = g.spec + "/" + std::to_string(n.order);
    q->provenance = "derived";
    q->perm = std::move(action);
    return q;
}

} // namespace

GroupPtr quotient_group(const Group& g, const NormalSubgroup& n, const Config& cfg) {
    return quotient_wrapper(g, n, cfg);
}

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

IsoFingerprint fingerprint(const Group& g, const Config& cfg) {
    auto cls = g.classes();
    IsoFingerprint f;
    f.order = g.order();
    f.abelian_invariants = g.perm.abelian_invariants();

    std::map<std::uint64_t, std::uint64_t> hist;
    f.center_order = 0;
    for (unsigned j = 0; j < cls->count(); ++j) {
        hist[cls->rep_order(j)] += cls->size(j);
        f.class_sizes.push_back(cls->size(j));
        if (cls->size(j) == 1) ++f.center_order;
    }
    f.element_orders.assign(hist.begin(), hist.end());
    std::sort(f.class_sizes.begin(), f.class_sizes.end());

    PermGroup layer = g.perm;
    while (true) {
        PermGroup next = layer.derived_subgroup();
        f.derived_series.push_back(next.order());
        if (next.order() == 1 || next.order() == layer.order()) break;
        layer = std::move(next);
    }

    // The degree multiset is a cheap representation-theoretic invariant; the
    // decision to include it depends only on the class count, so equal
    // groups always agree on whether it is present.
    if (cls->count() <= cfg.max_chartab_classes) {
        auto table = CharacterTable::of(cls, cfg);
        for (unsigned i = 0; i < table->count(); ++i)
            f.character_degrees.push_back(table->degree(i));
        std::sort(f.character_degrees.begin(), f.character_degrees.end());
    }
    return f;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace {

// Deterministic list of the target's elements of a given order (restricted
// to classes of the given size when class data with members is available and
// the size is nonzero).
std::vector<Perm> candidates_of_order(const Group& t, std::uint64_t order,
                                      std::uint64_t class_size) {
    std::vector<Perm> out;
    auto cls = t.classes();
    if (cls->has_member_lists()) {
        for (unsigned j = 0; j < cls->count(); ++j) {
            if (cls->rep_order(j) != order) continue;
            if (class_size != 0 && cls->size(j) != class_size) continue;
            for (std::uint32_t idx : cls->members(j)) out.push_back(cls->element(idx));
        }
        return out;
    }
    for (const Perm& p : t.perm.elements())
        if (p.order() == order) out.push_back(p);
    return out;
}

// (order, class size) profile of a group's generators; class size 0 when the
// group's class data carries no member lists (products).
std::vector<std::pair<std::uint64_t, std::uint64_t>> generator_profile(const Group& h) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> prof;
    auto cls = h.classes();
    const bool sized = cls->has_member_lists();
    for (const Perm& gen : h.perm.generators()) {
        std::uint64_t size = 0;
        if (sized) size = cls->size(cls->class_of(gen));
        prof.emplace_back(gen.order(), size);
    }
    return prof;
}

// Backtracking search for images of the presentation's generators inside
// `target`: images must satisfy every relator, generate a subgroup of order
// `required`, and match the given (order, class size) profile.  Generators
// with the fewest candidates are assigned first; each relator is checked as
// soon as all its generators are placed.
std::optional<std::vector<Perm>> embed_presentation(
    const Presentation& pres,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& profile,
    const Group& target, std::uint64_t required, const Config& cfg) {
    const unsigned k = pres.gen_count();
    if (profile.size() != k)
        throw InternalError("generator profile does not match the presentation");

    std::vector<std::vector<Perm>> cands(k);
    for (unsigned i = 0; i < k; ++i) {
        cands[i] = candidates_of_order(target, profile[i].first, profile[i].second);
        if (cands[i].empty()) return std::nullopt;
    }

    std::vector<unsigned> slot(k); // assignment order: fewest candidates first
    std::iota(slot.begin(), slot.end(), 0u);
    std::stable_sort(slot.begin(), slot.end(), [&](unsigned a, unsigned b) {
        return cands[a].size() < cands[b].size();
    });
    std::vector<unsigned> depth_of(k);
    for (unsigned d = 0; d < k; ++d) depth_of[slot[d]] = d;

    std::vector<std::vector<const std::vector<int>*>> checks(k);
    for (const auto& rel : pres.relators) {
        unsigned latest = 0;
        for (int v : rel) {
            unsigned gen = v >= 0 ? static_cast<unsigned>(v)
                                  : static_cast<unsigned>(-v - 1);
            latest = std::max(latest, depth_of[gen]);
        }
        checks[latest].push_back(&rel);
    }

    const unsigned degree = target.degree();
    std::vector<Perm> images(k);
    std::uint64_t budget = cfg.max_backtrack_nodes;

    auto dfs = [&](auto&& self, unsigned d) -> bool {
        if (d == k)
            return target.perm.subgroup(images).order() == required;
        const unsigned gen = slot[d];
        for (const Perm& cand : cands[gen]) {
            if (budget == 0)
                throw ResourceExceeded("isomorphism search exceeded the node budget");
            --budget;
            images[gen] = cand;
            bool ok = true;
            for (const auto* rel : checks[d])
                if (!word_image(*rel, images, degree).is_identity()) {
                    ok = false;
                    break;
                }
            if (ok && self(self, d + 1)) return true;
        }
        return false;
    };
    if (dfs(dfs, 0)) return images;
    return std::nullopt;
}

// Check that mapping b's generators to `images` defines a homomorphism, by
// walking b's Cayley graph and verifying every edge is consistent.
bool hom_check_by_walk(const PermGroup& b, const std::vector<Perm>& images,
                       unsigned image_degree, const Config& cfg) {
    if (b.order() > cfg.max_raw_order)
        throw ResourceExceeded("homomorphism check needs element enumeration past the cap");
    const auto& gens = b.generators();
    std::unordered_map<Perm, Perm, PermHash> dict;
    std::deque<Perm> queue;
    dict.emplace(b.identity(), Perm(image_degree));
    queue.push_back(b.identity());
    while (!queue.empty()) {
        Perm e = std::move(queue.front());
        queue.pop_front();
        const Perm f = dict.at(e);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Perm e2 = e * gens[i];
            Perm f2 = f * images[i];
            auto it = dict.find(e2);
            if (it == dict.end()) {
                dict.emplace(e2, std::move(f2));
                queue.push_back(std::move(e2));
            } else if (it->second != f2) {
                return false;
            }
        }
    }
    return true;
}

// Given images of a's generators realizing an isomorphism a -> b, produce
// the images in a of b's generators (the inverse map on generators).
std::vector<Perm> invert_generator_map(const PermGroup& a, const std::vector<Perm>& images,
                                       const std::vector<Perm>& b_gens, const Config& cfg) {
    if (a.order() > cfg.max_raw_order)
        throw ResourceExceeded("isomorphism inversion needs element enumeration past the cap");
    const auto& gens = a.generators();
    std::unordered_map<Perm, Perm, PermHash> back; // image element -> source element
    std::deque<Perm> queue;
    const unsigned bdeg = !images.empty() ? images.front().degree()
                          : !b_gens.empty() ? b_gens.front().degree()
                                            : 0;
    back.emplace(Perm(bdeg), a.identity());
    queue.push_back(a.identity());
    std::unordered_map<Perm, Perm, PermHash> forward;
    forward.emplace(a.identity(), Perm(bdeg));
    while (!queue.empty()) {
        Perm e = std::move(queue.front());
        queue.pop_front();
        const Perm f = forward.at(e);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Perm e2 = e * gens[i];
            if (forward.contains(e2)) continue;
            Perm f2 = f * images[i];
            forward.emplace(e2, f2);
            back.emplace(std::move(f2), e2);
            queue.push_back(std::move(e2));
        }
    }
    std::vector<Perm> out;
    out.reserve(b_gens.size());
    for (const Perm& bg : b_gens) {
        auto it = back.find(bg);
        if (it == back.end())
            throw InternalError("generator inversion did not cover the target's generators");
        out.push_back(it->second);
    }
    return out;
}

// Generic generator-mapping search used when neither side carries a
// presentation: images of b's generators are chosen in a and verified by a
// Cayley-graph walk plus a surjectivity check.
bool generic_iso_search(const Group& a, const Group& b, const Config& cfg,
                        std::vector<Perm>* out) {
    auto profile = generator_profile(b);
    const auto& gens = b.perm.generators();
    const unsigned k = static_cast<unsigned>(gens.size());
    std::vector<std::vector<Perm>> cands(k);
    for (unsigned i = 0; i < k; ++i) {
        cands[i] = candidates_of_order(a, profile[i].first, profile[i].second);
        if (cands[i].empty()) return false;
    }
    std::vector<Perm> images(k);
    std::uint64_t budget = cfg.max_backtrack_nodes;
    auto dfs = [&](auto&& self, unsigned d) -> bool {
        if (d == k)
            return a.perm.subgroup(images).order() == a.order() &&
                   hom_check_by_walk(b.perm, images, a.degree(), cfg);
        for (const Perm& cand : cands[d]) {
            if (budget == 0)
                throw ResourceExceeded("isomorphism search exceeded the node budget");
            --budget;
            images[d] = cand;
            if (self(self, d + 1)) return true;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return false;
    if (out) *out = images;
    return true;
}

// Factor-by-factor matching for two direct products with the same number of
// factors.  Success proves isomorphism (factors are matched with recursive
// certificates); failure proves nothing, the caller falls through.
bool match_product_factors(const Group& a, const Group& b, const Config& cfg,
                           std::vector<Perm>* out) {
    const auto& af = a.factors;
    const auto& bf = b.factors;
    std::vector<bool> used(af.size(), false);
    std::vector<std::size_t> match(bf.size(), 0);
    std::vector<std::vector<Perm>> factor_images(bf.size());
    for (std::size_t j = 0; j < bf.size(); ++j) {
        bool hit = false;
        for (std::size_t i = 0; i < af.size(); ++i) {
            if (used[i] || af[i]->order() != bf[j]->order()) continue;
            std::vector<Perm> sub;
            if (!is_isomorphic(*af[i], *bf[j], cfg, out ? &sub : nullptr)) continue;
            used[i] = true;
            match[j] = i;
            factor_images[j] = std::move(sub);
            hit = true;
            break;
        }
        if (!hit) return false;
    }
    if (out) {
        std::vector<unsigned> offset(af.size(), 0);
        unsigned acc = 0;
        for (std::size_t i = 0; i < af.size(); ++i) {
            offset[i] = acc;
            acc += af[i]->degree();
        }
        out->clear();
        for (std::size_t j = 0; j < bf.size(); ++j)
            for (const Perm& p : factor_images[j])
                out->push_back(extend_to_block(p, a.degree(), offset[match[j]]));
    }
    return true;
}

} // namespace

bool is_isomorphic(const Group& a, const Group& b, const Config& cfg,
                   std::vector<Perm>* images_of_b_gens) {
    if (a.order() != b.order()) return false;
    if (&a == &b || (a.degree() == b.degree() && a.perm.same_group(b.perm))) {
        if (images_of_b_gens) *images_of_b_gens = b.perm.generators();
        return true;
    }
    const bool abelian = a.perm.is_abelian();
    if (abelian != b.perm.is_abelian()) return false;
    if (abelian) {
        // Elementary divisors decide abelian groups completely.
        if (a.perm.abelian_invariants() != b.perm.abelian_invariants()) return false;
        if (!images_of_b_gens) return true;
    } else if (!(fingerprint(a, cfg) == fingerprint(b, cfg))) {
        return false;
    }

    if (a.factors.size() >= 2 && a.factors.size() == b.factors.size() &&
        match_product_factors(a, b, cfg, images_of_b_gens))
        return true;

    if (b.pres) {
        auto found = embed_presentation(*b.pres, generator_profile(b), a, a.order(), cfg);
        if (!found) return false;
        if (images_of_b_gens) *images_of_b_gens = std::move(*found);
        return true;
    }
    if (a.pres) {
        auto found = embed_presentation(*a.pres, generator_profile(a), b, b.order(), cfg);
        if (!found) return false;
        if (images_of_b_gens)
            *images_of_b_gens =
                invert_generator_map(a.perm, *found, b.perm.generators(), cfg);
        return true;
    }
    return generic_iso_search(a, b, cfg, images_of_b_gens);
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

std::optional<QuotientWitness> has_quotient(const Group& g, const Group& h,
                                            const Config& cfg) {
    const std::uint64_t go = g.order();
    const std::uint64_t ho = h.order();
    if (ho == 0 || go % ho != 0) return std::nullopt;

    const std::uint64_t kernel_order = go / ho;
    bool skipped = false;
    for (const NormalSubgroup& n : normal_subgroups(g, cfg)) {
        if (n.order != kernel_order) continue;
        GroupPtr q;
        try {
            q = quotient_wrapper(g, n, cfg);
        } catch (const ResourceExceeded&) {
            skipped = true;
            continue;
        }
        std::vector<Perm> images;
        if (is_isomorphic(*q, h, cfg, &images))
            return QuotientWitness{n, q->perm, std::move(images)};
    }
    if (skipped)
        throw ResourceExceeded(
            "a candidate quotient could not be realized within the configured caps");
    return std::nullopt;
}

std::vector<PolyhedralQuotient> binary_polyhedral_quotients(const Group& g, const Zoo& zoo,
                                                            const Config& cfg) {
    std::vector<PolyhedralQuotient> out;
    const std::uint64_t go = g.order();
    if (go < 8 || g.perm.is_abelian()) return out;

    std::vector<std::pair<std::string, std::uint64_t>> targets;
    for (std::uint64_t n = 2; 4 * n <= go; ++n)
        if (go % (4 * n) == 0) targets.emplace_back("Q(" + std::to_string(4 * n) + ")", 4 * n);
    const std::pair<const char*, std::uint64_t> polyhedral[] = {
        {"BT", 24}, {"BO", 48}, {"BI", 120}};
    for (const auto& [name, order] : polyhedral)
        if (go % order == 0) targets.emplace_back(name, order);

    for (const auto& [name, order] : targets) {
        GroupPtr h = zoo.parse(name, cfg);
        if (auto w = has_quotient(g, *h, cfg))
            out.push_back(PolyhedralQuotient{name, order, false, std::move(*w)});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < out.size() && maximal; ++j) {
            if (j == i || out[j].order <= out[i].order) continue;
            GroupPtr big = zoo.parse(out[j].name, cfg);
            GroupPtr small = zoo.parse(out[i].name, cfg);
            if (has_quotient(*big, *small, cfg)) maximal = false;
        }
        out[i].maximal = maximal;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eichler predicates
// ---------------------------------------------------------------------------

bool is_eichler(const Group& g, const Config& cfg) {
    return quaternionic_character_count(g, cfg) == 0;
}

bool is_eichler_quotient(const Group& g, const Group& h, const Config& cfg) {
    if (quaternionic_character_count(g, cfg) != quaternionic_character_count(h, cfg))
        return false;
    return has_quotient(g, h, cfg).has_value();
}

bool is_eichler_simple(const Group& g, const Config& cfg) {
    if (g.order() == 1) return true;
    const std::uint64_t m = quaternionic_character_count(g, cfg);
    auto table = CharacterTable::of(g.classes(), cfg);
    const auto& lattice = normal_subgroups(g, cfg);

    // The count never increases when passing to a quotient, so if any proper
    // quotient preserves it, so does the quotient by some minimal normal
    // subgroup below its kernel; only the minimal ones need checking.
    for (const NormalSubgroup& n : lattice) {
        if (n.order == 1) continue;
        bool minimal = true;
        for (const NormalSubgroup& below : lattice) {
            if (below.order <= 1 || below.order >= n.order) continue;
            if (std::includes(n.class_indices.begin(), n.class_indices.end(),
                              below.class_indices.begin(), below.class_indices.end())) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        if (table->quaternionic_count_of_quotient(n.class_indices) == m) return false;
    }
    return true;
}

std::optional<EichlerQuotientHit> first_eichler_quotient(
    const Group& g, const std::vector<std::pair<std::string, GroupPtr>>& targets,
    const Config& cfg) {
    const std::uint64_t m = quaternionic_character_count(g, cfg);
    for (const auto& [name, h] : targets) {
        if (!h || h->order() == 0 || g.order() % h->order() != 0) continue;
        if (quaternionic_character_count(*h, cfg) != m) continue;
        if (auto w = has_quotient(g, *h, cfg))
            return EichlerQuotientHit{name, std::move(*w)};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Periodic cohomology
// ---------------------------------------------------------------------------

bool has_periodic_cohomology(const Group& g, const Config& cfg) {
    if (g.factors.size() >= 2) {
        // A product contains C_p x C_p exactly when a factor does or p
        // divides two factor orders.
        for (const auto& f : g.factors)
            if (!has_periodic_cohomology(*f, cfg)) return false;
        for (std::size_t i = 0; i < g.factors.size(); ++i)
            for (std::size_t j = i + 1; j < g.factors.size(); ++j)
                if (std::gcd(g.factors[i]->order(), g.factors[j]->order()) > 1)
                    return false;
        return true;
    }

    auto cls = g.classes();
    if (!cls->has_member_lists())
        throw ResourceExceeded("periodic-cohomology test needs element lists");
    std::uint64_t ops = 0;
    for (std::uint64_t p : prime_divisors(g.order())) {
        std::vector<Perm> elems;
        for (unsigned j = 0; j < cls->count(); ++j) {
            if (cls->rep_order(j) != p) continue;
            for (std::uint32_t idx : cls->members(j)) elems.push_back(cls->element(idx));
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::vector<Perm> powers;
            Perm acc = elems[i];
            for (std::uint64_t t = 1; t < p; ++t) {
                powers.push_back(acc);
                acc = acc * elems[i];
            }
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                if (++ops > kPairScanBudget)
                    throw ResourceExceeded("prime-square search exceeded its budget");
                if (elems[i] * elems[j] != elems[j] * elems[i]) continue;
                if (std::find(powers.begin(), powers.end(), elems[j]) == powers.end())
                    return false; // two commuting independent elements of order p
            }
        }
    }
    return true;
}

} // namespace eichler
