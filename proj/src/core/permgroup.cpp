#include "core/permgroup.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

#include "core/errors.hpp"

namespace eichler {

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims)
// ---------------------------------------------------------------------------

struct PermGroup::Chain {
    struct Level {
        unsigned base_point = 0;
        std::vector<Perm> own_gens;   // strong generators first recorded here
        // Orbit of base_point under all generators at this level or deeper,
        // as a Schreier forest.
        std::vector<int> pos_of;      // point -> orbit position, -1 if absent
        std::vector<unsigned> orbit;  // BFS order; orbit[0] == base_point
        std::vector<int> from_pos;    // predecessor orbit position (-1 root)
        std::vector<int> via_gen;     // index into the gen list used below
        std::vector<Perm> act_gens;   // snapshot of generators used for orbit
        std::vector<Perm> act_inv;    // their inverses
    };

    unsigned degree = 0;
    std::vector<Level> levels;
    unsigned prescribed = 0;          // first `prescribed` levels have a fixed base

    static std::shared_ptr<Chain> build(unsigned degree, const std::vector<Perm>& gens,
                                        const std::vector<unsigned>& prescribed_base);

    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (const Level& lv : levels) n *= lv.orbit.size();
        return n;
    }

    // Generators of the stabilizer of the first `nlevels` base points.
    std::vector<Perm> gens_below(unsigned nlevels) const {
        std::vector<Perm> out;
        for (unsigned l = nlevels; l < levels.size(); ++l)
            for (const Perm& g : levels[l].own_gens) out.push_back(g);
        return out;
    }

    void recompute_orbit(unsigned li) {
        Level& lv = levels[li];
        lv.act_gens = gens_below(li);
        lv.act_inv.clear();
        lv.act_inv.reserve(lv.act_gens.size());
        for (const Perm& g : lv.act_gens) lv.act_inv.push_back(g.inverse());
        lv.pos_of.assign(degree, -1);
        lv.orbit.clear();
        lv.from_pos.clear();
        lv.via_gen.clear();
        lv.orbit.push_back(lv.base_point);
        lv.from_pos.push_back(-1);
        lv.via_gen.push_back(-1);
        lv.pos_of[lv.base_point] = 0;
        for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
            unsigned p = lv.orbit[qi];
            for (std::size_t gi = 0; gi < lv.act_gens.size(); ++gi) {
                unsigned q = lv.act_gens[gi][p];
                if (lv.pos_of[q] < 0) {
                    lv.pos_of[q] = static_cast<int>(lv.orbit.size());
                    lv.orbit.push_back(q);
                    lv.from_pos.push_back(static_cast<int>(qi));
                    lv.via_gen.push_back(static_cast<int>(gi));
                }
            }
        }
    }

    // Transversal element u with base^u == point.
    Perm transversal(unsigned li, unsigned point) const {
        const Level& lv = levels[li];
        std::vector<int> path;
        int pos = lv.pos_of[point];
        while (lv.from_pos[pos] >= 0) {
            path.push_back(lv.via_gen[pos]);
            pos = lv.from_pos[pos];
        }
        Perm u(degree);
        for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * lv.act_gens[*it];
        return u;
    }

    // g * u^{-1} where u is the transversal element reaching `point`.
    Perm times_inverse_transversal(unsigned li, unsigned point, Perm g) const {
        const Level& lv = levels[li];
        int pos = lv.pos_of[point];
        while (lv.from_pos[pos] >= 0) {
            g = g * lv.act_inv[lv.via_gen[pos]];
            pos = lv.from_pos[pos];
        }
        return g;
    }

    // Reduce g through levels starting at `start`; returns the residue and
    // sets `dropout` to the first level whose base image left the orbit
    // (levels.size() if the whole chain was consumed).
    Perm sift_from(unsigned start, Perm g, unsigned& dropout) const {
        for (unsigned li = start; li < levels.size(); ++li) {
            unsigned p = g[levels[li].base_point];
            if (levels[li].pos_of[p] < 0) {
                dropout = li;
                return g;
            }
            g = times_inverse_transversal(li, p, std::move(g));
        }
        dropout = static_cast<unsigned>(levels.size());
        return g;
    }

    bool contains(const Perm& g) const {
        unsigned d = 0;
        return sift_from(0, g, d).is_identity();
    }

    void add_level(unsigned base) {
        Level lv;
        lv.base_point = base;
        levels.push_back(std::move(lv));
        recompute_orbit(static_cast<unsigned>(levels.size()) - 1);
    }

    // Verify the Schreier generators of level li sift through deeper levels.
    // On the first failure the residue is recorded at its dropout level and
    // that level index is returned; -1 means the level is complete.
    int check_level(unsigned li) {
        recompute_orbit(li);
        Level& lv = levels[li];
        for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
            unsigned p = lv.orbit[qi];
            Perm up = transversal(li, p);
            for (std::size_t gi = 0; gi < lv.act_gens.size(); ++gi) {
                unsigned q = lv.act_gens[gi][p];
                Perm s = times_inverse_transversal(li, q, up * lv.act_gens[gi]);
                if (s.is_identity()) continue;
                unsigned drop = 0;
                Perm resid = sift_from(li + 1, std::move(s), drop);
                if (resid.is_identity()) continue;
                if (drop == levels.size()) {
                    unsigned b = 0;
                    while (resid[b] == b) ++b;
                    add_level(b);
                }
                levels[drop].own_gens.push_back(std::move(resid));
                recompute_orbit(drop);
                return static_cast<int>(drop);
            }
        }
        return -1;
    }
};

std::shared_ptr<PermGroup::Chain> PermGroup::Chain::build(
    unsigned degree, const std::vector<Perm>& gens,
    const std::vector<unsigned>& prescribed_base) {
    auto chain = std::make_shared<Chain>();
    chain->degree = degree;
    for (unsigned b : prescribed_base) {
        bool seen = false;
        for (const Level& lv : chain->levels) seen = seen || lv.base_point == b;
        if (!seen) chain->add_level(b);
    }
    chain->prescribed = static_cast<unsigned>(chain->levels.size());

    for (const Perm& g : gens) {
        if (g.is_identity()) continue;
        if (g.degree() != degree) throw ValidationError("generator degree mismatch");
        unsigned drop = 0;
        Perm resid = chain->sift_from(0, g, drop);
        if (resid.is_identity()) continue;
        if (drop == chain->levels.size()) {
            unsigned b = 0;
            while (resid[b] == b) ++b;
            chain->add_level(b);
        }
        chain->levels[drop].own_gens.push_back(std::move(resid));
        chain->recompute_orbit(drop);
    }

    int li = static_cast<int>(chain->levels.size()) - 1;
    while (li >= 0) {
        int moved = chain->check_level(static_cast<unsigned>(li));
        if (moved < 0)
            --li;
        else
            li = moved;
    }
    return chain;
}

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

PermGroup::PermGroup() : degree_(0) {}

PermGroup::PermGroup(unsigned degree) : degree_(degree) {}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators, Config cfg)
    : degree_(degree), gens_(std::move(generators)), cfg_(std::move(cfg)) {
    for (const Perm& g : gens_)
        if (g.degree() != degree_)
            throw ValidationError("generator degree does not match group degree");
}

void PermGroup::ensure_chain() const {
    if (!chain_) chain_ = Chain::build(degree_, gens_, {});
}

std::uint64_t PermGroup::order() const {
    ensure_chain();
    return chain_->order();
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    ensure_chain();
    return chain_->contains(p);
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
    return true;
}

bool PermGroup::is_cyclic() const {
    if (!is_abelian()) return false;
    std::uint64_t n = order();
    if (n == 1) return true;
    for (const Perm& e : elements())
        if (e.order() == n) return true;
    return false;
}

const std::vector<Perm>& PermGroup::elements() const {
    if (elements_cache_) return *elements_cache_;
    std::uint64_t n = order();
    if (n > cfg_.max_raw_order)
        throw ResourceExceeded("group of order " + std::to_string(n) +
                               " exceeds the element enumeration cap of " +
                               std::to_string(cfg_.max_raw_order));
    if (n * degree_ * 2 > cfg_.max_element_storage)
        throw ResourceExceeded("element list would exceed the storage cap");
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue;
    Perm id(degree_);
    seen.insert(id);
    queue.push_back(id);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const Perm& g : gens_) {
            Perm next = queue[qi] * g;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    if (queue.size() != n)
        throw InternalError("element enumeration disagrees with the group order");
    std::sort(queue.begin(), queue.end());
    elements_cache_ = std::make_shared<std::vector<Perm>>(std::move(queue));
    return *elements_cache_;
}

PermGroup PermGroup::subgroup(std::vector<Perm> gens) const {
    return PermGroup(degree_, std::move(gens), cfg_);
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seed) const {
    // Grow a reduced generating set: an element is kept only when it
    // enlarges the subgroup, so at most log2(order) generators accumulate,
    // and only kept elements need their conjugates examined.
    std::vector<Perm> ngens;
    PermGroup n = subgroup({});
    std::vector<Perm> work;
    auto absorb = [&](const Perm& p) {
        if (p.is_identity() || n.contains(p)) return false;
        ngens.push_back(p);
        n = subgroup(ngens);
        work.push_back(p);
        return true;
    };
    for (const Perm& s : seed) absorb(s);
    while (!work.empty()) {
        Perm x = std::move(work.back());
        work.pop_back();
        for (const Perm& g : gens_) absorb(x.conjugated_by(g));
    }
    return n;
}

PermGroup PermGroup::derived_subgroup() const {
    std::vector<Perm> comms;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (i == j) continue;
            Perm c = gens_[i].inverse() * gens_[j].inverse() * gens_[i] * gens_[j];
            if (!c.is_identity()) comms.push_back(std::move(c));
        }
    return normal_closure(comms);
}

std::uint64_t PermGroup::abelianization_order() const {
    return order() / derived_subgroup().order();
}

std::vector<std::uint64_t> PermGroup::abelian_invariants() const {
    PermGroup d = derived_subgroup();
    std::uint64_t index = order() / d.order();
    if (index == 1) return {};

    // Element orders of the abelianization.
    std::vector<std::uint64_t> orders;
    if (d.is_trivial()) {
        for (const Perm& e : elements()) orders.push_back(e.order());
    } else {
        PermGroup q = coset_action(d);
        if (q.order() != index)
            throw InternalError("abelianization action has unexpected order");
        for (const Perm& e : q.elements()) orders.push_back(e.order());
    }

    std::vector<std::uint64_t> divisors;
    std::uint64_t rest = index;
    for (std::uint64_t p = 2; p * p <= rest || rest > 1;) {
        if (rest % p != 0) {
            ++p;
            if (p * p > rest && rest > 1) p = rest;
            continue;
        }
        // count elements killed by successive powers of p
        std::vector<std::uint64_t> killed; // killed[k] = #{x : x^(p^k) = 1}
        killed.push_back(1);
        std::uint64_t pk = 1;
        while (true) {
            pk *= p;
            std::uint64_t c = 0;
            for (std::uint64_t o : orders)
                if (pk % o == 0) ++c;
            killed.push_back(c);
            if (killed[killed.size() - 1] == killed[killed.size() - 2]) break;
        }
        // d_k = #invariants with exponent >= k
        std::vector<unsigned> dk;
        for (std::size_t k = 1; k < killed.size(); ++k) {
            std::uint64_t ratio = killed[k] / killed[k - 1];
            unsigned e = 0;
            while (ratio > 1) {
                ratio /= p;
                ++e;
            }
            dk.push_back(e);
        }
        dk.push_back(0);
        std::uint64_t power = 1;
        for (std::size_t k = 0; k + 1 < dk.size(); ++k) {
            power *= p;
            for (unsigned c = dk[k] - dk[k + 1]; c > 0; --c) divisors.push_back(power);
        }
        while (rest % p == 0) rest /= p;
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<unsigned>& points) const {
    for (unsigned p : points)
        if (p >= degree_) throw ValidationError("stabilizer point out of range");
    auto chain = Chain::build(degree_, gens_, points);
    return subgroup(chain->gens_below(chain->prescribed));
}

std::vector<unsigned> PermGroup::orbit_of(unsigned point) const {
    if (point >= degree_) throw ValidationError("orbit point out of range");
    std::vector<int> seen(degree_, 0);
    std::vector<unsigned> orbit{point};
    seen[point] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (const Perm& g : gens_) {
            unsigned q = g[orbit[qi]];
            if (!seen[q]) {
                seen[q] = 1;
                orbit.push_back(q);
            }
        }
    return orbit;
}

bool PermGroup::is_subgroup_of(const PermGroup& big) const {
    if (degree_ != big.degree_) return false;
    for (const Perm& g : gens_)
        if (!big.contains(g)) return false;
    return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
    return degree_ == other.degree_ && order() == other.order() &&
           is_subgroup_of(other);
}

PermGroup PermGroup::coset_action(const PermGroup& h) const {
    if (h.degree() != degree_) throw ValidationError("subgroup degree mismatch");
    if (!h.is_subgroup_of(*this))
        throw ValidationError("coset action requires a subgroup");
    std::uint64_t index = order() / h.order();
    if (index > cfg_.max_coset_index)
        throw ResourceExceeded("coset index " + std::to_string(index) +
                               " exceeds the configured cap of " +
                               std::to_string(cfg_.max_coset_index));
    if (index > 65535)
        throw ResourceExceeded("coset index exceeds the permutation degree limit");
    h.ensure_chain();
    const Chain& hc = *h.chain_;

    auto minimize = [&hc](Perm g) {
        for (unsigned li = 0; li < hc.levels.size(); ++li) {
            const auto& lv = hc.levels[li];
            unsigned best = lv.orbit[0];
            for (unsigned p : lv.orbit)
                if (g[p] < g[best]) best = p;
            if (best != lv.base_point) g = hc.transversal(li, best) * g;
        }
        return g;
    };

    std::unordered_map<Perm, unsigned, PermHash> id_of;
    std::vector<Perm> reps;
    Perm start = minimize(identity());
    id_of.emplace(start, 0);
    reps.push_back(std::move(start));
    std::vector<std::vector<Point>> images(gens_.size());
    for (std::size_t qi = 0; qi < reps.size(); ++qi) {
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            Perm t = minimize(reps[qi] * gens_[gi]);
            auto it = id_of.find(t);
            unsigned target;
            if (it == id_of.end()) {
                target = static_cast<unsigned>(reps.size());
                if (target >= index)
                    throw InternalError("coset enumeration exceeded the expected index");
                id_of.emplace(t, target);
                reps.push_back(std::move(t));
            } else {
                target = it->second;
            }
            images[gi].resize(index, 0);
            images[gi][qi] = static_cast<Point>(target);
        }
    }
    if (reps.size() != index)
        throw InternalError("coset enumeration found " + std::to_string(reps.size()) +
                            " cosets, expected " + std::to_string(index));
    std::vector<Perm> action;
    action.reserve(gens_.size());
    for (auto& img : images) action.emplace_back(std::move(img));
    return PermGroup(static_cast<unsigned>(index), std::move(action), cfg_);
}

PermGroup direct_product(const std::vector<PermGroup>& factors) {
    unsigned degree = 0;
    for (const PermGroup& f : factors) degree += f.degree();
    if (degree > 65535)
        throw ResourceExceeded("direct product degree exceeds the permutation point limit");
    std::vector<Perm> gens;
    unsigned off = 0;
    for (const PermGroup& f : factors) {
        for (const Perm& g : f.generators()) {
            std::vector<Point> img(degree);
            for (unsigned x = 0; x < degree; ++x) img[x] = static_cast<Point>(x);
            for (unsigned x = 0; x < f.degree(); ++x)
                img[off + x] = static_cast<Point>(off + g[x]);
            gens.emplace_back(std::move(img));
        }
        off += f.degree();
    }
    Config cfg = factors.empty() ? Config{} : factors.front().config();
    return PermGroup(degree, std::move(gens), cfg);
}

// ---------------------------------------------------------------------------
// ConjugacyClasses
// ---------------------------------------------------------------------------

std::shared_ptr<const ConjugacyClasses> ConjugacyClasses::raw(const PermGroup& g) {
    auto cc = std::shared_ptr<ConjugacyClasses>(new ConjugacyClasses());
    cc->degree_ = g.degree();
    cc->group_order_ = g.order();
    const auto& elems = g.elements();
    cc->elements_ = g.elements_cache_;

    std::unordered_map<Perm, std::uint32_t, PermHash> pos_of;
    pos_of.reserve(elems.size() * 2);
    for (std::uint32_t i = 0; i < elems.size(); ++i) pos_of.emplace(elems[i], i);

    std::vector<int> cls(elems.size(), -1);
    struct RawClass {
        std::uint32_t rep;
        std::vector<std::uint32_t> members;
    };
    std::vector<RawClass> raw;
    for (std::uint32_t i = 0; i < elems.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(raw.size());
        RawClass rc;
        rc.rep = i;
        rc.members.push_back(i);
        cls[i] = id;
        for (std::size_t qi = 0; qi < rc.members.size(); ++qi) {
            const Perm& x = elems[rc.members[qi]];
            for (const Perm& gen : g.generators()) {
                std::uint32_t j = pos_of.at(x.conjugated_by(gen));
                if (cls[j] < 0) {
                    cls[j] = id;
                    rc.members.push_back(j);
                }
            }
        }
        std::sort(rc.members.begin(), rc.members.end());
        raw.push_back(std::move(rc));
    }

    // canonical order: (order of representative, class size, representative)
    std::vector<unsigned> perm_idx(raw.size());
    for (unsigned i = 0; i < raw.size(); ++i) perm_idx[i] = i;
    std::vector<std::uint64_t> ord(raw.size());
    for (unsigned i = 0; i < raw.size(); ++i) ord[i] = elems[raw[i].rep].order();
    std::sort(perm_idx.begin(), perm_idx.end(), [&](unsigned a, unsigned b) {
        if (ord[a] != ord[b]) return ord[a] < ord[b];
        if (raw[a].members.size() != raw[b].members.size())
            return raw[a].members.size() < raw[b].members.size();
        return elems[raw[a].rep] < elems[raw[b].rep];
    });

    for (unsigned k = 0; k < perm_idx.size(); ++k) {
        const RawClass& rc = raw[perm_idx[k]];
        cc->reps_.push_back(elems[rc.rep]);
        cc->sizes_.push_back(rc.members.size());
        cc->rep_orders_.push_back(ord[perm_idx[k]]);
        cc->members_.push_back(rc.members);
        for (std::uint32_t m : rc.members) cc->lookup_.emplace(elems[m], k);
    }
    cc->finish_common();
    return cc;
}

std::shared_ptr<const ConjugacyClasses> ConjugacyClasses::product(
    std::vector<std::shared_ptr<const ConjugacyClasses>> factors) {
    if (factors.empty()) throw ValidationError("empty class product");
    auto cc = std::shared_ptr<ConjugacyClasses>(new ConjugacyClasses());
    cc->factors_ = std::move(factors);
    std::uint64_t total = 1;
    for (const auto& f : cc->factors_) {
        cc->factor_offsets_.push_back(cc->degree_);
        cc->degree_ += f->degree();
        cc->group_order_ *= f->group_order();
        total *= f->count();
        if (total > 2000000)
            throw ResourceExceeded("too many composed conjugacy classes");
    }

    std::vector<unsigned> tuple(cc->factors_.size(), 0);
    std::vector<std::vector<unsigned>> tuples;
    for (std::uint64_t n = 0; n < total; ++n) {
        tuples.push_back(tuple);
        for (std::size_t i = cc->factors_.size(); i-- > 0;) {
            if (++tuple[i] < cc->factors_[i]->count()) break;
            tuple[i] = 0;
        }
    }

    auto compose_rep = [&](const std::vector<unsigned>& t) {
        std::vector<Point> img(cc->degree_);
        for (std::size_t i = 0; i < cc->factors_.size(); ++i) {
            unsigned off = cc->factor_offsets_[i];
            const Perm& r = cc->factors_[i]->rep(t[i]);
            for (unsigned x = 0; x < r.degree(); ++x)
                img[off + x] = static_cast<Point>(off + r[x]);
        }
        return Perm(std::move(img));
    };

    std::vector<unsigned> order_idx(tuples.size());
    for (unsigned i = 0; i < tuples.size(); ++i) order_idx[i] = i;
    std::vector<Perm> reps;
    std::vector<std::uint64_t> sizes(tuples.size(), 1), orders(tuples.size());
    reps.reserve(tuples.size());
    for (unsigned i = 0; i < tuples.size(); ++i) {
        reps.push_back(compose_rep(tuples[i]));
        orders[i] = reps.back().order();
        for (std::size_t f = 0; f < cc->factors_.size(); ++f)
            sizes[i] *= cc->factors_[f]->size(tuples[i][f]);
    }
    std::sort(order_idx.begin(), order_idx.end(), [&](unsigned a, unsigned b) {
        if (orders[a] != orders[b]) return orders[a] < orders[b];
        if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
        return reps[a] < reps[b];
    });

    auto tuple_key = [](const std::vector<unsigned>& t) {
        std::string k;
        for (unsigned v : t) {
            k += std::to_string(v);
            k += ',';
        }
        return k;
    };
    for (unsigned k = 0; k < order_idx.size(); ++k) {
        unsigned i = order_idx[k];
        cc->reps_.push_back(std::move(reps[i]));
        cc->sizes_.push_back(sizes[i]);
        cc->rep_orders_.push_back(orders[i]);
        cc->tuples_.push_back(tuples[i]);
        cc->tuple_lookup_.emplace(tuple_key(tuples[i]), k);
    }
    cc->finish_common();
    return cc;
}

void ConjugacyClasses::finish_common() {
    inverse_class_.resize(reps_.size());
    squaring_class_.resize(reps_.size());
    for (unsigned i = 0; i < reps_.size(); ++i) {
        inverse_class_[i] = class_of(reps_[i].inverse());
        squaring_class_[i] = class_of(reps_[i] * reps_[i]);
    }
}

unsigned ConjugacyClasses::class_of(const Perm& p) const {
    if (p.degree() != degree_)
        throw ValidationError("element degree does not match classified group");
    if (factors_.empty()) {
        auto it = lookup_.find(p);
        if (it == lookup_.end())
            throw InternalError("element is not in the classified group");
        return it->second;
    }
    std::string key;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        unsigned off = factor_offsets_[i];
        unsigned d = factors_[i]->degree();
        std::vector<Point> img(d);
        for (unsigned x = 0; x < d; ++x) {
            unsigned y = p[off + x];
            if (y < off || y >= off + d)
                throw InternalError("element does not preserve product blocks");
            img[x] = static_cast<Point>(y - off);
        }
        key += std::to_string(factors_[i]->class_of(Perm(std::move(img))));
        key += ',';
    }
    auto it = tuple_lookup_.find(key);
    if (it == tuple_lookup_.end())
        throw InternalError("composed class lookup failed");
    return it->second;
}

unsigned ConjugacyClasses::power_class(unsigned i, std::uint64_t k) const {
    if (factors_.empty()) {
        Perm p = reps_[i].power(static_cast<long long>(k % rep_orders_[i]));
        return class_of(p);
    }
    std::string key;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        key += std::to_string(factors_[f]->power_class(tuples_[i][f], k));
        key += ',';
    }
    return tuple_lookup_.at(key);
}

unsigned ConjugacyClasses::index_of_tuple(const std::vector<unsigned>& t) const {
    std::string key;
    for (unsigned v : t) {
        key += std::to_string(v);
        key += ',';
    }
    auto it = tuple_lookup_.find(key);
    if (it == tuple_lookup_.end()) throw ValidationError("unknown class tuple");
    return it->second;
}

} // namespace eichler
