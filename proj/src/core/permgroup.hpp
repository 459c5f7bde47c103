#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/config.hpp"
#include "core/perm.hpp"

namespace eichler {

// A finite permutation group given by generators, with a deterministic
// stabilizer chain (Schreier-Sims) built on demand.  All derived data
// (order, membership, element lists, subgroup constructions) is computed
// from the chain, so results are reproducible across runs.
class PermGroup {
public:
    PermGroup();                                   // trivial group on 0 points
    explicit PermGroup(unsigned degree);           // trivial group on `degree` points
    PermGroup(unsigned degree, std::vector<Perm> generators, Config cfg = Config{});

    unsigned degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const Config& config() const { return cfg_; }

    std::uint64_t order() const;
    bool is_trivial() const { return order() == 1; }
    bool contains(const Perm& p) const;
    Perm identity() const { return Perm(degree_); }

    bool is_abelian() const;
    bool is_cyclic() const;

    // Elementary divisors of G/[G,G], sorted ascending (e.g. {2,2,3}).
    std::vector<std::uint64_t> abelian_invariants() const;
    std::uint64_t abelianization_order() const;    // [G : G']

    PermGroup derived_subgroup() const;
    // Smallest normal subgroup of *this* containing `seed`.
    PermGroup normal_closure(const std::vector<Perm>& seed) const;
    // Subgroup of the same symmetric group generated by `gens` (same degree).
    PermGroup subgroup(std::vector<Perm> gens) const;
    // Subgroup fixing every listed point.
    PermGroup pointwise_stabilizer(const std::vector<unsigned>& points) const;

    // All group elements, sorted lexicographically by image vector
    // (so elements()[0] is the identity).  Guarded by the configured caps.
    const std::vector<Perm>& elements() const;

    std::vector<unsigned> orbit_of(unsigned point) const;

    bool is_subgroup_of(const PermGroup& big) const;
    bool same_group(const PermGroup& other) const;

    // Action of this group on the right cosets of subgroup `h` by right
    // multiplication.  The result's i-th generator is the action of
    // generators()[i]; point 0 is the coset of the identity.  The index
    // must not exceed the configured coset cap.
    PermGroup coset_action(const PermGroup& h) const;

private:
    struct Chain;
    void ensure_chain() const;

    unsigned degree_ = 0;
    std::vector<Perm> gens_;
    Config cfg_;
    mutable std::shared_ptr<Chain> chain_;
    mutable std::shared_ptr<std::vector<Perm>> elements_cache_;

    friend class ConjugacyClasses;
};

// Conjugacy classes of a finite group, in a canonical order: classes are
// sorted by (order of representative, class size, lexicographic
// representative), which puts the identity class first.  Classes of a
// direct product are composed from factor classes without enumerating the
// product's elements.
class ConjugacyClasses {
public:
    // Classes computed by enumerating the group's elements.
    static std::shared_ptr<const ConjugacyClasses> raw(const PermGroup& g);
    // Classes of the direct product of the factors' groups, acting on the
    // concatenation of their point sets.
    static std::shared_ptr<const ConjugacyClasses>
    product(std::vector<std::shared_ptr<const ConjugacyClasses>> factors);

    unsigned count() const { return static_cast<unsigned>(reps_.size()); }
    unsigned degree() const { return degree_; }
    std::uint64_t group_order() const { return group_order_; }

    const Perm& rep(unsigned i) const { return reps_[i]; }
    std::uint64_t size(unsigned i) const { return sizes_[i]; }
    std::uint64_t rep_order(unsigned i) const { return rep_orders_[i]; }

    unsigned class_of(const Perm& p) const;
    unsigned inverse_class(unsigned i) const { return inverse_class_[i]; }
    unsigned squaring_class(unsigned i) const { return squaring_class_[i]; }
    // Class of x^k for x in class i.
    unsigned power_class(unsigned i, std::uint64_t k) const;

    bool is_product() const { return !factors_.empty(); }
    const std::vector<std::shared_ptr<const ConjugacyClasses>>& factors() const {
        return factors_;
    }
    // For product classes: the factor class indices making up class i.
    const std::vector<unsigned>& tuple_of(unsigned i) const { return tuples_[i]; }
    unsigned index_of_tuple(const std::vector<unsigned>& t) const;

    // Raw classes keep full member lists (needed for class-algebra work).
    bool has_member_lists() const { return !members_.empty(); }
    const std::vector<std::uint32_t>& members(unsigned i) const { return members_[i]; }
    const Perm& element(std::uint32_t idx) const { return (*elements_)[idx]; }
    std::uint64_t element_count() const { return elements_ ? elements_->size() : 0; }

private:
    ConjugacyClasses() = default;
    void finish_common();

    unsigned degree_ = 0;
    std::uint64_t group_order_ = 1;
    std::vector<Perm> reps_;
    std::vector<std::uint64_t> sizes_;
    std::vector<std::uint64_t> rep_orders_;
    std::vector<unsigned> inverse_class_;
    std::vector<unsigned> squaring_class_;

    // raw form
    std::shared_ptr<const std::vector<Perm>> elements_;
    std::vector<std::vector<std::uint32_t>> members_;
    std::unordered_map<Perm, unsigned, PermHash> lookup_;

    // product form
    std::vector<std::shared_ptr<const ConjugacyClasses>> factors_;
    std::vector<unsigned> factor_offsets_;
    std::vector<std::vector<unsigned>> tuples_;
    std::unordered_map<std::string, unsigned> tuple_lookup_;
};

// The direct product of permutation groups, acting on the disjoint union of
// their point sets (factor i's points are shifted by the sum of the earlier
// degrees).
PermGroup direct_product(const std::vector<PermGroup>& factors);

} // namespace eichler
