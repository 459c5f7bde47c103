#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/config.hpp"
#include "core/permgroup.hpp"
#include "core/zoo.hpp"

namespace eichler {

// A normal subgroup of a fixed parent group.  Since a normal subgroup is a
// union of conjugacy classes, it is recorded both as a subgroup (on the
// parent's points) and as the ascending list of parent class indices whose
// union it is; the class set is the canonical identity of the entry.
struct NormalSubgroup {
    PermGroup subgroup;
    std::uint64_t order = 1;
    std::vector<unsigned> class_indices;
};

// The complete list of normal subgroups of g, including the trivial and the
// full subgroup, sorted by (order, class index set).  Every normal subgroup
// is a join of normal closures of single classes, so the list is produced by
// closing the single-class closures under joins.  Results are cached for the
// lifetime of the process (keyed by the group's class data).  Throws
// ResourceExceeded when the lattice grows past an internal safety cap.
const std::vector<NormalSubgroup>& normal_subgroups(const Group& g, const Config& cfg);

// Faithful image of g / n as a Group whose i-th permutation generator is the
// image of g's i-th generator.  Direct-product parents split factor by factor
// when the kernel is itself a product of factor subgroups; otherwise the
// quotient is realized as the action on the kernel's cosets, subject to
// cfg.max_coset_index (ResourceExceeded past the cap).
GroupPtr quotient_group(const Group& g, const NormalSubgroup& n, const Config& cfg);

// Evidence that a group maps onto a target group: the kernel, a faithful
// permutation image of parent/kernel whose i-th generator is the image of
// the parent's i-th generator, and images in that quotient of the target's
// generators (in the target's generator order), so that the target's
// defining relators and the surjectivity of the map can be rechecked.
struct QuotientWitness {
    NormalSubgroup kernel;
    PermGroup quotient;
    std::vector<Perm> images;
};

// Cheap isomorphism invariants used to filter candidate pairs before any
// backtracking search runs.  Two isomorphic groups always compare equal.
struct IsoFingerprint {
    std::uint64_t order = 1;
    std::vector<std::uint64_t> abelian_invariants;        // ascending elementary divisors
    std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders; // (order, count)
    std::vector<std::uint64_t> class_sizes;               // ascending multiset
    std::uint64_t center_order = 1;
    std::vector<std::uint64_t> derived_series;            // orders of G', G'', ... until stable
    std::vector<std::uint64_t> character_degrees;         // ascending; empty when skipped

    bool operator==(const IsoFingerprint&) const = default;
};

IsoFingerprint fingerprint(const Group& g, const Config& cfg);

// Isomorphism test.  Layered: identical underlying permutation groups,
// abelian invariants (complete for abelian groups), fingerprint filtering,
// factor-by-factor matching for direct products, then a backtracking search
// mapping one side's presentation generators into the other (falling back to
// a generic generator-mapping search when neither side carries a
// presentation).  When `images_of_b_gens` is non-null and the groups are
// isomorphic, it receives images in `a` of b's generators realizing an
// isomorphism.  Throws ResourceExceeded if the search outgrows
// cfg.max_backtrack_nodes or needs element lists past the raw-order cap.
bool is_isomorphic(const Group& a, const Group& b, const Config& cfg,
                   std::vector<Perm>* images_of_b_gens = nullptr);

// First surjection g ->> h, if any: kernels of the right index are tried in
// the deterministic normal-subgroup order and the first quotient isomorphic
// to h is returned.  The witness's `images` list h's generator images, so
// relators_hold(h.pres, images) and |<images>| == |h| certify the map.
std::optional<QuotientWitness> has_quotient(const Group& g, const Group& h, const Config& cfg);

// One binary polyhedral quotient of a group: the target's catalog name
// (Q(4n), BT, BO or BI), its order, whether it is maximal among the listed
// quotients (does not factor through a larger one), and the witness.
struct PolyhedralQuotient {
    std::string name;
    std::uint64_t order = 0;
    bool maximal = false;
    QuotientWitness witness;
};

// All binary polyhedral quotients of g: every dicyclic group Q(4n) with
// n >= 2 and every one of BT, BO, BI whose order divides |g| is tested with
// has_quotient.  Dicyclic targets come first in ascending order, then BT,
// BO, BI.  Abelian groups have none.
std::vector<PolyhedralQuotient> binary_polyhedral_quotients(const Group& g, const Zoo& zoo,
                                                            const Config& cfg);

// True when the group has no degree-2 quaternionic character (equivalently,
// no binary polyhedral quotient).
bool is_eichler(const Group& g, const Config& cfg);

// True when g maps onto h and the quaternionic character counts agree, so
// passing from g to h loses no quaternionic part.
bool is_eichler_quotient(const Group& g, const Group& h, const Config& cfg);

// True when no proper quotient of g has the same quaternionic character
// count as g itself.  Only the minimal nontrivial normal subgroups need
// checking: the count never increases under quotients, so equality for some
// proper quotient forces equality at a minimal kernel below it.
bool is_eichler_simple(const Group& g, const Config& cfg);

struct EichlerQuotientHit {
    std::string name;
    QuotientWitness witness;
};

// First member of `targets` (in the given order) that is a quotient of g
// with the same quaternionic character count, together with the witness.
std::optional<EichlerQuotientHit> first_eichler_quotient(
    const Group& g, const std::vector<std::pair<std::string, GroupPtr>>& targets,
    const Config& cfg);

// True when every subgroup of prime-squared order is cyclic, i.e. the group
// contains no C_p x C_p.  For direct products this splits into the factors:
// a product acquires a C_p x C_p exactly when a factor has one or when p
// divides two factor orders.
bool has_periodic_cohomology(const Group& g, const Config& cfg);

} // namespace eichler
