#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/config.hpp"
#include "core/quotients.hpp"
#include "core/zoo.hpp"

namespace eichler {

// Families barred from expansion while the minimal-cover graph is grown:
// explicitly named catalog groups plus the parametric family of dicyclic
// groups Q(4n) for n >= dicyclic_min_n.  Named members may still appear as
// graph nodes (their covers are recorded); parametric members are dropped
// from the graph entirely, since they are recognized by shape, not by name.
struct ExclusionSet {
    std::vector<std::string> names;
    std::uint64_t dicyclic_min_n = 0; // 0 disables the parametric family

    // No exclusions at all.
    static ExclusionSet none();
    // The bundled list of groups already known to lose cancellation:
    // dicyclic groups Q(4n) for n >= 6, the products of Q8, Q12, Q16, Q20,
    // BO, BI with C2, BT x C2 x C2, and the four exceptional groups of
    // order 32, 36, 64, 100.
    static ExclusionSet known_failures();

    bool contains_name(const std::string& name) const;
    // True when `order` = 4n with n >= dicyclic_min_n, i.e. a dicyclic group
    // of that order belongs to the parametric family.
    bool covers_dicyclic_order(std::uint64_t order) const;
};

// One group in the minimal-cover graph.
struct GraphNode {
    std::string name;                  // canonical catalog name
    std::vector<std::string> aliases;  // other catalog names for the same group
    std::uint64_t order = 0;
    std::uint64_t mh = 0;              // quaternionic character count
    unsigned level = 0;
    std::string status;                // known cancellation behaviour
};

struct GraphEdge {
    std::string from; // covering group (higher level)
    std::string to;   // covered group (lower level)
    unsigned from_level = 0;
    unsigned to_level = 0;
};

// Level-by-level graph of minimal non-Eichler covers.  Nodes are sorted by
// (level, order, name); edges by (from, to) in that node order.
struct EichlerGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;

    std::string to_json() const; // stable schema: {"nodes":[...],"edges":[...]}
    std::string to_dot() const;  // Graphviz digraph, styled by status
};

// True when g maps onto h and has strictly more quaternionic characters, so
// the passage from g to h loses quaternionic part ("g is a non-Eichler
// cover of h").
bool is_non_eichler_cover(const Group& g, const Group& h, const Config& cfg);

// True when g is a non-Eichler cover of h and no proper quotient of g is
// one, i.e. g is minimal among the non-Eichler covers of h.  Minimality is
// decided inside g's normal subgroup lattice: a proper quotient g/N covers
// h exactly when N sits below some kernel realizing h, and its quaternionic
// count is read off g's character table, so no large quotient group is ever
// constructed.
bool is_minimal_nec(const Group& g, const Group& h, const Config& cfg);

// Grows the minimal-cover graph over the zoo's catalog, level by level:
// level 0 is the trivial group, and level k+1 collects every catalog group
// (not yet placed) that is a non-Eichler cover of some level-k group not
// barred by `excl`, minimally so among those targets jointly: no proper
// quotient may cover any of them.  Named exclusions bar a node from being
// a target once it is placed; parametric exclusions keep dicyclic groups
// out of the graph altogether.  Isomorphic catalog entries are merged into
// one node (first name in (order, name) order wins; the rest become
// aliases).  Edges record per-pair minimal covers between placed nodes of
// different levels.  `depth` bounds the number of expansion rounds.
EichlerGraph gamma_levels(const Zoo& zoo, unsigned depth, const ExclusionSet& excl,
                          const Config& cfg);

// Outcome of the covering cross-check for one group: whether an
// Eichler-preserving quotient onto a member of the family was found, whether
// a known minimal cover is a quotient, and whether the two observations are
// consistent (exactly one of them must occur).
struct LemmaReport {
    bool s_eichler = false;
    std::optional<std::string> eichler_witness; // family member reached
    std::optional<std::string> cover_witness;   // minimal cover found below g
    bool agree = false;
};

// Cross-checks the covering principle on g: g has an Eichler-preserving
// quotient onto a member of `family` exactly when no member of
// `minimal_covers` is a quotient of g.  `family` must be closed under
// admissible quotients: for each member, every proper quotient that has no
// strictly-smaller quotient of equal quaternionic count must again be
// isomorphic to a member (checked first; NotQuotientClosed otherwise).
// Witnesses record the first match in the given list order.
LemmaReport fundamental_lemma_check(
    const Group& g, const std::vector<std::pair<std::string, GroupPtr>>& family,
    const std::vector<std::pair<std::string, GroupPtr>>& minimal_covers,
    const Config& cfg);

} // namespace eichler
