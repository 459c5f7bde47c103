#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/config.hpp"
#include "core/permgroup.hpp"
#include "core/presentation.hpp"

namespace eichler {

// A constructed finite group: its faithful permutation representation, the
// direct-product structure it was built with (empty for atoms), and, when
// available, a presentation whose generators line up with the permutation
// generators.
struct Group {
    std::string spec;        // the text this group was built from (or its name)
    std::string provenance;  // standard | curated | derived | stand-in | user
    PermGroup perm;
    std::vector<std::shared_ptr<const Group>> factors;
    std::optional<Presentation> pres;

    std::uint64_t order() const { return perm.order(); }
    unsigned degree() const { return perm.degree(); }
    // Conjugacy classes: composed from the factors for products, enumerated
    // otherwise.  Cached.
    std::shared_ptr<const ConjugacyClasses> classes() const;

private:
    mutable std::shared_ptr<const ConjugacyClasses> classes_cache_;
};

using GroupPtr = std::shared_ptr<const Group>;

struct CatalogEntry {
    std::string name;
    std::uint64_t order = 0;
    std::string construction;
    std::string provenance;
};

struct PresentationEntry {
    std::string name;
    std::uint64_t order = 0;
    std::string text;
    Presentation pres;
    std::string provenance;
};

// Registry of named groups (the catalog) and stored presentations, plus the
// group-specification parser.
//
// Specification grammar (whitespace-insensitive except around 'x'):
//   spec     := atom { (' x ' | '*') atom }          direct products
//   atom     := 'C(n)'                               cyclic of order n
//            | 'Q(m)'                                dicyclic of order m (4 | m, m >= 8)
//            | 'BT' | 'BO' | 'BI'                    binary polyhedral groups
//            | 'SG(order,id)'                        stored presentation
//            | 'perm[d]:cycles;cycles;...'           explicit permutations
//            | '<gens | relators>'                   inline presentation
//            | name                                  catalog lookup
//            | atom '^' k                            repeated direct power
class Zoo {
public:
    Zoo() = default;
    // Registry preloaded with the built-in catalog and presentations.
    static Zoo with_builtin_data();

    void load_catalog_text(const std::string& text, const std::string& source);
    void load_presentations_text(const std::string& text, const std::string& source);
    void load_catalog_file(const std::string& path);
    void load_presentations_file(const std::string& path);

    GroupPtr parse(const std::string& spec, const Config& cfg) const;

    const std::vector<CatalogEntry>& catalog() const { return catalog_; }
    const CatalogEntry* find_entry(const std::string& name) const;
    const PresentationEntry* find_presentation(const std::string& name) const;

    // Build every catalog entry and check the declared orders.
    void validate_catalog(const Config& cfg) const;

    void clear_cache() const { cache_.clear(); }

private:
    GroupPtr parse_product(const std::string& text, const Config& cfg) const;
    GroupPtr parse_atom(const std::string& text, const Config& cfg) const;

    std::vector<CatalogEntry> catalog_;
    std::vector<PresentationEntry> presentations_;
    mutable std::unordered_map<std::string, GroupPtr> cache_;
    mutable std::set<std::string> building_; // cycle guard for catalog names
};

// n-cycle on n points (n >= 1).
PermGroup cyclic_group(unsigned n, const Config& cfg);

// Dicyclic group of order 4m acting regularly on its own elements:
// <x,y | x^(2m), y^2 = x^m, y^-1 x y = x^-1>, generators in the order x, y.
PermGroup dicyclic_group(unsigned order, const Config& cfg);

// Split extension A : B acting on A's elements plus B's points.  For each
// generator of B, `action` lists the images of A's generators under the
// associated automorphism of A; conjugation satisfies b^-1 a b = phi_b(a).
// Generators of the result: A's generators (acting by right translation),
// then B's.  Throws ValidationError if the maps are not automorphisms or are
// incompatible with B's relations.
PermGroup semidirect_product(const PermGroup& a, const PermGroup& b,
                             const std::vector<std::vector<Perm>>& action);

} // namespace eichler
