#pragma once

#include <memory>
#include <vector>

#include "core/config.hpp"
#include "core/cyclotomic.hpp"
#include "core/permgroup.hpp"
#include "core/zoo.hpp"

namespace eichler {

// The ordinary (complex) character table of a finite group, with exact
// cyclotomic values.  Columns follow the canonical conjugacy-class order;
// rows are sorted by (degree, lexicographic value tuple).  Tables of direct
// products are tensor-composed from the factor tables; their values are
// computed on demand.  Every directly computed table is verified internally
// (degree equation, row norms, orthogonality on small tables).
class CharacterTable {
public:
    // Compute (or fetch from the process-wide cache) the table for the given
    // classes.  The cap cfg.max_chartab_classes bounds direct computations.
    static std::shared_ptr<const CharacterTable>
    of(std::shared_ptr<const ConjugacyClasses> classes, const Config& cfg);

    const ConjugacyClasses& classes() const { return *classes_; }
    std::shared_ptr<const ConjugacyClasses> classes_ptr() const { return classes_; }

    unsigned count() const { return static_cast<unsigned>(degrees_.size()); }
    std::uint64_t degree(unsigned chi) const { return degrees_[chi]; }
    // Frobenius-Schur indicator: +1 real (orthogonal), 0 complex,
    // -1 quaternionic (symplectic).
    int indicator(unsigned chi) const { return indicators_[chi]; }
    Cyclotomic value(unsigned chi, unsigned cls) const;

    // Number of irreducible characters with degree 2 and indicator -1.
    unsigned quaternionic_count() const;
    // The same count for the quotient by a normal subgroup, given the list
    // of conjugacy classes the subgroup consists of (the quotient's degree-2
    // quaternionic characters are exactly the rows whose kernel contains it).
    unsigned quaternionic_count_of_quotient(
        const std::vector<unsigned>& kernel_classes) const;

private:
    CharacterTable() = default;
    void compute_raw(const Config& cfg);
    void compute_product(const Config& cfg);
    void compute_indicators();
    void sort_rows();
    void verify() const;

    std::shared_ptr<const ConjugacyClasses> classes_;
    std::vector<std::uint64_t> degrees_;
    std::vector<int> indicators_;

    std::vector<std::vector<Cyclotomic>> values_; // direct tables only

    // tensor-composed tables
    std::vector<std::shared_ptr<const CharacterTable>> factors_;
    std::vector<std::vector<unsigned>> row_tuples_;
};

// Number of real linear characters: the count of elements of order at most 2
// in the abelianization (2 per even elementary divisor).
std::uint64_t real_linear_character_count(const Group& g);

// Number of degree-2 quaternionic (indicator -1) irreducible characters.
// Abelian groups short-circuit to 0; direct products combine factor counts
// via m(A x B) = m(A) r(B) + r(A) m(B) with r the real-linear count; other
// groups are answered from the character table.
std::uint64_t quaternionic_character_count(const Group& g, const Config& cfg);

} // namespace eichler
