#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/permgroup.hpp"

namespace eichler {

// A finite group presentation with single-letter generators.
//
// Text form:  "x,y | x^4, y^2=x^2, Y*x*y=X"
//   - generators: comma-separated lowercase letters before '|'
//   - relators: comma-separated words after '|'
//   - a word is a product of factors; '*' between factors is optional
//   - uppercase letters denote inverses of the matching generators
//   - '^k' raises a letter or parenthesised word to an integer power
//     (negative allowed), '[u,v]' is the commutator u^-1 v^-1 u v
//   - "u=v" (chains "u=v=w" allowed) abbreviates the relators u v^-1 ...
//
// Relator letters are encoded as ints: i >= 0 is generator i, i < 0 is the
// inverse of generator (-i - 1).
struct Presentation {
    std::vector<char> gens;
    std::vector<std::vector<int>> relators;

    static Presentation parse(const std::string& text);
    std::string to_string() const;
    unsigned gen_count() const { return static_cast<unsigned>(gens.size()); }
};

// Product of the images corresponding to a relator-style word.
Perm word_image(const std::vector<int>& word, const std::vector<Perm>& gen_images,
                unsigned degree);

// True when every relator maps to the identity under the given images.
bool relators_hold(const Presentation& p, const std::vector<Perm>& gen_images,
                   unsigned degree);

// Coset enumeration over the trivial subgroup: returns the right-regular
// permutation representation, whose degree equals the group order.  The
// declared order, when nonzero, bounds the coset table and is checked
// against the result.  Enumerations that outgrow the table throw
// EnumerationOverflow.
PermGroup todd_coxeter_regular(const Presentation& p, const Config& cfg,
                               std::uint64_t declared_order = 0);

} // namespace eichler
