#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eichler {

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_polynomial(unsigned n);

// An element of Z[zeta_n], stored as integer coordinates in the power basis
// 1, zeta, ..., zeta^(phi(n)-1) of the n-th cyclotomic field (coordinates are
// reduced modulo the cyclotomic polynomial, so the representation at a fixed
// conductor is unique).  Sums, differences, products, Galois twists and
// complex conjugation stay exact; reduced() rewrites the value at its
// minimal conductor, canonically avoiding conductors that are 2 mod 4.
class Cyclotomic {
public:
    Cyclotomic(); // zero
    static Cyclotomic integer(long long v);
    static Cyclotomic root_of_unity(unsigned n, long long k);
    static Cyclotomic from_coeffs(unsigned conductor, std::vector<long long> coeffs);

    unsigned conductor() const { return n_; }
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;           // lies in Q (hence in Z here)
    long long rational_value() const;   // throws unless is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(long long k) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Deterministic order on reduced values: by conductor, then coordinates.
    bool operator<(const Cyclotomic& o) const;

    Cyclotomic conjugate() const;          // zeta -> zeta^-1
    Cyclotomic galois(unsigned t) const;   // zeta -> zeta^t, gcd(t, n) = 1

    // Rewrite at the smallest possible conductor.  If the exact basis change
    // would overflow 64-bit rationals the current conductor is kept.
    Cyclotomic reduced() const;

    // "0", "2", "-1", "z8", "1-z8^3", "2*z4", ... (terms by ascending power)
    std::string to_string() const;

private:
    Cyclotomic(unsigned n, std::vector<long long> c) : n_(n), c_(std::move(c)) {}
    Cyclotomic embedded(unsigned m) const; // rewrite at conductor m (n_ | m)

    unsigned n_ = 1;
    std::vector<long long> c_{0};
};

} // namespace eichler
