#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/cyclotomic.hpp"
#include "core/errors.hpp"

using namespace eichler;

namespace {
Cyclotomic zeta(unsigned n, long long k = 1) { return Cyclotomic::root_of_unity(n, k); }
Cyclotomic Z(long long v) { return Cyclotomic::integer(v); }
} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>({1, 1}));
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == std::vector<long long>({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(105).size() == 49); // phi(105) = 48
}

TEST_CASE("roots of unity and basic arithmetic") {
    CHECK(zeta(4) * zeta(4) == Z(-1));
    CHECK(zeta(3) + zeta(3, 2) == Z(-1));
    CHECK(zeta(3) * zeta(3, 2) == Z(1));
    CHECK((Z(1) + zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)).is_zero());
    CHECK(zeta(8, 2) == zeta(4)); // power canonicalisation
    CHECK(zeta(6) == Z(1) + zeta(3));
    CHECK(zeta(12, 2) == Z(1) + zeta(3));
    CHECK(zeta(1) == Z(1));
    CHECK(zeta(2) == Z(-1));
    CHECK((zeta(5) - zeta(5)).is_zero());
    CHECK(Z(3) + Z(4) == Z(7));
    CHECK(Z(3) * Z(4) == Z(12));
    CHECK(-Z(3) == Z(-3));
    CHECK(Z(2) * 5 == Z(10));
}

TEST_CASE("quadratic irrationalities inside cyclotomic fields") {
    // (1 + 2 zeta5 + 2 zeta5^4)^2 = 5
    Cyclotomic u = Z(1) + zeta(5) * 2 + zeta(5, 4) * 2;
    CHECK(u * u == Z(5));
    // sqrt(2) = zeta8 + zeta8^-1
    Cyclotomic s2 = zeta(8) + zeta(8, 7);
    CHECK(s2 * s2 == Z(2));
    // sqrt(-2) = zeta8 + zeta8^3
    Cyclotomic sm2 = zeta(8) + zeta(8, 3);
    CHECK(sm2 * sm2 == Z(-2));
    // golden-ratio relation between 10th and 5th roots
    Cyclotomic beta = zeta(10) + zeta(10, 9);
    Cyclotomic alpha = zeta(5) + zeta(5, 4);
    CHECK(beta * beta == alpha + Z(2));
}

TEST_CASE("rationality detection") {
    CHECK(Z(7).is_rational());
    CHECK(Z(7).rational_value() == 7);
    CHECK((zeta(3) + zeta(3, 2)).rational_value() == -1);
    CHECK_FALSE(zeta(5).is_rational());
    CHECK_THROWS_AS(zeta(5).rational_value(), ValidationError);
    CHECK(Cyclotomic().is_zero());
    CHECK(Cyclotomic().rational_value() == 0);
}

TEST_CASE("conjugation and Galois twists") {
    CHECK(zeta(5).conjugate() == zeta(5, 4));
    CHECK(zeta(5).galois(2) == zeta(5, 2));
    CHECK(Z(7).conjugate() == Z(7));
    Cyclotomic v = zeta(5) + zeta(5, 4);
    CHECK(v.conjugate() == v);
    Cyclotomic w = zeta(7) + zeta(7, 2) + zeta(7, 4);
    CHECK(w.galois(2) == w);     // invariant under squaring
    CHECK(w.conjugate() != w);   // but not real
    CHECK(w + w.conjugate() == Z(-1));
    CHECK_THROWS_AS(zeta(6).galois(3), ValidationError);
}

TEST_CASE("conductor reduction") {
    CHECK(zeta(12, 3).conductor() == 4); // i
    CHECK(zeta(12, 4).conductor() == 3);
    CHECK(zeta(10).conductor() == 5);    // -zeta5^3, canonical odd conductor
    CHECK(zeta(10) == -(zeta(5, 3)));
    Cyclotomic s2 = zeta(8) + zeta(8, 7);
    CHECK(s2.reduced().conductor() == 8); // sqrt(2) genuinely needs conductor 8
    Cyclotomic r = (zeta(12) * zeta(12, 7)).reduced(); // zeta12^8 -> conductor 3
    CHECK(r.conductor() == 3);
    CHECK(r == zeta(3, 2));
    // a sum landing in the rationals reduces to conductor 1
    CHECK((zeta(8) + zeta(8, 7)).reduced() * (zeta(8) + zeta(8, 7)).reduced() ==
          Z(2));
    CHECK((zeta(7) + zeta(7, 6) + zeta(7, 2) + zeta(7, 5) + zeta(7, 3) + zeta(7, 4))
              .reduced()
              .conductor() == 1);
}

TEST_CASE("printing") {
    CHECK(Z(0).to_string() == "0");
    CHECK(Z(2).to_string() == "2");
    CHECK(Z(-1).to_string() == "-1");
    CHECK(zeta(4).to_string() == "z4");
    CHECK((zeta(8) * 2).to_string() == "2*z8");
    CHECK((Z(1) - zeta(8, 3)).to_string() == "1-z8^3");
    CHECK((zeta(3) + zeta(3)).to_string() == "2*z3");
    CHECK((Z(-1) - zeta(3)).to_string() == "-1-z3");
}

TEST_CASE("deterministic ordering") {
    CHECK(Z(1) < zeta(3));
    CHECK(zeta(3) < zeta(4));
    CHECK(Z(1) < Z(2));
    CHECK_FALSE(zeta(3) < zeta(3));
}
