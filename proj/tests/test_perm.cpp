#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/errors.hpp"
#include "core/perm.hpp"

using eichler::ParseError;
using eichler::Perm;

TEST_CASE("identity and cycle round trips") {
    Perm id(5);
    CHECK(id.is_identity());
    CHECK(id.degree() == 5);
    CHECK(id.to_cycles() == "()");
    CHECK(Perm::from_cycles("()", 5) == id);
    CHECK(Perm::from_cycles("", 5) == id);

    Perm p = Perm::from_cycles("(1,2,3)(4,5)", 5);
    CHECK(p.to_cycles() == "(1,2,3)(4,5)");
    CHECK(Perm::from_cycles(p.to_cycles(), 5) == p);
    CHECK(p[0] == 1);
    CHECK(p[1] == 2);
    CHECK(p[2] == 0);
    CHECK(p[3] == 4);
    CHECK(p[4] == 3);
}

TEST_CASE("composition applies the left factor first") {
    Perm a = Perm::from_cycles("(1,2)", 3);
    Perm b = Perm::from_cycles("(2,3)", 3);
    Perm ab = a * b;
    // 1 -> 2 -> 3 under "a then b"
    CHECK(ab[0] == 2);
    CHECK(ab == Perm::from_cycles("(1,3,2)", 3));
    Perm ba = b * a;
    CHECK(ba == Perm::from_cycles("(1,2,3)", 3));
}

TEST_CASE("inverse, order and powers") {
    Perm p = Perm::from_cycles("(1,2,3)(4,5)", 6);
    CHECK(p.order() == 6);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.power(6).is_identity());
    CHECK(p.power(0).is_identity());
    CHECK(p.power(2) == p * p);
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.power(7) == p);

    Perm q = Perm::from_cycles("(1,2,3,4)", 4);
    CHECK(q.order() == 4);
    CHECK(q.power(2) == Perm::from_cycles("(1,3)(2,4)", 4));
}

TEST_CASE("conjugation relabels cycles") {
    Perm s = Perm::from_cycles("(1,2,3)", 4);
    Perm g = Perm::from_cycles("(1,2)", 4);
    // conjugating (1,2,3) by the swap 1<->2 gives (2,1,3)
    CHECK(s.conjugated_by(g) == Perm::from_cycles("(2,1,3)", 4));
    CHECK(s.conjugated_by(g) == g.inverse() * s * g);
    Perm t = Perm::from_cycles("(1,4)", 4);
    CHECK(s.conjugated_by(t) == t.inverse() * s * t);
}

TEST_CASE("comparison and hashing distinguish permutations") {
    Perm a = Perm::from_cycles("(1,2)", 4);
    Perm b = Perm::from_cycles("(3,4)", 4);
    CHECK(a != b);
    CHECK((a < b || b < a));
    CHECK(a.hash() != b.hash()); // overwhelmingly likely for tiny cases
    CHECK(Perm(4).hash() == Perm(4).hash());
}

TEST_CASE("malformed cycle text is rejected") {
    CHECK_THROWS_AS(Perm::from_cycles("(1,2", 4), ParseError);
    CHECK_THROWS_AS(Perm::from_cycles("(0,1)", 4), ParseError);
    CHECK_THROWS_AS(Perm::from_cycles("(1,5)", 4), ParseError);
    CHECK_THROWS_AS(Perm::from_cycles("(1,2)(2,3)", 4), ParseError);
    CHECK_THROWS_AS(Perm::from_cycles("(1,,2)", 4), ParseError);
    CHECK_THROWS_AS(Perm::from_cycles("1,2", 4), ParseError);
}

TEST_CASE("image vectors must be bijections") {
    CHECK_THROWS_AS(Perm(std::vector<eichler::Point>{0, 0, 1}), ParseError);
    CHECK_THROWS_AS(Perm(std::vector<eichler::Point>{0, 3}), ParseError);
}
