#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "core/errors.hpp"
#include "core/presentation.hpp"

using namespace eichler;

namespace {

std::map<std::uint64_t, unsigned> order_histogram(const PermGroup& g) {
    std::map<std::uint64_t, unsigned> h;
    for (const Perm& e : g.elements()) ++h[e.order()];
    return h;
}

std::vector<std::uint64_t> class_sizes(const PermGroup& g) {
    auto cc = ConjugacyClasses::raw(g);
    std::vector<std::uint64_t> s;
    for (unsigned i = 0; i < cc->count(); ++i) s.push_back(cc->size(i));
    return s;
}

} // namespace

TEST_CASE("parsing words, powers, equations and commutators") {
    Presentation p = Presentation::parse("x,y | x^4, y^2=x^2, Y*x*y=X");
    REQUIRE(p.gens == std::vector<char>({'x', 'y'}));
    REQUIRE(p.relators.size() == 3);
    CHECK(p.to_string() == "x,y | xxxx, yyXX, Yxyx");

    CHECK(Presentation::parse("a,b | [a,b]").to_string() == "a,b | ABab");
    CHECK(Presentation::parse("a,b | (a*b)^-2").to_string() == "a,b | BABA");
    CHECK(Presentation::parse("a,b | a^3=b^3=(a*b)^2").to_string() ==
          "a,b | aaaBBB, bbbBABA");
    CHECK(Presentation::parse("a,b | a b A B").to_string() == "a,b | abAB");
    CHECK(Presentation::parse("a | a^0 a").to_string() == "a | a");
    CHECK(Presentation::parse("a |").relators.empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Presentation::parse("a, a | a^2"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a b | a^2"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("A | A^2"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("ab,c | c^2"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a | b^2"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a | a^"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a | (a"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a | a^2, , a^3"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a | a | a"), ParseError);
    CHECK_THROWS_AS(Presentation::parse(" | a"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("a | a=9"), ParseError);
}

TEST_CASE("word images against independently built permutations") {
    // the regular quaternion action used in the permutation-layer tests
    Perm x = Perm::from_cycles("(1,2,3,4)(5,8,7,6)", 8);
    Perm y = Perm::from_cycles("(1,5,3,7)(2,6,4,8)", 8);
    Presentation q8 = Presentation::parse("x,y | x^4, y^2=x^2, Y*x*y=X");
    CHECK(relators_hold(q8, {x, y}, 8));
    CHECK_FALSE(relators_hold(Presentation::parse("x,y | x^2"), {x, y}, 8));
    CHECK(word_image(q8.relators[0], {x, y}, 8).is_identity());
    CHECK(word_image({0, 1}, {x, y}, 8) == x * y);
    CHECK(word_image({-1 - 0}, {x, y}, 8) == x.inverse());
}

TEST_CASE("coset enumeration of small groups") {
    Config cfg;
    PermGroup c6 = todd_coxeter_regular(Presentation::parse("a | a^6"), cfg);
    CHECK(c6.degree() == 6);
    CHECK(c6.order() == 6);
    CHECK(c6.is_cyclic());

    PermGroup s3 =
        todd_coxeter_regular(Presentation::parse("a,b | a^2, b^2, (a*b)^3"), cfg);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(class_sizes(s3) == std::vector<std::uint64_t>({1, 3, 2}));

    PermGroup q8 =
        todd_coxeter_regular(Presentation::parse("x,y | x^4, y^2=x^2, Y*x*y=X"), cfg, 8);
    CHECK(q8.degree() == 8);
    CHECK(class_sizes(q8) == std::vector<std::uint64_t>({1, 1, 2, 2, 2}));
    CHECK(q8.abelian_invariants() == std::vector<std::uint64_t>({2, 2}));
    std::map<std::uint64_t, unsigned> expected{{1, 1}, {2, 1}, {4, 6}};
    CHECK(order_histogram(q8) == expected);
}

TEST_CASE("binary polyhedral triangle presentations") {
    Config cfg;
    PermGroup bt =
        todd_coxeter_regular(Presentation::parse("a,b | a^3=b^3=(a*b)^2"), cfg, 24);
    CHECK(bt.order() == 24);
    CHECK(bt.abelian_invariants() == std::vector<std::uint64_t>({3}));
    std::map<std::uint64_t, unsigned> bt_hist{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
    CHECK(order_histogram(bt) == bt_hist);

    PermGroup bo =
        todd_coxeter_regular(Presentation::parse("c,d | c^3=d^4=(c*d)^2"), cfg, 48);
    CHECK(bo.order() == 48);
    CHECK(bo.abelian_invariants() == std::vector<std::uint64_t>({2}));
    std::map<std::uint64_t, unsigned> bo_hist{{1, 1}, {2, 1}, {3, 8},
                                              {4, 18}, {6, 8}, {8, 12}};
    CHECK(order_histogram(bo) == bo_hist);

    PermGroup bi =
        todd_coxeter_regular(Presentation::parse("a,b | a^5=b^3=(a*b)^2"), cfg, 120);
    CHECK(bi.order() == 120);
    CHECK(bi.abelian_invariants().empty()); // perfect group
    std::map<std::uint64_t, unsigned> bi_hist{{1, 1}, {2, 1}, {3, 20}, {4, 30},
                                              {5, 24}, {6, 20}, {10, 24}};
    CHECK(order_histogram(bi) == bi_hist);
}

TEST_CASE("relator order does not affect the resulting group") {
    Config cfg;
    PermGroup a =
        todd_coxeter_regular(Presentation::parse("x,y | x^4, y^2=x^2, Y*x*y=X"), cfg);
    PermGroup b =
        todd_coxeter_regular(Presentation::parse("x,y | Y*x*y=X, x^4, y^2=x^2"), cfg);
    PermGroup c =
        todd_coxeter_regular(Presentation::parse("y,x | x^4, y^2=x^2, Y*x*y=X"), cfg);
    CHECK(a.order() == 8);
    CHECK(b.order() == 8);
    CHECK(c.order() == 8);
    CHECK(class_sizes(a) == class_sizes(b));
    CHECK(class_sizes(a) == class_sizes(c));
    CHECK(order_histogram(a) == order_histogram(b));
}

TEST_CASE("enumeration is deterministic") {
    Config cfg;
    Presentation p = Presentation::parse("a,b | a^3=b^3=(a*b)^2");
    PermGroup g1 = todd_coxeter_regular(p, cfg);
    PermGroup g2 = todd_coxeter_regular(p, cfg);
    REQUIRE(g1.generators().size() == g2.generators().size());
    for (std::size_t i = 0; i < g1.generators().size(); ++i)
        CHECK(g1.generators()[i] == g2.generators()[i]);
}

TEST_CASE("runaway enumerations overflow") {
    Config tight;
    tight.max_cosets = 5000;
    CHECK_THROWS_AS(todd_coxeter_regular(Presentation::parse("a,b | a^2"), tight),
                    EnumerationOverflow);
    CHECK_THROWS_AS(todd_coxeter_regular(Presentation::parse("a |"), tight),
                    EnumerationOverflow);
    Config cfg;
    // a declared order bounds the table even when the group is infinite
    CHECK_THROWS_AS(todd_coxeter_regular(Presentation::parse("a,b | a^2"), cfg, 6),
                    EnumerationOverflow);
}

TEST_CASE("declared order must match") {
    Config cfg;
    CHECK_THROWS_AS(todd_coxeter_regular(Presentation::parse("a | a^6"), cfg, 12),
                    ValidationError);
    CHECK_NOTHROW(todd_coxeter_regular(Presentation::parse("a | a^6"), cfg, 6));
}
