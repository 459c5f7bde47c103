#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "core/chartab.hpp"
#include "core/errors.hpp"
#include "core/zoo.hpp"

using namespace eichler;

namespace {

Zoo& zoo() {
    static Zoo z = Zoo::with_builtin_data();
    return z;
}

const Config& cfg() {
    static Config c;
    return c;
}

GroupPtr parse(const std::string& spec) { return zoo().parse(spec, cfg()); }

std::shared_ptr<const CharacterTable> table_of(const std::string& spec) {
    return CharacterTable::of(parse(spec)->classes(), cfg());
}

// the unique class whose elements have the given order, if there is one
unsigned class_of_order(const ConjugacyClasses& c, std::uint64_t order) {
    int found = -1;
    for (unsigned j = 0; j < c.count(); ++j)
        if (c.rep_order(j) == order) {
            REQUIRE(found == -1);
            found = static_cast<int>(j);
        }
    REQUIRE(found >= 0);
    return static_cast<unsigned>(found);
}

} // namespace

TEST_CASE("trivial and cyclic group tables") {
    auto t1 = table_of("C(1)");
    REQUIRE(t1->count() == 1);
    CHECK(t1->degree(0) == 1);
    CHECK(t1->indicator(0) == 1);
    CHECK(t1->value(0, 0) == Cyclotomic::integer(1));

    auto t2 = table_of("C(2)");
    REQUIRE(t2->count() == 2);
    CHECK(t2->degree(0) == 1);
    CHECK(t2->degree(1) == 1);
    CHECK(t2->indicator(0) == 1);
    CHECK(t2->indicator(1) == 1);
    const unsigned c2 = class_of_order(t2->classes(), 2);
    std::vector<Cyclotomic> col = {t2->value(0, c2), t2->value(1, c2)};
    CHECK(std::count(col.begin(), col.end(), Cyclotomic::integer(1)) == 1);
    CHECK(std::count(col.begin(), col.end(), Cyclotomic::integer(-1)) == 1);

    auto t3 = table_of("C(3)");
    REQUIRE(t3->count() == 3);
    std::multiset<int> inds3;
    for (unsigned i = 0; i < 3; ++i) {
        CHECK(t3->degree(i) == 1);
        inds3.insert(t3->indicator(i));
    }
    CHECK(inds3 == std::multiset<int>{0, 0, 1});
    // the two non-real rows are complex conjugates of each other
    std::vector<unsigned> complex_rows;
    for (unsigned i = 0; i < 3; ++i)
        if (t3->indicator(i) == 0) complex_rows.push_back(i);
    REQUIRE(complex_rows.size() == 2);
    for (unsigned j = 0; j < 3; ++j)
        CHECK(t3->value(complex_rows[0], j) ==
              t3->value(complex_rows[1], j).conjugate());

    auto t4 = table_of("C(4)");
    REQUIRE(t4->count() == 4);
    std::multiset<int> inds4;
    for (unsigned i = 0; i < 4; ++i) inds4.insert(t4->indicator(i));
    CHECK(inds4 == std::multiset<int>{0, 0, 1, 1});
}

TEST_CASE("quaternion group table") {
    auto t = table_of("Q8");
    REQUIRE(t->count() == 5);
    // rows sorted by degree: four linear characters then the 2-dimensional
    for (unsigned i = 0; i < 4; ++i) {
        CHECK(t->degree(i) == 1);
        CHECK(t->indicator(i) == 1);
    }
    CHECK(t->degree(4) == 2);
    CHECK(t->indicator(4) == -1);
    const ConjugacyClasses& c = t->classes();
    CHECK(t->value(4, 0) == Cyclotomic::integer(2));
    CHECK(t->value(4, class_of_order(c, 2)) == Cyclotomic::integer(-2));
    for (unsigned j = 0; j < c.count(); ++j)
        if (c.rep_order(j) == 4) CHECK(t->value(4, j) == Cyclotomic());
    CHECK(t->quaternionic_count() == 1);
}

TEST_CASE("symmetric group of degree 3") {
    auto t = CharacterTable::of(
        parse("<a,b | a^3, b^2, B*a*b=A>")->classes(), cfg());
    REQUIRE(t->count() == 3);
    CHECK(t->degree(0) == 1);
    CHECK(t->degree(1) == 1);
    CHECK(t->degree(2) == 2);
    for (unsigned i = 0; i < 3; ++i) CHECK(t->indicator(i) == 1);
    const ConjugacyClasses& c = t->classes();
    CHECK(t->value(2, class_of_order(c, 3)) == Cyclotomic::integer(-1));
    CHECK(t->value(2, class_of_order(c, 2)) == Cyclotomic());
    CHECK(t->quaternionic_count() == 0);
}

TEST_CASE("binary tetrahedral table shape") {
    auto t = table_of("BT");
    REQUIRE(t->count() == 7);
    std::multiset<std::uint64_t> degs;
    unsigned quaternionic2 = 0;
    for (unsigned i = 0; i < 7; ++i) {
        degs.insert(t->degree(i));
        quaternionic2 += t->degree(i) == 2 && t->indicator(i) == -1;
    }
    CHECK(degs == std::multiset<std::uint64_t>{1, 1, 1, 2, 2, 2, 3});
    CHECK(quaternionic2 == 1);
}

TEST_CASE("indicator is nonzero exactly for real-valued rows") {
    for (const char* spec : {"C(3)", "C(4)", "Q8", "Q12", "BT", "BO",
                             "SG(32,14)", "<a,b | a^3, b^2, B*a*b=A>"}) {
        CAPTURE(spec);
        auto t = CharacterTable::of(parse(spec)->classes(), cfg());
        for (unsigned i = 0; i < t->count(); ++i) {
            bool real_valued = true;
            for (unsigned j = 0; j < t->count() && real_valued; ++j)
                real_valued = t->value(i, j) == t->value(i, j).conjugate();
            CHECK((t->indicator(i) != 0) == real_valued);
        }
    }
}

TEST_CASE("dicyclic series quaternionic counts") {
    for (unsigned n = 2; n <= 12; ++n) {
        auto g = parse("Q(" + std::to_string(4 * n) + ")");
        CHECK(quaternionic_character_count(*g, cfg()) == n / 2);
    }
}

TEST_CASE("binary polyhedral quaternionic counts") {
    CHECK(quaternionic_character_count(*parse("BT"), cfg()) == 1);
    CHECK(quaternionic_character_count(*parse("BO"), cfg()) == 2);
    CHECK(quaternionic_character_count(*parse("BI"), cfg()) == 2);
}

TEST_CASE("registry entries match their published quaternionic counts") {
    const std::vector<std::pair<std::string, std::uint64_t>> expected = {
        {"SG(32,14)", 3},        {"SG(36,7)", 4},
        {"SG(64,14)", 4},        {"SG(96,66)", 3},
        {"SG(100,7)", 12},       {"Q8:BT", 2},
        {"SG(384,18129)", 4},    {"SG(1152,155476)", 4},
        {"SG(1152,155456)", 4},  {"Q8:BT^2", 3},
        {"SG(192,183)", 2},
    };
    for (const auto& [spec, m] : expected) {
        CAPTURE(spec);
        CHECK(quaternionic_character_count(*parse(spec), cfg()) == m);
    }
}

TEST_CASE("composed product tables equal direct computation") {
    for (const char* spec : {"Q8 x C(2)", "Q12 x C(4)", "BT x C(2)"}) {
        CAPTURE(spec);
        auto g = parse(spec);
        auto composed = CharacterTable::of(g->classes(), cfg());
        REQUIRE(g->classes()->is_product());
        // same permutation group, classes recomputed from its elements
        auto direct = CharacterTable::of(ConjugacyClasses::raw(g->perm), cfg());
        REQUIRE(composed->count() == direct->count());
        for (unsigned i = 0; i < composed->count(); ++i) {
            CHECK(composed->degree(i) == direct->degree(i));
            CHECK(composed->indicator(i) == direct->indicator(i));
            for (unsigned j = 0; j < composed->count(); ++j)
                CHECK(composed->value(i, j) == direct->value(i, j));
        }
    }
}

TEST_CASE("real linear character counts") {
    CHECK(real_linear_character_count(*parse("C(1)")) == 1);
    CHECK(real_linear_character_count(*parse("C(2)")) == 2);
    CHECK(real_linear_character_count(*parse("C(4)")) == 2);
    CHECK(real_linear_character_count(*parse("C(3)")) == 1);
    CHECK(real_linear_character_count(*parse("C(2)^3")) == 8);
    CHECK(real_linear_character_count(*parse("Q8")) == 4);
    CHECK(real_linear_character_count(*parse("Q12")) == 2);
    CHECK(real_linear_character_count(*parse("BT")) == 1);
    CHECK(real_linear_character_count(*parse("BO")) == 2);
    CHECK(real_linear_character_count(*parse("BI")) == 1);
}

TEST_CASE("product count formula agrees with composed tables") {
    for (const char* spec : {"BTxC2", "Q8xC2", "Q16xC2", "BT^2", "BTxBI"}) {
        CAPTURE(spec);
        auto g = parse(spec);
        auto t = CharacterTable::of(g->classes(), cfg());
        CHECK(t->quaternionic_count() == quaternionic_character_count(*g, cfg()));
    }
}

TEST_CASE("quotient counts from kernel classes") {
    auto g = parse("Q8xC2");
    auto cls = g->classes();
    auto t = CharacterTable::of(cls, cfg());

    // kernel = the central C2 factor: quotient is Q8
    std::vector<unsigned> kernel = {0u, cls->index_of_tuple({0u, 1u})};
    CHECK(t->quaternionic_count_of_quotient(kernel) == 1);

    // trivial kernel: the quotient is the group itself
    CHECK(t->quaternionic_count_of_quotient({0u}) == t->quaternionic_count());

    // full kernel: the quotient is trivial
    std::vector<unsigned> all;
    for (unsigned j = 0; j < cls->count(); ++j) all.push_back(j);
    CHECK(t->quaternionic_count_of_quotient(all) == 0);

    // Q8 / center is C2 x C2 (abelian, so no quaternionic characters)
    auto q8 = table_of("Q8");
    const unsigned central = class_of_order(q8->classes(), 2);
    CHECK(q8->quaternionic_count_of_quotient({0u, central}) == 0);

    // BT / center is A4
    auto bt = table_of("BT");
    const unsigned z = class_of_order(bt->classes(), 2);
    CHECK(bt->quaternionic_count_of_quotient({0u, z}) == 0);
}

TEST_CASE("class count cap") {
    Config small = cfg();
    small.max_chartab_classes = 4;
    auto g = parse("Q8");
    CHECK_THROWS_AS(
        (void)CharacterTable::of(ConjugacyClasses::raw(g->perm), small),
        ResourceExceeded);
}

TEST_CASE("table cache returns the same instance for the same classes") {
    auto cls = parse("BO")->classes();
    auto t1 = CharacterTable::of(cls, cfg());
    auto t2 = CharacterTable::of(cls, cfg());
    CHECK(t1.get() == t2.get());
}
