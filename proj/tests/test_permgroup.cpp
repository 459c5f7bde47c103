#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/permgroup.hpp"

using namespace eichler;

namespace {

Perm cyc(const std::string& text, unsigned degree) {
    return Perm::from_cycles(text, degree);
}

// Independent order oracle: plain breadth-first closure under multiplication,
// with no stabilizer-chain machinery involved.
std::size_t bfs_order(const std::vector<Perm>& gens, unsigned degree) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue;
    seen.insert(Perm(degree));
    queue.push_back(Perm(degree));
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const Perm& g : gens) {
            Perm n = queue[i] * g;
            if (seen.insert(n).second) queue.push_back(n);
        }
    return seen.size();
}

// Independent class-count oracle via Burnside: the number of conjugacy
// classes equals the number of commuting ordered pairs divided by |G|.
std::size_t burnside_class_count(const PermGroup& g) {
    const auto& elems = g.elements();
    std::uint64_t commuting = 0;
    for (const Perm& a : elems)
        for (const Perm& b : elems)
            if (a * b == b * a) ++commuting;
    return static_cast<std::size_t>(commuting / elems.size());
}

PermGroup symmetric(unsigned n) {
    std::vector<Perm> gens{cyc("(1,2)", n)};
    std::string big = "(1";
    for (unsigned i = 2; i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    gens.push_back(cyc(big, n));
    return PermGroup(n, gens);
}

PermGroup quaternion8() {
    // right-regular action on the eight elements x^a, x^a y
    return PermGroup(8, {cyc("(1,2,3,4)(5,8,7,6)", 8), cyc("(1,5,3,7)(2,6,4,8)", 8)});
}

} // namespace

TEST_CASE("stabilizer chain order matches breadth-first closure") {
    struct Case {
        std::vector<std::string> gens;
        unsigned degree;
    };
    std::vector<Case> cases = {
        {{"(1,2)", "(1,2,3,4)"}, 4},
        {{"(1,2,3)", "(2,3,4)"}, 4},
        {{"(1,2,3,4,5)", "(1,2)"}, 5},
        {{"(1,2,3,4,5,6)"}, 6},
        {{"(1,2)(3,4)", "(1,3)(2,4)"}, 4},
        {{"(1,2,3,4,5,6,7)", "(2,3,5)"}, 7},
        {{"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"}, 8},
        {{"()"}, 3},
    };
    for (const auto& c : cases) {
        std::vector<Perm> gens;
        for (const auto& t : c.gens) gens.push_back(cyc(t, c.degree));
        PermGroup g(c.degree, gens);
        CAPTURE(c.gens.front());
        CHECK(g.order() == bfs_order(gens, c.degree));
    }
}

TEST_CASE("known group orders") {
    CHECK(symmetric(4).order() == 24);
    CHECK(symmetric(5).order() == 120);
    CHECK(symmetric(6).order() == 720);
    CHECK(quaternion8().order() == 8);
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(a4.order() == 12);
    PermGroup trivial(5);
    CHECK(trivial.order() == 1);
    CHECK(trivial.is_trivial());
}

TEST_CASE("membership testing") {
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(a4.contains(cyc("(1,2)(3,4)", 4)));
    CHECK(a4.contains(Perm(4)));
    CHECK_FALSE(a4.contains(cyc("(1,2)", 4)));
    CHECK_FALSE(a4.contains(cyc("(1,2)", 3)));
}

TEST_CASE("element enumeration is sorted and identity-first") {
    PermGroup s4 = symmetric(4);
    const auto& e = s4.elements();
    REQUIRE(e.size() == 24);
    CHECK(e[0].is_identity());
    CHECK(std::is_sorted(e.begin(), e.end()));
    std::set<Perm> dedup(e.begin(), e.end());
    CHECK(dedup.size() == 24);
}

TEST_CASE("enumeration caps are enforced") {
    Config tight;
    tight.max_raw_order = 10;
    PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)}, tight);
    CHECK(s4.order() == 24); // order itself needs no enumeration
    CHECK_THROWS_AS(s4.elements(), ResourceExceeded);
}

TEST_CASE("abelianness and cyclicity") {
    CHECK_FALSE(symmetric(4).is_abelian());
    CHECK(PermGroup(6, {cyc("(1,2,3,4,5,6)", 6)}).is_cyclic());
    PermGroup v4(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
    CHECK(v4.is_abelian());
    CHECK_FALSE(v4.is_cyclic());
    CHECK_FALSE(quaternion8().is_abelian());
}

TEST_CASE("derived subgroups and normal closures") {
    PermGroup s4 = symmetric(4);
    PermGroup d1 = s4.derived_subgroup();
    CHECK(d1.order() == 12); // alternating group
    PermGroup d2 = d1.derived_subgroup();
    CHECK(d2.order() == 4); // Klein four group
    CHECK(d2.derived_subgroup().order() == 1);

    CHECK(s4.normal_closure({cyc("(1,2)", 4)}).order() == 24);
    CHECK(s4.normal_closure({cyc("(1,2)(3,4)", 4)}).order() == 4);
    CHECK(s4.normal_closure({}).order() == 1);

    PermGroup q8 = quaternion8();
    CHECK(q8.derived_subgroup().order() == 2);
}

TEST_CASE("abelian invariants") {
    CHECK(symmetric(4).abelian_invariants() == std::vector<std::uint64_t>{2});
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(a4.abelian_invariants() == std::vector<std::uint64_t>{3});
    CHECK(quaternion8().abelian_invariants() == std::vector<std::uint64_t>({2, 2}));
    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    CHECK(c6.abelian_invariants() == std::vector<std::uint64_t>({2, 3}));
    PermGroup c12(12, {cyc("(1,2,3,4,5,6,7,8,9,10,11,12)", 12)});
    CHECK(c12.abelian_invariants() == std::vector<std::uint64_t>({3, 4}));
    CHECK(c12.abelianization_order() == 12);
    CHECK(PermGroup(3).abelian_invariants().empty());
    PermGroup c2xc4 = direct_product(
        {PermGroup(2, {cyc("(1,2)", 2)}), PermGroup(4, {cyc("(1,2,3,4)", 4)})});
    CHECK(c2xc4.abelian_invariants() == std::vector<std::uint64_t>({2, 4}));
}

TEST_CASE("pointwise stabilizers") {
    PermGroup s4 = symmetric(4);
    CHECK(s4.pointwise_stabilizer({0}).order() == 6);
    CHECK(s4.pointwise_stabilizer({0, 1}).order() == 2);
    CHECK(s4.pointwise_stabilizer({0, 1, 2}).order() == 1);
    PermGroup prod = direct_product({symmetric(3), PermGroup(2, {cyc("(1,2)", 2)})});
    PermGroup stab = prod.pointwise_stabilizer({0, 1, 2});
    CHECK(stab.order() == 2);
    for (const Perm& g : stab.generators())
        for (unsigned x = 0; x < 3; ++x) CHECK(g[x] == x);
}

TEST_CASE("coset actions") {
    PermGroup s4 = symmetric(4);
    PermGroup s3 = s4.pointwise_stabilizer({0});
    PermGroup act = s4.coset_action(s3);
    CHECK(act.degree() == 4);
    CHECK(act.order() == 24); // faithful: the point stabilizer is core-free

    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    PermGroup v4 = a4.subgroup({cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
    PermGroup quot = a4.coset_action(v4);
    CHECK(quot.degree() == 3);
    CHECK(quot.order() == 3); // the quotient by a normal subgroup

    // determinism: rebuilding gives the identical action
    PermGroup quot2 = a4.coset_action(v4);
    REQUIRE(quot.generators().size() == quot2.generators().size());
    for (std::size_t i = 0; i < quot.generators().size(); ++i)
        CHECK(quot.generators()[i] == quot2.generators()[i]);

    Config tight;
    tight.max_coset_index = 2;
    PermGroup s4t(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)}, tight);
    CHECK_THROWS_AS(s4t.coset_action(s4t.pointwise_stabilizer({0})), ResourceExceeded);
}

TEST_CASE("orbit computation") {
    PermGroup g(6, {cyc("(1,2,3)", 6), cyc("(4,5)", 6)});
    auto orb = g.orbit_of(0);
    std::sort(orb.begin(), orb.end());
    CHECK(orb == std::vector<unsigned>({0, 1, 2}));
    CHECK(g.orbit_of(5) == std::vector<unsigned>({5}));
}

TEST_CASE("subgroup relations") {
    PermGroup s4 = symmetric(4);
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(a4.is_subgroup_of(s4));
    CHECK_FALSE(s4.is_subgroup_of(a4));
    PermGroup a4b(4, {cyc("(1,2,3)", 4), cyc("(1,2)(3,4)", 4)});
    CHECK(a4.same_group(a4b));
    CHECK_FALSE(a4.same_group(s4));
}

TEST_CASE("conjugacy class counts match the commuting-pair oracle") {
    PermGroup s4 = symmetric(4);
    CHECK(ConjugacyClasses::raw(s4)->count() == burnside_class_count(s4));
    PermGroup q8 = quaternion8();
    CHECK(ConjugacyClasses::raw(q8)->count() == burnside_class_count(q8));
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(ConjugacyClasses::raw(a4)->count() == burnside_class_count(a4));
    PermGroup d6(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)});
    CHECK(ConjugacyClasses::raw(d6)->count() == burnside_class_count(d6));
}

TEST_CASE("symmetric group classes in canonical order") {
    auto cc = ConjugacyClasses::raw(symmetric(4));
    REQUIRE(cc->count() == 5);
    // (identity) < (2,2-type, size 3) < (transpositions, size 6) < 3-cycles < 4-cycles
    CHECK(cc->rep(0).is_identity());
    CHECK(cc->size(0) == 1);
    std::vector<std::uint64_t> orders, sizes;
    for (unsigned i = 0; i < 5; ++i) {
        orders.push_back(cc->rep_order(i));
        sizes.push_back(cc->size(i));
    }
    CHECK(orders == std::vector<std::uint64_t>({1, 2, 2, 3, 4}));
    CHECK(sizes == std::vector<std::uint64_t>({1, 3, 6, 8, 6}));
    std::uint64_t total = 0;
    for (unsigned i = 0; i < 5; ++i) total += cc->size(i);
    CHECK(total == 24);

    // every class is closed under conjugation by generators
    PermGroup s4 = symmetric(4);
    for (const Perm& e : s4.elements())
        for (const Perm& g : s4.generators())
            CHECK(cc->class_of(e.conjugated_by(g)) == cc->class_of(e));

    // squaring a 4-cycle lands in the 2,2-class; all classes are self-inverse
    CHECK(cc->squaring_class(4) == 1);
    for (unsigned i = 0; i < 5; ++i) CHECK(cc->inverse_class(i) == i);
    CHECK(cc->power_class(4, 2) == 1);
    CHECK(cc->power_class(4, 3) == 4);
    CHECK(cc->power_class(3, 3) == 0);
}

TEST_CASE("quaternion group classes") {
    auto cc = ConjugacyClasses::raw(quaternion8());
    REQUIRE(cc->count() == 5);
    std::vector<std::uint64_t> sizes;
    for (unsigned i = 0; i < cc->count(); ++i) sizes.push_back(cc->size(i));
    CHECK(sizes == std::vector<std::uint64_t>({1, 1, 2, 2, 2}));
    // all three order-4 classes square into the unique central involution
    CHECK(cc->rep_order(1) == 2);
    for (unsigned i = 2; i < 5; ++i) {
        CHECK(cc->rep_order(i) == 4);
        CHECK(cc->squaring_class(i) == 1);
        CHECK(cc->inverse_class(i) == i); // -i is conjugate to i inside Q8
    }
}

TEST_CASE("composed product classes agree with raw classes") {
    PermGroup s3 = symmetric(3);
    PermGroup c2(2, {cyc("(1,2)", 2)});
    PermGroup prod = direct_product({s3, c2});
    REQUIRE(prod.order() == 12);

    auto raw = ConjugacyClasses::raw(prod);
    auto composed =
        ConjugacyClasses::product({ConjugacyClasses::raw(s3), ConjugacyClasses::raw(c2)});
    REQUIRE(raw->count() == composed->count());
    REQUIRE(composed->count() == 6);
    CHECK(composed->group_order() == 12);
    CHECK(composed->degree() == 5);

    // same canonical data, and agreeing class membership on every element
    for (unsigned i = 0; i < raw->count(); ++i) {
        CHECK(raw->size(i) == composed->size(i));
        CHECK(raw->rep_order(i) == composed->rep_order(i));
    }
    for (const Perm& e : prod.elements())
        CHECK(raw->class_of(e) == composed->class_of(e));
    for (unsigned i = 0; i < composed->count(); ++i) {
        CHECK(composed->squaring_class(i) == raw->squaring_class(i));
        CHECK(composed->inverse_class(i) == raw->inverse_class(i));
        CHECK(composed->power_class(i, 5) == raw->power_class(i, 5));
        CHECK(composed->index_of_tuple(composed->tuple_of(i)) == i);
    }
}

TEST_CASE("three-factor composed classes") {
    PermGroup c2(2, {cyc("(1,2)", 2)});
    auto c2c = ConjugacyClasses::raw(c2);
    auto cube = ConjugacyClasses::product({c2c, c2c, c2c});
    CHECK(cube->count() == 8);
    CHECK(cube->group_order() == 8);
    CHECK(cube->size(0) == 1);
    CHECK(cube->rep(0).is_identity());
    unsigned involutions = 0;
    for (unsigned i = 0; i < 8; ++i)
        if (cube->rep_order(i) == 2) ++involutions;
    CHECK(involutions == 7);
}
