#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "core/appendix.hpp"
#include "core/errors.hpp"
#include "core/verdict.hpp"
#include "core/zoo.hpp"

using namespace eichler;

namespace {

const Config& cfg() {
    static Config c;
    return c;
}

const Zoo& zoo() {
    static Zoo z = Zoo::with_builtin_data();
    return z;
}

GroupPtr parse(const std::string& spec) { return zoo().parse(spec, cfg()); }

Verdict classify_spec(const std::string& spec) { return classify(*parse(spec), zoo(), cfg()); }

bool trace_has_rule(const Verdict& v, const std::string& rule) {
    return std::any_of(v.trace.begin(), v.trace.end(),
                       [&](const TraceEntry& t) { return t.rule == rule; });
}

} // namespace

TEST_CASE("fact tables") {
    const FactTables& t = FactTables::bundled();
    CHECK(t.family.size() == 8);
    CHECK(t.family.front() == "C(1)");
    CHECK(t.pc_isomorphs.size() == 15);
    CHECK(std::count(t.pc_isomorphs.begin(), t.pc_isomorphs.end(), "BTxC2") == 1);
    CHECK(std::count(t.pc_isomorphs.begin(), t.pc_isomorphs.end(), "BI^3") == 1);
    CHECK(t.sfc_fail_quotients.size() == 11);
    CHECK(t.sfc_holds_pc_open.size() == 5);

    // status-claiming lists are pairwise disjoint across status classes
    std::set<std::string> holders(t.family.begin(), t.family.end());
    holders.insert(t.pc_isomorphs.begin(), t.pc_isomorphs.end());
    for (const std::string& n : t.sfc_fail_quotients) {
        CHECK(holders.count(n) == 0);
        CHECK(std::count(t.sfc_holds_pc_open.begin(), t.sfc_holds_pc_open.end(), n) == 0);
    }
    for (const std::string& n : t.sfc_holds_pc_open) CHECK(holders.count(n) == 0);
    // open_blockers may overlap verified holders (BTxC2 blocks open cases above it)
    CHECK(std::count(t.open_blockers.begin(), t.open_blockers.end(), "BTxC2") == 1);
}

TEST_CASE("family membership and known covers") {
    CHECK(family_eichler_quotient(*parse("Q8"), zoo(), cfg()) == "Q(8)");
    CHECK(family_eichler_quotient(*parse("BT x C(5)"), zoo(), cfg()) == "BT");
    CHECK(family_eichler_quotient(*parse("BI^2"), zoo(), cfg()) == "BI x BI");
    CHECK_FALSE(family_eichler_quotient(*parse("Q(24)"), zoo(), cfg()).has_value());
    CHECK_FALSE(family_eichler_quotient(*parse("Q(8) x BT"), zoo(), cfg()).has_value());
    CHECK(is_family_eichler(*parse("C(12)"), zoo(), cfg()));
    CHECK_FALSE(is_family_eichler(*parse("BTxC2"), zoo(), cfg()));

    CHECK(known_cover_quotient(*parse("Q(24)"), zoo(), cfg()) == "Q(24)");
    CHECK_FALSE(known_cover_quotient(*parse("Q8"), zoo(), cfg()).has_value());
    CHECK_FALSE(known_cover_quotient(*parse("BT x C(3)"), zoo(), cfg()).has_value());
    CHECK(known_cover_quotient(*parse("SG(32,14)"), zoo(), cfg()).has_value());
    CHECK(known_cover_quotient(*parse("BTxC2"), zoo(), cfg()) == "BTxC2");
}

TEST_CASE("general classifier examples") {
    Verdict q8 = classify_spec("Q8");
    CHECK(q8.status == VerdictStatus::PC);
    CHECK(q8.mode == "general");
    REQUIRE_FALSE(q8.trace.empty());
    CHECK(q8.trace.front().rule == "R1");
    CHECK(q8.trace.front().witness == "Q(8)");

    Verdict q24 = classify_spec("Q(24)");
    CHECK(q24.status == VerdictStatus::FailsSFC);
    REQUIRE(q24.trace.size() == 1);
    CHECK(q24.trace.front().rule == "R3");
    CHECK(q24.trace.front().witness == "Q(24)");

    Verdict g32 = classify_spec("SG(32,14)");
    CHECK(g32.status == VerdictStatus::FailsSFC);
    CHECK(g32.trace.front().rule == "R3");

    Verdict txc2 = classify_spec("BTxC2");
    CHECK(txc2.status == VerdictStatus::PC);
    REQUIRE(txc2.trace.size() == 1);
    CHECK(txc2.trace.front().rule == "R2");
    CHECK(txc2.trace.front().witness == "BTxC2");

    Verdict open = classify_spec("SG(384,18129)");
    CHECK(open.status == VerdictStatus::Open);
    REQUIRE(open.trace.size() == 1);
    CHECK(open.trace.front().rule == "R5");
    CHECK(open.trace.front().witness.find("SG(384,18129)") != std::string::npos);

    Verdict abelian = classify_spec("C(12)");
    CHECK(abelian.status == VerdictStatus::PC);
    CHECK(abelian.trace.front().rule == "R1");
    CHECK(abelian.trace.front().witness == "C(1)");

    CHECK(to_string(VerdictStatus::SfcHoldsPcOpen) == "SFC, PC open");
    Verdict holds = classify_spec("SG(96,66)");
    CHECK(holds.status == VerdictStatus::SfcHoldsPcOpen);
    CHECK(holds.trace.front().rule == "R4");
}

TEST_CASE("polyhedral product rule") {
    // complement with odd abelianization and no quaternionic character: the
    // product rule applies alongside the family rule
    Verdict a = classify_spec("Q(8) x C(3)");
    CHECK(a.status == VerdictStatus::PC);
    CHECK(a.trace.front().rule == "R1");
    CHECK(trace_has_rule(a, "R1b"));

    Verdict b = classify_spec("Q(12) x C(7)");
    CHECK(b.status == VerdictStatus::PC);
    CHECK(trace_has_rule(b, "R1b"));

    // the complement BT has odd abelianization but carries a quaternionic
    // character, so the product rule must NOT apply: Q8 x BT maps onto
    // BT x C2^2 and fails stably free cancellation
    Verdict c = classify_spec("Q(8) x BT");
    CHECK(c.status == VerdictStatus::FailsSFC);
    CHECK_FALSE(trace_has_rule(c, "R1"));
    CHECK_FALSE(trace_has_rule(c, "R1b"));
    REQUIRE(c.trace.size() == 1);
    CHECK(c.trace.front().rule == "R3");
    CHECK(c.trace.front().witness == "BTxC2^2");
}

TEST_CASE("fact table reproduction") {
    const std::vector<TableCheckRow> rows = check_table(zoo(), cfg());
    CHECK(rows.size() == 38);
    for (const TableCheckRow& r : rows) {
        INFO(r.name, ": expected ", r.expected, ", got ", r.got);
        CHECK(r.ok);
    }
}

TEST_CASE("two-group classifier") {
    for (const char* spec : {"Q8", "Q16", "C(8)"}) {
        Verdict v = classify_two_group(*parse(spec), zoo(), cfg());
        INFO(spec);
        CHECK(v.status == VerdictStatus::PC);
        CHECK(v.mode == "two-group");
        CHECK(v.trace.front().rule == "2G-pass");
    }
    for (const char* spec :
         {"Q8xC2", "Q16xC2", "SG(32,14)", "SG(64,14)", "Q(32)", "Q(8) x C(2) x C(2)"}) {
        Verdict v = classify_two_group(*parse(spec), zoo(), cfg());
        INFO(spec);
        CHECK(v.status == VerdictStatus::FailsSFC);
        CHECK(v.trace.front().rule == "2G-fail");
    }
    CHECK(classify_two_group(*parse("Q(32)"), zoo(), cfg()).trace.front().witness == "Q(32)");
    CHECK_THROWS_AS(classify_two_group(*parse("BT"), zoo(), cfg()), NotATwoGroup);
    CHECK_THROWS_AS(classify_two_group(*parse("C(12)"), zoo(), cfg()), NotATwoGroup);
}

TEST_CASE("klein-quotient classifier") {
    Verdict q8 = classify_c22(*parse("Q8"), zoo(), cfg());
    CHECK(q8.status == VerdictStatus::PC);
    CHECK(q8.mode == "c22");
    CHECK(q8.trace.front().rule == "C22-pass");
    CHECK(classify_c22(*parse("Q16"), zoo(), cfg()).status == VerdictStatus::PC);

    Verdict q24 = classify_c22(*parse("Q(24)"), zoo(), cfg());
    CHECK(q24.status == VerdictStatus::FailsSFC);
    CHECK(q24.trace.front().witness == "Q(24)");
    CHECK(classify_c22(*parse("Q8xC2"), zoo(), cfg()).trace.front().witness == "Q(8) x C(2)");
    CHECK(classify_c22(*parse("Q20xC2"), zoo(), cfg()).trace.front().witness == "Q(20) x C(2)");
    CHECK(classify_c22(*parse("BTxC2^2"), zoo(), cfg()).trace.front().witness == "BTxC2^2");

    CHECK_THROWS_AS(classify_c22(*parse("Q12"), zoo(), cfg()), NoC22Quotient);
    CHECK_THROWS_AS(classify_c22(*parse("BT"), zoo(), cfg()), NoC22Quotient);
    CHECK_THROWS_AS(classify_c22(*parse("C(16)"), zoo(), cfg()), NoC22Quotient);
}

TEST_CASE("periodic classifier") {
    for (const char* spec : {"Q8", "BI", "C(12)"}) {
        Verdict v = classify_periodic(*parse(spec), zoo(), cfg());
        INFO(spec);
        CHECK(v.status == VerdictStatus::PC);
        CHECK(v.mode == "periodic");
        CHECK(v.trace.front().rule == "P1");
    }
    Verdict q28 = classify_periodic(*parse("Q(28)"), zoo(), cfg());
    CHECK(q28.status == VerdictStatus::FailsSFC);
    CHECK(q28.trace.front().rule == "P2a");
    CHECK(q28.trace.front().witness == "cyclic Sylow 2-subgroup");

    Verdict q24 = classify_periodic(*parse("Q(24)"), zoo(), cfg());
    CHECK(q24.status == VerdictStatus::FailsSFC);
    CHECK(q24.trace.front().rule == "P2b");

    Verdict q32 = classify_periodic(*parse("Q(32)"), zoo(), cfg());
    CHECK(q32.status == VerdictStatus::FailsSFC);
    CHECK(q32.trace.front().rule == "P3");

    CHECK_THROWS_AS(classify_periodic(*parse("Q8xC2"), zoo(), cfg()), NotPeriodic);
}

TEST_CASE("count-preserving surjection onto BTxC2 vs obstruction list") {
    TxC2Report self = txc2_equivalence_check(*parse("BTxC2"), zoo(), cfg());
    CHECK(self.eichler_txc2);
    CHECK_FALSE(self.obstruction.has_value());
    CHECK(self.agree);

    TxC2Report c4 = txc2_equivalence_check(*parse("BT x C(4)"), zoo(), cfg());
    CHECK(c4.eichler_txc2);
    CHECK_FALSE(c4.obstruction.has_value());
    CHECK(c4.agree);

    for (const char* spec : {"BTxQ12", "BT^2xC2", "BTxC2^2"}) {
        TxC2Report r = txc2_equivalence_check(*parse(spec), zoo(), cfg());
        INFO(spec);
        CHECK_FALSE(r.eichler_txc2);
        CHECK(r.obstruction == std::string(spec));
        CHECK(r.agree);
    }

    CHECK_THROWS_AS(txc2_equivalence_check(*parse("BT"), zoo(), cfg()), NotApplicable);
    CHECK_THROWS_AS(txc2_equivalence_check(*parse("Q8"), zoo(), cfg()), NotApplicable);
}
