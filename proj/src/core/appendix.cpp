#include "core/appendix.hpp"

#include <map>

namespace eichler {

std::string to_string(Cancellation c) {
    switch (c) {
    case Cancellation::PC: return "PC";
    case Cancellation::FailsSFC: return "fails-SFC";
    case Cancellation::SfcHoldsPcOpen: return "SFC, PC open";
    case Cancellation::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using E = std::vector<std::pair<unsigned, unsigned>>;
constexpr auto kPC = Cancellation::PC;
constexpr auto kFail = Cancellation::FailsSFC;
constexpr auto kOpen = Cancellation::SfcHoldsPcOpen;
constexpr auto kNone = Cancellation::Unknown;

std::vector<FactRow> build_table() {
    std::vector<FactRow> t;
    auto add = [&](unsigned lvl, unsigned idx, std::string name, std::string gid,
                   std::uint64_t order, E edges, std::uint64_t mh,
                   std::string desc, Cancellation c,
                   std::vector<std::string> aliases = {}) {
        FactRow r;
        r.level = lvl;
        r.index = idx;
        r.name = std::move(name);
        r.aliases = std::move(aliases);
        r.group_id = std::move(gid);
        r.order = order;
        r.edges = std::move(edges);
        r.mh = mh;
        r.description = std::move(desc);
        r.cancellation = c;
        t.push_back(std::move(r));
    };

    add(0, 1, "C1", "(1,1)", 1, {}, 0, "trivial group", kPC);

    add(1, 1, "Q8", "(8,4)", 8, {{0, 1}}, 1, "quaternion group of order 8", kPC);
    add(1, 2, "Q12", "(12,1)", 12, {{0, 1}}, 1, "dicyclic group of order 12", kPC);
    add(1, 3, "Q16", "(16,9)", 16, {{0, 1}}, 2, "generalized quaternion group of order 16", kPC);
    add(1, 4, "Q20", "(20,1)", 20, {{0, 1}}, 2, "dicyclic group of order 20", kPC);
    add(1, 5, "BT", "(24,3)", 24, {{0, 1}}, 1, "binary tetrahedral group", kPC);
    add(1, 6, "BO", "(48,28)", 48, {{0, 1}}, 2, "binary octahedral group", kPC);
    add(1, 7, "BI", "(120,5)", 120, {{0, 1}}, 2, "binary icosahedral group", kPC);

    add(2, 1, "Q8xC2", "(16,12)", 16, {{1, 1}}, 2, "Q8 x C2", kFail);
    add(2, 2, "Q12xC2", "(24,7)", 24, {{1, 2}}, 2, "Q12 x C2", kFail);
    add(2, 3, "SG(32,14)", "(32,14)", 32, {{1, 1}, {1, 3}}, 3,
        "central extension C4 . Q8", kFail);
    add(2, 4, "Q16xC2", "(32,41)", 32, {{1, 3}}, 4, "Q16 x C2", kFail);
    add(2, 5, "SG(36,7)", "(36,7)", 36, {{1, 2}}, 4, "semidirect product C3 : Q12", kFail);
    add(2, 6, "Q20xC2", "(40,7)", 40, {{1, 4}}, 4, "Q20 x C2", kFail);
    add(2, 7, "BTxC2", "(48,32)", 48, {{1, 5}}, 2, "BT x C2", kPC);
    add(2, 8, "SG(64,14)", "(64,14)", 64, {{1, 3}}, 4, "central extension C4 . Q16", kFail);
    add(2, 9, "SG(96,66)", "(96,66)", 96, {{1, 2}, {1, 6}}, 3,
        "semidirect product Q8 : Q12", kOpen);
    add(2, 10, "BOxC2", "(96,188)", 96, {{1, 6}}, 4, "BO x C2", kFail);
    add(2, 11, "SG(100,7)", "(100,7)", 100, {{1, 4}}, 12, "semidirect product C5 : Q20", kFail);
    add(2, 12, "Q8:BT", "(192,1022)", 192, {{1, 5}}, 2, "semidirect product Q8 : BT", kOpen);
    add(2, 13, "BIxC2", "(240,94)", 240, {{1, 7}}, 4, "BI x C2", kFail);
    add(2, 14, "SG(384,18129)", "(384,18129)", 384, {{1, 6}}, 4,
        "semidirect product Q8 : BO", kNone);
    add(2, 15, "BT^2", "(576,5128)", 576, {{1, 5}}, 2, "BT x BT", kPC);
    add(2, 16, "SG(1152,155476)", "(1152,155476)", 1152, {{1, 6}}, 4,
        "twisted product of BT and BO", kNone);
    add(2, 17, "BTxBI", "2880", 2880, {{1, 5}, {1, 7}}, 3, "BT x BI", kPC);
    add(2, 18, "BI^2", "14400", 14400, {{1, 7}}, 4, "BI x BI", kPC);

    add(3, 1, "BTxC2^2", "(96,198)", 96, {{2, 7}}, 4, "BT x C2 x C2", kFail);
    add(3, 2, "BTxQ12", "(288,409)", 288, {{1, 2}, {2, 7}}, 3, "BT x Q12", kOpen);
    add(3, 3, "(Q8:BT)xC2", "(384,18228)", 384, {{2, 7}, {2, 12}}, 4,
        "(Q8 : BT) x C2", kNone);
    add(3, 4, "BTxQ20", "(480,266)", 480, {{1, 4}, {2, 7}}, 4, "BT x Q20", kOpen);
    add(3, 5, "BTxBO", "(1152,155456)", 1152, {{1, 6}, {2, 7}}, 4, "BT x BO",
        kNone, {"SG(1152,155456)"});
    add(3, 6, "BT^2xC2", "(1152,156570)", 1152, {{2, 7}, {2, 15}}, 4,
        "BT x BT x C2", kNone);
    add(3, 7, "Q8:BT^2", "4608", 4608, {{2, 15}}, 3,
        "semidirect product Q8 : (BT x BT)", kNone);
    add(3, 8, "BTx(Q8:BT)", "4608", 4608, {{2, 12}, {2, 15}}, 3,
        "BT x (Q8 : BT)", kNone);
    add(3, 9, "BT^3", "13824", 13824, {{2, 15}}, 3, "BT x BT x BT", kPC);
    add(3, 10, "BIx(Q8:BT)", "23040", 23040, {{2, 12}, {2, 17}}, 4,
        "BI x (Q8 : BT)", kNone);
    add(3, 11, "BT^2xBI", "69120", 69120, {{2, 15}, {2, 17}}, 4,
        "BT x BT x BI", kPC);
    add(3, 12, "BTxBI^2", "345600", 345600, {{2, 17}, {2, 18}}, 5,
        "BT x BI x BI", kPC);
    add(3, 13, "BI^3", "1728000", 1728000, {{2, 18}}, 6, "BI x BI x BI", kPC);

    return t;
}

const std::map<std::string, const FactRow*>& name_index() {
    static const std::map<std::string, const FactRow*> idx = [] {
        std::map<std::string, const FactRow*> m;
        for (const FactRow& r : fact_table()) {
            m.emplace(r.name, &r);
            for (const std::string& a : r.aliases) m.emplace(a, &r);
        }
        return m;
    }();
    return idx;
}

} // namespace

const std::vector<FactRow>& fact_table() {
    static const std::vector<FactRow> table = build_table();
    return table;
}

const FactRow* fact_row(const std::string& name) {
    const auto& idx = name_index();
    auto it = idx.find(name);
    return it == idx.end() ? nullptr : it->second;
}

const FactRow* fact_row(unsigned level, unsigned index) {
    for (const FactRow& r : fact_table())
        if (r.level == level && r.index == index) return &r;
    return nullptr;
}

} // namespace eichler
