#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eichler {

// Known cancellation status of a catalog group.
enum class Cancellation {
    PC,                  // projective cancellation holds
    FailsSFC,            // stably free cancellation fails
    SfcHoldsPcOpen,      // SFC holds, PC undetermined
    Unknown,             // no information
};

std::string to_string(Cancellation c);

// One row of the bundled classification fact table.  Each row describes a
// group in the iterated minimal-cover graph: its level and position, the
// catalog name used to construct it, the directed cover edges it
// participates in, its quaternionic count, and its known cancellation
// status.
struct FactRow {
    unsigned level = 0;         // graph level (0 = trivial group)
    unsigned index = 0;         // 1-based position within the level
    std::string name;           // canonical catalog name
    std::vector<std::string> aliases;  // further catalog names for the same group
    std::string group_id;       // library id "(order,index)" or plain order
    std::uint64_t order = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;  // (level, index) targets
    std::uint64_t mh = 0;       // quaternionic count
    std::string description;
    Cancellation cancellation = Cancellation::Unknown;
};

// The full table, ordered by (level, index).
const std::vector<FactRow>& fact_table();

// Row lookup by canonical name or alias; nullptr when absent.
const FactRow* fact_row(const std::string& name);

// Row lookup by (level, index); nullptr when absent.
const FactRow* fact_row(unsigned level, unsigned index);

} // namespace eichler
