#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/zoo.hpp"

namespace eichler {

enum class VerdictStatus {
    PC,             // projective cancellation holds
    FailsSFC,       // stably free cancellation fails
    SfcHoldsPcOpen, // stably free cancellation holds, projective undetermined
    Open,           // no verified criterion applies
};

std::string to_string(VerdictStatus s);

// One matched rule: its identifier, a plain-language justification, and the
// witness (target group, isomorph, or quotient) that made it fire.
struct TraceEntry {
    std::string rule;
    std::string citation;
    std::string witness;
};

// Classification outcome.  `trace` lists every rule that matched, strongest
// first; `status` is decided by the first entry.
struct Verdict {
    VerdictStatus status = VerdictStatus::Open;
    std::string mode; // "general", "two-group", "c22", "periodic"
    std::vector<TraceEntry> trace;
};

// Name lists the general classifier draws from; the bundled defaults mirror
// the classification fact table.  The status-claiming lists (cancellation
// holders = family + pc_isomorphs, verified failures, verified
// SFC-holds-PC-open groups) are pairwise disjoint; open_blockers may overlap
// the holders since it only annotates unresolved cases.
struct FactTables {
    std::vector<std::string> family;             // base cancellation groups (R1)
    std::vector<std::string> pc_isomorphs;       // catalog groups with verified PC (R2)
    std::vector<std::string> sfc_fail_quotients; // named verified failures (R3)
    std::vector<std::string> sfc_holds_pc_open;  // verified SFC-holders, PC open (R4)
    std::vector<std::string> open_blockers;      // unresolved covers reported by R5
    static const FactTables& bundled();
};

// First member of the verified cancellation family that g reaches by a
// quaternionic-count-preserving surjection: the trivial group, one of the
// seven binary polyhedral groups Q8..Q20, BT, BO, BI, or a product
// BT^n x BI^m (products enumerated up to |g| by divisibility).  Returns the
// member's spec string, or nullopt.
std::optional<std::string> family_eichler_quotient(const Group& g, const Zoo& zoo,
                                                   const Config& cfg);
bool is_family_eichler(const Group& g, const Zoo& zoo, const Config& cfg);

// First known minimal cover occurring as a quotient of g: a dicyclic group
// Q(4n) with n >= 6, one of the named exceptional covers, or a catalog
// product Q8:BT^n (n <= 2; larger members lie beyond the bundled catalog and
// are not scanned).  Returns the cover's name, or nullopt.
std::optional<std::string> known_cover_quotient(const Group& g, const Zoo& zoo,
                                                const Config& cfg);

// General classifier.  Rules, strongest first:
//   R1  count-preserving surjection onto the verified family      -> PC
//   R1b direct product of a binary polyhedral group with a group
//       admitting no order-2 quotient and carrying no
//       quaternionic character                                    -> PC
//   R2  isomorphic to a catalog group with verified cancellation  -> PC
//   R3  maps onto a verified stably-free-cancellation failure     -> FailsSFC
//   R4  isomorphic to a verified SFC-holder with PC undetermined  -> SfcHoldsPcOpen
//   R5  fallback: reports unresolved covers below g               -> Open
// All rules are evaluated and every match is recorded; contradictory
// matches (a cancellation rule together with a failure rule) raise
// InternalError since the bundled lists would have to be wrong.
Verdict classify(const Group& g, const Zoo& zoo, const Config& cfg);

// Classifier for 2-groups (precondition: |g| must be a power of 2,
// NotATwoGroup otherwise).  Projective cancellation holds
// exactly when g maps onto none of Q8xC2, Q16xC2, SG(32,14), SG(64,14) and
// no generalized quaternion group of order >= 32; otherwise stably free
// cancellation already fails.
Verdict classify_two_group(const Group& g, const Zoo& zoo, const Config& cfg);

// Classifier for groups mapping onto C2 x C2 (precondition: at least two
// even invariants in the abelianization, NoC22Quotient otherwise).  Stably
// free cancellation fails exactly when g maps onto a dicyclic group Q(4n)
// with n >= 6 even, a product Q(4n) x C2 with n in {2,4} or n >= 3 odd, or
// one of BT x C2^2, BO x C2, BI x C2, SG(32,14), SG(64,14); projective
// cancellation holds otherwise.
Verdict classify_c22(const Group& g, const Zoo& zoo, const Config& cfg);

// Classifier for groups with periodic cohomology (precondition: no subgroup
// C_p x C_p, NotPeriodic otherwise).  Projective cancellation holds exactly
// when the quaternionic count is at most 2.  With count 3, non-cancellation
// occurs in every stable class when the Sylow 2-subgroup is cyclic, and in
// the kernel-subgroup classes of the projective class group otherwise; with
// count >= 4 it occurs in every stable class.  The annotation is traced.
Verdict classify_periodic(const Group& g, const Zoo& zoo, const Config& cfg);

// Cross-check for groups mapping onto BT x C2 (NotApplicable otherwise):
// g has a count-preserving surjection onto BT x C2 exactly when none of
// Q(4n) (n >= 6), BT x C2^2, BT x Q12, (Q8:BT) x C2, BT x Q20, BT x BO,
// BT^2 x C2 is a quotient.  Reports both sides and their agreement.
struct TxC2Report {
    bool eichler_txc2 = false;
    std::optional<std::string> obstruction;
    bool agree = false;
};
TxC2Report txc2_equivalence_check(const Group& g, const Zoo& zoo, const Config& cfg);

// Runs the general classifier on every fact-table row and compares the
// outcome with the recorded cancellation column ("unknown" rows must come
// out Open).  One result per row, in table order.
struct TableCheckRow {
    std::string name;
    std::string expected;
    std::string got;
    bool ok = false;
};
std::vector<TableCheckRow> check_table(const Zoo& zoo, const Config& cfg);

} // namespace eichler
