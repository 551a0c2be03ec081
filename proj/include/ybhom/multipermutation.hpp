#ifndef YBHOM_MULTIPERMUTATION_HPP
#define YBHOM_MULTIPERMUTATION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ybhom/structures.hpp"

namespace ybhom {

bool is_square_free(const CycleSet& C);
/// The squaring map a -> a.a is a permutation.
bool is_nondegenerate_cs(const CycleSet& C);

struct Retraction {
    CycleSet quotient;
    std::vector<int> projection;  // element -> class index
};

/// Quotient by equality of left translations; refused on degenerate input.
Retraction retract(const CycleSet& C);

struct MpReport {
    std::vector<int> levels;   // |Ret^0|, |Ret^1|, ...
    std::optional<int> level;  // empty means not multipermutation
};

MpReport mp_level(const CycleSet& C);

/// The Z/2-extension by f(x,y) = [x != y]; square-free input and output,
/// one retraction away from the input.
CycleSet doubling_extension(const CycleSet& C);

struct EnumerationConfig {
    int size = 1;
    bool square_free = false;
    bool up_to_iso = false;
    long long budget = 200'000'000;
};

struct EnumerationStats {
    long long nodes = 0;
    long long emitted = 0;
    bool complete = true;  // false when the sink stopped the scan early
};

/// Backtracking over left-translation rows with incremental cycle-property
/// checks. The sink returns false to stop the scan. Throws BudgetExceeded
/// when the node budget is hit.
EnumerationStats enumerate_cycle_sets(const EnumerationConfig& cfg,
                                      const std::function<bool(const CycleSet&)>& sink);

std::vector<CycleSet> enumerate_cycle_sets(const EnumerationConfig& cfg);

/// Lexicographically minimal relabeling of the operation table (n <= 8).
CycleSet canonical_form(const CycleSet& C);

/// Number of relabelings fixing the table.
long automorphism_count(const CycleSet& C);

struct NmTable {
    std::vector<int> minimal_size;  // index m; -1 when unresolved in range
    int max_size_scanned = 0;
    long long nodes = 0;
};

/// Scans square-free cycle sets by size and records the minimal size at
/// which each multipermutation level m <= max_m occurs. Verifies the
/// doubling estimate N_{m+1} <= 2 N_m on the computed range.
NmTable nm_table(int max_m, int max_size, long long budget = 400'000'000);

}  // namespace ybhom

#endif
