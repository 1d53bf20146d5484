#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "maxseg/core.hpp"
#include "maxseg/sweep_counters.hpp"

namespace maxseg {

// Width window [lower, upper] in the sequence's fixed-point units.
struct SolveRequest {
    Fixed lower = 0;
    Fixed upper = kUnbounded;
};

struct SolveStats {
    SweepCounters sweep;
    std::uint64_t structures = 0;
    std::vector<std::string> algorithms;  // one entry per solved piece

    SolveStats& operator+=(const SolveStats& o);
};

// Dyadic block B_{ordinal, level} = A(1 + ordinal*2^level, (ordinal+1)*2^level),
// clipped to n.
struct BlockId {
    int level = 0;
    Index ordinal = 0;

    Index start() const { return 1 + ordinal * (Index{1} << level); }
    Index end(Index n) const { return std::min(n, (ordinal + 1) * (Index{1} << level)); }

    friend bool operator==(const BlockId&, const BlockId&) = default;
};

// All solvers return the maximum-density segment under the tie rule: smallest
// start, then smallest end. Each throws InfeasibleWidthWindow when nothing fits.

// L = U over unit weights: every window of exactly ceil(L) items.
// Throws NonUniformInput on non-unit weights.
Segment sliding_window(const WeightedSequence& seq, Fixed width, SolveStats* stats = nullptr);

// Width at least L, no upper bound. Any positive weights. O(n).
Segment max_density_min_width(const WeightedSequence& seq, Fixed min_width, SolveStats* stats = nullptr);

// Unit weights, L < U (after rounding to item counts). O(n).
Segment max_density_uniform(const WeightedSequence& seq, Fixed min_width, Fixed max_width,
                            SolveStats* stats = nullptr);

// Weights >= 1, L <= U, every weight <= U. O(n log(U - L + 1)).
// Throws WeightBelowOne for a lighter item.
Segment max_density_general(const WeightedSequence& seq, Fixed min_width, Fixed max_width,
                            SolveStats* stats = nullptr);

// Prior-work O(n log n) binary search over right-skew blocks (width >= L only).
// Benchmark baseline; not part of the dispatcher.
Segment max_density_min_width_binary_search(const WeightedSequence& seq, Fixed min_width,
                                            SolveStats* stats = nullptr);

// Disjoint aligned blocks of level <= max_level whose union is exactly [p, q].
// Requires 1 <= p <= q <= n and q - p + 1 < 2^(max_level+1).
std::vector<BlockId> collect_blocks(Index p, Index q, int max_level, Index n);
// Same, replacing the contents of `out` (lets hot loops reuse one buffer).
void collect_blocks(Index p, Index q, int max_level, Index n, std::vector<BlockId>& out);

// floor(log2(c)) for c >= 1.
int floor_log2(Index c);

// Splits at items wider than U, routes each piece to the cheapest applicable
// solver and merges under the tie rule.
Segment solve(const WeightedSequence& seq, const SolveRequest& request, SolveStats* stats = nullptr);

// Given the optimal density, the tie-rule segment attaining it. O(n).
Segment canonical_segment(const WeightedSequence& seq, const FeasibilityBounds& bounds, const DensityValue& best);

} // namespace maxseg
