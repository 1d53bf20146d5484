#pragma once

#include <utility>
#include <vector>

#include "maxseg/core.hpp"

// Brute-force references for differential testing. Nothing here touches the
// prefix-sum arrays or the sweep structures: every sum is accumulated directly
// from the items.
namespace maxseg::oracle {

inline constexpr Index kDefaultCap = 10'000;
inline constexpr Index kDefaultPartitionCap = 2'000;

// Maximum-density segment with L <= width <= U under the tie rule (smallest
// start, then smallest end). Throws CapExceeded or InfeasibleWidthWindow.
Segment brute_force_best(const WeightedSequence& seq, Fixed min_width, Fixed max_width = kUnbounded,
                         Index cap = kDefaultCap);

// Every feasible segment attaining the maximum density, ordered by (start, end).
std::vector<Segment> optimal_segments(const WeightedSequence& seq, Fixed min_width, Fixed max_width = kUnbounded,
                                      Index cap = kDefaultCap);

// mu(i, j) <= mu(j + 1, k) for every split i <= j < k.
bool is_right_skew(const WeightedSequence& seq, Index i, Index k);

// Decreasingly right-skew partition of A(x, y) by repeatedly peeling the
// longest right-skew prefix. Blocks as (start, end), left to right.
std::vector<std::pair<Index, Index>> brute_force_partition(const WeightedSequence& seq, Index x, Index y,
                                                           Index cap = kDefaultPartitionCap);

// Exhaustive search over all 2^(y-x) splittings of A(x, y) for valid
// decreasingly right-skew partitions. Requires y - x <= 16.
std::vector<std::vector<std::pair<Index, Index>>> all_valid_partitions(const WeightedSequence& seq, Index x, Index y);

} // namespace maxseg::oracle
