#pragma once

#include <iosfwd>
#include <vector>

#include "maxseg/core.hpp"
#include "maxseg/sweep_counters.hpp"

namespace maxseg {

// Upper-bound dual of MinWidthSweep. q[k] for k in (x, y] is the start of the
// rightmost block of the decreasingly right-skew partition of A(x+1, k).
class MaxWidthSweep {
public:
    MaxWidthSweep(const WeightedSequence& seq, const FeasibilityBounds& bounds, Index x, Index y);

    // Returns the right endpoint in [x, min(U_i, m0)] maximizing density for
    // left index i (largest on ties), m0 being the previous return value or y.
    // Requires i <= x <= U_i; throws QueryOrderViolation or RangeViolation.
    Index find_match(Index i);

    Index x() const { return x_; }
    Index y() const { return y_; }
    Index upper() const { return upper_; }

    // Valid for k in (x, y].
    Index pointer(Index k) const { return pointer_[static_cast<std::size_t>(k - x_ - 1)]; }

    const SweepCounters& counters() const { return counters_; }

private:
    const WeightedSequence* seq_;
    const FeasibilityBounds* bounds_;
    Index x_;
    Index y_;
    std::vector<Index> pointer_;
    Index upper_;
    Index last_query_;
    SweepCounters counters_;
};

// TSV debug dump: one "k<TAB>q[k]" row per pointer.
void dump_tsv(std::ostream& out, const MaxWidthSweep& sweep);

} // namespace maxseg
