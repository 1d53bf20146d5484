#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "maxseg/core.hpp"
#include "maxseg/sweep_counters.hpp"

namespace maxseg {

// Answers, for left indices i presented in strictly decreasing order, "which
// right endpoint in [x, y] with w(i, .) >= L maximizes the density", except
// that the answer is capped by the previous answer (see find_match).
//
// p[k] for k in (x, y] is the end of the leftmost block of the decreasingly
// right-skew partition of A(k, y); bucket(k) lists every j with p[j] == k in
// ascending order. lower/upper/bridge are the sweep cursors.
//
// The structure keeps references to `seq` and `bounds`; both must outlive it.
class MinWidthSweep {
public:
    MinWidthSweep(const WeightedSequence& seq, const FeasibilityBounds& bounds, Index x, Index y);

    // Returns min(m, m0): m is the best right endpoint in [max(x, L_i), y], the
    // largest one on density ties; m0 is the previous return value (y before the
    // first call). When max(x, L_i) == y the only candidate y is returned and the
    // cursors are left untouched.
    //
    // Throws QueryOrderViolation unless i is below every earlier query,
    // InfeasibleQuery if L_i is undefined or beyond y.
    Index find_match(Index i);

    Index x() const { return x_; }
    Index y() const { return y_; }
    Index lower() const { return lower_; }
    Index upper() const { return upper_; }
    Index bridge() const { return bridge_; }

    // Valid for k in (x, y].
    Index pointer(Index k) const { return storage_[static_cast<std::size_t>(k - x_ - 1)]; }
    std::span<const Index> bucket(Index k) const;

    const SweepCounters& counters() const { return counters_; }

private:
    const WeightedSequence* seq_;
    const FeasibilityBounds* bounds_;
    Index x_;
    Index y_;
    // One allocation: p[] (y - x), bucket offsets (y - x + 1), bucket items (y - x).
    std::vector<Index> storage_;
    Index lower_;
    Index upper_;
    Index bridge_;
    Index last_query_;
    SweepCounters counters_;
};

// TSV debug dump: one "k<TAB>p[k]<TAB>bucket(k)" row per pointer, bucket comma-separated.
void dump_tsv(std::ostream& out, const MinWidthSweep& sweep);

} // namespace maxseg
