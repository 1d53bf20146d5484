#include "maxseg/sweep_right.hpp"

#include <limits>
#include <ostream>
#include <string>

namespace maxseg {

MaxWidthSweep::MaxWidthSweep(const WeightedSequence& seq, const FeasibilityBounds& bounds, Index x, Index y)
    : seq_(&seq), bounds_(&bounds), x_(x), y_(y), upper_(y), last_query_(std::numeric_limits<Index>::max()) {
    if (x < 1 || y > seq.size() || x > y)
        throw Error(ErrorKind::IndexOutOfRange,
                    "sweep range [" + std::to_string(x) + ", " + std::to_string(y) + "]");
    if (bounds.size() != seq.size()) throw Error(ErrorKind::IndexOutOfRange, "bounds built for another sequence");

    pointer_.resize(static_cast<std::size_t>(y - x));
    auto q = [&](Index k) -> Index& { return pointer_[static_cast<std::size_t>(k - x - 1)]; };

    // A block starting at x+1 has no left neighbour inside the range.
    for (Index k = x + 1; k <= y; ++k) {
        Index start = k;
        while (start > x + 1 && seq.density(q(start - 1), start - 1) <= seq.density(start, k)) {
            start = q(start - 1);
            ++counters_.init_steps;
        }
        q(k) = start;
    }
}

Index MaxWidthSweep::find_match(Index i) {
    if (i >= last_query_)
        throw Error(ErrorKind::QueryOrderViolation,
                    "query " + std::to_string(i) + " after " + std::to_string(last_query_), i);
    if (i < 1 || i > x_) throw Error(ErrorKind::RangeViolation, "left index must not exceed x", i);
    const Index max_end = bounds_->upper_at(i);
    if (max_end < x_) throw Error(ErrorKind::RangeViolation, "U_i lies before the sweep range", i);
    last_query_ = i;

    const auto& seq = *seq_;
    while (upper_ > max_end) {
        --upper_;
        ++counters_.query_steps;
    }
    while (upper_ > x_ && seq.density(i, pointer(upper_) - 1) > seq.density(i, upper_)) {
        upper_ = pointer(upper_) - 1;
        ++counters_.query_steps;
    }
    return upper_;
}

void dump_tsv(std::ostream& out, const MaxWidthSweep& sweep) {
    out << "k\tq\n";
    for (Index k = sweep.x() + 1; k <= sweep.y(); ++k) out << k << '\t' << sweep.pointer(k) << '\n';
}

} // namespace maxseg
