#include "maxseg/sweep_left.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace maxseg {

MinWidthSweep::MinWidthSweep(const WeightedSequence& seq, const FeasibilityBounds& bounds, Index x, Index y)
    : seq_(&seq), bounds_(&bounds), x_(x), y_(y), lower_(y), upper_(y), bridge_(y),
      last_query_(std::numeric_limits<Index>::max()) {
    if (x < 1 || y > seq.size() || x > y)
        throw Error(ErrorKind::IndexOutOfRange,
                    "sweep range [" + std::to_string(x) + ", " + std::to_string(y) + "]");
    if (bounds.size() != seq.size()) throw Error(ErrorKind::IndexOutOfRange, "bounds built for another sequence");

    const auto count = static_cast<std::size_t>(y - x);
    storage_.assign(3 * count + 1, 0);
    Index* const pointer = storage_.data();
    Index* const offset = pointer + count;
    Index* const items = offset + count + 1;
    auto p = [&](Index k) -> Index& { return pointer[k - x - 1]; };

    for (Index k = y; k > x; --k) {
        Index end = k;
        while (end < y && seq.density(k, end) <= seq.density(end + 1, p(end + 1))) {
            end = p(end + 1);
            ++counters_.init_steps;
        }
        p(k) = end;
    }

    // Buckets by counting sort; filling in ascending k keeps each bucket sorted.
    // offset[s] is first used as the fill cursor of bucket s, then shifted back
    // so that it marks the bucket's start again.
    for (Index k = x + 1; k <= y; ++k) ++offset[p(k) - x];
    for (std::size_t s = 1; s <= count; ++s) offset[s] += offset[s - 1];
    for (Index k = x + 1; k <= y; ++k) items[offset[p(k) - x - 1]++] = k;
    for (std::size_t s = count; s > 0; --s) offset[s] = offset[s - 1];
    offset[0] = 0;
}

std::span<const Index> MinWidthSweep::bucket(Index k) const {
    const auto count = static_cast<std::size_t>(y_ - x_);
    const auto s = static_cast<std::size_t>(k - x_ - 1);
    const Index* offset = storage_.data() + count;
    const Index* items = offset + count + 1;
    return {items + offset[s], items + offset[s + 1]};
}

Index MinWidthSweep::find_match(Index i) {
    if (i >= last_query_)
        throw Error(ErrorKind::QueryOrderViolation,
                    "query " + std::to_string(i) + " after " + std::to_string(last_query_), i);
    if (i < 1 || i > seq_->size()) throw Error(ErrorKind::IndexOutOfRange, "left index", i);
    if (!bounds_->has_lower(i)) throw Error(ErrorKind::InfeasibleQuery, "no segment starting here reaches L", i);
    const Index min_end = bounds_->lower_at(i);
    if (min_end > y_) throw Error(ErrorKind::InfeasibleQuery, "L_i lies beyond the sweep range", i);
    last_query_ = i;

    const Index base = std::max(x_, min_end);
    if (base >= y_) return y_;

    const auto& seq = *seq_;
    while (lower_ > base + 1) {
        --lower_;
        if (pointer(lower_) >= upper_) bridge_ = lower_;
        ++counters_.query_steps;
    }
    while (upper_ >= lower_ && seq.density(i, bridge_ - 1) > seq.density(i, pointer(bridge_))) {
        ++counters_.query_steps;
        upper_ = bridge_ - 1;
        if (upper_ >= lower_) {
            Index next = kNoIndex;
            for (Index k : bucket(upper_)) {
                ++counters_.scan_steps;
                if (k >= lower_) {
                    next = k;
                    break;
                }
            }
            if (next == kNoIndex) throw std::logic_error("MinWidthSweep: bridge invariant broken");
            bridge_ = next;
        }
    }
    return upper_;
}

void dump_tsv(std::ostream& out, const MinWidthSweep& sweep) {
    out << "k\tp\tbucket\n";
    for (Index k = sweep.x() + 1; k <= sweep.y(); ++k) {
        out << k << '\t' << sweep.pointer(k) << '\t';
        bool first = true;
        for (Index j : sweep.bucket(k)) {
            out << (first ? "" : ",") << j;
            first = false;
        }
        out << '\n';
    }
}

} // namespace maxseg
