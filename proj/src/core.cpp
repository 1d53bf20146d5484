#include "maxseg/core.hpp"

#include <algorithm>
#include <string>

namespace maxseg {

Fixed pow10(int decimals) {
    if (decimals < 0 || decimals > 18) throw Error(ErrorKind::NumericRange, "decimal scale out of range");
    Fixed r = 1;
    for (int k = 0; k < decimals; ++k) r *= 10;
    return r;
}

WeightedSequence build_sequence(std::vector<WeightedItem> items, int decimals) {
    if (items.empty()) throw Error(ErrorKind::EmptySequence, "sequence has no items");
    if (decimals < 0 || decimals > kMaxDecimals)
        throw Error(ErrorKind::NumericRange, "decimal places must be in [0, 9]");

    WeightedSequence seq;
    seq.decimals_ = decimals;
    seq.unit_ = pow10(decimals);
    seq.prefix_value_.reserve(items.size() + 1);
    seq.prefix_weight_.reserve(items.size() + 1);

    Wide abs_total = 0;
    Wide weight_total = 0;
    seq.min_weight_ = items.front().weight;
    seq.max_weight_ = items.front().weight;
    seq.uniform_ = true;
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto& it = items[k];
        const auto index = static_cast<std::int64_t>(k + 1);
        if (it.weight <= 0) throw Error(ErrorKind::NonPositiveWeight, "weight must be positive", index);
        abs_total += it.value < 0 ? -static_cast<Wide>(it.value) : static_cast<Wide>(it.value);
        weight_total += it.weight;
        if (abs_total > kSafeMagnitude || weight_total > kSafeMagnitude)
            throw Error(ErrorKind::NumericRange, "sums exceed the exact comparison range", index);
        seq.prefix_value_.push_back(seq.prefix_value_.back() + it.value);
        seq.prefix_weight_.push_back(seq.prefix_weight_.back() + it.weight);
        seq.min_weight_ = std::min(seq.min_weight_, it.weight);
        seq.max_weight_ = std::max(seq.max_weight_, it.weight);
        seq.uniform_ = seq.uniform_ && it.weight == seq.unit_;
    }
    seq.items_ = std::move(items);
    return seq;
}

WeightedSequence uniform_sequence(const std::vector<Fixed>& values) {
    std::vector<WeightedItem> items;
    items.reserve(values.size());
    for (Fixed v : values) items.push_back({v, 1});
    return build_sequence(std::move(items), 0);
}

WeightedSequence WeightedSequence::slice(Index first, Index last) const {
    if (first < 1 || last > size() || first > last)
        throw Error(ErrorKind::IndexOutOfRange, "slice [" + std::to_string(first) + ", " + std::to_string(last) + "]");
    std::vector<WeightedItem> part(items_.begin() + (first - 1), items_.begin() + last);
    return build_sequence(std::move(part), decimals_);
}

DensityValue density(const WeightedSequence& seq, Index i, Index j) {
    if (i < 1 || j > seq.size() || i > j)
        throw Error(ErrorKind::IndexOutOfRange,
                    "segment (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [1, " +
                        std::to_string(seq.size()) + "]");
    return seq.density(i, j);
}

Segment make_segment(const WeightedSequence& seq, Index i, Index j) {
    return {i, j, density(seq, i, j)};
}

FeasibilityBounds compute_bounds(const WeightedSequence& seq, Fixed min_width, Fixed max_width) {
    if (min_width <= 0) throw Error(ErrorKind::InvalidWidthBounds, "L must be positive");
    if (min_width > max_width) throw Error(ErrorKind::InvalidWidthBounds, "L exceeds U");
    const Index n = seq.size();

    FeasibilityBounds b;
    b.min_width = min_width;
    b.max_width = max_width;
    b.lower.assign(static_cast<std::size_t>(n + 1), kNoIndex);
    b.upper.assign(static_cast<std::size_t>(n + 1), kNoIndex);

    // Forward cursor for L_i.
    Index j = 1;
    for (Index i = 1; i <= n; ++i) {
        if (j < i) {
            j = i;
            ++b.cursor_advances;
        }
        while (j <= n && seq.width(i, j) < min_width) {
            ++j;
            ++b.cursor_advances;
        }
        if (j > n) break;
        b.lower[static_cast<std::size_t>(i)] = j;
        b.last_feasible_start = i;
    }

    // Backward cursor for U_i.
    if (max_width == kUnbounded) {
        std::fill(b.upper.begin() + 1, b.upper.end(), n);
    } else {
        for (Index i = 1; i <= n; ++i)
            if (seq.item(i).weight > max_width)
                throw Error(ErrorKind::InvalidWidthBounds, "item wider than U", i);
        j = n;
        for (Index i = n; i >= 1; --i) {
            while (seq.width(i, j) > max_width) {
                --j;
                ++b.cursor_advances;
            }
            b.upper[static_cast<std::size_t>(i)] = j;
        }
    }
    return b;
}

} // namespace maxseg
