#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "maxseg/error.hpp"

namespace maxseg {

// Public indices are 1-based; 0 never names an item.
using Index = std::int64_t;

// Values and weights are integer-scaled fixed point: a real number r is stored
// as r * 10^decimals, where `decimals` is a property of the owning sequence.
using Fixed = std::int64_t;
__extension__ typedef __int128 Wide;

inline constexpr Index kNoIndex = 0;
inline constexpr Fixed kUnbounded = std::numeric_limits<Fixed>::max();

// Bound on |sum of values| and on total weight. Keeps every cross product of a
// sum by a width inside 124 bits, so differences of two products never overflow.
inline constexpr Fixed kSafeMagnitude = Fixed{1} << 62;

inline constexpr int kMaxDecimals = 9;

Fixed pow10(int decimals);

struct WeightedItem {
    Fixed value = 0;
    Fixed weight = 0;
};

// Density as an unreduced fraction sum/width with width > 0. Ordering and
// equality compare the rational values exactly.
struct DensityValue {
    Fixed sum = 0;
    Fixed width = 1;

    double to_double() const { return static_cast<double>(sum) / static_cast<double>(width); }

    friend std::strong_ordering operator<=>(const DensityValue& a, const DensityValue& b) {
        const Wide lhs = static_cast<Wide>(a.sum) * b.width;
        const Wide rhs = static_cast<Wide>(b.sum) * a.width;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const DensityValue& a, const DensityValue& b) {
        return static_cast<Wide>(a.sum) * b.width == static_cast<Wide>(b.sum) * a.width;
    }
};

struct Segment {
    Index start = kNoIndex;
    Index end = kNoIndex;
    DensityValue density;

    Index length() const { return end - start + 1; }
};

class WeightedSequence {
public:
    WeightedSequence() = default;

    Index size() const { return static_cast<Index>(items_.size()); }
    int decimals() const { return decimals_; }
    // Fixed-point representation of 1.0.
    Fixed unit() const { return unit_; }

    const WeightedItem& item(Index i) const { return items_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<WeightedItem>& items() const { return items_; }

    Fixed prefix_value(Index j) const { return prefix_value_[static_cast<std::size_t>(j)]; }
    Fixed prefix_weight(Index j) const { return prefix_weight_[static_cast<std::size_t>(j)]; }
    Fixed total_width() const { return prefix_weight_.back(); }

    // Unchecked O(1) queries; callers guarantee 1 <= i <= j <= n.
    Fixed width(Index i, Index j) const { return prefix_weight(j) - prefix_weight(i - 1); }
    Fixed sum(Index i, Index j) const { return prefix_value(j) - prefix_value(i - 1); }
    DensityValue density(Index i, Index j) const { return {sum(i, j), width(i, j)}; }

    // Every weight equals 1.0.
    bool is_uniform() const { return uniform_; }
    Fixed min_weight() const { return min_weight_; }
    Fixed max_weight() const { return max_weight_; }

    // Copy of items [first, last] as an independent sequence with the same scale.
    WeightedSequence slice(Index first, Index last) const;

private:
    friend WeightedSequence build_sequence(std::vector<WeightedItem> items, int decimals);

    std::vector<WeightedItem> items_;
    std::vector<Fixed> prefix_value_{0};
    std::vector<Fixed> prefix_weight_{0};
    int decimals_ = 0;
    Fixed unit_ = 1;
    Fixed min_weight_ = 0;
    Fixed max_weight_ = 0;
    bool uniform_ = false;
};

// Throws EmptySequence, NonPositiveWeight(i) or NumericRange.
WeightedSequence build_sequence(std::vector<WeightedItem> items, int decimals = 0);

// Convenience for unit weights with integer values.
WeightedSequence uniform_sequence(const std::vector<Fixed>& values);

// Checked density query; throws IndexOutOfRange unless 1 <= i <= j <= n.
DensityValue density(const WeightedSequence& seq, Index i, Index j);

Segment make_segment(const WeightedSequence& seq, Index i, Index j);

// Lower/upper feasible right endpoints per left index, 1-based. lower[i] is
// kNoIndex when no segment starting at i reaches width L.
struct FeasibilityBounds {
    Fixed min_width = 0;
    Fixed max_width = kUnbounded;
    std::vector<Index> lower;
    std::vector<Index> upper;
    std::optional<Index> last_feasible_start;  // i0
    std::uint64_t cursor_advances = 0;

    Index size() const { return static_cast<Index>(lower.size()) - 1; }
    bool has_lower(Index i) const { return lower[static_cast<std::size_t>(i)] != kNoIndex; }
    Index lower_at(Index i) const { return lower[static_cast<std::size_t>(i)]; }
    Index upper_at(Index i) const { return upper[static_cast<std::size_t>(i)]; }
};

// Two-cursor O(n) sweep. Requires 0 < L <= U and every weight <= U; throws
// InvalidWidthBounds otherwise. When L exceeds the total width the result has
// no feasible start (last_feasible_start is empty) instead of throwing.
FeasibilityBounds compute_bounds(const WeightedSequence& seq, Fixed min_width, Fixed max_width = kUnbounded);

} // namespace maxseg
