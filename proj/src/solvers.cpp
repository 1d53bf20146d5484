#include "maxseg/solvers.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>

#include "maxseg/sweep_left.hpp"
#include "maxseg/sweep_right.hpp"

namespace maxseg {

SolveStats& SolveStats::operator+=(const SolveStats& o) {
    sweep += o.sweep;
    structures += o.structures;
    algorithms.insert(algorithms.end(), o.algorithms.begin(), o.algorithms.end());
    return *this;
}

namespace {

[[noreturn]] void throw_infeasible(const std::string& what) {
    throw Error(ErrorKind::InfeasibleWidthWindow, what);
}

Fixed ceil_div(Fixed a, Fixed b) { return a / b + (a % b != 0 ? 1 : 0); }

// Running maximum over (left index, right endpoint) candidates.
struct BestPair {
    Index start = kNoIndex;
    Index end = kNoIndex;
    DensityValue density;

    void offer(const WeightedSequence& seq, Index i, Index j) {
        const DensityValue d = seq.density(i, j);
        if (start == kNoIndex || d > density) {
            start = i;
            end = j;
            density = d;
        }
    }
};

void record(SolveStats* stats, const char* algorithm, const SweepCounters& counters, std::uint64_t structures) {
    if (!stats) return;
    stats->sweep += counters;
    stats->structures += structures;
    stats->algorithms.emplace_back(algorithm);
}

} // namespace

Segment canonical_segment(const WeightedSequence& seq, const FeasibilityBounds& bounds, const DensityValue& best) {
    // mu(i, j) >= best  <=>  score(j) >= score(i - 1), score(k) = P(k)*W - S*Wt(k).
    const Index n = seq.size();
    auto score = [&](Index k) -> Wide {
        return static_cast<Wide>(seq.prefix_value(k)) * best.width -
               static_cast<Wide>(best.sum) * seq.prefix_weight(k);
    };

    std::optional<Segment> found;
    std::deque<Index> window;  // decreasing scores
    Index pushed = 0;
    for (Index i = 1; i <= n; ++i) {
        if (!bounds.has_lower(i)) break;
        const Index lo = bounds.lower_at(i);
        const Index hi = bounds.upper_at(i);
        while (pushed < hi) {
            ++pushed;
            const Wide s = score(pushed);
            while (!window.empty() && score(window.back()) <= s) window.pop_back();
            window.push_back(pushed);
        }
        while (!window.empty() && window.front() < lo) window.pop_front();
        if (lo > hi || window.empty()) continue;

        const Wide base = score(i - 1);
        const Wide top = score(window.front());
        if (top > base)
            throw std::logic_error("solver result is not optimal: segment starting at " + std::to_string(i) +
                                   " is denser");
        if (top == base && !found) {
            Index j = lo;
            while (score(j) != base) ++j;
            found = Segment{i, j, seq.density(i, j)};
        }
    }
    if (!found) throw std::logic_error("solver density is not attained by any feasible segment");
    return *found;
}

Segment sliding_window(const WeightedSequence& seq, Fixed width, SolveStats* stats) {
    if (!seq.is_uniform()) throw Error(ErrorKind::NonUniformInput, "sliding window needs unit weights");
    if (width <= 0) throw Error(ErrorKind::InvalidWidthBounds, "window width must be positive");
    const Index n = seq.size();
    const Fixed count = ceil_div(width, seq.unit());
    if (count > n) throw_infeasible("window longer than the sequence");

    Index best = 1;
    for (Index i = 2; i + count - 1 <= n; ++i)
        if (seq.sum(i, i + count - 1) > seq.sum(best, best + count - 1)) best = i;
    record(stats, "sliding-window", {}, 0);
    return {best, best + count - 1, seq.density(best, best + count - 1)};
}

Segment max_density_min_width(const WeightedSequence& seq, Fixed min_width, SolveStats* stats) {
    const FeasibilityBounds bounds = compute_bounds(seq, min_width);
    if (!bounds.last_feasible_start) throw_infeasible("L exceeds the total width");

    MinWidthSweep sweep(seq, bounds, 1, seq.size());
    BestPair best;
    for (Index i = *bounds.last_feasible_start; i >= 1; --i) best.offer(seq, i, sweep.find_match(i));

    record(stats, "min-width", sweep.counters(), 1);
    return canonical_segment(seq, bounds, best.density);
}

Segment max_density_uniform(const WeightedSequence& seq, Fixed min_width, Fixed max_width, SolveStats* stats) {
    if (!seq.is_uniform()) throw Error(ErrorKind::NonUniformInput, "uniform solver needs unit weights");
    if (min_width <= 0 || min_width > max_width) throw Error(ErrorKind::InvalidWidthBounds, "need 0 < L <= U");
    const Index n = seq.size();
    const Fixed unit = seq.unit();
    const Index lo_count = ceil_div(min_width, unit);
    const Index hi_count = std::min<Index>(n, max_width / unit);
    if (lo_count > n) throw_infeasible("L exceeds the sequence length");
    if (lo_count >= hi_count) throw Error(ErrorKind::InvalidWidthBounds, "uniform solver needs L < U <= n in items");

    const FeasibilityBounds bounds = compute_bounds(seq, lo_count * unit, hi_count * unit);
    const Index block = hi_count - lo_count;
    const Index block_count = (n + block - 1) / block;

    // Block z spans [1 + z*block, min(n, (z+1)*block)].
    std::vector<MinWidthSweep> lower_side;
    std::vector<MaxWidthSweep> upper_side;
    lower_side.reserve(static_cast<std::size_t>(block_count));
    upper_side.reserve(static_cast<std::size_t>(block_count));
    for (Index z = 0; z < block_count; ++z) {
        const Index first = 1 + z * block;
        const Index last = std::min(n, first + block - 1);
        lower_side.emplace_back(seq, bounds, first, last);
        upper_side.emplace_back(seq, bounds, first, last);
    }

    BestPair best;
    for (Index i = *bounds.last_feasible_start; i >= 1; --i) {
        const Index z = (bounds.lower_at(i) - 1) / block;
        Index choice = lower_side[static_cast<std::size_t>(z)].find_match(i);
        if (z + 1 < block_count) {
            const Index alt = upper_side[static_cast<std::size_t>(z + 1)].find_match(i);
            if (seq.density(i, alt) > seq.density(i, choice)) choice = alt;
        }
        best.offer(seq, i, choice);
    }

    SweepCounters counters;
    for (const auto& s : lower_side) counters += s.counters();
    for (const auto& s : upper_side) counters += s.counters();
    record(stats, "uniform", counters, static_cast<std::uint64_t>(2 * block_count));
    return canonical_segment(seq, bounds, best.density);
}

int floor_log2(Index c) {
    if (c < 1) throw Error(ErrorKind::IndexOutOfRange, "floor_log2 of non-positive value");
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(c))) - 1;
}

void collect_blocks(Index p, Index q, int max_level, Index n, std::vector<BlockId>& out) {
    if (p < 1 || q > n || p > q || max_level < 0)
        throw Error(ErrorKind::IndexOutOfRange,
                    "interval [" + std::to_string(p) + ", " + std::to_string(q) + "] in [1, " + std::to_string(n) +
                        "]");
    out.clear();
    Index s = p;
    while (s <= q) {
        const int aligned =
            s == 1 ? max_level : std::min(max_level, std::countr_zero(static_cast<std::uint64_t>(s - 1)));
        const int level = std::min(aligned, floor_log2(q - s + 1));
        out.push_back({level, (s - 1) >> level});
        s += Index{1} << level;
    }
}

std::vector<BlockId> collect_blocks(Index p, Index q, int max_level, Index n) {
    std::vector<BlockId> blocks;
    collect_blocks(p, q, max_level, n, blocks);
    return blocks;
}

Segment max_density_general(const WeightedSequence& seq, Fixed min_width, Fixed max_width, SolveStats* stats) {
    if (seq.min_weight() < seq.unit()) {
        Index light = 1;
        while (seq.item(light).weight >= seq.unit()) ++light;
        throw Error(ErrorKind::WeightBelowOne, "general solver needs every weight >= 1", light);
    }
    const FeasibilityBounds bounds = compute_bounds(seq, min_width, max_width);
    if (!bounds.last_feasible_start) throw_infeasible("L exceeds the total width");
    const Index n = seq.size();

    // With weights >= 1 an interval [L_i, U_i] holds at most floor(U - L) + 1 items.
    const Index span = max_width == kUnbounded ? n : std::min<Index>(n, (max_width - min_width) / seq.unit() + 1);
    const int top_level = floor_log2(span);

    // levels[k][j] sweeps B_{j,k}; level 0 blocks are single items and need none.
    // U_i never grows as i decreases, so a block is built on its first query and
    // dropped once it lies wholly right of U_i. Live memory stays O(beta (U - L)).
    std::vector<std::vector<std::optional<MinWidthSweep>>> levels(static_cast<std::size_t>(top_level + 1));
    std::vector<Index> live_top(static_cast<std::size_t>(top_level + 1), -1);
    for (int k = 1; k <= top_level; ++k) {
        const Index size = Index{1} << k;
        levels[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>((n + size - 1) / size));
        live_top[static_cast<std::size_t>(k)] = (n + size - 1) / size - 1;
    }
    SweepCounters counters;
    std::uint64_t structures = 0;
    auto release = [&](int k, Index ordinal) {
        auto& slot = levels[static_cast<std::size_t>(k)][static_cast<std::size_t>(ordinal)];
        if (slot) counters += slot->counters();
        slot.reset();
    };

    BestPair best;
    std::vector<BlockId> cover;
    for (Index i = *bounds.last_feasible_start; i >= 1; --i) {
        const Index lo = bounds.lower_at(i);
        const Index hi = bounds.upper_at(i);
        for (int k = 1; k <= top_level; ++k) {
            Index& top = live_top[static_cast<std::size_t>(k)];
            while (top >= 0 && BlockId{k, top}.start() > hi) release(k, top--);
        }
        if (lo > hi) continue;
        collect_blocks(lo, hi, top_level, n, cover);
        for (const BlockId& b : cover) {
            if (b.level == 0) {
                best.offer(seq, i, b.start());
                continue;
            }
            auto& slot = levels[static_cast<std::size_t>(b.level)][static_cast<std::size_t>(b.ordinal)];
            if (!slot) {
                slot.emplace(seq, bounds, b.start(), b.end(n));
                ++structures;
            }
            best.offer(seq, i, slot->find_match(i));
        }
    }
    if (best.start == kNoIndex) throw_infeasible("no segment fits inside [L, U]");

    for (int k = 1; k <= top_level; ++k)
        for (Index j = live_top[static_cast<std::size_t>(k)]; j >= 0; --j) release(k, j);
    record(stats, "general", counters, structures);
    return canonical_segment(seq, bounds, best.density);
}

Segment max_density_min_width_binary_search(const WeightedSequence& seq, Fixed min_width, SolveStats* stats) {
    const FeasibilityBounds bounds = compute_bounds(seq, min_width);
    if (!bounds.last_feasible_start) throw_infeasible("L exceeds the total width");
    const Index n = seq.size();

    // Right-skew pointers of every suffix, plus jump tables over the block chain
    // s -> p[s] + 1 (n + 1 is the terminal).
    const MinWidthSweep pointers(seq, bounds, 1, n);
    const int depth = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n)));
    std::vector<std::vector<std::uint32_t>> jump(static_cast<std::size_t>(depth),
                                                 std::vector<std::uint32_t>(static_cast<std::size_t>(n + 2)));
    for (Index s = 2; s <= n + 1; ++s)
        jump[0][static_cast<std::size_t>(s)] = static_cast<std::uint32_t>(s <= n ? pointers.pointer(s) + 1 : n + 1);
    for (int k = 1; k < depth; ++k)
        for (Index s = 2; s <= n + 1; ++s)
            jump[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
                jump[static_cast<std::size_t>(k - 1)][jump[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s)]];

    SweepCounters counters = pointers.counters();
    BestPair best;
    for (Index i = *bounds.last_feasible_start; i >= 1; --i) {
        const Index lo = bounds.lower_at(i);
        Index s = lo + 1;
        // Taking block t+1 helps iff density so far <= its density; true exactly
        // for t below the bitonic peak.
        auto helps = [&](Index start) { return seq.density(i, start - 1) <= seq.density(start, pointers.pointer(start)); };
        if (lo == n || !helps(s)) {
            best.offer(seq, i, lo);
            continue;
        }
        for (int k = depth - 1; k >= 0; --k) {
            const Index next = jump[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
            ++counters.query_steps;
            if (next <= n && helps(next)) s = next;
        }
        best.offer(seq, i, pointers.pointer(s));
    }

    record(stats, "binary-search", counters, 1);
    return canonical_segment(seq, bounds, best.density);
}

Segment solve(const WeightedSequence& seq, const SolveRequest& request, SolveStats* stats) {
    const Fixed lo = request.lower;
    const Fixed hi = request.upper;
    if (lo <= 0) throw Error(ErrorKind::InvalidWidthBounds, "L must be positive");
    if (lo > hi) throw Error(ErrorKind::InvalidWidthBounds, "L exceeds U");

    std::optional<Segment> best;
    auto solve_piece = [&](Index first, Index last) {
        const bool whole = first == 1 && last == seq.size();
        const WeightedSequence piece = whole ? WeightedSequence{} : seq.slice(first, last);
        const WeightedSequence& part = whole ? seq : piece;
        const Fixed total = part.total_width();
        if (total < lo) return;

        Segment s;
        try {
            if (hi >= total) {
                s = max_density_min_width(part, lo, stats);
            } else if (part.is_uniform()) {
                const Fixed lo_count = ceil_div(lo, part.unit());
                const Fixed hi_count = hi / part.unit();
                if (lo_count > hi_count) return;
                s = lo_count == hi_count ? sliding_window(part, lo, stats)
                                         : max_density_uniform(part, lo, hi, stats);
            } else {
                s = max_density_general(part, lo, hi, stats);
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InfeasibleWidthWindow) return;
            throw;
        }
        s.start += first - 1;
        s.end += first - 1;
        if (!best || s.density > best->density) best = s;
    };

    Index first = 1;
    for (Index k = 1; k <= seq.size() + 1; ++k) {
        if (k <= seq.size() && seq.item(k).weight <= hi) continue;
        if (first < k) solve_piece(first, k - 1);
        first = k + 1;
    }
    if (!best) throw_infeasible("no segment has width in [L, U]");
    return *best;
}

} // namespace maxseg
