#include "maxseg/oracle.hpp"

#include <optional>
#include <string>

namespace maxseg::oracle {

namespace {

struct Sums {
    Wide value = 0;
    Wide weight = 0;
};

Sums direct_sum(const WeightedSequence& seq, Index i, Index j) {
    Sums s;
    for (Index k = i; k <= j; ++k) {
        s.value += seq.item(k).value;
        s.weight += seq.item(k).weight;
    }
    return s;
}

// Sign of a.value/a.weight - b.value/b.weight.
int compare(const Sums& a, const Sums& b) {
    const Wide lhs = a.value * b.weight;
    const Wide rhs = b.value * a.weight;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

void check_cap(const WeightedSequence& seq, Index cap) {
    if (seq.size() > cap)
        throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(seq.size()) + " above oracle cap " +
                                                std::to_string(cap));
}

Segment to_segment(Index i, Index j, const Sums& s) {
    return {i, j, DensityValue{static_cast<Fixed>(s.value), static_cast<Fixed>(s.weight)}};
}

} // namespace

std::vector<Segment> optimal_segments(const WeightedSequence& seq, Fixed min_width, Fixed max_width, Index cap) {
    check_cap(seq, cap);
    std::vector<Segment> out;
    Sums best;
    bool have = false;
    for (Index i = 1; i <= seq.size(); ++i) {
        Sums run;
        for (Index j = i; j <= seq.size(); ++j) {
            run.value += seq.item(j).value;
            run.weight += seq.item(j).weight;
            if (run.weight > max_width) break;
            if (run.weight < min_width) continue;
            const int c = have ? compare(run, best) : 1;
            if (c > 0) {
                out.clear();
                best = run;
                have = true;
            }
            if (c >= 0) out.push_back(to_segment(i, j, run));
        }
    }
    if (!have) throw Error(ErrorKind::InfeasibleWidthWindow, "no segment has width in [L, U]");
    return out;
}

Segment brute_force_best(const WeightedSequence& seq, Fixed min_width, Fixed max_width, Index cap) {
    check_cap(seq, cap);
    // Strict improvement only: the first optimum met in (start, end) order wins.
    std::optional<Segment> best;
    Sums best_sums;
    for (Index i = 1; i <= seq.size(); ++i) {
        Sums run;
        for (Index j = i; j <= seq.size(); ++j) {
            run.value += seq.item(j).value;
            run.weight += seq.item(j).weight;
            if (run.weight > max_width) break;
            if (run.weight < min_width) continue;
            if (!best || compare(run, best_sums) > 0) {
                best = to_segment(i, j, run);
                best_sums = run;
            }
        }
    }
    if (!best) throw Error(ErrorKind::InfeasibleWidthWindow, "no segment has width in [L, U]");
    return *best;
}

bool is_right_skew(const WeightedSequence& seq, Index i, Index k) {
    const Sums total = direct_sum(seq, i, k);
    Sums head;
    for (Index j = i; j < k; ++j) {
        head.value += seq.item(j).value;
        head.weight += seq.item(j).weight;
        const Sums tail{total.value - head.value, total.weight - head.weight};
        if (compare(head, tail) > 0) return false;
    }
    return true;
}

std::vector<std::pair<Index, Index>> brute_force_partition(const WeightedSequence& seq, Index x, Index y, Index cap) {
    if (x < 1 || y > seq.size() || x > y) throw Error(ErrorKind::IndexOutOfRange, "partition range");
    if (y - x > cap) throw Error(ErrorKind::CapExceeded, "partition range above oracle cap");
    std::vector<std::pair<Index, Index>> blocks;
    for (Index s = x; s <= y;) {
        Index e = y;
        while (!is_right_skew(seq, s, e)) --e;
        blocks.emplace_back(s, e);
        s = e + 1;
    }
    return blocks;
}

std::vector<std::vector<std::pair<Index, Index>>> all_valid_partitions(const WeightedSequence& seq, Index x, Index y) {
    if (x < 1 || y > seq.size() || x > y) throw Error(ErrorKind::IndexOutOfRange, "partition range");
    if (y - x > 16) throw Error(ErrorKind::CapExceeded, "exhaustive partition search limited to 17 items");
    const Index gaps = y - x;
    std::vector<std::vector<std::pair<Index, Index>>> valid;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
        std::vector<std::pair<Index, Index>> blocks;
        Index s = x;
        for (Index g = 0; g < gaps; ++g) {
            if (mask >> g & 1) {
                blocks.emplace_back(s, x + g);
                s = x + g + 1;
            }
        }
        blocks.emplace_back(s, y);

        bool ok = true;
        for (std::size_t b = 0; ok && b < blocks.size(); ++b) {
            ok = is_right_skew(seq, blocks[b].first, blocks[b].second);
            if (ok && b > 0)
                ok = compare(direct_sum(seq, blocks[b - 1].first, blocks[b - 1].second),
                             direct_sum(seq, blocks[b].first, blocks[b].second)) > 0;
        }
        if (ok) valid.push_back(std::move(blocks));
    }
    return valid;
}

} // namespace maxseg::oracle
