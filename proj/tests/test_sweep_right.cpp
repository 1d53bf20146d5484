#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "maxseg/oracle.hpp"
#include "maxseg/sweep_left.hpp"
#include "maxseg/sweep_right.hpp"

using namespace maxseg;

namespace {

Index best_endpoint_largest(const WeightedSequence& seq, Index i, Index from, Index to) {
    Index best = from;
    for (Index j = from + 1; j <= to; ++j)
        if (seq.density(i, j) >= seq.density(i, best)) best = j;
    return best;
}

// Items in reverse order with negated values.
WeightedSequence reversed_negated(const WeightedSequence& seq) {
    std::vector<WeightedItem> items;
    for (Index k = seq.size(); k >= 1; --k) items.push_back({-seq.item(k).value, seq.item(k).weight});
    return build_sequence(items, seq.decimals());
}

} // namespace

TEST_CASE("initialize examples") {
    SUBCASE("increasing pair forms one block") {
        const auto seq = uniform_sequence({0, 3, 5});
        const auto bounds = compute_bounds(seq, 1);
        const MaxWidthSweep s(seq, bounds, 1, 3);
        CHECK(s.pointer(2) == 2);
        CHECK(s.pointer(3) == 2);
        CHECK(s.upper() == 3);
    }
    SUBCASE("decreasing pair splits") {
        const auto seq = uniform_sequence({0, 8, 2});
        const auto bounds = compute_bounds(seq, 1);
        const MaxWidthSweep s(seq, bounds, 1, 3);
        CHECK(s.pointer(2) == 2);
        CHECK(s.pointer(3) == 3);
    }
}

TEST_CASE("find_match example") {
    const auto seq = uniform_sequence({0, 8, 2});
    const auto bounds = compute_bounds(seq, 1, 3);
    MaxWidthSweep s(seq, bounds, 1, 3);
    CHECK(s.find_match(1) == 2);
    CHECK(best_endpoint_largest(seq, 1, 1, 3) == 2);
}

TEST_CASE("find_match errors") {
    const auto seq = uniform_sequence({0, 8, 2, 4});
    const auto bounds = compute_bounds(seq, 1, 2);
    MaxWidthSweep s(seq, bounds, 2, 4);
    try {
        s.find_match(3);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RangeViolation);
    }
    s.find_match(2);
    try {
        s.find_match(2);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::QueryOrderViolation);
    }

    MaxWidthSweep far(seq, bounds, 3, 4);
    try {
        far.find_match(1);  // U_1 = 2 lies before x = 3
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RangeViolation);
    }
}

TEST_CASE("pointers agree with the partition oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = testing::uniform_index(rng, 1, 40);
        const auto seq = trial % 2 ? testing::random_uniform(rng, n) : testing::random_weighted(rng, n);
        const auto bounds = compute_bounds(seq, 1);
        const Index x = testing::uniform_index(rng, 1, n);
        const Index y = testing::uniform_index(rng, x, n);
        const MaxWidthSweep s(seq, bounds, x, y);
        for (Index k = x + 1; k <= y; ++k) {
            CHECK(oracle::brute_force_partition(seq, x + 1, k).back() == std::pair<Index, Index>{s.pointer(k), k});
            CHECK(oracle::is_right_skew(seq, s.pointer(k), k));
        }
    }
}

TEST_CASE("pointers mirror the min-width sweep on the reversed negated sequence") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = testing::uniform_index(rng, 2, 40);
        const auto seq = trial % 2 ? testing::random_uniform(rng, n) : testing::random_weighted(rng, n);
        const auto mirror = reversed_negated(seq);
        const Index x = testing::uniform_index(rng, 1, n - 1);
        const Index y = testing::uniform_index(rng, x, n - 1);

        const auto bounds = compute_bounds(seq, 1);
        const auto mirror_bounds = compute_bounds(mirror, 1);
        const MaxWidthSweep right(seq, bounds, x, y);
        const MinWidthSweep left(mirror, mirror_bounds, n - y, n - x);
        for (Index k = x + 1; k <= y; ++k) CHECK(left.pointer(n + 1 - k) == n + 1 - right.pointer(k));
    }
}

TEST_CASE("find_match returns the best endpoint below min(U_i, previous)") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 400; ++trial) {
        const Index n = testing::uniform_index(rng, 1, 60);
        const auto seq = trial % 2 ? testing::random_uniform(rng, n) : testing::random_weighted(rng, n);
        const Fixed total = seq.total_width();
        const Fixed hi = std::max(seq.max_weight(), testing::uniform_index(rng, 1, total));
        const auto bounds = compute_bounds(seq, 1, hi);
        const Index x = testing::uniform_index(rng, 1, n);
        const Index y = testing::uniform_index(rng, x, n);
        MaxWidthSweep s(seq, bounds, x, y);

        Index previous = y;
        for (Index i = x; i >= 1; --i) {
            if (bounds.upper_at(i) < x) break;
            if (rng() % 3 == 0) continue;
            const Index cap = std::min(bounds.upper_at(i), previous);
            const Index got = s.find_match(i);
            CHECK(got == best_endpoint_largest(seq, i, x, cap));
            previous = got;
        }
        const auto span = static_cast<std::uint64_t>(y - x + 1);
        CHECK(s.counters().query_steps <= span);
        CHECK(s.counters().init_steps <= span);
    }
}

TEST_CASE("debug dump") {
    const auto seq = uniform_sequence({0, 3, 5});
    const auto bounds = compute_bounds(seq, 1);
    std::ostringstream out;
    dump_tsv(out, MaxWidthSweep(seq, bounds, 1, 3));
    CHECK(out.str() == "k\tq\n2\t2\n3\t2\n");
}
