#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "maxseg/oracle.hpp"

using namespace maxseg;
using Blocks = std::vector<std::pair<Index, Index>>;

TEST_CASE("partition examples") {
    CHECK(oracle::brute_force_partition(uniform_sequence({5, 3, 4}), 1, 3) == Blocks{{1, 1}, {2, 3}});
    CHECK(oracle::brute_force_partition(uniform_sequence({1, 2, 3}), 1, 3) == Blocks{{1, 3}});
    CHECK(oracle::brute_force_partition(uniform_sequence({-4}), 1, 1) == Blocks{{1, 1}});
    CHECK(oracle::brute_force_partition(uniform_sequence({9, 5, 3, 4}), 2, 4) == Blocks{{2, 2}, {3, 4}});
}

TEST_CASE("right-skew predicate") {
    const auto seq = uniform_sequence({5, 3, 4, 1, 2});
    CHECK(oracle::is_right_skew(seq, 1, 1));
    CHECK_FALSE(oracle::is_right_skew(seq, 1, 2));
    CHECK(oracle::is_right_skew(seq, 2, 3));
    CHECK(oracle::is_right_skew(seq, 4, 5));
    CHECK_FALSE(oracle::is_right_skew(seq, 2, 4));
}

TEST_CASE("the decreasingly right-skew partition is unique") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const Index n = testing::uniform_index(rng, 1, 12);
        const auto seq = trial % 2 ? testing::random_uniform(rng, n, -3, 3) : testing::random_weighted(rng, n, 1, 3, -3, 3);
        const Index x = testing::uniform_index(rng, 1, n);
        const Index y = testing::uniform_index(rng, x, n);
        const auto all = oracle::all_valid_partitions(seq, x, y);
        REQUIRE(all.size() == 1);
        const auto peeled = oracle::brute_force_partition(seq, x, y);
        CHECK(all.front() == peeled);
        for (std::size_t b = 0; b + 1 < peeled.size(); ++b)
            CHECK(seq.density(peeled[b].first, peeled[b].second) >
                  seq.density(peeled[b + 1].first, peeled[b + 1].second));
        CHECK(peeled.front().first == x);
        CHECK(peeled.back().second == y);
    }
}

TEST_CASE("brute_force_best examples and tie rule") {
    const auto a = oracle::brute_force_best(uniform_sequence({9, 5, 3, 4}), 2);
    CHECK(a.start == 1);
    CHECK(a.end == 2);
    CHECK(a.density == DensityValue{7, 1});

    const auto seq = uniform_sequence({0, 10, 0, 0, 10});
    const auto all = oracle::optimal_segments(seq, 2);
    REQUIRE(all.size() == 4);
    CHECK(all[0].start == 1);
    CHECK(all[0].end == 2);
    CHECK(all[3].start == 4);
    const auto best = oracle::brute_force_best(seq, 2);
    CHECK(best.start == 1);
    CHECK(best.end == 2);

    const auto w = oracle::brute_force_best(build_sequence({{2, 1}, {6, 2}, {3, 1}}), 2, 3);
    CHECK(w.start == 2);
    CHECK(w.end == 2);
}

TEST_CASE("brute_force_best agrees with its enumeration") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = testing::uniform_index(rng, 1, 25);
        const auto seq = testing::random_weighted(rng, n, 1, 3, -2, 2);
        const Fixed lo = testing::uniform_index(rng, 1, seq.total_width());
        const Fixed hi = testing::uniform_index(rng, lo, seq.total_width());
        std::vector<Segment> all;
        try {
            all = oracle::optimal_segments(seq, lo, hi);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InfeasibleWidthWindow);
            continue;
        }
        const auto best = oracle::brute_force_best(seq, lo, hi);
        CHECK(best.start == all.front().start);
        CHECK(best.end == all.front().end);
        for (const auto& s : all) CHECK(s.density == best.density);
    }
}

TEST_CASE("oracle errors") {
    const auto big = uniform_sequence(std::vector<Fixed>(30, 1));
    try {
        oracle::brute_force_best(big, 1, kUnbounded, 20);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
    try {
        oracle::brute_force_best(uniform_sequence({1, 2}), 5);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfeasibleWidthWindow);
    }
    try {
        oracle::brute_force_partition(big, 1, 30, 10);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}
