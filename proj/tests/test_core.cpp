#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "maxseg/core.hpp"
#include "maxseg/decimal.hpp"

using namespace maxseg;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected maxseg::Error");
    return ErrorKind::CapExceeded;
}

WeightedSequence with_weights(const std::vector<Fixed>& weights) {
    std::vector<WeightedItem> items;
    for (Fixed w : weights) items.push_back({0, w});
    return build_sequence(items);
}

} // namespace

TEST_CASE("build_sequence prefix sums") {
    const auto one = build_sequence({{1, 1}});
    CHECK(one.size() == 1);
    CHECK(one.prefix_value(0) == 0);
    CHECK(one.prefix_value(1) == 1);
    CHECK(one.prefix_weight(1) == 1);

    const auto seq = build_sequence({{2, 1}, {0, 1}, {4, 1}});
    const std::vector<Fixed> pv{0, 2, 2, 6}, pw{0, 1, 2, 3};
    for (Index j = 0; j <= 3; ++j) {
        CHECK(seq.prefix_value(j) == pv[static_cast<std::size_t>(j)]);
        CHECK(seq.prefix_weight(j) == pw[static_cast<std::size_t>(j)]);
    }
    CHECK(seq.is_uniform());
}

TEST_CASE("build_sequence errors") {
    try {
        build_sequence({{1, 0}});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveWeight);
        CHECK(e.location() == 1);
    }
    CHECK(kind_of([] { build_sequence({{1, 1}, {1, -2}}); }) == ErrorKind::NonPositiveWeight);
    CHECK(kind_of([] { build_sequence({}); }) == ErrorKind::EmptySequence);
    const Fixed huge = Fixed{1} << 61;
    CHECK(kind_of([&] { build_sequence({{huge, 1}, {huge, 1}, {1, 1}}); }) == ErrorKind::NumericRange);
    CHECK(kind_of([&] { build_sequence({{0, huge}, {0, huge}, {0, 1}}); }) == ErrorKind::NumericRange);
}

TEST_CASE("density queries") {
    const auto seq = build_sequence({{2, 1}, {0, 1}, {4, 1}});
    const auto d = density(seq, 1, 3);
    CHECK(d.sum == 6);
    CHECK(d.width == 3);
    CHECK(d.to_double() == doctest::Approx(2.0));

    const auto single = density(build_sequence({{5, 2}}), 1, 1);
    CHECK(single.sum == 5);
    CHECK(single.width == 2);
    CHECK(single.to_double() == doctest::Approx(2.5));

    const auto zero = density(seq, 2, 2);
    CHECK(zero.sum == 0);
    CHECK(zero.width == 1);

    CHECK(kind_of([&] { density(seq, 0, 1); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { density(seq, 2, 4); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { density(seq, 3, 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("prefix-sum density equals direct summation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto seq = testing::random_weighted(rng, testing::uniform_index(rng, 1, 30), 1, 7, -50, 50);
        for (Index i = 1; i <= seq.size(); ++i) {
            Fixed s = 0, w = 0;
            for (Index j = i; j <= seq.size(); ++j) {
                s += seq.item(j).value;
                w += seq.item(j).weight;
                const auto d = density(seq, i, j);
                CHECK(d.sum == s);
                CHECK(d.width == w);
            }
        }
    }
}

TEST_CASE("density comparison is a total order consistent with floating point") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Fixed> sum(-1'000'000, 1'000'000);
    std::uniform_int_distribution<Fixed> width(1, 1'000'000);
    std::vector<DensityValue> values;
    for (int k = 0; k < 60; ++k) values.push_back({sum(rng), width(rng)});
    values.push_back({2, 4});
    values.push_back({1, 2});
    CHECK(values[60] == values[61]);

    for (const auto& a : values) {
        for (const auto& b : values) {
            const double da = a.to_double(), db = b.to_double();
            if (std::abs(da - db) > 1e-9 * std::max(std::abs(da), std::abs(db)))
                CHECK(((a < b) == (da < db)));
            CHECK(((a < b) + (a == b) + (a > b)) == 1);
            for (const auto& c : values)
                if (a <= b && b <= c) CHECK(a <= c);
        }
    }
}

TEST_CASE("compute_bounds examples") {
    SUBCASE("unit weights") {
        const auto b = compute_bounds(with_weights({1, 1, 1, 1}), 2, 3);
        CHECK(b.lower == std::vector<Index>{0, 2, 3, 4, kNoIndex});
        CHECK(b.upper == std::vector<Index>{0, 3, 4, 4, 4});
        CHECK(b.last_feasible_start == 3);
    }
    SUBCASE("heavy first item") {
        const auto b = compute_bounds(with_weights({3, 1, 2}), 1, 3);
        CHECK(b.upper == std::vector<Index>{0, 1, 3, 3});
    }
    SUBCASE("single feasible segment") {
        const auto b = compute_bounds(with_weights({1}), 1, 1);
        CHECK(b.lower_at(1) == 1);
        CHECK(b.upper_at(1) == 1);
    }
    SUBCASE("infeasible L") {
        const auto b = compute_bounds(with_weights({1, 1}), 3, 5);
        CHECK_FALSE(b.last_feasible_start.has_value());
        CHECK_FALSE(b.has_lower(1));
    }
    SUBCASE("invalid windows") {
        CHECK(kind_of([] { compute_bounds(with_weights({1}), 0, 1); }) == ErrorKind::InvalidWidthBounds);
        CHECK(kind_of([] { compute_bounds(with_weights({1}), 2, 1); }) == ErrorKind::InvalidWidthBounds);
        CHECK(kind_of([] { compute_bounds(with_weights({1, 4}), 1, 3); }) == ErrorKind::InvalidWidthBounds);
    }
}

TEST_CASE("compute_bounds matches the definitions on random inputs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Index n = testing::uniform_index(rng, 1, 40);
        const auto seq = testing::random_weighted(rng, n, 1, 6);
        const Fixed total = seq.total_width();
        const Fixed lo = testing::uniform_index(rng, 1, total + 3);
        const Fixed hi = std::max<Fixed>(testing::uniform_index(rng, lo, total + 3), seq.max_weight());
        const auto b = compute_bounds(seq, lo, hi);
        CHECK(b.cursor_advances <= static_cast<std::uint64_t>(2 * n));

        Index prev_lower = 0, prev_upper = 0;
        for (Index i = 1; i <= n; ++i) {
            Index want_lower = kNoIndex, want_upper = kNoIndex;
            for (Index j = i; j <= n; ++j) {
                if (want_lower == kNoIndex && seq.width(i, j) >= lo) want_lower = j;
                if (seq.width(i, j) <= hi) want_upper = j;
            }
            CHECK(b.lower_at(i) == want_lower);
            CHECK(b.upper_at(i) == want_upper);
            for (Index j = i; j <= n; ++j) {
                const bool feasible = seq.width(i, j) >= lo && seq.width(i, j) <= hi;
                CHECK(feasible == (b.has_lower(i) && b.lower_at(i) <= j && j <= b.upper_at(i)));
            }
            if (b.has_lower(i)) {
                CHECK(b.lower_at(i) >= prev_lower);
                CHECK(b.upper_at(i) >= prev_upper);
                prev_lower = b.lower_at(i);
                prev_upper = b.upper_at(i);
                CHECK(*b.last_feasible_start >= i);
            }
        }
    }
}

TEST_CASE("decimal parsing and rendering") {
    CHECK(parse_decimal("12").mantissa == 12);
    CHECK(parse_decimal("-0.50").mantissa == -5);
    CHECK(parse_decimal("-0.50").places == 1);
    CHECK(parse_decimal(".25").places == 2);
    CHECK(parse_decimal("1.0000000004").mantissa == 1);
    CHECK(parse_decimal("0.0000000015").mantissa == 2);
    CHECK(parse_decimal("0.0000000015").places == 9);
    CHECK(kind_of([] { parse_decimal("1e3"); }) == ErrorKind::InvalidDecimal);
    CHECK(kind_of([] { parse_decimal(""); }) == ErrorKind::InvalidDecimal);
    CHECK(kind_of([] { parse_decimal("."); }) == ErrorKind::InvalidDecimal);
    CHECK(kind_of([] { parse_decimal("99999999999999999999"); }) == ErrorKind::NumericRange);

    CHECK(to_fixed(parse_decimal("2.5"), 3) == 2500);
    CHECK(kind_of([] { to_fixed(parse_decimal("2.25"), 1); }) == ErrorKind::NumericRange);

    CHECK(format_fixed(2500, 3) == "2.5");
    CHECK(format_fixed(-500, 3) == "-0.5");
    CHECK(format_fixed(7, 0) == "7");
    CHECK(format_density({2, 2}) == "1.000000000");
    CHECK(format_density({10, 3}) == "3.333333333");
    CHECK(format_density({20, 3}) == "6.666666667");
    CHECK(format_density({-1, 3}) == "-0.333333333");
    CHECK(format_density({0, 3}) == "0.000000000");
    CHECK(format_exact({6, 4}) == "3/2");
    CHECK(format_exact({0, 4}) == "0/1");
}
