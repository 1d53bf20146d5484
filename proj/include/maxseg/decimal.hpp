#pragma once

#include <string>
#include <string_view>

#include "maxseg/core.hpp"

namespace maxseg {

// A parsed decimal literal: value = mantissa / 10^places.
struct Decimal {
    std::int64_t mantissa = 0;
    int places = 0;
};

// Accepts [+-]digits[.digits] (either side may be empty but not both). More than
// nine fractional digits are rounded half away from zero to nine.
Decimal parse_decimal(std::string_view text);

// Re-expresses `d` with `decimals` fractional digits; throws NumericRange on
// overflow or when `decimals` < d.places.
Fixed to_fixed(const Decimal& d, int decimals);

// Shortest exact decimal rendering of a fixed-point number ("2", "-0.5").
std::string format_fixed(Fixed value, int decimals);

// sum/width rounded half away from zero to `places` fractional digits.
std::string format_density(const DensityValue& d, int places = 9);

// Reduced fraction "p/q" of the density.
std::string format_exact(const DensityValue& d);

} // namespace maxseg
