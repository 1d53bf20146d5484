#include "maxseg/decimal.hpp"

#include <numeric>

namespace maxseg {

namespace {

std::string wide_to_string(Wide v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    std::string digits;
    while (v != 0) {
        const int r = static_cast<int>(v % 10);
        digits.push_back(static_cast<char>('0' + (negative ? -r : r)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

} // namespace

Decimal parse_decimal(std::string_view text) {
    const std::string shown(text);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    Wide mantissa = 0;
    int places = 0;
    int digits = 0;
    bool seen_point = false;
    bool round_up = false;
    bool truncated = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.') {
            if (seen_point) throw Error(ErrorKind::InvalidDecimal, "'" + shown + "'");
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error(ErrorKind::InvalidDecimal, "'" + shown + "'");
        ++digits;
        if (seen_point && places == kMaxDecimals) {
            if (!truncated) round_up = c >= '5';
            truncated = true;
            continue;
        }
        mantissa = mantissa * 10 + (c - '0');
        if (mantissa > kSafeMagnitude) throw Error(ErrorKind::NumericRange, "'" + shown + "'");
        if (seen_point) ++places;
    }
    if (digits == 0) throw Error(ErrorKind::InvalidDecimal, "'" + shown + "'");
    if (round_up) ++mantissa;
    // Drop trailing fractional zeros so the file scale reflects significant places.
    while (places > 0 && mantissa % 10 == 0) {
        mantissa /= 10;
        --places;
    }
    return {static_cast<std::int64_t>(negative ? -mantissa : mantissa), places};
}

Fixed to_fixed(const Decimal& d, int decimals) {
    if (decimals < d.places) throw Error(ErrorKind::NumericRange, "scale smaller than literal precision");
    Wide v = d.mantissa;
    for (int k = d.places; k < decimals; ++k) {
        v *= 10;
        if (wide_abs(v) > kSafeMagnitude) throw Error(ErrorKind::NumericRange, "value too large at this scale");
    }
    return static_cast<Fixed>(v);
}

std::string format_fixed(Fixed value, int decimals) {
    const Fixed unit = pow10(decimals);
    const bool negative = value < 0;
    const Wide mag = wide_abs(value);
    std::string whole = wide_to_string(mag / unit);
    Wide frac = mag % unit;
    std::string out = negative ? "-" : "";
    out += whole;
    if (frac != 0) {
        std::string f = wide_to_string(frac);
        f.insert(0, static_cast<std::size_t>(decimals) - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

std::string format_density(const DensityValue& d, int places) {
    Wide scale = 1;
    for (int k = 0; k < places; ++k) scale *= 10;
    const bool negative = (d.sum < 0) != (d.width < 0) && d.sum != 0;
    const Wide num = wide_abs(d.sum) * scale;
    const Wide den = wide_abs(d.width);
    Wide q = num / den;
    if ((num % den) * 2 >= den) ++q;
    std::string whole = wide_to_string(q / scale);
    std::string frac = wide_to_string(q % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    std::string out = (negative && q != 0) ? "-" : "";
    out += whole;
    if (places > 0) out += "." + frac;
    return out;
}

std::string format_exact(const DensityValue& d) {
    Fixed g = std::gcd(d.sum, d.width);
    if (g == 0) g = 1;
    return wide_to_string(d.sum / g) + "/" + wide_to_string(d.width / g);
}

} // namespace maxseg
