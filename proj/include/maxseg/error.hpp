#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxseg {

enum class ErrorKind {
    NonPositiveWeight,
    EmptySequence,
    IndexOutOfRange,
    InfeasibleWidthWindow,
    InvalidWidthBounds,
    NumericRange,
    QueryOrderViolation,
    InfeasibleQuery,
    RangeViolation,
    NonUniformInput,
    WeightBelowOne,
    CapExceeded,
    InvalidDecimal,
    MalformedFasta,
    MalformedTsv,
    UnknownSymbol,
    InvalidMapping,
};

std::string_view error_kind_name(ErrorKind kind);

// Every library failure is reported through this type. `location()` carries the
// 1-based item index or input line number when the error has one.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> location = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::int64_t> location() const noexcept { return location_; }

private:
    ErrorKind kind_;
    std::optional<std::int64_t> location_;
};

} // namespace maxseg
