#include "maxseg/error.hpp"

namespace maxseg {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InfeasibleWidthWindow: return "InfeasibleWidthWindow";
    case ErrorKind::InvalidWidthBounds: return "InvalidWidthBounds";
    case ErrorKind::NumericRange: return "NumericRange";
    case ErrorKind::QueryOrderViolation: return "QueryOrderViolation";
    case ErrorKind::InfeasibleQuery: return "InfeasibleQuery";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::NonUniformInput: return "NonUniformInput";
    case ErrorKind::WeightBelowOne: return "WeightBelowOne";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidDecimal: return "InvalidDecimal";
    case ErrorKind::MalformedFasta: return "MalformedFasta";
    case ErrorKind::MalformedTsv: return "MalformedTsv";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::InvalidMapping: return "InvalidMapping";
    }
    return "Unknown";
}

namespace {

std::string render(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> location) {
    std::string out(error_kind_name(kind));
    if (location) out += "(" + std::to_string(*location) + ")";
    if (!detail.empty()) out += ": " + detail;
    return out;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> location)
    : std::runtime_error(render(kind, detail, location)), kind_(kind), location_(location) {}

} // namespace maxseg
