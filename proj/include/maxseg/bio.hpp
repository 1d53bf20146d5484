#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxseg/core.hpp"
#include "maxseg/decimal.hpp"

namespace maxseg::bio {

struct DnaRecord {
    std::string id;     // first word of the header line
    std::string bases;  // sequence lines concatenated, whitespace removed, case kept
};

// Throws MalformedFasta(line) for sequence data before the first header or a
// header with no bases. Blank lines and ';' comment lines are ignored.
std::vector<DnaRecord> parse_fasta(std::istream& in);

void write_fasta(std::ostream& out, const std::vector<DnaRecord>& records, std::size_t line_width = 60);

enum class MappingKind {
    Gc01,         // a = 1 for G/C, 0 otherwise
    Huang,        // a = 1 - p for G/C, -p otherwise
    TsvWeighted,  // explicit value/weight pairs
};

struct MappingSpec {
    MappingKind kind = MappingKind::Gc01;
    Decimal p;  // Huang only, 0 <= p <= 1

    int decimals() const { return kind == MappingKind::Huang ? p.places : 0; }
};

// "gc", "gc01", "huang:P" or "tsv". Throws InvalidMapping.
MappingSpec parse_mapping(std::string_view text);

struct MapOptions {
    bool strict = false;  // reject anything but A/C/G/T/U instead of scoring it as non-GC
    int decimals = 0;     // output scale; raised to the mapping's own precision if lower
};

// Unit weights. Throws UnknownSymbol(position) in strict mode, InvalidMapping
// for a TsvWeighted spec.
WeightedSequence map_to_sequence(const DnaRecord& record, const MappingSpec& spec, const MapOptions& options = {});

// Weighted TSV: "value<TAB>weight" per line, '#' comments, blank lines separate
// records named r1, r2, ...
struct WeightedRecord {
    std::string id;
    std::vector<std::pair<Decimal, Decimal>> items;
};

std::vector<WeightedRecord> parse_weighted_tsv(std::istream& in);

// Largest number of fractional digits used by any value or weight.
int required_decimals(const std::vector<WeightedRecord>& records);

WeightedSequence to_sequence(const WeightedRecord& record, int decimals);

// Adjacent items of equal density merged into one (sum of values, sum of
// weights). run_start[k] is the first original index folded into item k, with
// run_start[m + 1] = n + 1; run_start[0] is unused.
struct RunCompression {
    WeightedSequence sequence;
    std::vector<Index> run_start;

    Index original_start(Index k) const { return run_start[static_cast<std::size_t>(k)]; }
    Index original_end(Index k) const { return run_start[static_cast<std::size_t>(k + 1)] - 1; }
};

RunCompression compress_runs(const WeightedSequence& seq);

} // namespace maxseg::bio
