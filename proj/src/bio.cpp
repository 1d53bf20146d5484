#include "maxseg/bio.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <ostream>

namespace maxseg::bio {

namespace {

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        const std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

} // namespace

std::vector<DnaRecord> parse_fasta(std::istream& in) {
    std::vector<DnaRecord> records;
    std::int64_t header_line = 0;
    std::int64_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (!line.empty() && line.front() == '>') {
            if (!records.empty() && records.back().bases.empty())
                throw Error(ErrorKind::MalformedFasta, "record has no sequence", header_line);
            const auto words = fields(std::string_view(line).substr(1));
            if (words.empty()) throw Error(ErrorKind::MalformedFasta, "header without an id", line_no);
            records.push_back({std::string(words.front()), {}});
            header_line = line_no;
            continue;
        }
        if (is_blank(line) || line.front() == ';') continue;
        if (records.empty()) throw Error(ErrorKind::MalformedFasta, "sequence data before the first header", line_no);
        auto& bases = records.back().bases;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) bases.push_back(c);
    }
    if (!records.empty() && records.back().bases.empty())
        throw Error(ErrorKind::MalformedFasta, "record has no sequence", header_line);
    return records;
}

void write_fasta(std::ostream& out, const std::vector<DnaRecord>& records, std::size_t line_width) {
    for (const auto& r : records) {
        out << '>' << r.id << '\n';
        for (std::size_t k = 0; k < r.bases.size(); k += line_width) out << r.bases.substr(k, line_width) << '\n';
    }
}

MappingSpec parse_mapping(std::string_view text) {
    if (text == "gc" || text == "gc01") return {MappingKind::Gc01, {}};
    if (text == "tsv") return {MappingKind::TsvWeighted, {}};
    constexpr std::string_view huang = "huang:";
    if (text.substr(0, huang.size()) == huang) {
        Decimal p;
        try {
            p = parse_decimal(text.substr(huang.size()));
        } catch (const Error&) {
            throw Error(ErrorKind::InvalidMapping, "bad huang parameter '" + std::string(text) + "'");
        }
        if (p.mantissa < 0 || to_fixed(p, p.places) > pow10(p.places))
            throw Error(ErrorKind::InvalidMapping, "huang parameter must lie in [0, 1]");
        return {MappingKind::Huang, p};
    }
    throw Error(ErrorKind::InvalidMapping, "unknown mapping '" + std::string(text) + "'");
}

WeightedSequence map_to_sequence(const DnaRecord& record, const MappingSpec& spec, const MapOptions& options) {
    if (spec.kind == MappingKind::TsvWeighted)
        throw Error(ErrorKind::InvalidMapping, "tsv mapping applies to weighted input, not DNA");
    const int decimals = std::max(options.decimals, spec.decimals());
    const Fixed unit = pow10(decimals);
    const Fixed penalty = spec.kind == MappingKind::Huang ? to_fixed(spec.p, decimals) : 0;
    const Fixed gc_score = spec.kind == MappingKind::Huang ? unit - penalty : unit;
    const Fixed other_score = -penalty;

    std::vector<WeightedItem> items;
    items.reserve(record.bases.size());
    for (std::size_t k = 0; k < record.bases.size(); ++k) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(record.bases[k])));
        const bool gc = c == 'G' || c == 'C';
        const bool at = c == 'A' || c == 'T' || c == 'U';
        if (options.strict && !gc && !at)
            throw Error(ErrorKind::UnknownSymbol, std::string("symbol '") + record.bases[k] + "'",
                        static_cast<std::int64_t>(k + 1));
        items.push_back({gc ? gc_score : other_score, unit});
    }
    return build_sequence(std::move(items), decimals);
}

std::vector<WeightedRecord> parse_weighted_tsv(std::istream& in) {
    std::vector<WeightedRecord> records;
    bool open = false;
    std::int64_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (!line.empty() && line.front() == '#') continue;
        if (is_blank(line)) {
            open = false;
            continue;
        }
        const auto cols = fields(line);
        if (cols.size() != 2) throw Error(ErrorKind::MalformedTsv, "expected value<TAB>weight", line_no);
        if (!open) {
            records.push_back({"r" + std::to_string(records.size() + 1), {}});
            open = true;
        }
        try {
            records.back().items.emplace_back(parse_decimal(cols[0]), parse_decimal(cols[1]));
        } catch (const Error& e) {
            throw Error(ErrorKind::MalformedTsv, e.what(), line_no);
        }
    }
    return records;
}

int required_decimals(const std::vector<WeightedRecord>& records) {
    int places = 0;
    for (const auto& r : records)
        for (const auto& [v, w] : r.items) places = std::max({places, v.places, w.places});
    return places;
}

WeightedSequence to_sequence(const WeightedRecord& record, int decimals) {
    std::vector<WeightedItem> items;
    items.reserve(record.items.size());
    for (const auto& [v, w] : record.items) items.push_back({to_fixed(v, decimals), to_fixed(w, decimals)});
    return build_sequence(std::move(items), decimals);
}

RunCompression compress_runs(const WeightedSequence& seq) {
    std::vector<WeightedItem> merged;
    RunCompression out;
    out.run_start.push_back(kNoIndex);
    for (Index i = 1; i <= seq.size(); ++i) {
        const WeightedItem& it = seq.item(i);
        if (!merged.empty() && DensityValue{merged.back().value, merged.back().weight} ==
                                   DensityValue{it.value, it.weight}) {
            merged.back().value += it.value;
            merged.back().weight += it.weight;
            continue;
        }
        merged.push_back(it);
        out.run_start.push_back(i);
    }
    out.run_start.push_back(seq.size() + 1);
    out.sequence = build_sequence(std::move(merged), seq.decimals());
    return out;
}

} // namespace maxseg::bio
