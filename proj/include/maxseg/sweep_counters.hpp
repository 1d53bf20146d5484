#pragma once

#include <cstdint>

namespace maxseg {

// Loop counters for the amortization checks. query_steps counts iterations of
// the cursor-descent and bitonic loops, scan_steps counts bucket entries
// examined while relocating the bridge, init_steps counts pointer jumps during
// construction.
struct SweepCounters {
    std::uint64_t init_steps = 0;
    std::uint64_t query_steps = 0;
    std::uint64_t scan_steps = 0;

    std::uint64_t loop_iterations() const { return query_steps + scan_steps; }

    SweepCounters& operator+=(const SweepCounters& o) {
        init_steps += o.init_steps;
        query_steps += o.query_steps;
        scan_steps += o.scan_steps;
        return *this;
    }
};

} // namespace maxseg
