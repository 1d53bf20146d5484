#pragma once

#include <random>
#include <vector>

#include "maxseg/core.hpp"

namespace maxseg::testing {

inline WeightedSequence random_uniform(std::mt19937_64& rng, Index n, Fixed lo = 0, Fixed hi = 9) {
    std::uniform_int_distribution<Fixed> value(lo, hi);
    std::vector<Fixed> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = value(rng);
    return uniform_sequence(values);
}

inline WeightedSequence random_weighted(std::mt19937_64& rng, Index n, Fixed wmin = 1, Fixed wmax = 5,
                                        Fixed lo = -9, Fixed hi = 9) {
    std::uniform_int_distribution<Fixed> value(lo, hi);
    std::uniform_int_distribution<Fixed> weight(wmin, wmax);
    std::vector<WeightedItem> items(static_cast<std::size_t>(n));
    for (auto& it : items) {
        it.value = value(rng);
        it.weight = weight(rng);
    }
    return build_sequence(std::move(items), 0);
}

inline Index uniform_index(std::mt19937_64& rng, Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

} // namespace maxseg::testing
