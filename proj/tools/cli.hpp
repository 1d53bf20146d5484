#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maxseg/core.hpp"
#include "maxseg/solvers.hpp"

namespace maxseg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

// Entry point shared by the executable and the tests. `args` excludes the
// program name. "-" as --input reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// ---- find ----

struct FindOptions {
    std::string input = "-";
    std::string format = "fasta";
    std::string mapping = "gc";
    std::string min_width;
    std::string max_width = "max";
    bool compress = false;
    bool strict = false;
    bool debug_dump = false;
    bool exact = false;
    unsigned threads = 0;  // 0: MAXSEG_THREADS or hardware concurrency
};

int find(const FindOptions& options, std::istream& in, std::ostream& out, std::ostream& err);

// ---- random instances (verify, bench, tests) ----

enum class Model { Uniform, General };

struct Instance {
    WeightedSequence seq;
    Fixed min_width = 0;
    Fixed max_width = kUnbounded;
};

// Uniform: a in [0, 9], unit weights. General: a in [-9, 9], w in [1, 5].
WeightedSequence random_sequence(Model model, Index n, std::mt19937_64& rng);

// n uniform in [1, max_n]; L <= U drawn uniformly from [1, total width] unless
// `fixed` pins them (in width units).
Instance random_instance(Model model, Index max_n, std::optional<std::pair<Fixed, Fixed>> fixed,
                         std::uint64_t seed);

// ---- verify ----

struct VerifyOptions {
    std::uint64_t seeds = 100;
    Index max_n = 200;
    Model model = Model::Uniform;
    std::optional<std::pair<Fixed, Fixed>> fixed_window;
    std::uint64_t seed = 1;  // instance k uses seed + k
};

using Solver = std::function<Segment(const WeightedSequence&, const SolveRequest&)>;

struct VerifyReport {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::optional<std::uint64_t> first_failure_seed;
    std::string first_failure;
};

// Compares `solver` with the brute-force oracle on every instance: both
// infeasible, or a feasible answer whose density equals the oracle's exactly.
VerifyReport verify(const VerifyOptions& options, const Solver& solver);

// ---- bench ----

enum class BenchAlgo { MinWidth, UniformLU, GeneralLU, BaselineLogL };

struct BenchOptions {
    std::vector<Index> sizes;
    BenchAlgo algo = BenchAlgo::MinWidth;
    int repeat = 5;
    std::uint64_t seed = 1;
    std::optional<Index> min_width;  // item/width units
    std::optional<Index> max_width;
};

struct BenchRow {
    std::string algo;
    Index n = 0;
    Index min_width = 0;
    Index max_width = 0;  // 0 when unbounded
    std::int64_t wall_nanos = 0;  // median over repeats
    std::uint64_t loop_iterations = 0;
    int top_level = 0;  // general-lu only
};

std::string algo_name(BenchAlgo algo);
std::vector<BenchRow> bench(const BenchOptions& options);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace maxseg::cli
