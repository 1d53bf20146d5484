#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>

#include "maxseg/bio.hpp"
#include "maxseg/decimal.hpp"
#include "maxseg/oracle.hpp"
#include "maxseg/sweep_left.hpp"
#include "maxseg/sweep_right.hpp"

namespace maxseg::cli {

namespace {

struct Job {
    std::string id;
    WeightedSequence seq;
};

struct Outcome {
    Segment segment;
    Fixed width = 0;
    Fixed sum = 0;
    std::optional<Error> error;
    std::string dump;
};

unsigned thread_budget(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("MAXSEG_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

Outcome run_job(const Job& job, const SolveRequest& request, const FindOptions& options) {
    Outcome o;
    try {
        if (options.debug_dump) {
            std::ostringstream dump;
            const auto bounds = compute_bounds(job.seq, request.lower);
            dump << "# " << job.id << " min-width sweep over [1, " << job.seq.size() << "]\n";
            dump_tsv(dump, MinWidthSweep(job.seq, bounds, 1, job.seq.size()));
            dump << "# " << job.id << " max-width sweep over [1, " << job.seq.size() << "]\n";
            dump_tsv(dump, MaxWidthSweep(job.seq, bounds, 1, job.seq.size()));
            o.dump = dump.str();
        }
        if (options.compress) {
            const bio::RunCompression runs = bio::compress_runs(job.seq);
            const Segment s = solve(runs.sequence, request);
            o.segment = {runs.original_start(s.start), runs.original_end(s.end), s.density};
        } else {
            o.segment = solve(job.seq, request);
        }
        o.sum = job.seq.sum(o.segment.start, o.segment.end);
        o.width = job.seq.width(o.segment.start, o.segment.end);
    } catch (const Error& e) {
        o.error = e;
    }
    return o;
}

std::vector<Job> load_jobs(const FindOptions& options, std::istream& in, const Decimal& lo, const std::optional<Decimal>& hi,
                           int& decimals) {
    std::ifstream file;
    if (options.input != "-") {
        file.open(options.input);
        if (!file) throw std::runtime_error("cannot open " + options.input);
    }
    std::istream& src = options.input == "-" ? in : file;

    std::vector<Job> jobs;
    const int bound_places = std::max(lo.places, hi ? hi->places : 0);
    if (options.format == "fasta") {
        const bio::MappingSpec spec = bio::parse_mapping(options.mapping);
        decimals = std::max(spec.decimals(), bound_places);
        for (auto& rec : bio::parse_fasta(src))
            jobs.push_back({rec.id, bio::map_to_sequence(rec, spec, {options.strict, decimals})});
    } else if (options.format == "tsv") {
        const auto records = bio::parse_weighted_tsv(src);
        decimals = std::max(bio::required_decimals(records), bound_places);
        for (const auto& rec : records) jobs.push_back({rec.id, bio::to_sequence(rec, decimals)});
    } else {
        throw std::runtime_error("unknown format '" + options.format + "'");
    }
    if (jobs.empty()) throw Error(ErrorKind::EmptySequence, "input has no records");
    return jobs;
}

} // namespace

int find(const FindOptions& options, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Job> jobs;
    SolveRequest request;
    int decimals = 0;
    try {
        const Decimal lo = parse_decimal(options.min_width);
        std::optional<Decimal> hi;
        if (options.max_width != "max") hi = parse_decimal(options.max_width);
        jobs = load_jobs(options, in, lo, hi, decimals);
        request.lower = to_fixed(lo, decimals);
        request.upper = hi ? to_fixed(*hi, decimals) : kUnbounded;
        if (request.lower <= 0 || request.lower > request.upper)
            throw Error(ErrorKind::InvalidWidthBounds, "need 0 < L <= U");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    std::vector<Outcome> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) outcomes[k] = run_job(jobs[k], request, options);
    };
    {
        std::vector<std::jthread> pool;
        const unsigned threads = thread_budget(options.threads, jobs.size());
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    out << "record_id\tstart\tend\twidth\tsum\tdensity" << (options.exact ? "\texact" : "") << '\n';
    int status = kExitOk;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Outcome& o = outcomes[k];
        err << o.dump;
        if (o.error) {
            err << jobs[k].id << ": " << o.error->what() << '\n';
            if (o.error->kind() == ErrorKind::InfeasibleWidthWindow) {
                if (status == kExitOk) status = kExitInfeasible;
            } else {
                status = kExitError;
            }
            continue;
        }
        const DensityValue d{o.sum, o.width};
        out << jobs[k].id << '\t' << o.segment.start << '\t' << o.segment.end << '\t' << format_fixed(o.width, decimals)
            << '\t' << format_fixed(o.sum, decimals) << '\t' << format_density(d);
        if (options.exact) out << '\t' << format_exact(d);
        out << '\n';
    }
    return status;
}

WeightedSequence random_sequence(Model model, Index n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Fixed> digit(0, 9);
    std::uniform_int_distribution<Fixed> signed_digit(-9, 9);
    std::uniform_int_distribution<Fixed> weight(1, 5);
    std::vector<WeightedItem> items(static_cast<std::size_t>(n));
    for (auto& it : items) {
        if (model == Model::Uniform) {
            it = {digit(rng), 1};
        } else {
            it.value = signed_digit(rng);
            it.weight = weight(rng);
        }
    }
    return build_sequence(std::move(items), 0);
}

Instance random_instance(Model model, Index max_n, std::optional<std::pair<Fixed, Fixed>> fixed, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Index n = std::uniform_int_distribution<Index>(1, std::max<Index>(1, max_n))(rng);
    Instance inst{random_sequence(model, n, rng)};
    if (fixed) {
        inst.min_width = fixed->first;
        inst.max_width = fixed->second;
    } else {
        const Fixed total = inst.seq.total_width();
        inst.min_width = std::uniform_int_distribution<Fixed>(1, total)(rng);
        inst.max_width = std::uniform_int_distribution<Fixed>(inst.min_width, total)(rng);
    }
    return inst;
}

VerifyReport verify(const VerifyOptions& options, const Solver& solver) {
    VerifyReport report;
    for (std::uint64_t k = 0; k < options.seeds; ++k) {
        const std::uint64_t seed = options.seed + k;
        const Instance inst = random_instance(options.model, options.max_n, options.fixed_window, seed);
        ++report.total;

        std::string failure;
        std::optional<Segment> expected;
        std::optional<Segment> got;
        try {
            expected = oracle::brute_force_best(inst.seq, inst.min_width, inst.max_width);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InfeasibleWidthWindow) throw;
        }
        try {
            got = solver(inst.seq, {inst.min_width, inst.max_width});
        } catch (const std::exception& e) {
            const auto* me = dynamic_cast<const Error*>(&e);
            if (!(me && me->kind() == ErrorKind::InfeasibleWidthWindow && !expected))
                failure = std::string("solver threw: ") + e.what();
        }

        if (failure.empty() && got) {
            if (!expected) {
                failure = "solver found a segment, oracle says infeasible";
            } else if (got->start < 1 || got->end > inst.seq.size() || got->start > got->end) {
                failure = "segment out of range";
            } else {
                const Fixed w = inst.seq.width(got->start, got->end);
                if (w < inst.min_width || w > inst.max_width)
                    failure = "segment width outside [L, U]";
                else if (!(inst.seq.density(got->start, got->end) == expected->density))
                    failure = "density " + format_exact(inst.seq.density(got->start, got->end)) + " != oracle " +
                              format_exact(expected->density);
            }
        }

        if (failure.empty()) {
            ++report.passed;
        } else if (!report.first_failure_seed) {
            report.first_failure_seed = seed;
            std::ostringstream msg;
            msg << "seed=" << seed << " n=" << inst.seq.size() << " L=" << inst.min_width << " U="
                << (inst.max_width == kUnbounded ? std::string("max") : std::to_string(inst.max_width)) << ": "
                << failure;
            report.first_failure = msg.str();
        }
    }
    return report;
}

std::string algo_name(BenchAlgo algo) {
    switch (algo) {
    case BenchAlgo::MinWidth: return "l-only";
    case BenchAlgo::UniformLU: return "uniform-lu";
    case BenchAlgo::GeneralLU: return "general-lu";
    case BenchAlgo::BaselineLogL: return "baseline-logl";
    }
    return "?";
}

std::vector<BenchRow> bench(const BenchOptions& options) {
    std::vector<BenchRow> rows;
    std::vector<WeightedSequence> inputs;
    for (Index n : options.sizes) {
        if (n < 1) throw std::invalid_argument("bench sizes must be positive");
        std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(n));
        const Model model = options.algo == BenchAlgo::GeneralLU ? Model::General : Model::Uniform;
        const WeightedSequence& seq = inputs.emplace_back(random_sequence(model, n, rng));

        BenchRow row;
        row.algo = algo_name(options.algo);
        row.n = n;
        const Index total = seq.total_width();
        switch (options.algo) {
        case BenchAlgo::MinWidth:
        case BenchAlgo::BaselineLogL:
            row.min_width = std::min(options.min_width.value_or(100), total);
            break;
        case BenchAlgo::UniformLU:
            row.max_width = std::min(options.max_width.value_or(5000), n);
            row.min_width = std::min(options.min_width.value_or(100), row.max_width - 1);
            if (row.min_width < 1) throw std::invalid_argument("uniform-lu needs L < U <= n");
            break;
        case BenchAlgo::GeneralLU:
            row.min_width = std::min(options.min_width.value_or(100), total);
            row.max_width = std::clamp<Index>(options.max_width.value_or(row.min_width + 255), row.min_width, total);
            row.max_width = std::max<Index>(row.max_width, seq.max_weight());
            row.top_level = floor_log2(std::min<Index>(n, row.max_width - row.min_width + 1));
            break;
        }
        rows.push_back(row);
    }

    auto run_once = [&](const WeightedSequence& seq, BenchRow& row) {
        SolveStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        switch (options.algo) {
        case BenchAlgo::MinWidth: max_density_min_width(seq, row.min_width, &stats); break;
        case BenchAlgo::UniformLU: max_density_uniform(seq, row.min_width, row.max_width, &stats); break;
        case BenchAlgo::GeneralLU: max_density_general(seq, row.min_width, row.max_width, &stats); break;
        case BenchAlgo::BaselineLogL: max_density_min_width_binary_search(seq, row.min_width, &stats); break;
        }
        const auto t1 = std::chrono::steady_clock::now();
        row.loop_iterations = stats.sweep.loop_iterations();
        return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    };

    // Sizes are interleaved within each round so that slow drifts of machine
    // speed hit every size alike. Round -1 warms caches and is not timed.
    std::vector<std::vector<std::int64_t>> times(rows.size());
    for (int r = -1; r < std::max(1, options.repeat); ++r)
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const auto t = run_once(inputs[k], rows[k]);
            if (r >= 0) times[k].push_back(t);
        }
    for (std::size_t k = 0; k < rows.size(); ++k) {
        auto& t = times[k];
        std::nth_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
        rows[k].wall_nanos = t[t.size() / 2];
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "algo,n,L,U,wall_nanos,loop_iterations\n";
    for (const auto& r : rows)
        out << r.algo << ',' << r.n << ',' << r.min_width << ','
            << (r.max_width == 0 ? std::string("max") : std::to_string(r.max_width)) << ',' << r.wall_nanos << ','
            << r.loop_iterations << '\n';
}

namespace {

Index parse_size(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || v < 1 || v != static_cast<double>(static_cast<Index>(v)))
        throw std::invalid_argument("bad size '" + text + "'");
    return static_cast<Index>(v);
}

std::pair<Fixed, Fixed> parse_fixed_window(const std::string& text) {
    constexpr std::string_view prefix = "fixed:";
    const auto comma = text.find(',');
    if (text.rfind(prefix, 0) != 0 || comma == std::string::npos)
        throw std::invalid_argument("--L-U expects random or fixed:L,U");
    const Fixed lo = std::stoll(text.substr(prefix.size(), comma - prefix.size()));
    const Fixed hi = std::stoll(text.substr(comma + 1));
    if (lo < 1 || lo > hi) throw std::invalid_argument("fixed window needs 1 <= L <= U");
    return {lo, hi};
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"maxseg: maximum-density segments under width constraints"};
    app.require_subcommand(1);

    FindOptions find_opts;
    auto* find_cmd = app.add_subcommand("find", "Find the maximum-density segment of each record");
    find_cmd->add_option("--input", find_opts.input, "Input path, '-' for standard input");
    find_cmd->add_option("--format", find_opts.format, "fasta or tsv")->check(CLI::IsMember({"fasta", "tsv"}));
    find_cmd->add_option("--mapping", find_opts.mapping, "gc or huang:P (fasta only)");
    find_cmd->add_option("--L", find_opts.min_width, "Minimum width")->required();
    find_cmd->add_option("--U", find_opts.max_width, "Maximum width or 'max'");
    find_cmd->add_flag("--compress", find_opts.compress, "Merge runs of equal-density items first");
    find_cmd->add_flag("--strict", find_opts.strict, "Reject symbols other than A/C/G/T/U");
    find_cmd->add_flag("--debug-dump", find_opts.debug_dump, "Dump sweep pointers as TSV to standard error");
    find_cmd->add_flag("--exact", find_opts.exact, "Append the exact density as a reduced fraction");
    find_cmd->add_option("--threads", find_opts.threads, "Worker threads (default MAXSEG_THREADS)");

    VerifyOptions verify_opts;
    std::string model = "uniform";
    std::string window = "random";
    auto* verify_cmd = app.add_subcommand("verify", "Differential test against the brute-force oracle");
    verify_cmd->add_option("--seeds", verify_opts.seeds, "Number of random instances");
    verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest sequence length")->check(CLI::Range(1, 10'000));
    verify_cmd->add_option("--model", model, "uniform or general")->check(CLI::IsMember({"uniform", "general"}));
    verify_cmd->add_option("--L-U", window, "random or fixed:L,U");
    verify_cmd->add_option("--seed", verify_opts.seed, "Seed of the first instance");

    std::string sizes;
    std::string algo = "l-only";
    BenchOptions bench_opts;
    Index bench_lo = 0;
    Index bench_hi = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Time the solvers, CSV on standard output");
    bench_cmd->add_option("--sizes", sizes, "Comma-separated sizes, e.g. 1e5,2e5")->required();
    bench_cmd->add_option("--algo", algo, "l-only, uniform-lu, general-lu or baseline-logl")
        ->check(CLI::IsMember({"l-only", "uniform-lu", "general-lu", "baseline-logl"}));
    bench_cmd->add_option("--repeat", bench_opts.repeat, "Runs per size; the median is reported");
    bench_cmd->add_option("--seed", bench_opts.seed, "RNG seed");
    bench_cmd->add_option("--L", bench_lo, "Minimum width");
    bench_cmd->add_option("--U", bench_hi, "Maximum width");

    std::vector<std::string> argv_store{"maxseg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*find_cmd) return find(find_opts, in, out, err);

        if (*verify_cmd) {
            verify_opts.model = model == "general" ? Model::General : Model::Uniform;
            if (window != "random") verify_opts.fixed_window = parse_fixed_window(window);
            const VerifyReport report =
                verify(verify_opts, [](const WeightedSequence& s, const SolveRequest& r) { return solve(s, r); });
            out << report.passed << '/' << report.total << " pass\n";
            if (report.first_failure_seed) {
                out << "first counterexample: " << report.first_failure << '\n';
                out << "reproduce with: --seeds 1 --seed " << *report.first_failure_seed << '\n';
                return kExitError;
            }
            return kExitOk;
        }

        if (*bench_cmd) {
            std::stringstream list(sizes);
            for (std::string item; std::getline(list, item, ',');) bench_opts.sizes.push_back(parse_size(item));
            if (algo == "uniform-lu") bench_opts.algo = BenchAlgo::UniformLU;
            if (algo == "general-lu") bench_opts.algo = BenchAlgo::GeneralLU;
            if (algo == "baseline-logl") bench_opts.algo = BenchAlgo::BaselineLogL;
            if (bench_lo > 0) bench_opts.min_width = bench_lo;
            if (bench_hi > 0) bench_opts.max_width = bench_hi;
            write_bench_csv(out, bench(bench_opts));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace maxseg::cli
