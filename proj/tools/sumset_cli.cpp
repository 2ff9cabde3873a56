// Command-line surface over the sumset C API: input generation, sorting,
// k-fold runs, verification, structural checks, and the benchmark suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumset/sumset_c.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

int status_exit_code(sumset_status s) {
    return (s == SUMSET_E_IO || s == SUMSET_E_PARSE) ? exit_io : exit_usage;
}

// Fails hard: prints the library's error message and exits.
void check(sumset_status s) {
    if (s != SUMSET_OK) {
        std::fprintf(stderr, "error: %s: %s\n", sumset_status_name(s), sumset_last_error());
        std::exit(status_exit_code(s));
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SUMSET_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 42;
}

struct range_opt {
    std::int64_t lo = 0;
    std::int64_t hi = 10000;
};

// "--range lo:hi"
bool parse_range(const std::string& text, range_opt& r) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        return false;
    try {
        r.lo = std::stoll(text.substr(0, colon));
        r.hi = std::stoll(text.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return r.lo <= r.hi;
}

sumset_backend parse_backend(const std::string& name) {
    return name == "contiguous" ? SUMSET_BACKEND_CONTIGUOUS : SUMSET_BACKEND_LINKED_BLOCKS;
}

struct seq_handle {
    sumset_seq* p = nullptr;
    ~seq_handle() { sumset_seq_free(p); }
};

void load_seq(const std::string& path, bool float_mode, seq_handle& h) {
    check(sumset_seq_load(path.c_str(), float_mode ? SUMSET_KEY_F64 : SUMSET_KEY_I64, &h.p));
}

void print_seq(const sumset_seq* s) {
    size_t n = sumset_seq_len(s);
    bool f64 = sumset_seq_mode(s) == SUMSET_KEY_F64;
    for (size_t i = 0; i < n; ++i) {
        if (f64) {
            double v;
            check(sumset_seq_get_f64(s, i, &v));
            std::printf("%.17g\n", v);
        } else {
            std::int64_t v;
            check(sumset_seq_get_i64(s, i, &v));
            std::printf("%" PRId64 "\n", v);
        }
    }
}

void write_or_print(const sumset_seq* s, const std::string& out_path) {
    if (out_path.empty())
        print_seq(s);
    else
        check(sumset_seq_save(s, out_path.c_str()));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured sorting of sumsets X+Y and X_1+...+X_k"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    std::string range_text = "0:10000";
    std::string backend_name = "linked";
    bool float_mode = false;

    // gen
    auto* gen = app.add_subcommand("gen", "Write two random sorted input files");
    std::size_t gen_n = 100;
    std::string gen_out_x = "x.txt", gen_out_y = "y.txt";
    gen->add_option("--n", gen_n, "Sequence length")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "PRNG seed (default: SUMSET_SEED env or 42)");
    gen->add_option("--range", range_text, "Value range lo:hi");
    gen->add_option("--out-x", gen_out_x, "Output file for X");
    gen->add_option("--out-y", gen_out_y, "Output file for Y");

    // sort
    auto* sort_cmd = app.add_subcommand("sort", "Sort the pairwise sumset X+Y");
    std::string sort_x, sort_y, sort_out;
    bool sort_count = false, sort_trace = false, sort_strict = false;
    sort_cmd->add_option("-x,--x", sort_x, "Sorted input file X")->required();
    sort_cmd->add_option("-y,--y", sort_y, "Sorted input file Y")->required();
    sort_cmd->add_option("--backend", backend_name, "linked|contiguous");
    sort_cmd->add_option("--out", sort_out, "Output file (default: stdout)");
    sort_cmd->add_flag("--count", sort_count, "Print the comparison count to stderr");
    sort_cmd->add_flag("--trace", sort_trace, "Print the per-row pointer trace to stderr");
    sort_cmd->add_flag("--strict", sort_strict, "Exit 1 if comparisons exceed 2*|X|*|Y|");
    sort_cmd->add_flag("--float", float_mode, "Parse keys as doubles");

    // kfold
    auto* kfold = app.add_subcommand("kfold", "Sort the k-fold sumset of k input files");
    std::vector<std::string> kfold_files;
    std::string kfold_out;
    bool kfold_count = false;
    kfold->add_option("files", kfold_files, "k >= 2 sorted input files")->expected(2, -1);
    kfold->add_option("--backend", backend_name, "linked|contiguous");
    kfold->add_option("--out", kfold_out, "Output file (default: stdout)");
    kfold->add_flag("--count", kfold_count, "Print the comparison count to stderr");
    kfold->add_flag("--float", float_mode, "Parse keys as doubles");

    // verify
    auto* verify = app.add_subcommand("verify", "Check oracle equivalence and invariants");
    std::size_t verify_n = 64, verify_instances = 20;
    verify->add_option("--n", verify_n, "Instance size")->check(CLI::PositiveNumber);
    verify->add_option("--instances", verify_instances, "Number of random instances")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "PRNG seed");

    // props
    auto* props = app.add_subcommand("props", "Structural checks on the sumset matrix");
    std::string props_x, props_y;
    std::size_t props_n = 32;
    bool props_has_threshold = false;
    std::int64_t props_threshold = 0;
    props->add_option("-x,--x", props_x, "Sorted input file X");
    props->add_option("-y,--y", props_y, "Sorted input file Y");
    props->add_option("--n", props_n, "Random instance size when no files given");
    props->add_option("--seed", seed, "PRNG seed for the random instance");
    props->add_option("--range", range_text, "Value range lo:hi for the random instance");
    props->add_option("--threshold", props_threshold, "Ferrers prefix threshold")
        ->each([&](const std::string&) { props_has_threshold = true; });

    // bench
    auto* bench = app.add_subcommand("bench", "Run the comparison/timing suite");
    std::vector<std::size_t> bench_sizes{100, 200, 500, 1000};
    std::size_t bench_trials = 10;
    std::string bench_algo = "all";
    std::string bench_out = "sumset_data.csv";
    std::string bench_tn2_out;
    std::uint64_t bench_max_cells = 200000000ULL;
    bench->add_option("--sizes", bench_sizes, "Input sizes n")->delimiter(',');
    bench->add_option("--trials", bench_trials, "Trials per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "PRNG seed");
    bench->add_option("--range", range_text, "Value range lo:hi");
    bench->add_option("--algo", bench_algo, "proposed|mergesort|quicksort|all");
    bench->add_option("--backend", backend_name, "linked|contiguous");
    bench->add_option("--out", bench_out, "Comparison-count CSV path");
    bench->add_option("--tn2-out", bench_tn2_out, "T/n^2 CSV path (optional)");
    bench->add_option("--max-cells", bench_max_cells, "Memory cap on n^2 sumset cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; everything else is a usage error
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    range_opt range;
    if (!parse_range(range_text, range)) {
        std::fprintf(stderr, "error: bad --range '%s' (want lo:hi)\n", range_text.c_str());
        return exit_usage;
    }

    if (gen->parsed()) {
        seq_handle x, y;
        check(sumset_generate_inputs(gen_n, seed, range.lo, range.hi, &x.p, &y.p));
        check(sumset_seq_save(x.p, gen_out_x.c_str()));
        check(sumset_seq_save(y.p, gen_out_y.c_str()));
        return exit_ok;
    }

    if (sort_cmd->parsed()) {
        seq_handle x, y, z;
        load_seq(sort_x, float_mode, x);
        load_seq(sort_y, float_mode, y);
        std::uint64_t comparisons = 0;
        if (sort_trace) {
            sumset_trace* trace = nullptr;
            check(sumset_sort_pairwise_traced(x.p, y.p, parse_backend(backend_name), &z.p,
                                              &trace));
            comparisons = sumset_trace_comparisons(trace);
            std::fprintf(stderr, "row,ip,cp_end,advances\n");
            for (size_t i = 0; i < sumset_trace_rows(trace); ++i) {
                size_t ip, cp_end, advances;
                check(sumset_trace_row(trace, i, &ip, &cp_end, &advances));
                std::fprintf(stderr, "%zu,%zu,%zu,%zu\n", i, ip, cp_end, advances);
            }
            sumset_trace_free(trace);
        } else {
            check(sumset_sort_pairwise(x.p, y.p, parse_backend(backend_name), &z.p,
                                       &comparisons));
        }
        if (sort_count || sort_strict)
            std::fprintf(stderr, "comparisons=%" PRIu64 "\n", comparisons);
        write_or_print(z.p, sort_out);
        if (sort_strict) {
            std::uint64_t budget = 2ULL * sumset_seq_len(x.p) * sumset_seq_len(y.p);
            if (comparisons > budget) {
                std::fprintf(stderr, "comparison budget exceeded: %" PRIu64 " > %" PRIu64 "\n",
                             comparisons, budget);
                return exit_verify_failed;
            }
        }
        return exit_ok;
    }

    if (kfold->parsed()) {
        std::vector<seq_handle> handles(kfold_files.size());
        std::vector<const sumset_seq*> lists;
        for (size_t i = 0; i < kfold_files.size(); ++i) {
            load_seq(kfold_files[i], float_mode, handles[i]);
            lists.push_back(handles[i].p);
        }
        seq_handle z;
        std::uint64_t comparisons = 0;
        check(sumset_sort_kfold(lists.data(), lists.size(), parse_backend(backend_name), &z.p,
                                &comparisons));
        if (kfold_count)
            std::fprintf(stderr, "comparisons=%" PRIu64 "\n", comparisons);
        write_or_print(z.p, kfold_out);
        return exit_ok;
    }

    if (verify->parsed()) {
        std::uint64_t failures = 0;
        check(sumset_verify(verify_n, verify_instances, seed, &failures));
        std::printf("verify: n=%zu instances=%zu failures=%" PRIu64 "\n", verify_n,
                    verify_instances, failures);
        return failures == 0 ? exit_ok : exit_verify_failed;
    }

    if (props->parsed()) {
        seq_handle x, y;
        if (!props_x.empty() || !props_y.empty()) {
            if (props_x.empty() || props_y.empty()) {
                std::fprintf(stderr, "error: props needs both -x and -y (or neither)\n");
                return exit_usage;
            }
            load_seq(props_x, false, x);
            load_seq(props_y, false, y);
        } else {
            check(sumset_generate_inputs(props_n, seed, range.lo, range.hi, &x.p, &y.p));
        }
        sumset_matrix_report report;
        const std::int64_t* threshold = props_has_threshold ? &props_threshold : nullptr;
        check(sumset_matrix_check_i64(x.p, y.p, threshold, &report));
        std::printf("rows_monotone=%d cols_monotone=%d monge=%d ferrers=%d\n",
                    report.rows_monotone, report.cols_monotone, report.monge_holds,
                    report.ferrers_prefix_holds);
        if (report.has_violation)
            std::printf("violation at (i=%zu, j=%zu, i'=%zu, j'=%zu)\n", report.vi, report.vj,
                        report.vi2, report.vj2);
        bool ok = report.rows_monotone && report.cols_monotone && report.monge_holds &&
                  report.ferrers_prefix_holds;
        return ok ? exit_ok : exit_verify_failed;
    }

    if (bench->parsed()) {
        unsigned mask = SUMSET_ALGO_ALL;
        if (bench_algo == "proposed")
            mask = SUMSET_ALGO_PROPOSED;
        else if (bench_algo == "mergesort")
            mask = SUMSET_ALGO_MERGESORT;
        else if (bench_algo == "quicksort")
            mask = SUMSET_ALGO_QUICKSORT;
        else if (bench_algo != "all") {
            std::fprintf(stderr, "error: unknown --algo '%s'\n", bench_algo.c_str());
            return exit_usage;
        }

        sumset_bench_config config{};
        config.sizes = bench_sizes.data();
        config.n_sizes = bench_sizes.size();
        config.trials = bench_trials;
        config.seed = seed;
        config.range_lo = range.lo;
        config.range_hi = range.hi;
        config.algo_mask = mask;
        config.backend = parse_backend(backend_name);
        config.max_cells = bench_max_cells;

        sumset_bench_record* records = nullptr;
        size_t count = 0;
        check(sumset_bench_run(&config, &records, &count));
        check(sumset_bench_write_comparisons_csv(records, count, bench_out.c_str()));
        if (!bench_tn2_out.empty())
            check(sumset_bench_write_tn2_csv(records, count, bench_tn2_out.c_str()));
        bool exceeded = false;
        for (size_t i = 0; i < count; ++i)
            if (records[i].bound_exceeded)
                exceeded = true;
        sumset_bench_records_free(records);
        if (exceeded) {
            std::fprintf(stderr, "warning: a proposed-algorithm trial exceeded 2n^2\n");
            return exit_verify_failed;
        }
        return exit_ok;
    }

    return exit_usage;
}
