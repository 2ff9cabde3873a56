#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sumset/baselines.hpp"
#include "sumset/pairwise.hpp"
#include "sumset/rng.hpp"

namespace sumset {

enum class bench_algo { proposed, mergesort, quicksort };

inline const char* bench_algo_name(bench_algo a) {
    switch (a) {
    case bench_algo::proposed: return "proposed";
    case bench_algo::mergesort: return "mergesort";
    default: return "quicksort";
    }
}

struct bench_config {
    std::vector<std::size_t> sizes{100, 200, 500, 1000};
    std::size_t trials = 10;
    std::uint64_t seed = 42;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = 10000;
    std::vector<bench_algo> algorithms{bench_algo::proposed, bench_algo::mergesort,
                                       bench_algo::quicksort};
    store_backend backend = store_backend::linked_blocks;
    // Memory cap on n^2 sumset cells.
    std::uint64_t max_cells = 200'000'000ULL;
};

// One benchmark cell: (n, algorithm) aggregated over trials.
struct bench_record {
    std::size_t n = 0;
    bench_algo algo = bench_algo::proposed;
    double mean_comparisons = 0.0;
    double mean_time_ms = 0.0;
    double std_time_ms = 0.0;
    double mean_t_over_n2_ms = 0.0;
    double std_t_over_n2_ms = 0.0;
    // Set instead of dropping the record when a proposed-algorithm trial
    // exceeds the 2n^2 budget.
    bool bound_exceeded = false;
};

// Two sorted arrays of n uniform draws each, X drawn fully before Y.
// Same (n, seed, range) gives identical output on every platform.
inline std::pair<sorted_sequence<std::int64_t>, sorted_sequence<std::int64_t>>
generate_inputs(std::size_t n, std::uint64_t seed, std::int64_t lo = 0, std::int64_t hi = 10000) {
    if (n == 0)
        raise(errc::empty_input, "input generation requires n >= 1");
    if (hi < lo)
        raise(errc::bad_argument, "empty value range");
    splitmix64 rng(seed);
    std::vector<std::int64_t> x(n), y(n);
    for (auto& v : x)
        v = rng.uniform(lo, hi);
    for (auto& v : y)
        v = rng.uniform(lo, hi);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return {sorted_sequence<std::int64_t>(std::move(x)),
            sorted_sequence<std::int64_t>(std::move(y))};
}

namespace detail {

struct trial_stats {
    std::vector<std::uint64_t> comparisons;
    std::vector<double> time_ms;
};

inline bench_record aggregate(std::size_t n, bench_algo algo, const trial_stats& s) {
    bench_record r;
    r.n = n;
    r.algo = algo;
    const double cells = static_cast<double>(n) * static_cast<double>(n);
    double csum = 0;
    for (auto c : s.comparisons)
        csum += static_cast<double>(c);
    r.mean_comparisons = csum / static_cast<double>(s.comparisons.size());

    double tsum = 0;
    for (double t : s.time_ms)
        tsum += t;
    double tmean = tsum / static_cast<double>(s.time_ms.size());
    double tvar = 0;
    for (double t : s.time_ms)
        tvar += (t - tmean) * (t - tmean);
    tvar /= static_cast<double>(s.time_ms.size());
    r.mean_time_ms = tmean;
    r.std_time_ms = std::sqrt(tvar);
    r.mean_t_over_n2_ms = tmean / cells;
    r.std_t_over_n2_ms = r.std_time_ms / cells;

    if (algo == bench_algo::proposed)
        for (auto c : s.comparisons)
            if (static_cast<double>(c) > 2.0 * cells)
                r.bound_exceeded = true;
    return r;
}

} // namespace detail

// Runs every (size, algorithm) cell of the config: fresh derived seed
// per trial, timings cover the sort only (generation, enumeration and
// validation excluded), comparison counts captured per trial.
inline std::vector<bench_record> run_suite(const bench_config& cfg) {
    if (cfg.trials == 0)
        raise(errc::bad_argument, "trials must be >= 1");
    using clock = std::chrono::steady_clock;

    std::vector<bench_record> out;
    for (std::size_t n : cfg.sizes) {
        if (static_cast<std::uint64_t>(n) * n > cfg.max_cells)
            raise(errc::resource_limit, "n^2 exceeds the configured cell cap");
        std::vector<detail::trial_stats> stats(cfg.algorithms.size());

        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            auto [x, y] = generate_inputs(n, derive_seed(cfg.seed, n, trial), cfg.range_lo,
                                          cfg.range_hi);
            for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
                compare_meter meter;
                clock::time_point t0, t1;
                if (cfg.algorithms[a] == bench_algo::proposed) {
                    t0 = clock::now();
                    auto z = sort_sumset(x, y, cfg.backend, meter);
                    t1 = clock::now();
                    (void)z;
                } else {
                    std::vector<sorted_sequence<std::int64_t>> lists{x, y};
                    auto values = enumerate_sums<std::int64_t>(lists);
                    auto kind = cfg.algorithms[a] == bench_algo::mergesort
                                    ? baseline_kind::mergesort
                                    : baseline_kind::quicksort;
                    t0 = clock::now();
                    auto z = counted_sort(std::move(values), kind, meter);
                    t1 = clock::now();
                    (void)z;
                }
                stats[a].comparisons.push_back(meter.count());
                stats[a].time_ms.push_back(
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
        }
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
            out.push_back(detail::aggregate(n, cfg.algorithms[a], stats[a]));
    }
    return out;
}

// The T/n^2 stability study: proposed algorithm only.
inline std::vector<bench_record> tn2_stability(bench_config cfg) {
    cfg.algorithms = {bench_algo::proposed};
    return run_suite(cfg);
}

// Max/min ratio of mean T/n^2 over the top half of sizes (the plateau
// region); the caller decides what ratio counts as stable.
inline double tn2_plateau_ratio(const std::vector<bench_record>& records) {
    std::vector<double> means;
    for (const auto& r : records)
        if (r.algo == bench_algo::proposed)
            means.push_back(r.mean_t_over_n2_ms);
    if (means.size() < 2)
        return 1.0;
    std::size_t from = means.size() / 2;
    double lo = means[from], hi = means[from];
    for (std::size_t i = from; i < means.size(); ++i) {
        lo = std::min(lo, means[i]);
        hi = std::max(hi, means[i]);
    }
    return lo > 0 ? hi / lo : 1.0;
}

} // namespace sumset
