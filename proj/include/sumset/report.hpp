#pragma once

#include <cmath>
#include <cstdio>
#include <map>

#include "sumset/bench.hpp"
#include "sumset/io.hpp"

namespace sumset {

// Mean counts print as plain integers whenever they are integral (they
// always are when trials divide the totals), otherwise with three
// decimals. Keeps golden files byte-stable.
inline std::string format_count(double v) {
    double r = std::round(v);
    if (std::fabs(v - r) < 1e-9 && std::fabs(v) < 9e15)
        return std::to_string(static_cast<long long>(r));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

inline std::string format_ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

// Comparison-count table, one row per n: "n,proposed,mergesort,quicksort".
// Algorithms absent from the run leave empty cells.
inline csv_table comparisons_table(const std::vector<bench_record>& records) {
    csv_table t;
    t.header = {"n", "proposed", "mergesort", "quicksort"};
    std::map<std::size_t, std::vector<std::string>> rows;
    std::vector<std::size_t> order;
    for (const auto& r : records) {
        auto [it, fresh] = rows.try_emplace(r.n, std::vector<std::string>{
                                                     std::to_string(r.n), "", "", ""});
        if (fresh)
            order.push_back(r.n);
        std::size_t col = r.algo == bench_algo::proposed     ? 1
                          : r.algo == bench_algo::mergesort ? 2
                                                            : 3;
        it->second[col] = format_count(r.mean_comparisons);
    }
    for (std::size_t n : order)
        t.rows.push_back(rows[n]);
    return t;
}

// T/n^2 table for the stability study: "n,mean_duration_ms,std_dev_ms".
inline csv_table tn2_table(const std::vector<bench_record>& records) {
    csv_table t;
    t.header = {"n", "mean_duration_ms", "std_dev_ms"};
    for (const auto& r : records)
        if (r.algo == bench_algo::proposed)
            t.rows.push_back({std::to_string(r.n), format_ms(r.mean_t_over_n2_ms),
                              format_ms(r.std_t_over_n2_ms)});
    return t;
}

} // namespace sumset
