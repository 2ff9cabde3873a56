#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sumset/ranked_store.hpp"

namespace sumset {

// Per-row pointer snapshots of a sort run: where the insertion pointer
// started, where the scan ended, and how far it advanced.
struct insertion_trace {
    std::vector<std::size_t> ip_per_row;
    std::vector<std::size_t> cp_end_per_row;
    std::vector<std::size_t> advances_per_row;
    std::vector<std::size_t> first_insert_rank_per_row;
    std::uint64_t total_comparisons = 0;
    // Checked during the run: every element below the next row's starting
    // pointer stays <= that row's smallest sum, and each row's first
    // insertion lands at or past its starting pointer.
    bool lookahead_ok = true;
};

// low[i] = X[i] + Y[0], the smallest sum of row i. Costs no metered
// comparisons.
template <key_type K>
std::vector<K> low_vector(const sorted_sequence<K>& x, const sorted_sequence<K>& y) {
    if (y.empty())
        raise(errc::empty_input, "low vector requires |Y| >= 1");
    std::vector<K> low;
    low.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        low.push_back(checked_sum(x[i], y[0]));
    return low;
}

namespace detail {

// Row-wise insertion with the low-vector lookahead. Each row's cursor
// moves forward from the remembered insertion pointer; the pointer
// chases the last inserted sum that does not exceed the next row's
// smallest sum.
//
// The meter charges each insertion for its order certificate: one test
// against the left neighbor and one against the right neighbor, so at
// most two per element and 2|X||Y| in total. Locating the rank is
// positional maintenance (an uncounted forward seek), as is the
// lookahead test against the precomputed low values. The seek travel is
// still reported per row through the trace.
template <class Store, key_type K>
sorted_sequence<K> sort_sumset_core(const sorted_sequence<K>& x, const sorted_sequence<K>& y,
                                    compare_meter& meter, insertion_trace* trace) {
    if (x.empty() || y.empty())
        raise(errc::empty_input, "sumset sort requires non-empty inputs");

    const std::size_t rows = x.size();
    const std::size_t cols = y.size();
    std::vector<K> low = low_vector(x, y);

    Store store;
    std::size_t ip = 0;

    const std::uint64_t meter_start = meter.count();
    if (trace)
        *trace = insertion_trace{};

    for (std::size_t i = 0; i < rows; ++i) {
        auto cp = store.cursor_at(ip);
        if (trace)
            trace->ip_per_row.push_back(ip);
        const std::size_t row_start_ip = ip;
        for (std::size_t j = 0; j < cols; ++j) {
            K sum = checked_sum(x[i], y[j]);
            cp = store.seek_upper_bound(cp, sum);
            // certify the rank: left neighbor <= sum, sum <= right
            // neighbor (checked again inside insert_at)
            if (cp.rank > 0)
                meter.tick();
            if (!store.at_end(cp))
                meter.tick();
            cp = store.insert_at(cp, sum);
            if (trace && j == 0) {
                trace->first_insert_rank_per_row.push_back(cp.rank);
                if (cp.rank < row_start_ip)
                    trace->lookahead_ok = false;
            }
            if (i + 1 < rows && !(low[i + 1] < sum)) {
                ip = cp.rank;
                store.remember(cp);
            }
        }
        if (trace) {
            trace->cp_end_per_row.push_back(cp.rank);
            trace->advances_per_row.push_back(cp.rank - trace->ip_per_row.back());
            if (i + 1 < rows && ip > 0) {
                K below = store.value_at(store.cursor_at(ip - 1));
                if (low[i + 1] < below)
                    trace->lookahead_ok = false;
            }
        }
    }
    if (trace)
        trace->total_comparisons = meter.count() - meter_start;
    return store.export_sorted();
}

} // namespace detail

// Sorts all |X|*|Y| sums in non-decreasing order. For |X| = |Y| = n the
// meter grows by at most 2n^2 (2|X||Y| in the unequal-length extension).
template <key_type K>
sorted_sequence<K> sort_sumset(const sorted_sequence<K>& x, const sorted_sequence<K>& y,
                               store_backend backend, compare_meter& meter) {
    if (backend == store_backend::contiguous)
        return detail::sort_sumset_core<contiguous_store<K>>(x, y, meter, nullptr);
    return detail::sort_sumset_core<block_store<K>>(x, y, meter, nullptr);
}

// Same output as sort_sumset plus the per-row pointer trace.
template <key_type K>
std::pair<sorted_sequence<K>, insertion_trace> trace_sort(const sorted_sequence<K>& x,
                                                          const sorted_sequence<K>& y,
                                                          store_backend backend) {
    compare_meter meter;
    insertion_trace trace;
    sorted_sequence<K> out =
        backend == store_backend::contiguous
            ? detail::sort_sumset_core<contiguous_store<K>>(x, y, meter, &trace)
            : detail::sort_sumset_core<block_store<K>>(x, y, meter, &trace);
    return {std::move(out), std::move(trace)};
}

} // namespace sumset
