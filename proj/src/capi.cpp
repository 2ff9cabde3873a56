#include "sumset/sumset_c.h"

#include <cstring>
#include <new>
#include <variant>

#include "sumset/baselines.hpp"
#include "sumset/bench.hpp"
#include "sumset/io.hpp"
#include "sumset/kfold.hpp"
#include "sumset/matrix_props.hpp"
#include "sumset/pairwise.hpp"
#include "sumset/report.hpp"

using namespace sumset;

using seq_i64 = sorted_sequence<std::int64_t>;
using seq_f64 = sorted_sequence<double>;

struct sumset_seq {
    std::variant<seq_i64, seq_f64> data;
};

struct sumset_trace {
    insertion_trace data;
};

namespace {

thread_local std::string g_last_error;

sumset_status map_errc(errc code) {
    switch (code) {
    case errc::overflow: return SUMSET_E_OVERFLOW;
    case errc::length_mismatch: return SUMSET_E_LENGTH_MISMATCH;
    case errc::not_sorted: return SUMSET_E_NOT_SORTED;
    case errc::rank_out_of_bounds: return SUMSET_E_RANK_RANGE;
    case errc::order_violation: return SUMSET_E_ORDER;
    case errc::empty_input: return SUMSET_E_EMPTY;
    case errc::arity_error: return SUMSET_E_ARITY;
    case errc::resource_limit: return SUMSET_E_RESOURCE_LIMIT;
    case errc::io_error: return SUMSET_E_IO;
    case errc::parse_error: return SUMSET_E_PARSE;
    case errc::bad_argument: return SUMSET_E_BAD_ARG;
    }
    return SUMSET_E_BAD_ARG;
}

template <class Fn>
sumset_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SUMSET_E_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SUMSET_E_BAD_ARG;
    }
}

sumset_status bad_arg(const char* what) {
    g_last_error = what;
    return SUMSET_E_BAD_ARG;
}

store_backend to_backend(sumset_backend b) {
    return b == SUMSET_BACKEND_CONTIGUOUS ? store_backend::contiguous
                                          : store_backend::linked_blocks;
}

// Gathers k handles into one typed vector; rejects mixed key modes.
template <class K>
std::vector<sorted_sequence<K>> gather(const sumset_seq* const* lists, size_t k) {
    std::vector<sorted_sequence<K>> out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        const auto* p = std::get_if<sorted_sequence<K>>(&lists[i]->data);
        if (!p)
            raise(errc::bad_argument, "mixed key modes in list set");
        out.push_back(*p);
    }
    return out;
}

template <class Fn>
sumset_status with_lists(const sumset_seq* const* lists, size_t k, Fn&& fn) {
    if (!lists || k == 0)
        return bad_arg("null or empty list set");
    for (size_t i = 0; i < k; ++i)
        if (!lists[i])
            return bad_arg("null sequence handle");
    return guarded([&] {
        if (std::holds_alternative<seq_i64>(lists[0]->data))
            return fn(gather<std::int64_t>(lists, k));
        return fn(gather<double>(lists, k));
    });
}

bench_config to_config(const sumset_bench_config& c) {
    bench_config cfg;
    cfg.sizes.assign(c.sizes, c.sizes + c.n_sizes);
    cfg.trials = c.trials;
    cfg.seed = c.seed;
    cfg.range_lo = c.range_lo;
    cfg.range_hi = c.range_hi;
    cfg.algorithms.clear();
    if (c.algo_mask & SUMSET_ALGO_PROPOSED)
        cfg.algorithms.push_back(bench_algo::proposed);
    if (c.algo_mask & SUMSET_ALGO_MERGESORT)
        cfg.algorithms.push_back(bench_algo::mergesort);
    if (c.algo_mask & SUMSET_ALGO_QUICKSORT)
        cfg.algorithms.push_back(bench_algo::quicksort);
    cfg.backend = to_backend(c.backend);
    if (c.max_cells)
        cfg.max_cells = c.max_cells;
    return cfg;
}

sumset_bench_record to_c_record(const bench_record& r) {
    sumset_bench_record c;
    c.n = r.n;
    c.algo = r.algo == bench_algo::proposed ? 0 : r.algo == bench_algo::mergesort ? 1 : 2;
    c.mean_comparisons = r.mean_comparisons;
    c.mean_time_ms = r.mean_time_ms;
    c.std_time_ms = r.std_time_ms;
    c.mean_t_over_n2_ms = r.mean_t_over_n2_ms;
    c.std_t_over_n2_ms = r.std_t_over_n2_ms;
    c.bound_exceeded = r.bound_exceeded ? 1 : 0;
    return c;
}

bench_record from_c_record(const sumset_bench_record& c) {
    bench_record r;
    r.n = c.n;
    r.algo = c.algo == 0 ? bench_algo::proposed
             : c.algo == 1 ? bench_algo::mergesort
                           : bench_algo::quicksort;
    r.mean_comparisons = c.mean_comparisons;
    r.mean_time_ms = c.mean_time_ms;
    r.std_time_ms = c.std_time_ms;
    r.mean_t_over_n2_ms = c.mean_t_over_n2_ms;
    r.std_t_over_n2_ms = c.std_t_over_n2_ms;
    r.bound_exceeded = c.bound_exceeded != 0;
    return r;
}

template <class K>
sumset_matrix_report to_c_report(const matrix_property_report& rep) {
    sumset_matrix_report c{};
    c.rows_monotone = rep.rows_monotone;
    c.cols_monotone = rep.cols_monotone;
    c.monge_holds = rep.monge_holds;
    c.ferrers_prefix_holds = rep.ferrers_prefix_holds;
    c.has_violation = rep.first_violation.has_value();
    if (rep.first_violation) {
        c.vi = rep.first_violation->i;
        c.vj = rep.first_violation->j;
        c.vi2 = rep.first_violation->i2;
        c.vj2 = rep.first_violation->j2;
    }
    return c;
}

} // namespace

extern "C" {

const char* sumset_status_name(sumset_status status) {
    switch (status) {
    case SUMSET_OK: return "ok";
    case SUMSET_E_OVERFLOW: return "overflow";
    case SUMSET_E_LENGTH_MISMATCH: return "length mismatch";
    case SUMSET_E_NOT_SORTED: return "not sorted";
    case SUMSET_E_RANK_RANGE: return "rank out of bounds";
    case SUMSET_E_ORDER: return "order violation";
    case SUMSET_E_EMPTY: return "empty input";
    case SUMSET_E_ARITY: return "arity error";
    case SUMSET_E_RESOURCE_LIMIT: return "resource limit";
    case SUMSET_E_IO: return "io error";
    case SUMSET_E_PARSE: return "parse error";
    case SUMSET_E_BAD_ARG: return "bad argument";
    case SUMSET_E_NOMEM: return "out of memory";
    }
    return "unknown";
}

const char* sumset_last_error(void) { return g_last_error.c_str(); }

sumset_status sumset_seq_create_i64(const int64_t* keys, size_t n, sumset_seq** out) {
    if (!out || (!keys && n))
        return bad_arg("null pointer");
    return guarded([&] {
        std::vector<std::int64_t> v(keys, keys + n);
        *out = new sumset_seq{seq_i64(std::move(v))};
        return SUMSET_OK;
    });
}

sumset_status sumset_seq_create_f64(const double* keys, size_t n, sumset_seq** out) {
    if (!out || (!keys && n))
        return bad_arg("null pointer");
    return guarded([&] {
        std::vector<double> v(keys, keys + n);
        *out = new sumset_seq{seq_f64(std::move(v))};
        return SUMSET_OK;
    });
}

void sumset_seq_free(sumset_seq* seq) { delete seq; }

size_t sumset_seq_len(const sumset_seq* seq) {
    return std::visit([](const auto& s) { return s.size(); }, seq->data);
}

sumset_key_mode sumset_seq_mode(const sumset_seq* seq) {
    return std::holds_alternative<seq_i64>(seq->data) ? SUMSET_KEY_I64 : SUMSET_KEY_F64;
}

sumset_status sumset_seq_get_i64(const sumset_seq* seq, size_t index, int64_t* out) {
    if (!seq || !out)
        return bad_arg("null pointer");
    const auto* s = std::get_if<seq_i64>(&seq->data);
    if (!s)
        return bad_arg("sequence is not in integer mode");
    if (index >= s->size()) {
        g_last_error = "index past end of sequence";
        return SUMSET_E_RANK_RANGE;
    }
    *out = (*s)[index];
    return SUMSET_OK;
}

sumset_status sumset_seq_get_f64(const sumset_seq* seq, size_t index, double* out) {
    if (!seq || !out)
        return bad_arg("null pointer");
    const auto* s = std::get_if<seq_f64>(&seq->data);
    if (!s)
        return bad_arg("sequence is not in float mode");
    if (index >= s->size()) {
        g_last_error = "index past end of sequence";
        return SUMSET_E_RANK_RANGE;
    }
    *out = (*s)[index];
    return SUMSET_OK;
}

sumset_status sumset_seq_load(const char* path, sumset_key_mode mode, sumset_seq** out) {
    if (!path || !out)
        return bad_arg("null pointer");
    return guarded([&] {
        if (mode == SUMSET_KEY_I64)
            *out = new sumset_seq{parse_sequence_file<std::int64_t>(path)};
        else
            *out = new sumset_seq{parse_sequence_file<double>(path)};
        return SUMSET_OK;
    });
}

sumset_status sumset_seq_save(const sumset_seq* seq, const char* path) {
    if (!seq || !path)
        return bad_arg("null pointer");
    return guarded([&] {
        std::visit([&](const auto& s) { write_sequence_file(s, path); }, seq->data);
        return SUMSET_OK;
    });
}

sumset_status sumset_generate_inputs(size_t n, uint64_t seed, int64_t lo, int64_t hi,
                                     sumset_seq** x, sumset_seq** y) {
    if (!x || !y)
        return bad_arg("null pointer");
    return guarded([&] {
        auto [gx, gy] = generate_inputs(n, seed, lo, hi);
        *x = new sumset_seq{std::move(gx)};
        *y = new sumset_seq{std::move(gy)};
        return SUMSET_OK;
    });
}

sumset_status sumset_sort_pairwise(const sumset_seq* x, const sumset_seq* y,
                                   sumset_backend backend, sumset_seq** out,
                                   uint64_t* comparisons) {
    if (!out)
        return bad_arg("null pointer");
    const sumset_seq* lists[2] = {x, y};
    return with_lists(lists, 2, [&](const auto& seqs) {
        compare_meter meter;
        auto z = sort_sumset(seqs[0], seqs[1], to_backend(backend), meter);
        *out = new sumset_seq{std::move(z)};
        if (comparisons)
            *comparisons = meter.count();
        return SUMSET_OK;
    });
}

sumset_status sumset_sort_pairwise_traced(const sumset_seq* x, const sumset_seq* y,
                                          sumset_backend backend, sumset_seq** out,
                                          sumset_trace** out_trace) {
    if (!out || !out_trace)
        return bad_arg("null pointer");
    const sumset_seq* lists[2] = {x, y};
    return with_lists(lists, 2, [&](const auto& seqs) {
        auto [z, trace] = trace_sort(seqs[0], seqs[1], to_backend(backend));
        *out = new sumset_seq{std::move(z)};
        *out_trace = new sumset_trace{std::move(trace)};
        return SUMSET_OK;
    });
}

size_t sumset_trace_rows(const sumset_trace* trace) { return trace->data.ip_per_row.size(); }

uint64_t sumset_trace_comparisons(const sumset_trace* trace) {
    return trace->data.total_comparisons;
}

sumset_status sumset_trace_row(const sumset_trace* trace, size_t row, size_t* ip, size_t* cp_end,
                               size_t* advances) {
    if (!trace)
        return bad_arg("null pointer");
    if (row >= trace->data.ip_per_row.size()) {
        g_last_error = "trace row out of range";
        return SUMSET_E_RANK_RANGE;
    }
    if (ip)
        *ip = trace->data.ip_per_row[row];
    if (cp_end)
        *cp_end = trace->data.cp_end_per_row[row];
    if (advances)
        *advances = trace->data.advances_per_row[row];
    return SUMSET_OK;
}

void sumset_trace_free(sumset_trace* trace) { delete trace; }

sumset_status sumset_sort_kfold(const sumset_seq* const* lists, size_t k, sumset_backend backend,
                                sumset_seq** out, uint64_t* comparisons) {
    if (!out)
        return bad_arg("null pointer");
    return with_lists(lists, k, [&](const auto& seqs) {
        compare_meter meter;
        auto z = sort_kfold(std::span(seqs), to_backend(backend), meter);
        *out = new sumset_seq{std::move(z)};
        if (comparisons)
            *comparisons = meter.count();
        return SUMSET_OK;
    });
}

sumset_status sumset_baseline_sort(const sumset_seq* const* lists, size_t k,
                                   sumset_baseline kind, sumset_seq** out, uint64_t* comparisons) {
    if (!out)
        return bad_arg("null pointer");
    return with_lists(lists, k, [&](const auto& seqs) {
        compare_meter meter;
        auto values = enumerate_sums(std::span(seqs));
        auto z = counted_sort(std::move(values),
                              kind == SUMSET_BASELINE_MERGESORT ? baseline_kind::mergesort
                                                                : baseline_kind::quicksort,
                              meter);
        *out = new sumset_seq{std::move(z)};
        if (comparisons)
            *comparisons = meter.count();
        return SUMSET_OK;
    });
}

sumset_status sumset_oracle_sort(const sumset_seq* const* lists, size_t k, sumset_seq** out) {
    if (!out)
        return bad_arg("null pointer");
    return with_lists(lists, k, [&](const auto& seqs) {
        *out = new sumset_seq{oracle_sorted_sumset(std::span(seqs))};
        return SUMSET_OK;
    });
}

sumset_status sumset_matrix_check_i64(const sumset_seq* x, const sumset_seq* y,
                                      const int64_t* threshold, sumset_matrix_report* report) {
    if (!x || !y || !report)
        return bad_arg("null pointer");
    return guarded([&] {
        const auto* sx = std::get_if<seq_i64>(&x->data);
        const auto* sy = std::get_if<seq_i64>(&y->data);
        if (!sx || !sy)
            raise(errc::bad_argument, "sequences are not in integer mode");
        std::optional<std::int64_t> t;
        if (threshold)
            t = *threshold;
        *report = to_c_report<std::int64_t>(matrix_property_check(*sx, *sy, t));
        return SUMSET_OK;
    });
}

sumset_status sumset_matrix_check_f64(const sumset_seq* x, const sumset_seq* y,
                                      const double* threshold, sumset_matrix_report* report) {
    if (!x || !y || !report)
        return bad_arg("null pointer");
    return guarded([&] {
        const auto* sx = std::get_if<seq_f64>(&x->data);
        const auto* sy = std::get_if<seq_f64>(&y->data);
        if (!sx || !sy)
            raise(errc::bad_argument, "sequences are not in float mode");
        std::optional<double> t;
        if (threshold)
            t = *threshold;
        *report = to_c_report<double>(matrix_property_check(*sx, *sy, t));
        return SUMSET_OK;
    });
}

sumset_status sumset_verify(size_t n, size_t instances, uint64_t seed, uint64_t* failures) {
    if (!failures)
        return bad_arg("null pointer");
    return guarded([&] {
        std::uint64_t bad = 0;
        for (size_t t = 0; t < instances; ++t) {
            auto [x, y] = generate_inputs(n, derive_seed(seed, n, t));
            std::vector<seq_i64> lists{x, y};
            auto expect = oracle_sorted_sumset(std::span<const seq_i64>(lists));

            auto [zb, tb] = trace_sort(x, y, store_backend::linked_blocks);
            auto [zc, tc] = trace_sort(x, y, store_backend::contiguous);

            bool ok = zb == expect && zc == expect &&
                      tb.total_comparisons == tc.total_comparisons &&
                      tb.total_comparisons <= 2 * static_cast<std::uint64_t>(n) * n &&
                      tb.ip_per_row == tc.ip_per_row && !tb.ip_per_row.empty() &&
                      tb.ip_per_row[0] == 0;
            for (size_t i = 0; ok && i + 1 < n; ++i)
                ok = tb.ip_per_row[i + 1] <= tb.cp_end_per_row[i];
            if (!ok)
                ++bad;
        }
        *failures = bad;
        return SUMSET_OK;
    });
}

sumset_status sumset_bench_run(const sumset_bench_config* config, sumset_bench_record** records,
                               size_t* count) {
    if (!config || !records || !count || (!config->sizes && config->n_sizes))
        return bad_arg("null pointer");
    return guarded([&] {
        auto result = run_suite(to_config(*config));
        auto* arr = new sumset_bench_record[result.size()];
        for (size_t i = 0; i < result.size(); ++i)
            arr[i] = to_c_record(result[i]);
        *records = arr;
        *count = result.size();
        return SUMSET_OK;
    });
}

void sumset_bench_records_free(sumset_bench_record* records) { delete[] records; }

sumset_status sumset_bench_write_comparisons_csv(const sumset_bench_record* records, size_t count,
                                                 const char* path) {
    if ((!records && count) || !path)
        return bad_arg("null pointer");
    return guarded([&] {
        std::vector<bench_record> rs;
        rs.reserve(count);
        for (size_t i = 0; i < count; ++i)
            rs.push_back(from_c_record(records[i]));
        emit_csv(comparisons_table(rs), path);
        return SUMSET_OK;
    });
}

sumset_status sumset_bench_write_tn2_csv(const sumset_bench_record* records, size_t count,
                                         const char* path) {
    if ((!records && count) || !path)
        return bad_arg("null pointer");
    return guarded([&] {
        std::vector<bench_record> rs;
        rs.reserve(count);
        for (size_t i = 0; i < count; ++i)
            rs.push_back(from_c_record(records[i]));
        emit_csv(tn2_table(rs), path);
        return SUMSET_OK;
    });
}

} // extern "C"
