/* C API for the sumset sorting library.
 *
 * All objects are opaque handles freed by their matching *_free call.
 * Every fallible function returns a sumset_status; on failure the
 * thread-local message from sumset_last_error() describes the cause and
 * all out-parameters are left untouched.
 */
#ifndef SUMSET_C_H
#define SUMSET_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SUMSET_OK = 0,
    SUMSET_E_OVERFLOW = 1,
    SUMSET_E_LENGTH_MISMATCH = 2,
    SUMSET_E_NOT_SORTED = 3,
    SUMSET_E_RANK_RANGE = 4,
    SUMSET_E_ORDER = 5,
    SUMSET_E_EMPTY = 6,
    SUMSET_E_ARITY = 7,
    SUMSET_E_RESOURCE_LIMIT = 8,
    SUMSET_E_IO = 9,
    SUMSET_E_PARSE = 10,
    SUMSET_E_BAD_ARG = 11,
    SUMSET_E_NOMEM = 12,
} sumset_status;

typedef enum { SUMSET_KEY_I64 = 0, SUMSET_KEY_F64 = 1 } sumset_key_mode;

typedef enum {
    SUMSET_BACKEND_LINKED_BLOCKS = 0,
    SUMSET_BACKEND_CONTIGUOUS = 1
} sumset_backend;

typedef enum { SUMSET_BASELINE_MERGESORT = 0, SUMSET_BASELINE_QUICKSORT = 1 } sumset_baseline;

typedef struct sumset_seq sumset_seq;
typedef struct sumset_trace sumset_trace;

const char* sumset_status_name(sumset_status status);
const char* sumset_last_error(void);

/* --- sorted sequences ------------------------------------------------ */

/* Input must already be non-decreasing; SUMSET_E_NOT_SORTED otherwise. */
sumset_status sumset_seq_create_i64(const int64_t* keys, size_t n, sumset_seq** out);
sumset_status sumset_seq_create_f64(const double* keys, size_t n, sumset_seq** out);
void sumset_seq_free(sumset_seq* seq);

size_t sumset_seq_len(const sumset_seq* seq);
sumset_key_mode sumset_seq_mode(const sumset_seq* seq);
sumset_status sumset_seq_get_i64(const sumset_seq* seq, size_t index, int64_t* out);
sumset_status sumset_seq_get_f64(const sumset_seq* seq, size_t index, double* out);

/* One key per line; '#' comments and blank lines allowed. */
sumset_status sumset_seq_load(const char* path, sumset_key_mode mode, sumset_seq** out);
sumset_status sumset_seq_save(const sumset_seq* seq, const char* path);

/* Two sorted arrays of n uniform integer draws from [lo, hi]; X is drawn
 * fully before Y. Deterministic for a given (n, seed, lo, hi). */
sumset_status sumset_generate_inputs(size_t n, uint64_t seed, int64_t lo, int64_t hi,
                                     sumset_seq** x, sumset_seq** y);

/* --- sorting --------------------------------------------------------- */

/* Sorts all |X|*|Y| pairwise sums; *comparisons (optional) receives the
 * metered count, at most 2*|X|*|Y|. */
sumset_status sumset_sort_pairwise(const sumset_seq* x, const sumset_seq* y,
                                   sumset_backend backend, sumset_seq** out,
                                   uint64_t* comparisons);

sumset_status sumset_sort_pairwise_traced(const sumset_seq* x, const sumset_seq* y,
                                          sumset_backend backend, sumset_seq** out,
                                          sumset_trace** out_trace);

size_t sumset_trace_rows(const sumset_trace* trace);
uint64_t sumset_trace_comparisons(const sumset_trace* trace);
sumset_status sumset_trace_row(const sumset_trace* trace, size_t row, size_t* ip, size_t* cp_end,
                               size_t* advances);
void sumset_trace_free(sumset_trace* trace);

/* k >= 2 equal-length sorted lists, all in the same key mode. */
sumset_status sumset_sort_kfold(const sumset_seq* const* lists, size_t k, sumset_backend backend,
                                sumset_seq** out, uint64_t* comparisons);

/* Instrumented MergeSort/QuickSort over the enumerated sumset. */
sumset_status sumset_baseline_sort(const sumset_seq* const* lists, size_t k,
                                   sumset_baseline kind, sumset_seq** out, uint64_t* comparisons);

/* Ground-truth sorted sumset (enumeration + mergesort). */
sumset_status sumset_oracle_sort(const sumset_seq* const* lists, size_t k, sumset_seq** out);

/* --- structural matrix checks ---------------------------------------- */

typedef struct {
    int rows_monotone;
    int cols_monotone;
    int monge_holds;
    int ferrers_prefix_holds;
    int has_violation;
    size_t vi, vj, vi2, vj2; /* witness quadruple when has_violation */
} sumset_matrix_report;

/* threshold may be NULL to skip the Ferrers prefix check. */
sumset_status sumset_matrix_check_i64(const sumset_seq* x, const sumset_seq* y,
                                      const int64_t* threshold, sumset_matrix_report* report);
sumset_status sumset_matrix_check_f64(const sumset_seq* x, const sumset_seq* y,
                                      const double* threshold, sumset_matrix_report* report);

/* --- verification ---------------------------------------------------- */

/* Runs `instances` seeded random instances of size n: oracle equivalence
 * on both backends, the 2n^2 comparison budget, and the insertion-
 * pointer trace invariants. *failures receives the number of violated
 * instances. */
sumset_status sumset_verify(size_t n, size_t instances, uint64_t seed, uint64_t* failures);

/* --- benchmarking ---------------------------------------------------- */

enum {
    SUMSET_ALGO_PROPOSED = 1,
    SUMSET_ALGO_MERGESORT = 2,
    SUMSET_ALGO_QUICKSORT = 4,
    SUMSET_ALGO_ALL = 7
};

typedef struct {
    const size_t* sizes;
    size_t n_sizes;
    size_t trials;
    uint64_t seed;
    int64_t range_lo;
    int64_t range_hi;
    unsigned algo_mask; /* SUMSET_ALGO_* bits */
    sumset_backend backend;
    uint64_t max_cells; /* cap on n^2; 0 means the default */
} sumset_bench_config;

typedef struct {
    size_t n;
    int algo; /* 0 proposed, 1 mergesort, 2 quicksort */
    double mean_comparisons;
    double mean_time_ms;
    double std_time_ms;
    double mean_t_over_n2_ms;
    double std_t_over_n2_ms;
    int bound_exceeded;
} sumset_bench_record;

/* *records receives an array of *count entries; free with
 * sumset_bench_records_free. */
sumset_status sumset_bench_run(const sumset_bench_config* config, sumset_bench_record** records,
                               size_t* count);
void sumset_bench_records_free(sumset_bench_record* records);

/* CSV schemas: "n,proposed,mergesort,quicksort" (counts) and
 * "n,mean_duration_ms,std_dev_ms" (T/n^2). */
sumset_status sumset_bench_write_comparisons_csv(const sumset_bench_record* records, size_t count,
                                                 const char* path);
sumset_status sumset_bench_write_tn2_csv(const sumset_bench_record* records, size_t count,
                                         const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUMSET_C_H */
