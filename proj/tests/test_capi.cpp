#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "sumset/sumset_c.h"

namespace {

std::string tmp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::vector<std::int64_t> keys_of(const sumset_seq* seq) {
    std::vector<std::int64_t> out(sumset_seq_len(seq));
    for (std::size_t t = 0; t < out.size(); ++t)
        REQUIRE(sumset_seq_get_i64(seq, t, &out[t]) == SUMSET_OK);
    return out;
}

struct seq_guard {
    sumset_seq* p = nullptr;
    ~seq_guard() { sumset_seq_free(p); }
};

} // namespace

TEST_CASE("sequence create, read back, mode") {
    const std::int64_t keys[] = {2, 4, 6};
    seq_guard s;
    REQUIRE(sumset_seq_create_i64(keys, 3, &s.p) == SUMSET_OK);
    CHECK(sumset_seq_len(s.p) == 3);
    CHECK(sumset_seq_mode(s.p) == SUMSET_KEY_I64);
    CHECK(keys_of(s.p) == std::vector<std::int64_t>{2, 4, 6});

    std::int64_t v = 0;
    CHECK(sumset_seq_get_i64(s.p, 3, &v) == SUMSET_E_RANK_RANGE);
    double d = 0;
    CHECK(sumset_seq_get_f64(s.p, 0, &d) == SUMSET_E_BAD_ARG);
}

TEST_CASE("unsorted input is refused with a message") {
    const std::int64_t keys[] = {5, 3};
    sumset_seq* s = nullptr;
    CHECK(sumset_seq_create_i64(keys, 2, &s) == SUMSET_E_NOT_SORTED);
    CHECK(s == nullptr);
    CHECK(std::strlen(sumset_last_error()) > 0);
}

TEST_CASE("float sequences refuse non-finite keys") {
    const double keys[] = {0.0, 1.0 / 0.0};
    sumset_seq* s = nullptr;
    CHECK(sumset_seq_create_f64(keys, 2, &s) != SUMSET_OK);
    CHECK(s == nullptr);
}

TEST_CASE("pairwise sort matches the worked instance") {
    const std::int64_t xs[] = {2, 4, 6}, ys[] = {1, 3, 5};
    seq_guard x, y, z;
    REQUIRE(sumset_seq_create_i64(xs, 3, &x.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_i64(ys, 3, &y.p) == SUMSET_OK);
    for (auto backend : {SUMSET_BACKEND_LINKED_BLOCKS, SUMSET_BACKEND_CONTIGUOUS}) {
        sumset_seq* out = nullptr;
        std::uint64_t comparisons = 0;
        REQUIRE(sumset_sort_pairwise(x.p, y.p, backend, &out, &comparisons) == SUMSET_OK);
        CHECK(keys_of(out) == std::vector<std::int64_t>{3, 5, 5, 7, 7, 7, 9, 9, 11});
        CHECK(comparisons == 10);
        sumset_seq_free(out);
    }
    (void)z;
}

TEST_CASE("traced sort exposes the per-row pointers") {
    const std::int64_t xs[] = {2, 4, 6}, ys[] = {1, 3, 5};
    seq_guard x, y;
    REQUIRE(sumset_seq_create_i64(xs, 3, &x.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_i64(ys, 3, &y.p) == SUMSET_OK);
    sumset_seq* out = nullptr;
    sumset_trace* trace = nullptr;
    REQUIRE(sumset_sort_pairwise_traced(x.p, y.p, SUMSET_BACKEND_LINKED_BLOCKS, &out, &trace) ==
            SUMSET_OK);
    REQUIRE(sumset_trace_rows(trace) == 3);
    CHECK(sumset_trace_comparisons(trace) == 10);
    const std::size_t want_ip[] = {0, 1, 4}, want_cp[] = {2, 5, 8}, want_adv[] = {2, 4, 4};
    for (std::size_t r = 0; r < 3; ++r) {
        std::size_t ip = 99, cp = 99, adv = 99;
        REQUIRE(sumset_trace_row(trace, r, &ip, &cp, &adv) == SUMSET_OK);
        CHECK(ip == want_ip[r]);
        CHECK(cp == want_cp[r]);
        CHECK(adv == want_adv[r]);
    }
    std::size_t ip;
    CHECK(sumset_trace_row(trace, 3, &ip, nullptr, nullptr) == SUMSET_E_RANK_RANGE);
    sumset_trace_free(trace);
    sumset_seq_free(out);
}

TEST_CASE("overflow surfaces as a status") {
    const std::int64_t xs[] = {INT64_MAX}, ys[] = {1};
    seq_guard x, y;
    REQUIRE(sumset_seq_create_i64(xs, 1, &x.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_i64(ys, 1, &y.p) == SUMSET_OK);
    sumset_seq* out = nullptr;
    CHECK(sumset_sort_pairwise(x.p, y.p, SUMSET_BACKEND_LINKED_BLOCKS, &out, nullptr) ==
          SUMSET_E_OVERFLOW);
    CHECK(out == nullptr);
}

TEST_CASE("mixed key modes are rejected") {
    const std::int64_t xs[] = {1, 2};
    const double ys[] = {0.5, 1.5};
    seq_guard x, y;
    REQUIRE(sumset_seq_create_i64(xs, 2, &x.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_f64(ys, 2, &y.p) == SUMSET_OK);
    sumset_seq* out = nullptr;
    CHECK(sumset_sort_pairwise(x.p, y.p, SUMSET_BACKEND_LINKED_BLOCKS, &out, nullptr) ==
          SUMSET_E_BAD_ARG);
}

TEST_CASE("k-fold, baseline and oracle agree through the C surface") {
    const std::int64_t a[] = {0, 1}, b[] = {0, 2}, c[] = {0, 4};
    seq_guard sa, sb, sc;
    REQUIRE(sumset_seq_create_i64(a, 2, &sa.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_i64(b, 2, &sb.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_i64(c, 2, &sc.p) == SUMSET_OK);
    const sumset_seq* lists[] = {sa.p, sb.p, sc.p};

    sumset_seq* z = nullptr;
    std::uint64_t comparisons = 0;
    REQUIRE(sumset_sort_kfold(lists, 3, SUMSET_BACKEND_LINKED_BLOCKS, &z, &comparisons) ==
            SUMSET_OK);
    CHECK(keys_of(z) == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7});

    for (auto kind : {SUMSET_BASELINE_MERGESORT, SUMSET_BASELINE_QUICKSORT}) {
        sumset_seq* zb = nullptr;
        std::uint64_t cb = 0;
        REQUIRE(sumset_baseline_sort(lists, 3, kind, &zb, &cb) == SUMSET_OK);
        CHECK(keys_of(zb) == keys_of(z));
        sumset_seq_free(zb);
    }

    sumset_seq* zo = nullptr;
    REQUIRE(sumset_oracle_sort(lists, 3, &zo) == SUMSET_OK);
    CHECK(keys_of(zo) == keys_of(z));
    sumset_seq_free(zo);
    sumset_seq_free(z);

    sumset_seq* bad = nullptr;
    CHECK(sumset_sort_kfold(lists, 1, SUMSET_BACKEND_LINKED_BLOCKS, &bad, nullptr) ==
          SUMSET_E_ARITY);
}

TEST_CASE("generated inputs round-trip through files") {
    seq_guard x, y;
    REQUIRE(sumset_generate_inputs(16, 42, 0, 100, &x.p, &y.p) == SUMSET_OK);
    CHECK(sumset_seq_len(x.p) == 16);

    auto path = tmp_path("sumset_capi_seq.txt");
    REQUIRE(sumset_seq_save(x.p, path.c_str()) == SUMSET_OK);
    seq_guard back;
    REQUIRE(sumset_seq_load(path.c_str(), SUMSET_KEY_I64, &back.p) == SUMSET_OK);
    CHECK(keys_of(back.p) == keys_of(x.p));

    sumset_seq* missing = nullptr;
    CHECK(sumset_seq_load("/nonexistent/sumset.txt", SUMSET_KEY_I64, &missing) == SUMSET_E_IO);
}

TEST_CASE("matrix report on the worked instance") {
    const std::int64_t xs[] = {2, 4, 6}, ys[] = {1, 3, 5};
    seq_guard x, y;
    REQUIRE(sumset_seq_create_i64(xs, 3, &x.p) == SUMSET_OK);
    REQUIRE(sumset_seq_create_i64(ys, 3, &y.p) == SUMSET_OK);
    sumset_matrix_report report;
    std::int64_t threshold = 5;
    REQUIRE(sumset_matrix_check_i64(x.p, y.p, &threshold, &report) == SUMSET_OK);
    CHECK(report.rows_monotone);
    CHECK(report.cols_monotone);
    CHECK(report.monge_holds);
    CHECK(report.ferrers_prefix_holds);
    CHECK_FALSE(report.has_violation);

    REQUIRE(sumset_matrix_check_i64(x.p, y.p, nullptr, &report) == SUMSET_OK);
    CHECK(report.ferrers_prefix_holds);
}

TEST_CASE("verify runs clean on seeded instances") {
    std::uint64_t failures = 99;
    REQUIRE(sumset_verify(24, 4, 7, &failures) == SUMSET_OK);
    CHECK(failures == 0);
}

TEST_CASE("bench runs and writes both CSV schemas") {
    const std::size_t sizes[] = {10, 20};
    sumset_bench_config cfg{};
    cfg.sizes = sizes;
    cfg.n_sizes = 2;
    cfg.trials = 2;
    cfg.seed = 42;
    cfg.range_lo = 0;
    cfg.range_hi = 100;
    cfg.algo_mask = SUMSET_ALGO_ALL;
    cfg.backend = SUMSET_BACKEND_LINKED_BLOCKS;

    sumset_bench_record* records = nullptr;
    std::size_t count = 0;
    REQUIRE(sumset_bench_run(&cfg, &records, &count) == SUMSET_OK);
    REQUIRE(count == 6);
    CHECK(records[0].n == 10);
    CHECK(records[0].algo == 0);
    CHECK(records[0].mean_comparisons <= 200.0);
    CHECK_FALSE(records[0].bound_exceeded);

    auto cpath = tmp_path("sumset_capi_cmp.csv");
    auto tpath = tmp_path("sumset_capi_tn2.csv");
    REQUIRE(sumset_bench_write_comparisons_csv(records, count, cpath.c_str()) == SUMSET_OK);
    REQUIRE(sumset_bench_write_tn2_csv(records, count, tpath.c_str()) == SUMSET_OK);
    std::ifstream cin(cpath);
    std::string header;
    std::getline(cin, header);
    CHECK(header == "n,proposed,mergesort,quicksort");
    std::ifstream tin(tpath);
    std::getline(tin, header);
    CHECK(header == "n,mean_duration_ms,std_dev_ms");
    sumset_bench_records_free(records);
}

TEST_CASE("status names are stable strings") {
    CHECK(std::string(sumset_status_name(SUMSET_OK)) == "ok");
    CHECK(std::string(sumset_status_name(SUMSET_E_OVERFLOW)) == "overflow");
    CHECK(std::string(sumset_status_name(SUMSET_E_NOT_SORTED)) == "not sorted");
}
