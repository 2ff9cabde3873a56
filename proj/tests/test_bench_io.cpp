#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sumset/report.hpp"

using namespace sumset;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string tmp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("generate_inputs is deterministic and sorted") {
    auto [x1, y1] = generate_inputs(100, 42);
    auto [x2, y2] = generate_inputs(100, 42);
    CHECK(x1 == x2);
    CHECK(y1 == y2);
    CHECK(verify_sorted(x1.keys()));
    CHECK(verify_sorted(y1.keys()));
    for (std::size_t t = 0; t < x1.size(); ++t) {
        CHECK(x1[t] >= 0);
        CHECK(x1[t] <= 10000);
    }
    auto [x3, y3] = generate_inputs(100, 43);
    CHECK(x1.keys() != x3.keys());
}

TEST_CASE("generate_inputs golden draw for the pinned generator") {
    auto [x, y] = generate_inputs(3, 42);
    // frozen from the first run of splitmix64(42), X drawn before Y
    CHECK(x.keys() == std::vector<std::int64_t>{992, 6297, 7124});
    CHECK(y.keys() == std::vector<std::int64_t>{1978, 5453, 9641});
}

TEST_CASE("generate_inputs singleton stays in range") {
    auto [x, y] = generate_inputs(1, 7);
    CHECK(x.size() == 1);
    CHECK(x[0] >= 0);
    CHECK(x[0] <= 10000);
}

TEST_CASE("run_suite produces one record per cell with sane counts") {
    bench_config cfg;
    cfg.sizes = {100};
    cfg.trials = 3;
    cfg.seed = 42;
    auto records = run_suite(cfg);
    REQUIRE(records.size() == 3);
    for (const auto& r : records) {
        CHECK(r.n == 100);
        CHECK(r.std_time_ms >= 0.0);
        CHECK_FALSE(r.bound_exceeded);
    }
    CHECK(records[0].algo == bench_algo::proposed);
    CHECK(records[0].mean_comparisons <= 20000.0); // 2n^2
    CHECK(records[1].mean_comparisons > records[0].mean_comparisons);
    CHECK(records[2].mean_comparisons > records[0].mean_comparisons);
}

TEST_CASE("run_suite n=1 proposed needs at most 2 comparisons") {
    bench_config cfg;
    cfg.sizes = {1};
    cfg.trials = 1;
    cfg.algorithms = {bench_algo::proposed};
    auto records = run_suite(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].mean_comparisons <= 2.0);
}

TEST_CASE("proposed comparisons scale by about 4x from n=100 to n=200") {
    bench_config cfg;
    cfg.sizes = {100, 200};
    cfg.trials = 3;
    cfg.algorithms = {bench_algo::proposed};
    auto records = run_suite(cfg);
    REQUIRE(records.size() == 2);
    double ratio = records[1].mean_comparisons / records[0].mean_comparisons;
    CHECK(ratio > 3.6);
    CHECK(ratio < 4.4);
}

TEST_CASE("comparison counts are bit-identical across reruns") {
    bench_config cfg;
    cfg.sizes = {50, 80};
    cfg.trials = 2;
    auto a = run_suite(cfg);
    auto b = run_suite(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].mean_comparisons == b[i].mean_comparisons);
}

TEST_CASE("tn2_stability records proposed only, trials=1 gives zero std") {
    bench_config cfg;
    cfg.sizes = {20, 40};
    cfg.trials = 1;
    auto records = tn2_stability(cfg);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.algo == bench_algo::proposed);
        CHECK(r.std_time_ms == 0.0);
        CHECK(r.std_t_over_n2_ms == 0.0);
    }
    CHECK(tn2_plateau_ratio(records) >= 1.0);
}

TEST_CASE("run_suite enforces the memory cap") {
    bench_config cfg;
    cfg.sizes = {1000};
    cfg.max_cells = 1000;
    CHECK_THROWS_AS(run_suite(cfg), error);
}

TEST_CASE("emit_csv writes exact bytes") {
    csv_table t;
    t.header = {"n", "proposed", "mergesort", "quicksort"};
    t.rows = {{"100", "15000", "190000", "250000"}};
    auto path = tmp_path("sumset_csv_bytes.csv");
    emit_csv(t, path);
    CHECK(read_file(path) == "n,proposed,mergesort,quicksort\n100,15000,190000,250000\n");
}

TEST_CASE("emit_csv header-only and ragged rows") {
    csv_table t;
    t.header = {"a", "b"};
    auto path = tmp_path("sumset_csv_header.csv");
    emit_csv(t, path);
    CHECK(read_file(path) == "a,b\n");

    t.rows = {{"1"}};
    CHECK_THROWS_AS(emit_csv(t, path), error);
}

TEST_CASE("csv round-trips numeric tables") {
    csv_table t;
    t.header = {"n", "mean_duration_ms", "std_dev_ms"};
    t.rows = {{"100", "4.564e-05", "1.433e-05"}, {"200", "3.334e-05", "4.582e-06"}};
    auto path = tmp_path("sumset_csv_roundtrip.csv");
    emit_csv(t, path);
    auto back = parse_csv(path);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
}

TEST_CASE("sequence files parse with comments and report bad lines") {
    auto path = tmp_path("sumset_seq_ok.txt");
    std::ofstream(path) << "# input X\n2\n4\n\n6\n";
    CHECK(parse_sequence_file<std::int64_t>(path).keys() ==
          std::vector<std::int64_t>{2, 4, 6});

    auto empty = tmp_path("sumset_seq_empty.txt");
    std::ofstream(empty) << "";
    CHECK_THROWS_AS(parse_sequence_file<std::int64_t>(empty), error);

    auto unsorted = tmp_path("sumset_seq_unsorted.txt");
    std::ofstream(unsorted) << "5\n3\n";
    try {
        parse_sequence_file<std::int64_t>(unsorted);
        FAIL("expected not-sorted error");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_sorted);
        CHECK(e.line() == 2);
    }

    auto garbled = tmp_path("sumset_seq_garbled.txt");
    std::ofstream(garbled) << "1\ntwo\n";
    try {
        parse_sequence_file<std::int64_t>(garbled);
        FAIL("expected parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(e.line() == 2);
    }
}

TEST_CASE("sequence files round-trip in both key modes") {
    auto path = tmp_path("sumset_seq_rt.txt");
    sorted_sequence<std::int64_t> si({-3, 0, 12});
    write_sequence_file(si, path);
    CHECK(parse_sequence_file<std::int64_t>(path) == si);

    sorted_sequence<double> sd({-0.5, 0.1, 2.25});
    write_sequence_file(sd, path);
    CHECK(parse_sequence_file<double>(path) == sd);
}

TEST_CASE("comparisons table layout") {
    std::vector<bench_record> records;
    bench_record p;
    p.n = 100;
    p.algo = bench_algo::proposed;
    p.mean_comparisons = 15000;
    bench_record m = p;
    m.algo = bench_algo::mergesort;
    m.mean_comparisons = 190000.5;
    records = {p, m};
    auto t = comparisons_table(records);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0] == std::vector<std::string>{"100", "15000", "190000.500", ""});
}
