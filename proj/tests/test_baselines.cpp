#include <doctest.h>

#include <cmath>

#include "sumset/baselines.hpp"
#include "sumset/bench.hpp"

using namespace sumset;

using iseq = sorted_sequence<std::int64_t>;

TEST_CASE("enumerate_sums expands row-major") {
    std::vector<iseq> xy{iseq({2, 4, 6}), iseq({1, 3, 5})};
    CHECK(enumerate_sums(std::span<const iseq>(xy)) ==
          std::vector<std::int64_t>{3, 5, 7, 5, 7, 9, 7, 9, 11});

    std::vector<iseq> single{iseq({0})};
    CHECK(enumerate_sums(std::span<const iseq>(single)) == std::vector<std::int64_t>{0});

    std::vector<iseq> bits{iseq({0, 1}), iseq({0, 2}), iseq({0, 4})};
    auto sums = enumerate_sums(std::span<const iseq>(bits));
    std::sort(sums.begin(), sums.end());
    CHECK(sums == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("counted_sort sorts the worked sumset either way") {
    std::vector<std::int64_t> values{3, 5, 7, 5, 7, 9, 7, 9, 11};
    const std::vector<std::int64_t> expect{3, 5, 5, 7, 7, 7, 9, 9, 11};
    for (auto kind : {baseline_kind::mergesort, baseline_kind::quicksort}) {
        compare_meter m;
        CHECK(counted_sort(values, kind, m).keys() == expect);
    }
}

TEST_CASE("counted_sort on empty input") {
    compare_meter m;
    CHECK(counted_sort<std::int64_t>({}, baseline_kind::mergesort, m).empty());
    CHECK(counted_sort<std::int64_t>({}, baseline_kind::quicksort, m).empty());
    CHECK(m.count() == 0);
}

TEST_CASE("mergesort count on sorted 4 elements") {
    compare_meter m;
    counted_sort<std::int64_t>({1, 2, 3, 4}, baseline_kind::mergesort, m);
    CHECK(m.count() <= 8); // 4 * log2(4)
    CHECK(m.count() == 4); // golden: 1 + 1 + 2
}

TEST_CASE("mergesort count sits in the textbook band") {
    const std::size_t m_len = 4096;
    splitmix64 rng(3);
    std::vector<std::int64_t> values(m_len);
    for (auto& v : values)
        v = rng.uniform(0, 1 << 20);
    compare_meter m;
    counted_sort(values, baseline_kind::mergesort, m);
    double mlogm = m_len * std::log2(double(m_len));
    CHECK(m.count() <= std::uint64_t(mlogm));
    CHECK(m.count() >= std::uint64_t(mlogm - 2.0 * m_len));
}

TEST_CASE("quicksort handles heavy duplication") {
    std::vector<std::int64_t> values(5000, 7);
    for (std::size_t i = 0; i < values.size(); i += 3)
        values[i] = 3;
    compare_meter m;
    auto z = counted_sort(values, baseline_kind::quicksort, m);
    CHECK(verify_sorted(z.keys()));
    // many-duplicates input must not go quadratic
    CHECK(m.count() < 40u * values.size());
}

TEST_CASE("both kinds agree on random values") {
    splitmix64 rng(21);
    std::vector<std::int64_t> values(2000);
    for (auto& v : values)
        v = rng.uniform(-500, 500);
    compare_meter m1, m2;
    CHECK(counted_sort(values, baseline_kind::mergesort, m1) ==
          counted_sort(values, baseline_kind::quicksort, m2));
}

TEST_CASE("oracle is deterministic") {
    std::vector<iseq> lists{iseq({1, 1}), iseq({2, 2})};
    CHECK(oracle_sorted_sumset(std::span<const iseq>(lists)).keys() ==
          std::vector<std::int64_t>{3, 3, 3, 3});
    std::vector<iseq> pair{iseq({7}), iseq({9})};
    CHECK(oracle_sorted_sumset(std::span<const iseq>(pair)).keys() ==
          std::vector<std::int64_t>{16});
}
