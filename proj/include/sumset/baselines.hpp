#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "sumset/meter.hpp"
#include "sumset/sequence.hpp"

namespace sumset {

enum class baseline_kind { mergesort, quicksort };

// Materializes all product sums in row-major generation order (last list
// varies fastest). Unmetered.
template <key_type K>
std::vector<K> enumerate_sums(std::span<const sorted_sequence<K>> lists) {
    if (lists.empty())
        raise(errc::empty_input, "enumerate_sums requires k >= 1 lists");
    std::uint64_t total = 1;
    for (const auto& l : lists) {
        if (l.empty())
            raise(errc::empty_input, "enumerate_sums requires non-empty lists");
        total *= l.size();
    }
    std::vector<K> out;
    out.reserve(total);
    std::vector<std::size_t> idx(lists.size(), 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        K sum = lists[0][idx[0]];
        for (std::size_t d = 1; d < lists.size(); ++d)
            sum = checked_sum(sum, lists[d][idx[d]]);
        out.push_back(sum);
        for (std::size_t d = lists.size(); d-- > 0;) {
            if (++idx[d] < lists[d].size())
                break;
            idx[d] = 0;
        }
    }
    return out;
}

namespace detail {

template <key_type K>
struct counted_less {
    compare_meter* meter;
    bool operator()(K a, K b) {
        meter->tick();
        return a < b;
    }
};

// Top-down stable mergesort with a temporary buffer.
template <key_type K>
void merge_sort(std::vector<K>& v, std::size_t lo, std::size_t hi, std::vector<K>& tmp,
                counted_less<K>& less) {
    if (hi - lo < 2)
        return;
    std::size_t mid = lo + (hi - lo) / 2;
    merge_sort(v, lo, mid, tmp, less);
    merge_sort(v, mid, hi, tmp, less);
    std::size_t a = lo, b = mid, t = lo;
    while (a < mid && b < hi)
        tmp[t++] = less(v[b], v[a]) ? v[b++] : v[a++];
    while (a < mid)
        tmp[t++] = v[a++];
    while (b < hi)
        tmp[t++] = v[b++];
    std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
              tmp.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
}

template <key_type K>
void insertion_sort(std::vector<K>& v, std::size_t lo, std::size_t hi, counted_less<K>& less) {
    for (std::size_t i = lo + 1; i < hi; ++i) {
        K key = v[i];
        std::size_t j = i;
        while (j > lo && less(key, v[j - 1])) {
            v[j] = v[j - 1];
            --j;
        }
        v[j] = key;
    }
}

// Median-of-three quicksort, Hoare partition, insertion-sort cutoff at
// 16. The cutoff comparisons are metered like any other.
template <key_type K>
void quick_sort(std::vector<K>& v, std::size_t lo, std::size_t hi, counted_less<K>& less) {
    while (hi - lo > 16) {
        std::size_t mid = lo + (hi - lo) / 2;
        K a = v[lo], b = v[mid], c = v[hi - 1];
        if (less(b, a))
            std::swap(a, b);
        if (less(c, b)) {
            std::swap(b, c);
            if (less(b, a))
                std::swap(a, b);
        }
        K pivot = b;

        std::size_t i = lo;
        std::size_t j = hi;
        for (;;) {
            while (less(v[i], pivot))
                ++i;
            do
                --j;
            while (less(pivot, v[j]));
            if (i >= j)
                break;
            std::swap(v[i], v[j]);
            ++i;
        }
        // recurse into the smaller side, iterate on the larger
        if (j + 1 - lo < hi - (j + 1)) {
            quick_sort(v, lo, j + 1, less);
            lo = j + 1;
        } else {
            quick_sort(v, j + 1, hi, less);
            hi = j + 1;
        }
    }
    insertion_sort(v, lo, hi, less);
}

} // namespace detail

// Instrumented baseline sort: one meter tick per comparator call.
template <key_type K>
sorted_sequence<K> counted_sort(std::vector<K> values, baseline_kind kind, compare_meter& meter) {
    detail::counted_less<K> less{&meter};
    if (kind == baseline_kind::mergesort) {
        std::vector<K> tmp(values.size());
        detail::merge_sort(values, 0, values.size(), tmp, less);
    } else {
        if (!values.empty())
            detail::quick_sort(values, 0, values.size(), less);
    }
    return sorted_sequence<K>(std::move(values), typename sorted_sequence<K>::presorted_tag{});
}

// Ground truth for the structured sorters: enumerate, then mergesort
// with a throwaway meter. Shares no code with the insertion or merge
// paths it checks.
template <key_type K>
sorted_sequence<K> oracle_sorted_sumset(std::span<const sorted_sequence<K>> lists) {
    compare_meter scratch;
    return counted_sort(enumerate_sums(lists), baseline_kind::mergesort, scratch);
}

} // namespace sumset
