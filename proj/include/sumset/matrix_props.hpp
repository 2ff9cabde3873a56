#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "sumset/rng.hpp"
#include "sumset/sequence.hpp"

namespace sumset {

// Witness for a failed structural check: the quadruple (i, j, i', j')
// that violates it. Monotonicity and Ferrers violations use i' = j' = 0.
struct violation_witness {
    std::size_t i = 0, j = 0, i2 = 0, j2 = 0;
};

// Structural checks on the implicit matrix M[i][j] = X[i] + Y[j]:
// row/column monotonicity, the quadrangle (Monge) inequality, and the
// threshold-prefix (Ferrers) shape.
struct matrix_property_report {
    bool rows_monotone = true;
    bool cols_monotone = true;
    bool monge_holds = true;
    bool ferrers_prefix_holds = true;
    std::optional<violation_witness> first_violation;

    bool all_hold() const {
        return rows_monotone && cols_monotone && monge_holds && ferrers_prefix_holds;
    }
};

namespace detail {

// The Monge inequality is an identity for sumset matrices, so it must be
// accepted with equality. Floats get relative slack for rounding.
inline bool monge_leq(std::int64_t lhs, std::int64_t rhs) { return lhs <= rhs; }
inline bool monge_leq(double lhs, double rhs) {
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    return lhs <= rhs + 1e-12 * scale;
}

} // namespace detail

// Exhaustive quadruple check up to n = 64, sampled (>= 10 n^2 draws)
// above. The optional threshold drives the Ferrers prefix check.
template <key_type K>
matrix_property_report matrix_property_check(const sorted_sequence<K>& x,
                                             const sorted_sequence<K>& y,
                                             std::optional<K> threshold = std::nullopt,
                                             std::uint64_t sample_seed = 1) {
    if (x.size() != y.size())
        raise(errc::length_mismatch, "matrix check requires |X| == |Y|");
    const std::size_t n = x.size();
    if (n == 0)
        raise(errc::empty_input, "matrix check requires n >= 1");

    matrix_property_report rep;
    auto record = [&rep](bool& flag, std::size_t i, std::size_t j, std::size_t i2, std::size_t j2) {
        flag = false;
        if (!rep.first_violation)
            rep.first_violation = violation_witness{i, j, i2, j2};
    };
    auto m = [&](std::size_t i, std::size_t j) { return checked_sum(x[i], y[j]); };

    for (std::size_t i = 0; i < n && rep.rows_monotone; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (m(i, j + 1) < m(i, j)) {
                record(rep.rows_monotone, i, j, 0, 0);
                break;
            }
    for (std::size_t j = 0; j < n && rep.cols_monotone; ++j)
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (m(i + 1, j) < m(i, j)) {
                record(rep.cols_monotone, i, j, 0, 0);
                break;
            }

    auto monge_ok = [&](std::size_t i, std::size_t i2, std::size_t j, std::size_t j2) {
        return detail::monge_leq(checked_sum(m(i, j), m(i2, j2)),
                                 checked_sum(m(i, j2), m(i2, j)));
    };
    if (n <= 64) {
        for (std::size_t i = 0; i + 1 < n && rep.monge_holds; ++i)
            for (std::size_t i2 = i + 1; i2 < n && rep.monge_holds; ++i2)
                for (std::size_t j = 0; j + 1 < n && rep.monge_holds; ++j)
                    for (std::size_t j2 = j + 1; j2 < n; ++j2)
                        if (!monge_ok(i, i2, j, j2)) {
                            record(rep.monge_holds, i, j, i2, j2);
                            break;
                        }
    } else {
        splitmix64 rng(sample_seed);
        const std::uint64_t draws = 10ull * n * n;
        for (std::uint64_t d = 0; d < draws && rep.monge_holds; ++d) {
            std::size_t i = rng.next() % n, i2 = rng.next() % n;
            std::size_t j = rng.next() % n, j2 = rng.next() % n;
            if (i == i2 || j == j2)
                continue;
            if (i > i2) std::swap(i, i2);
            if (j > j2) std::swap(j, j2);
            if (!monge_ok(i, i2, j, j2))
                record(rep.monge_holds, i, j, i2, j2);
        }
    }

    if (threshold) {
        for (std::size_t i = 0; i < n && rep.ferrers_prefix_holds; ++i) {
            bool seen_above = false;
            for (std::size_t j = 0; j < n; ++j) {
                bool below = !(*threshold < m(i, j));
                if (below && seen_above) {
                    record(rep.ferrers_prefix_holds, i, j, 0, 0);
                    break;
                }
                if (!below)
                    seen_above = true;
            }
        }
    }
    return rep;
}

} // namespace sumset
