#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>

#include "sumset/errors.hpp"

namespace sumset {

// Two key modes: exact 64-bit signed integers (benchmark default) and
// finite doubles. A run never mixes modes.
template <class K>
concept key_type = std::is_same_v<K, std::int64_t> || std::is_same_v<K, double>;

inline void require_finite(double v) {
    if (!std::isfinite(v))
        raise(errc::bad_argument, "non-finite key rejected");
}

inline std::int64_t checked_sum(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        raise(errc::overflow, "integer key sum overflows");
    return r;
}

inline double checked_sum(double a, double b) {
    double r = a + b;
    if (!std::isfinite(r))
        raise(errc::overflow, "float key sum is not finite");
    return r;
}

} // namespace sumset
