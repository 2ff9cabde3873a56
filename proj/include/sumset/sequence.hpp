#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sumset/key.hpp"

namespace sumset {

// Checks non-decreasing order with unmetered comparisons (input
// validation is outside the comparison budget).
template <key_type K>
bool verify_sorted(const std::vector<K>& keys) {
    for (std::size_t t = 1; t < keys.size(); ++t)
        if (keys[t] < keys[t - 1])
            return false;
    return true;
}

// A non-decreasing list of keys. X, Y, X_i and every sorted output.
template <key_type K>
class sorted_sequence {
public:
    sorted_sequence() = default;

    // Takes ownership; rejects unsorted or (float mode) non-finite input.
    explicit sorted_sequence(std::vector<K> keys) : keys_(std::move(keys)) {
        if constexpr (std::is_same_v<K, double>) {
            for (double v : keys_)
                require_finite(v);
        }
        if (!verify_sorted(keys_))
            raise(errc::not_sorted, "sequence is not non-decreasing");
    }

    // For outputs already known sorted; validation elided.
    struct presorted_tag {};
    sorted_sequence(std::vector<K> keys, presorted_tag) : keys_(std::move(keys)) {}

    std::size_t size() const noexcept { return keys_.size(); }
    bool empty() const noexcept { return keys_.empty(); }
    K operator[](std::size_t t) const { return keys_[t]; }
    const std::vector<K>& keys() const noexcept { return keys_; }

    bool operator==(const sorted_sequence&) const = default;

private:
    std::vector<K> keys_;
};

} // namespace sumset
