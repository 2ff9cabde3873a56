#pragma once

#include <cstdint>

namespace sumset {

// Counts key-to-key order tests. Index arithmetic and end-of-container
// checks are free under the comparison-model convention.
class compare_meter {
public:
    void tick() noexcept { ++count_; }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t count_ = 0;
};

} // namespace sumset
