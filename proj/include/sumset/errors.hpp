#pragma once

#include <stdexcept>
#include <string>

namespace sumset {

enum class errc {
    overflow,
    length_mismatch,
    not_sorted,
    rank_out_of_bounds,
    order_violation,
    empty_input,
    arity_error,
    resource_limit,
    io_error,
    parse_error,
    bad_argument,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, long line = -1)
        : std::runtime_error(what), code_(code), line_(line) {}

    errc code() const noexcept { return code_; }
    // Source line for file-parsing errors, -1 otherwise.
    long line() const noexcept { return line_; }

private:
    errc code_;
    long line_;
};

[[noreturn]] inline void raise(errc code, const std::string& what, long line = -1) {
    throw error(code, what, line);
}

} // namespace sumset
