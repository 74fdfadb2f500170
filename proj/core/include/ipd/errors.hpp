#pragma once

#include <stdexcept>
#include <string>

namespace ipd {

/// Malformed alist input. `line` is the 1-based line number of the offending text.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

/// Decoder/solver configuration that violates a precondition (e.g. w_r < 3).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cholesky pivot failure: the matrix is not positive definite.
struct NotPositiveDefinite : std::runtime_error {
    NotPositiveDefinite(int pivot_index)
        : std::runtime_error("non-positive pivot at index " + std::to_string(pivot_index)),
          pivot(pivot_index) {}
    int pivot;
};

}  // namespace ipd
