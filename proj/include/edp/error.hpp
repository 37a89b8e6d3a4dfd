#pragma once

#include <stdexcept>

namespace edp {

/// A documented precondition was violated (threshold, table size, non-prime key).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation outside the domain of a table-backed coloring.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed sign file or coloring description.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace edp
