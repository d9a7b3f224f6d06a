#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equindex {

/// Base class for all errors thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in a polynomial expression or a problem document.
/// `position` is a 0-based byte offset into the offending text.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Structural or equivariance violation in input data.
class validation_error : public error {
public:
    using error::error;
};

/// The collection has a non-isolated special point: the assembled ideal
/// has infinite colength.
class non_isolated_error : public error {
public:
    using error::error;
};

/// Two independent generic samples disagreed, or resampling was exhausted.
class genericity_error : public error {
public:
    using error::error;
};

/// The configured reduction-step budget was exceeded.
class budget_error : public error {
public:
    using error::error;
};

/// File could not be read or written.
class io_error : public error {
public:
    using error::error;
};

}  // namespace equindex
