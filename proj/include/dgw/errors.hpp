#pragma once

#include <stdexcept>
#include <string>

namespace dgw {

/// Thrown when a caller hands an operation arguments outside its domain
/// (out-of-range vertex ids, n = 0, an over-budget placement, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown by the text/JSON readers; the message names the offending element.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dgw
