#ifndef MAGPOW_ERRORS_HPP
#define MAGPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magpow {

// Malformed matrix text, unknown catalog names and similar input problems.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called on a square that violates its precondition
// (order mismatch, non-DA input where DA is required, ...).
class precondition_error : public std::domain_error {
public:
    explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

// Numeric routine failed to converge.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace magpow

#endif
