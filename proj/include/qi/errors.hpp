#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qi {

// Malformed or out-of-contract input (bad JSON, mismatched vertices, d = 0 where
// a nonzero vector is required, ...).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured budget. Carries the count that
// would have been required so callers can report it.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

   private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// A mathematical invariant that must hold failed to hold. Always a bug.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

// Arithmetic domain errors: division by zero, evaluation at a pole,
// non-polynomial input to to_polynomial.
class ArithmeticError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace qi
