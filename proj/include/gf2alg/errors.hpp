#ifndef GF2ALG_ERRORS_HPP
#define GF2ALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf2alg {

// Invalid arguments or mismatched algebraic contexts.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent arithmetic left the representable range.
struct OverflowError : std::range_error {
  using std::range_error::range_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A computation was refused because it exceeds the configured budget.
// Carries the best lower bound that was still verified.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, long verified_lower_bound)
      : std::runtime_error(what), verified_lower_bound(verified_lower_bound) {}
  long verified_lower_bound;
};

}  // namespace gf2alg

#endif
