#ifndef ELM_ERRORS_HPP
#define ELM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elm {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Parameter violates a precondition that is not a domain restriction
/// (e.g. the exponent bound of f3, or a non-finite mean order).
struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iteration failed to reach its stopping criterion within its budget.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Intermediate exponent left the representable range of binary64.
struct OverflowError : std::overflow_error {
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace elm

#endif  // ELM_ERRORS_HPP
