#ifndef HWS_ERRORS_HPP
#define HWS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hws {

// Inputs are outside an operation's stated domain (e.g. an (n,B) pair with
// lambda <= 0, or a bound requested for B >= B*).
class PreconditionViolated : public std::invalid_argument {
 public:
  explicit PreconditionViolated(const std::string& msg)
      : std::invalid_argument(msg) {}
};

// An algorithm could not reach its accuracy target (quadrature out of
// panels, lost bracket, eigen-solve over budget, ...).
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace hws

#endif  // HWS_ERRORS_HPP
