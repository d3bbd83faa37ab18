#ifndef HWS_SIGNED_LOG_HPP
#define HWS_SIGNED_LOG_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace hws {

// sign + log|value| representation.  The polynomial recurrences (f_{n,k},
// Q_{n,k}) and the Karlin-McGregor prefactor overflow doubles long before
// n reaches interesting sizes; all cross-module combinations of those
// quantities happen in this form.
struct SignedLog {
  int sign = 0;         // -1, 0, +1
  double logmag = -std::numeric_limits<double>::infinity();  // log|value|

  static SignedLog zero() { return SignedLog{}; }

  static SignedLog from_value(double v) {
    if (v == 0.0) return zero();
    return SignedLog{v > 0 ? 1 : -1, std::log(std::fabs(v))};
  }

  static SignedLog from_log(int sign, double logmag) {
    if (sign == 0) return zero();
    return SignedLog{sign, logmag};
  }

  bool is_zero() const { return sign == 0; }

  // may overflow to +-inf or underflow to 0; that is the caller's problem
  double to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(logmag);
  }

  SignedLog operator-() const { return SignedLog{-sign, logmag}; }

  friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return SignedLog{a.sign * b.sign, a.logmag + b.logmag};
  }

  friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
    // division by zero is a logic error upstream; keep it loud
    return SignedLog{a.sign * b.sign, a.logmag - b.logmag};
  }

  // log-sum-exp with sign handling; exact cancellation yields zero()
  friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    double hi = std::max(a.logmag, b.logmag);
    double lo = std::min(a.logmag, b.logmag);
    if (a.sign == b.sign)
      return SignedLog{a.sign, hi + std::log1p(std::exp(lo - hi))};
    if (a.logmag == b.logmag) return zero();
    int s = (a.logmag > b.logmag) ? a.sign : b.sign;
    return SignedLog{s, hi + std::log1p(-std::exp(lo - hi))};
  }

  friend SignedLog operator-(const SignedLog& a, const SignedLog& b) {
    return a + (-b);
  }
};

}  // namespace hws

#endif  // HWS_SIGNED_LOG_HPP
