#ifndef HWS_EXT_REAL_HPP
#define HWS_EXT_REAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hws {

// Real value extended with explicit +/- infinity, the carrier for the
// "infinity otherwise" branches of a_n, b_n, Psi_n, a_inf, Psi_inf.
// Infinities are legal states that propagate; NaN never is.
class ExtReal {
 public:
  ExtReal() : v_(0.0) {}
  ExtReal(double v) : v_(v) {
    if (std::isnan(v_)) throw std::logic_error("ExtReal: NaN is not a value");
  }

  static ExtReal pos_inf() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }
  static ExtReal neg_inf() {
    return ExtReal(-std::numeric_limits<double>::infinity());
  }

  bool finite() const { return std::isfinite(v_); }
  bool infinite() const { return !finite(); }
  // sign of an infinite value; 0 for finite ones
  int inf_sign() const { return finite() ? 0 : (v_ > 0 ? 1 : -1); }

  // the finite value; calling this on an infinity is a caller bug
  double value() const {
    if (!finite()) throw std::logic_error("ExtReal: value() on infinity");
    return v_;
  }
  // raw double, infinities included (for printing / comparisons)
  double raw() const { return v_; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    return a.v_ < b.v_;
  }

 private:
  double v_;
};

}  // namespace hws

#endif  // HWS_EXT_REAL_HPP
