#ifndef HWS_DOUBLE_DOUBLE_HPP
#define HWS_DOUBLE_DOUBLE_HPP

#include <cmath>

namespace hws {

// Unevaluated double-double pair (value = hi + lo, |lo| <= ulp(hi)/2).
// Just enough arithmetic for rerunning the Q recursion when the c_n
// combination cancels; not a general extended-precision type.
struct DD {
  double hi = 0.0;
  double lo = 0.0;

  DD() = default;
  DD(double h) : hi(h), lo(0.0) {}
  DD(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

namespace dd {

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return DD(s, err);
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return DD(s, b - (s - a));
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return DD(p, std::fma(a, b, -p));
}

inline DD add(const DD& a, const DD& b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD sub(const DD& a, const DD& b) { return add(a, DD(-b.hi, -b.lo)); }

inline DD mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD mul(const DD& a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

}  // namespace dd

}  // namespace hws

#endif  // HWS_DOUBLE_DOUBLE_HPP
