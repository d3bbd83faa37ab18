#ifndef HWS_ROOTS_HPP
#define HWS_ROOTS_HPP

#include <cmath>
#include <functional>
#include <string>

#include "hws/errors.hpp"

namespace hws {

struct RootResult {
  double x = 0.0;
  int iterations = 0;
};

// Plain bisection for a function with known endpoint signs (monotone
// crossings only in this library).  flo/fhi are the already-evaluated
// endpoint values; the interval is shrunk to xtol.
template <class F>
RootResult bisect(F&& f, double lo, double hi, double flo, double fhi,
                  double xtol, int max_iter = 200) {
  if (!(lo < hi)) throw PreconditionViolated("bisect: lo < hi required");
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo > 0) == (fhi > 0))
    throw NumericalFailure("bisect: endpoints do not bracket a sign change");
  int it = 0;
  while (hi - lo > xtol && it < max_iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // rounding limit
    double fm = f(mid);
    ++it;
    if (fm == 0.0) return {mid, it};
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return {0.5 * (lo + hi), it};
}

// Bracketed secant/bisection hybrid (Brent without the inverse-quadratic
// step; the functions here are smooth and monotone where bracketed, so
// secant alone converges superlinearly and bisection guards the bracket).
template <class F>
RootResult brent(F&& f, double lo, double hi, double flo, double fhi,
                 double xtol, int max_iter = 200) {
  if (!(lo < hi)) throw PreconditionViolated("brent: lo < hi required");
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo > 0) == (fhi > 0))
    throw NumericalFailure("brent: endpoints do not bracket a sign change");
  int it = 0;
  while (hi - lo > xtol && it < max_iter) {
    double x;
    if (fhi != flo) {
      x = (lo * fhi - hi * flo) / (fhi - flo);  // secant through the bracket
      const double margin = 0.01 * (hi - lo);
      if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (lo + hi);
    } else {
      x = 0.5 * (lo + hi);
    }
    if (x <= lo || x >= hi) break;
    double fx = f(x);
    ++it;
    if (fx == 0.0) return {x, it};
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  return {0.5 * (lo + hi), it};
}

}  // namespace hws

#endif  // HWS_ROOTS_HPP
