#ifndef HWS_QUADRATURE_HPP
#define HWS_QUADRATURE_HPP

#include <cmath>
#include <cstdlib>
#include <queue>
#include <string>
#include <vector>

#include "hws/errors.hpp"

namespace hws {

// Tolerances and limits shared by every integral in the library.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_panels = 4000;
  // integrand/peak ratio below which tails are truncated
  double tail_cut = 1e-18;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0) || !(tail_cut > 0))
      throw PreconditionViolated("QuadratureConfig: tolerances must be > 0");
    if (max_panels < 8)
      throw PreconditionViolated("QuadratureConfig: max_panels must be >= 8");
  }

  // HWS_QUAD_ABS_TOL / HWS_QUAD_REL_TOL override the defaults
  static QuadratureConfig from_env() {
    QuadratureConfig cfg;
    if (const char* s = std::getenv("HWS_QUAD_ABS_TOL")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0) cfg.abs_tol = v;
    }
    if (const char* s = std::getenv("HWS_QUAD_REL_TOL")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0) cfg.rel_tol = v;
    }
    return cfg;
  }
};

// Compensated accumulator for long sums (stationary cdf, panel totals).
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

namespace detail {

// Kronrod 15 nodes (positive half) with the embedded Gauss 7 rule.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kGk15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel eval_panel(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = f(mid);
    } else {
      const double dx = half * kGk15Nodes[i];
      fsum = f(mid - dx) + f(mid + dx);
    }
    kron += kGk15Weights[i] * fsum;
    if (i % 2 == 1) gauss += kG7Weights[i / 2] * fsum;
  }
  kron *= half;
  gauss *= half;
  double err = std::fabs(kron - gauss);
  if (!std::isfinite(kron)) err = std::numeric_limits<double>::infinity();
  return Panel{a, b, kron, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod over the given initial panels.  The
// worst panel is bisected until the summed error estimate meets
// max(abs_tol, rel_tol * |integral|) or max_panels is exhausted.
template <class F>
QuadResult integrate_panels(F&& f, const std::vector<double>& breaks,
                            const QuadratureConfig& cfg) {
  cfg.validate();
  std::priority_queue<detail::Panel> heap;
  double total = 0.0, total_err = 0.0;
  int panels = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1]))
      throw PreconditionViolated("integrate: breakpoints must increase");
    auto p = detail::eval_panel(f, breaks[i], breaks[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
    ++panels;
  }
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (panels >= cfg.max_panels)
      throw NumericalFailure(
          "integrate: tolerance not met within max_panels (err=" +
          std::to_string(total_err) + ")");
    detail::Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw NumericalFailure("integrate: panel width at rounding limit");
    for (auto p : {detail::eval_panel(f, worst.a, mid),
                   detail::eval_panel(f, mid, worst.b)}) {
      total += p.value;
      total_err += p.error;
      heap.push(p);
    }
    ++panels;
  }
  return QuadResult{total, total_err, panels};
}

template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg) {
  if (a == b) return QuadResult{0.0, 0.0, 0};
  return integrate_panels(f, std::vector<double>{a, b}, cfg);
}

}  // namespace hws

#endif  // HWS_QUADRATURE_HPP
