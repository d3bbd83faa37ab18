#ifndef HWS_PCF_HPP
#define HWS_PCF_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "hws/errors.hpp"
#include "hws/quadrature.hpp"

namespace hws::pcf {

struct PcfValue {
  double order = 0.0;
  double argument = 0.0;
  double value = 0.0;
  double est_abs_error = 0.0;
};

namespace detail {

inline std::vector<double> make_breaks(double a, double b,
                                       std::initializer_list<double> hints) {
  std::vector<double> v{a, b};
  for (double h : hints)
    if (h > a && h < b) v.push_back(h);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// D_x(z) for x >= 0 via the oscillatory representation
//   sqrt(2/pi) e^{z^2/4} int_0^inf e^{-t^2/2} cos(pi x/2 - z t) t^x dt.
// The t = u^2 substitution softens the t^x endpoint; panels are pre-split
// so no panel spans more than a quarter period of the cosine.
inline PcfValue pcf_nonneg(double x, double z, const QuadratureConfig& cfg) {
  const double L = -std::log(cfg.tail_cut);
  const double t_max = std::sqrt(2.0 * L) + std::sqrt(x) + 3.0;
  const double U = std::sqrt(t_max);
  const double phase0 = 0.5 * M_PI * x;

  auto f = [&](double u) {
    const double t = u * u;
    return 2.0 * u * std::exp(-0.5 * t * t) * std::cos(phase0 - z * t) *
           std::pow(t, x);
  };

  std::vector<double> breaks{0.0};
  const double az = std::fabs(z);
  if (az * t_max > 0.5 * M_PI) {
    for (int k = 1;; ++k) {
      const double u = std::sqrt(0.5 * M_PI * k / az);
      if (u >= U) break;
      breaks.push_back(u);
    }
  }
  breaks.push_back(U);

  const auto q = integrate_panels(f, breaks, cfg);
  const double pref = std::sqrt(2.0 / M_PI) * std::exp(0.25 * z * z);
  return PcfValue{x, z, pref * q.value, pref * q.error_estimate};
}

// D_x(z) for x < 0 via
//   e^{-z^2/4}/Gamma(-x) int_0^inf e^{-t^2/2 - z t} t^{-(x+1)} dt.
// On [0,1] the substitution t = u^{-1/x} cancels the endpoint
// singularity exactly; the tail is integrated directly.
inline PcfValue pcf_neg(double x, double z, const QuadratureConfig& cfg) {
  const double L = -std::log(cfg.tail_cut);
  const double p = -1.0 / x;

  auto head = [&](double u) {
    const double t = std::pow(u, p);
    return p * std::exp(-0.5 * t * t - z * t);
  };
  const auto q1 = integrate_panels(head, {0.0, 0.5, 1.0}, cfg);

  const double shift = std::max(0.0, -z);
  const double t_max =
      shift + std::sqrt(2.0 * (L + (std::fabs(x) + 1.0) *
                                       std::log(10.0 + std::fabs(z) +
                                                std::fabs(x)))) +
      2.0;
  auto tail = [&](double t) {
    return std::exp(-0.5 * t * t - z * t) * std::pow(t, -(x + 1.0));
  };
  const auto q2 = integrate_panels(
      tail, make_breaks(1.0, t_max, {shift, shift + 2.0}), cfg);

  const double pref = std::exp(-0.25 * z * z - std::lgamma(-x));
  return PcfValue{x, z, pref * (q1.value + q2.value),
                  pref * (q1.error_estimate + q2.error_estimate)};
}

// N(w)/M(w) with N = int_0^inf u^w g(u) du, M = int_0^inf u^{w-1} g(u) du,
// g(u) = e^{-(u-B)^2/2}, any w > 0.  Equals D_{1-w}(-B)/D_{-w}(-B) + B.
// The u = e^{-y} leg isolates the u^{w-1} singularity into the exact term
// g(0)/w, which keeps the evaluation stable arbitrarily close to w = 0
// (needed for the spectral-gap root at large B, where w ~ e^{-B^2/2}).
inline double gauss_power_ratio(double w, double B,
                                const QuadratureConfig& cfg) {
  if (!(w > 0) || !(B > 0))
    throw PreconditionViolated("gauss_power_ratio: w > 0 and B > 0 required");
  const double L = -std::log(cfg.tail_cut);
  const double u_max = B + std::sqrt(2.0 * L) + 2.0;
  const double g0 = std::exp(-0.5 * B * B);
  const double Y = L + std::log1p(B) + 10.0;
  auto g = [&](double u) {
    const double d = u - B;
    return std::exp(-0.5 * d * d);
  };

  auto m_log_leg = [&](double y) {
    return std::exp(-w * y) * (g(std::exp(-y)) - g0);
  };
  auto m_tail = [&](double u) { return std::pow(u, w - 1.0) * g(u); };
  const double M =
      g0 / w +
      integrate_panels(m_log_leg, make_breaks(0.0, Y, {1.0, 4.0, 12.0}), cfg)
          .value +
      integrate_panels(m_tail,
                       make_breaks(1.0, u_max, {B - 2.0, B, B + 2.0}), cfg)
          .value;

  auto n_log_leg = [&](double y) {
    return std::exp(-(w + 1.0) * y) * g(std::exp(-y));
  };
  auto n_tail = [&](double u) { return std::pow(u, w) * g(u); };
  const double N =
      integrate_panels(n_log_leg, make_breaks(0.0, Y, {1.0, 4.0, 12.0}), cfg)
          .value +
      integrate_panels(n_tail,
                       make_breaks(1.0, u_max, {B - 2.0, B, B + 2.0}), cfg)
          .value;

  return N / M;
}

}  // namespace detail

// D_x(z) for real order and argument.  Integer orders -1, 0, 1 use the
// closed forms; everything else goes through adaptive quadrature on the
// integral representations.
inline PcfValue pcf(double x, double z,
                    const QuadratureConfig& cfg = QuadratureConfig{}) {
  cfg.validate();
  if (!std::isfinite(x) || !std::isfinite(z))
    throw PreconditionViolated("pcf: order and argument must be finite");
  const double e = std::exp(-0.25 * z * z);
  if (x == 0.0) return PcfValue{x, z, e, 4e-16 * e};
  if (x == 1.0) return PcfValue{x, z, z * e, 4e-16 * std::fabs(z * e)};
  if (x == -1.0) {
    const double v = std::sqrt(M_PI / 2.0) * std::exp(0.25 * z * z) *
                     std::erfc(z / std::sqrt(2.0));
    return PcfValue{x, z, v, 4e-15 * v};
  }
  return (x >= 0.0) ? detail::pcf_nonneg(x, z, cfg) : detail::pcf_neg(x, z, cfg);
}

// D_x(-B)/D_{x-1}(-B) for x < 1, B > 0, through the Gaussian-integral
// identity (ratio of moment integrals minus B).  This path has no
// oscillatory integrand and is the canonical route for the limit module.
inline double pcf_ratio(double x, double B,
                        const QuadratureConfig& cfg = QuadratureConfig{}) {
  cfg.validate();
  if (!(x < 1.0))
    throw PreconditionViolated("pcf_ratio: requires x < 1");
  if (!(B > 0))
    throw PreconditionViolated("pcf_ratio: requires B > 0");
  return detail::gauss_power_ratio(1.0 - x, B, cfg) - B;
}

// |d/dz D_x(z) + z/2 D_x(z) - x D_{x-1}(z)| with a centered difference;
// diagnostic used by the test suites.
inline double pcf_derivative_check(double x, double z,
                                   const QuadratureConfig& cfg =
                                       QuadratureConfig{}) {
  const double h = 1e-5;
  const double d =
      (pcf(x, z + h, cfg).value - pcf(x, z - h, cfg).value) / (2.0 * h);
  return std::fabs(d + 0.5 * z * pcf(x, z, cfg).value -
                   x * pcf(x - 1.0, z, cfg).value);
}

}  // namespace hws::pcf

#endif  // HWS_PCF_HPP
