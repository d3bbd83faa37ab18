#ifndef HWS_MODEL_HPP
#define HWS_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hws/errors.hpp"
#include "hws/ext_real.hpp"
#include "hws/quadrature.hpp"
#include "hws/signed_log.hpp"

namespace hws::model {

// M/M/n queue with arrival rate lambda = n - B*sqrt(n) and unit service
// rate.  Standing assumptions: B > 0, lambda > 0, n > lambda + 1.
struct QueueParams {
  std::int64_t n = 0;
  double B = 0.0;
  double lambda = 0.0;

  double sqrt_n() const { return std::sqrt(static_cast<double>(n)); }
  double sqrt_lambda() const { return std::sqrt(lambda); }
};

// Support of the absolutely continuous part of the spectral measure.
struct SpectrumInterval {
  double lower = 0.0;  // (sqrt(n) - sqrt(lambda))^2
  double upper = 0.0;  // (sqrt(n) + sqrt(lambda))^2
};

inline QueueParams make_params(std::int64_t n, double B) {
  if (n < 1) throw PreconditionViolated("make_params: n must be >= 1");
  if (!(B > 0)) throw PreconditionViolated("make_params: B must be > 0");
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = static_cast<double>(n) - B * sn;
  if (!(lambda > 0))
    throw PreconditionViolated("make_params: lambda = n - B*sqrt(n) <= 0");
  if (!(static_cast<double>(n) > lambda + 1))
    throw PreconditionViolated("make_params: requires n > lambda + 1");
  return QueueParams{n, B, lambda};
}

inline SpectrumInterval spectrum_edges(const QueueParams& p) {
  const double sn = p.sqrt_n();
  const double sl = p.sqrt_lambda();
  // sqrt(n) - sqrt(lambda) = B*sqrt(n)/(sqrt(n)+sqrt(lambda)): no
  // cancellation at large n
  const double diff = (static_cast<double>(p.n) - p.lambda) / (sn + sl);
  const double sum = sn + sl;
  return SpectrumInterval{diff * diff, sum * sum};
}

// a_n(x) = (lambda + n - x - sqrt((lower-x)(upper-x)))/2 on x <= lower,
// infinite above.  The factored form is exact at the edge where it
// reduces to sqrt(lambda*n).
inline ExtReal a_n(const QueueParams& p, double x) {
  const SpectrumInterval s = spectrum_edges(p);
  if (x > s.lower) return ExtReal::pos_inf();
  if (x == s.lower) return std::sqrt(p.lambda * static_cast<double>(p.n));
  const double root = std::sqrt((s.lower - x) * (s.upper - x));
  return 0.5 * (p.lambda + static_cast<double>(p.n) - x - root);
}

// b_n(x) = sqrt((x-lower)(upper-x)) on [lower, upper], infinite outside.
inline ExtReal b_n(const QueueParams& p, double x) {
  const SpectrumInterval s = spectrum_edges(p);
  if (x < s.lower || x > s.upper) return ExtReal::pos_inf();
  return std::sqrt((x - s.lower) * (s.upper - x));
}

// log of the orthogonality weight g_n(k): lambda^k/k! up to n, geometric
// with ratio lambda/n above.
inline SignedLog g_weight_log(const QueueParams& p, std::int64_t k) {
  if (k < 0) throw PreconditionViolated("g_weight_log: k must be >= 0");
  const double loglam = std::log(p.lambda);
  double lg;
  if (k <= p.n) {
    lg = static_cast<double>(k) * loglam - std::lgamma(static_cast<double>(k) + 1);
  } else {
    lg = static_cast<double>(p.n) * loglam -
         std::lgamma(static_cast<double>(p.n) + 1) +
         static_cast<double>(k - p.n) *
             (loglam - std::log(static_cast<double>(p.n)));
  }
  return SignedLog::from_log(1, lg);
}

// Stationary distribution, normalized over an adaptive truncation whose
// neglected geometric tail is below 1e-14 of the total mass.
class StationaryDist {
 public:
  StationaryDist(const QueueParams& p, std::vector<double> pmf,
                 std::vector<double> cdf)
      : n_(p.n), B_(p.B), pmf_(std::move(pmf)), cdf_(std::move(cdf)) {}

  std::int64_t n() const { return n_; }
  double B() const { return B_; }
  std::int64_t truncation() const {
    return static_cast<std::int64_t>(pmf_.size()) - 1;
  }
  double pmf(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(pmf_.size())) return 0.0;
    return pmf_[static_cast<std::size_t>(k)];
  }
  // P(X <= j)
  double cdf(std::int64_t j) const {
    if (j < 0) return 0.0;
    if (j >= static_cast<std::int64_t>(cdf_.size())) return 1.0;
    return cdf_[static_cast<std::size_t>(j)];
  }

 private:
  std::int64_t n_;
  double B_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

inline StationaryDist stationary(const QueueParams& p) {
  const double loglam = std::log(p.lambda);
  const double logn = std::log(static_cast<double>(p.n));
  const double logr = loglam - logn;  // log(lambda/n) < 0
  // log(r/(1-r)): factor from the geometric tail above n
  const double r = p.lambda / static_cast<double>(p.n);
  const double log_tail_factor = logr - std::log1p(-r);

  // weights by ratio recursion so detailed balance holds to rounding
  std::vector<double> logw;
  logw.reserve(static_cast<std::size_t>(p.n) + 64);
  logw.push_back(0.0);
  double lw = 0.0, lw_peak = 0.0;
  const double cutoff = std::log(1e-14);
  const std::int64_t k_cap =
      p.n + 100 + 2 * static_cast<std::int64_t>(50.0 / (-logr));
  for (std::int64_t k = 1;; ++k) {
    const double service = (k <= p.n) ? std::log(static_cast<double>(k)) : logn;
    lw += loglam - service;
    logw.push_back(lw);
    if (lw > lw_peak) lw_peak = lw;
    // total mass >= peak weight, so tail/total <= exp(lw + log_tail_factor
    // - lw_peak)
    if (k > p.n && lw + log_tail_factor - lw_peak < cutoff) break;
    if (k > k_cap)
      throw NumericalFailure("stationary: truncation failed to converge");
  }

  KahanSum z;
  for (double v : logw) z.add(std::exp(v - lw_peak));
  const double log_z = lw_peak + std::log(z.value());
  if (!std::isfinite(log_z))
    throw NumericalFailure("stationary: normalization underflow");

  std::vector<double> pmf(logw.size());
  std::vector<double> cdf(logw.size());
  KahanSum acc;
  for (std::size_t k = 0; k < logw.size(); ++k) {
    pmf[k] = std::exp(logw[k] - log_z);
    acc.add(pmf[k]);
    cdf[k] = std::min(acc.value(), 1.0);
  }
  return StationaryDist(p, std::move(pmf), std::move(cdf));
}

// Limiting Halfin-Whitt probability of wait:
// (1 + B exp(B^2/2) int_{-inf}^B exp(-z^2/2) dz)^{-1}.
inline double hw_wait_prob(double B) {
  if (!(B > 0)) throw PreconditionViolated("hw_wait_prob: B must be > 0");
  // int_{-inf}^B e^{-z^2/2} dz = sqrt(pi/2) erfc(-B/sqrt(2))
  const double integral =
      std::sqrt(M_PI / 2.0) * std::erfc(-B / std::sqrt(2.0));
  return 1.0 / (1.0 + B * std::exp(0.5 * B * B) * integral);
}

}  // namespace hws::model

#endif  // HWS_MODEL_HPP
