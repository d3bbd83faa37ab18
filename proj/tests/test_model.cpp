#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hws/model.hpp"

using Catch::Approx;
using namespace hws;
using namespace hws::model;

TEST_CASE("make_params basic arithmetic and validity") {
  auto p = make_params(100, 1.0);
  REQUIRE(p.lambda == Approx(90.0).margin(1e-12));
  REQUIRE(p.n == 100);

  // high-precision reference: 10000 - 1.85772*100
  auto q = make_params(10000, 1.85772);
  REQUIRE(q.lambda == Approx(9814.228).margin(1e-9));

  // lambda = 0 at the boundary
  REQUIRE_THROWS_AS(make_params(4, 2.0), PreconditionViolated);
  // lambda > 0 but n <= lambda + 1 (B*sqrt(n) <= 1)
  REQUIRE_THROWS_AS(make_params(100, 0.05), PreconditionViolated);
  REQUIRE_THROWS_AS(make_params(0, 1.0), PreconditionViolated);
  REQUIRE_THROWS_AS(make_params(100, -1.0), PreconditionViolated);
  REQUIRE_THROWS_AS(make_params(100, 0.0), PreconditionViolated);
}

TEST_CASE("spectrum_edges against 40-digit reference") {
  auto p = make_params(100, 1.0);
  auto s = spectrum_edges(p);
  REQUIRE(s.lower == Approx(0.26334038989724008007).epsilon(1e-14));
  REQUIRE(s.upper == Approx(379.73665961010275992).epsilon(1e-14));

  SECTION("bracket for sqrt(n)-sqrt(lambda)") {
    // B/2 <= sqrt(n)-sqrt(lambda) <= B/2 + B^2/(4 sqrt(n) - 2B)
    REQUIRE(s.lower >= 0.25);
    REQUIRE(s.lower <= 0.27700831024930747922 * (1 + 1e-14));
  }

  SECTION("product identity lower*upper = B^2 n") {
    REQUIRE(s.lower * s.upper == Approx(100.0).epsilon(1e-13));
  }

  SECTION("bracket holds across a parameter sweep") {
    for (std::int64_t n : {4, 25, 100, 2500, 1000000}) {
      for (double B : {0.5, 1.0, 1.9}) {
        if (B * std::sqrt(double(n)) <= 1.0) continue;
        auto pp = make_params(n, B);
        auto ss = spectrum_edges(pp);
        double d = std::sqrt(ss.lower);
        REQUIRE(d >= B / 2 - 1e-13);
        REQUIRE(d <= B / 2 + B * B / (4 * std::sqrt(double(n)) - 2 * B) + 1e-13);
      }
    }
  }
}

TEST_CASE("a_n closed-form values and branches") {
  auto p = make_params(100, 1.0);
  auto s = spectrum_edges(p);

  REQUIRE(a_n(p, 0.0).value() == Approx(90.0).epsilon(1e-14));
  REQUIRE(a_n(p, s.lower).value() ==
          Approx(94.86832980505137996).epsilon(1e-14));
  REQUIRE(a_n(p, 1.0).infinite());
  REQUIRE(a_n(p, 1.0).inf_sign() == 1);

  SECTION("strictly increasing and continuous up to the edge") {
    double prev = -1e300;
    for (int i = 0; i <= 32; ++i) {
      double x = s.lower * i / 32.0;
      double v = a_n(p, x).value();
      REQUIRE(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("b_n support and values") {
  auto p = make_params(100, 1.0);
  auto s = spectrum_edges(p);

  // midpoint of the support is lambda + n; value there is 2 sqrt(lambda n)
  REQUIRE(b_n(p, 190.0).value() ==
          Approx(189.73665961010275992).epsilon(1e-14));
  REQUIRE(b_n(p, s.lower).value() == Approx(0.0).margin(1e-12));
  REQUIRE(b_n(p, s.upper).value() == Approx(0.0).margin(1e-12));
  REQUIRE(b_n(p, 0.1).infinite());
  REQUIRE(b_n(p, 400.0).infinite());

  SECTION("strictly positive inside") {
    for (int i = 1; i < 16; ++i) {
      double x = s.lower + (s.upper - s.lower) * i / 16.0;
      REQUIRE(b_n(p, x).value() > 0.0);
    }
  }
}

TEST_CASE("g_weight_log values and ratio recurrence") {
  auto p = make_params(100, 1.0);

  REQUIRE(g_weight_log(p, 0).sign == 1);
  REQUIRE(g_weight_log(p, 0).logmag == Approx(0.0).margin(1e-14));
  REQUIRE(g_weight_log(p, 1).logmag == Approx(std::log(90.0)).epsilon(1e-14));
  // log(90^100/100!) + 2 log(0.9), 40-digit reference
  REQUIRE(g_weight_log(p, 102).logmag ==
          Approx(86.030870446147363934).epsilon(1e-12));

  SECTION("ratio g(k+1)/g(k) = lambda/min(k+1,n)") {
    for (std::int64_t n : {30LL, 100LL}) {
      auto q = make_params(n, 1.0);
      for (std::int64_t k = 0; k < 2 * n; ++k) {
        double got = g_weight_log(q, k + 1).logmag - g_weight_log(q, k).logmag;
        double want = std::log(q.lambda) -
                      std::log(double(std::min(k + 1, n)));
        REQUIRE(got == Approx(want).margin(1e-13));
      }
    }
  }
}

TEST_CASE("stationary distribution") {
  SECTION("M/M/1 with rho = 1/2 is geometric") {
    // n = 1, lambda = 1/2 needs B = 1/2 / sqrt(1) = 0.5
    auto p = make_params(1, 0.5);
    REQUIRE(p.lambda == Approx(0.5));
    auto d = stationary(p);
    for (int k = 0; k <= 20; ++k)
      REQUIRE(d.pmf(k) == Approx(std::pow(0.5, k + 1)).epsilon(1e-12));
  }

  SECTION("mass, detailed balance, cdf monotone at n=100") {
    auto p = make_params(100, 1.0);
    auto d = stationary(p);
    KahanSum total;
    for (std::int64_t k = 0; k <= d.truncation(); ++k) total.add(d.pmf(k));
    REQUIRE(total.value() == Approx(1.0).margin(1e-12));

    for (std::int64_t j = 0; j < d.truncation(); ++j) {
      double lhs = p.lambda * d.pmf(j);
      double rhs = double(std::min(j + 1, p.n)) * d.pmf(j + 1);
      REQUIRE(lhs == Approx(rhs).margin(1e-12));
    }

    double prev = 0.0;
    for (std::int64_t j = 0; j <= d.truncation(); ++j) {
      REQUIRE(d.cdf(j) >= prev);
      prev = d.cdf(j);
    }
    REQUIRE(d.cdf(d.truncation()) <= 1.0);
    REQUIRE(d.cdf(d.truncation() + 100) == 1.0);
  }
}

TEST_CASE("hw_wait_prob") {
  REQUIRE(hw_wait_prob(1.0) == Approx(0.22336127479826074025).epsilon(1e-12));
  // value at the phase transition is about .038
  REQUIRE(hw_wait_prob(1.8572216975169388) == Approx(0.038).margin(5e-4));
  // B -> 0+ expansion: 1/(1 + B sqrt(2 pi)/2 (1+o(1)))
  double b = 1e-4;
  double expansion = 1.0 / (1.0 + b * std::sqrt(2.0 * M_PI) / 2.0);
  REQUIRE(hw_wait_prob(b) == Approx(expansion).margin(1e-7));
  REQUIRE(hw_wait_prob(1e-4) == Approx(0.99987467429414298713).epsilon(1e-10));
  REQUIRE_THROWS_AS(hw_wait_prob(0.0), PreconditionViolated);
}
