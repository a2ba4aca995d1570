#include "opdr/error.hpp"
#include "opdr/fit.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace opdr;

namespace {

std::vector<FitSample> noiseless(double c0, double c1, std::size_t m) {
  std::vector<FitSample> out;
  for (std::size_t n = 2; n <= m; ++n) {
    out.push_back({n, m, c0 * std::log(static_cast<double>(n) / static_cast<double>(m)) + c1});
  }
  return out;
}

Errc error_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected opdr::Error");
  return Errc::EmptyInput;
}

}  // namespace

TEST_CASE("recovers noiseless coefficients") {
  const auto fit = fit_law(noiseless(0.1, 1.0, 20));
  CHECK(std::abs(fit.c0 - 0.1) <= 1e-9);
  CHECK(std::abs(fit.c1 - 1.0) <= 1e-9);
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.n_points == 19);
}

TEST_CASE("two samples interpolate exactly") {
  const auto fit = fit_law({{5, 10, 0.4}, {10, 10, 0.9}});
  CHECK(fit.c1 == doctest::Approx(0.9));
  CHECK(fit.c0 == doctest::Approx(0.5 / std::log(2.0)));
  CHECK(fit.r_squared == 1.0);
}

TEST_CASE("fit errors") {
  CHECK(error_of([] { fit_law({}); }) == Errc::InsufficientSamples);
  CHECK(error_of([] { fit_law({{1, 2, 0.5}}); }) == Errc::InsufficientSamples);
  CHECK(error_of([] { fit_law({{2, 4, 0.5}, {5, 10, 0.7}, {10, 20, 0.6}}); }) == Errc::DegenerateDesign);
  CHECK(error_of([] { fit_law({{0, 4, 0.5}, {2, 4, 0.7}}); }) == Errc::InsufficientSamples);
  CHECK(error_of([] { fit_law({{5, 4, 0.5}, {2, 4, 0.7}}); }) == Errc::InsufficientSamples);
}

TEST_CASE("flat accuracy gives zero slope and unit r squared") {
  const auto fit = fit_law({{1, 10, 1.0}, {5, 10, 1.0}, {9, 10, 1.0}});
  CHECK(fit.c0 == 0.0);
  CHECK(fit.c1 == 1.0);
  CHECK(fit.r_squared == 1.0);
}

TEST_CASE("residuals are orthogonal to the design") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<FitSample> samples;
  for (std::size_t m : {10, 40, 80}) {
    for (std::size_t n = 1; n < m; n += 2) {
      samples.push_back({n, m, 0.2 * std::log(static_cast<double>(n) / static_cast<double>(m)) + 0.9 + noise(rng)});
    }
  }
  const auto fit = fit_law(samples);
  double sum = 0.0, weighted = 0.0;
  for (const auto& s : samples) {
    const double x = std::log(static_cast<double>(s.n) / static_cast<double>(s.m));
    const double r = s.accuracy - (fit.c0 * x + fit.c1);
    sum += r;
    weighted += r * x;
  }
  CHECK(std::abs(sum) <= 1e-9);
  CHECK(std::abs(weighted) <= 1e-9);
  CHECK(fit.r_squared < 1.0);
  CHECK(fit.r_squared > 0.5);
}

TEST_CASE("predict clamps to the unit interval") {
  const FitResult fit{0.1, 1.0, 1.0, 10};
  CHECK(fit.predict(20, 20) == 1.0);
  CHECK(fit.predict(40, 20) == 1.0);
  CHECK(fit.predict(1, 100000000) == 0.0);
  CHECK(fit.predict(10, 20) == doctest::Approx(1.0 + 0.1 * std::log(0.5)));
}

TEST_CASE("recommend_dim examples") {
  SUBCASE("target equal to intercept clamps to m - 1") {
    const auto rec = recommend_dim({0.1, 1.0, 1.0, 2}, 1.0, 20, 1000);
    CHECK(rec.raw == 20.0);
    CHECK(rec.recommended_dim == 19);
    CHECK(rec.clamped);
  }
  SUBCASE("second intercept example") {
    const auto rec = recommend_dim({0.05, 0.8, 1.0, 2}, 0.8, 50, 1000);
    CHECK(rec.raw == 50.0);
    CHECK(rec.recommended_dim == 49);
    CHECK(rec.clamped);
  }
  SUBCASE("interior value is not clamped") {
    // raw = 20 * exp(-0.5 / 0.1) = 20 * e^-5 ~= 0.1348 -> ceil 1
    const auto low = recommend_dim({0.1, 1.0, 1.0, 2}, 0.5, 20, 1000);
    CHECK(low.recommended_dim == 1);
    CHECK_FALSE(low.clamped);
    // raw = 80 * exp(-0.1 / 0.1) = 29.43... -> 30
    const auto mid = recommend_dim({0.1, 1.0, 1.0, 2}, 0.9, 80, 1000);
    CHECK(mid.raw == doctest::Approx(80.0 * std::exp(-1.0)));
    CHECK(mid.recommended_dim == 30);
    CHECK_FALSE(mid.clamped);
  }
  SUBCASE("max_dim bound") {
    const auto rec = recommend_dim({0.1, 1.0, 1.0, 2}, 0.9, 80, 16);
    CHECK(rec.recommended_dim == 16);
    CHECK(rec.clamped);
  }
  SUBCASE("non-positive slope") {
    CHECK(error_of([] { recommend_dim({-0.01, 1.0, 1.0, 2}, 0.9, 20, 100); }) == Errc::NonPositiveSlope);
    CHECK(error_of([] { recommend_dim({0.0, 1.0, 1.0, 2}, 0.9, 20, 100); }) == Errc::NonPositiveSlope);
  }
}

TEST_CASE("recommendation is monotone in accuracy and m") {
  const FitResult fit{0.15, 0.95, 1.0, 10};
  for (std::size_t m = 10; m <= 200; m += 10) {
    std::size_t previous = 0;
    for (double a = 0.05; a <= 1.0; a += 0.05) {
      const auto dim = recommend_dim(fit, a, m, 10000).recommended_dim;
      CHECK(dim >= previous);
      previous = dim;
    }
  }
  for (double a : {0.3, 0.6, 0.9}) {
    std::size_t previous = 0;
    for (std::size_t m = 2; m <= 300; ++m) {
      const auto dim = recommend_dim(fit, a, m, 10000).recommended_dim;
      CHECK(dim >= previous);
      previous = dim;
    }
  }
}

TEST_CASE("fit then recommend round trip") {
  for (double c0 : {0.05, 0.1, 0.3}) {
    for (double c1 : {0.8, 1.0, 1.2}) {
      const auto fit = fit_law(noiseless(c0, c1, 60));
      for (double a : {0.4, 0.7, 0.95}) {
        const double analytic = std::ceil(60.0 * std::exp((a - c1) / c0));
        const auto rec = recommend_dim(fit, a, 60, 100000);
        CHECK(std::abs(std::ceil(rec.raw) - analytic) <= 1.0);
      }
    }
  }
}
