#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "geoskew/scalar_core.hpp"

using namespace geoskew;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ulps(double a, double b) {
  if (a == b) return 0.0;
  const double hi = std::max(a, b);
  return std::abs(a - b) / (std::nextafter(hi, kInf) - hi);
}

// Direct power-mean formula, used only as an oracle on well-scaled inputs.
double naive_power_mean(double alpha, double lambda, double a, double b) {
  if (alpha == 1.0) return std::pow(a, 1 - lambda) * std::pow(b, lambda);
  const double u = (1 - alpha) / 2;
  return std::pow((1 - lambda) * std::pow(a, u) + lambda * std::pow(b, u), 1 / u);
}

}  // namespace

TEST_CASE("alpha parameter parsing and text round trip") {
  CHECK(parse_alpha("inf").is_plus_infinity());
  CHECK(parse_alpha("-inf").is_minus_infinity());
  CHECK(parse_alpha("+INF").is_plus_infinity());
  CHECK(parse_alpha("-1").value() == -1.0);
  CHECK(parse_alpha("3e2").value() == 300.0);
  CHECK_THROWS_AS(parse_alpha("abc"), ParseError);
  CHECK_THROWS_AS(parse_alpha("1.5x"), ParseError);
  CHECK_THROWS_AS(parse_alpha(""), ParseError);
  CHECK_THROWS_AS(parse_alpha("nan"), ParseError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const Alpha a(dist(rng));
    CHECK(parse_alpha(to_string(a)) == a);
  }
  CHECK(to_string(Alpha::plus_infinity()) == "inf");
  CHECK(to_string(Alpha::minus_infinity()) == "-inf");
  CHECK(Alpha::minus_infinity() < Alpha(-1e300));
  CHECK(Alpha(1e300) < Alpha::plus_infinity());
}

TEST_CASE("lambda and u exponent invariants") {
  CHECK_THROWS_AS(Lambda(-0.1), DomainError);
  CHECK_THROWS_AS(Lambda(1.0000001), DomainError);
  CHECK_THROWS_AS(Lambda(std::nan("")), DomainError);
  CHECK(Lambda(0.3).complement() == doctest::Approx(0.7));
  CHECK(UExponent(Alpha(-1.0)).value() == 1.0);
  CHECK(UExponent(Alpha(3.0)).value() == -1.0);
  CHECK(UExponent(Alpha(0.0)).value() == 0.5);
  CHECK_THROWS_AS(UExponent(Alpha::plus_infinity()), UnsupportedError);
}

TEST_CASE("f_alpha examples and errors") {
  CHECK(f_alpha(Alpha(-1.0), 5.0) == 5.0);
  CHECK(f_alpha(Alpha(1.0), 1.0) == 0.0);
  CHECK(f_alpha(Alpha(0.0), 4.0) == 2.0);
  CHECK(f_alpha(Alpha(3.0), 4.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(f_alpha(Alpha(0.0), 0.0), DomainError);
  CHECK_THROWS_AS(f_alpha(Alpha(0.0), -1.0), DomainError);
  CHECK_THROWS_AS(f_alpha(Alpha::plus_infinity(), 1.0), UnsupportedError);
}

TEST_CASE("f_alpha_inv examples and errors") {
  CHECK(f_alpha_inv(Alpha(-1.0), 3.0) == 3.0);
  CHECK(f_alpha_inv(Alpha(0.0), 2.0) == 4.0);
  CHECK(f_alpha_inv(Alpha(1.0), 0.0) == 1.0);
  CHECK(f_alpha_inv(Alpha(1.0), -2.0) == doctest::Approx(std::exp(-2.0)));
  CHECK_THROWS_AS(f_alpha_inv(Alpha(0.0), 0.0), DomainError);
  CHECK_THROWS_AS(f_alpha_inv(Alpha(3.0), -1.0), DomainError);
  CHECK_THROWS_AS(f_alpha_inv(Alpha::minus_infinity(), 1.0), UnsupportedError);
}

TEST_CASE("f_alpha_inv inverts f_alpha within 4 ulp across 12 decades") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_x(std::log(1e-6), std::log(1e6));
  for (double a : {-7.0, -5.0, -3.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) {
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double x = std::exp(log_x(rng));
      worst = std::max(worst, ulps(f_alpha_inv(Alpha(a), f_alpha(Alpha(a), x)), x));
    }
    CAPTURE(a);
    CHECK(worst <= 4.0);
  }
}

TEST_CASE("f_interpolate special-case examples") {
  CHECK(f_interpolate(Alpha(-1.0), Lambda(0.5), 1.0, 3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(f_interpolate(Alpha(3.0), Lambda(0.5), 1.0, 3.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(f_interpolate(Alpha(0.0), Lambda(0.5), 1.0, 9.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(f_interpolate(Alpha::plus_infinity(), Lambda(0.7), 2.0, 5.0) == 2.0);
  CHECK(f_interpolate(Alpha::minus_infinity(), Lambda(0.7), 2.0, 5.0) == 5.0);
  CHECK(f_interpolate(Alpha(1.0), Lambda(0.5), 4.0, 9.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK_THROWS_AS(f_interpolate(Alpha(0.0), Lambda(0.5), 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(f_interpolate(Alpha(0.0), Lambda(0.5), 1.0, -1.0), DomainError);
}

TEST_CASE("f_interpolate agrees with the direct power-mean formula on moderate inputs") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> alpha(-9.0, 9.0);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  std::uniform_real_distribution<double> val(0.05, 20.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = alpha(rng);
    const double l = lam(rng);
    const double x = val(rng);
    const double y = val(rng);
    CHECK(f_interpolate(Alpha(a), Lambda(l), x, y) == doctest::Approx(naive_power_mean(a, l, x, y)).epsilon(1e-11));
  }
}

TEST_CASE("f_interpolate endpoints are exact for every alpha") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> log_v(std::log(1e-300), std::log(1e300));
  for (double a : {-kInf, -1e6, -3.0, -1.0, 0.0, 1.0, 1.0 + 1e-9, 2.0, 3.0, 1e6, kInf}) {
    for (int i = 0; i < 200; ++i) {
      const double x = std::exp(log_v(rng));
      const double y = std::exp(log_v(rng));
      CHECK(f_interpolate(Alpha(a), Lambda(0.0), x, y) == x);
      CHECK(f_interpolate(Alpha(a), Lambda(1.0), x, y) == y);
    }
  }
}

TEST_CASE("f_interpolate stays between the inputs, including extreme magnitudes") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> log_v(std::log(1e-300), std::log(1e300));
  std::uniform_real_distribution<double> alpha(-1e4, 1e4);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double x = std::exp(log_v(rng));
    const double y = std::exp(log_v(rng));
    const double m = f_interpolate(Alpha(alpha(rng)), Lambda(lam(rng)), x, y);
    REQUIRE(std::isfinite(m));
    CHECK(m >= std::min(x, y));
    CHECK(m <= std::max(x, y));
  }
}

TEST_CASE("f_interpolate is decreasing in alpha") {
  const std::vector<double> grid{-kInf, -100.0, -10.0, -3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 3.0, 10.0, 100.0, kInf};
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> lam(0.05, 0.95);
  std::uniform_real_distribution<double> val(0.01, 10.0);
  for (int i = 0; i < 500; ++i) {
    const Lambda l(lam(rng));
    const double x = val(rng);
    double y = val(rng);
    if (std::abs(y / x - 1.0) < 0.05) y = 2.0 * x;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      const double m0 = f_interpolate(Alpha(grid[k]), l, x, y);
      const double m1 = f_interpolate(Alpha(grid[k + 1]), l, x, y);
      CHECK(m1 <= m0);
      if (std::isfinite(grid[k]) && std::isfinite(grid[k + 1])) CHECK(m1 < m0);
    }
  }
}

TEST_CASE("f_interpolate is continuous through alpha = 1") {
  for (double l : {0.25, 0.5, 0.75}) {
    for (auto [x, y] : {std::pair{0.3, 7.0}, std::pair{2.0, 0.1}, std::pair{1e-200, 1e-150}}) {
      const double geometric = std::pow(x, 1 - l) * std::pow(y, l);
      for (double eps : {1e-7, -1e-7, 1e-9, -1e-9}) {
        CHECK(f_interpolate(Alpha(1.0 + eps), Lambda(l), x, y) == doctest::Approx(geometric).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("f_interpolate at alpha = +/-1e6 approaches min / max") {
  for (double l : {0.25, 0.5, 0.75}) {
    for (auto [x, y] : {std::pair{0.1, 10.0}, std::pair{3.0, 2.0}, std::pair{9.9, 9.8}}) {
      CHECK(f_interpolate(Alpha(1e6), Lambda(l), x, y) == doctest::Approx(std::min(x, y)).epsilon(1e-4));
      CHECK(f_interpolate(Alpha(-1e6), Lambda(l), x, y) == doctest::Approx(std::max(x, y)).epsilon(1e-4));
    }
  }
}

TEST_CASE("log-domain interpolation matches the direct kernel and survives underflow") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> alpha(-20.0, 20.0);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  std::uniform_real_distribution<double> log_v(-300.0, 300.0);
  for (int i = 0; i < 5000; ++i) {
    const Alpha a(alpha(rng));
    const Lambda l(lam(rng));
    const double la = log_v(rng);
    const double lb = log_v(rng);
    const double direct = std::log(f_interpolate(a, l, std::exp(la), std::exp(lb)));
    CHECK(log_f_interpolate(a, l, la, lb) == doctest::Approx(direct).epsilon(1e-12));
  }
  // exp(-2000) is not representable, the log-domain route still works.
  CHECK(log_f_interpolate(Alpha(-1.0), Lambda(0.5), -2000.0, -2000.0 + std::log(3.0)) ==
        doctest::Approx(-2000.0 + std::log(2.0)));
  CHECK(log_f_interpolate(Alpha::plus_infinity(), Lambda(0.5), -3.0, -5.0) == -5.0);
  CHECK(log_f_interpolate(Alpha::minus_infinity(), Lambda(0.5), -3.0, -5.0) == -3.0);
}

TEST_CASE("scalar kernels are generic over the floating-point type") {
  CHECK(f_interpolate(Alpha(0.0), Lambda(0.5), 1.0f, 9.0f) == doctest::Approx(4.0f));
  CHECK(f_interpolate(Alpha(3.0), Lambda(0.5), 1.0L, 3.0L) == doctest::Approx(1.5));
  CHECK(f_alpha(Alpha(0.0), 16.0f) == 4.0f);
}
