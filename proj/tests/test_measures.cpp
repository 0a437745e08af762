#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "geoskew/continuous.hpp"
#include "geoskew/density.hpp"
#include "geoskew/measures.hpp"

using namespace geoskew;

TEST_CASE("ProbVec enforces strict positivity and unit sum") {
  CHECK_NOTHROW(ProbVec{0.5, 0.5});
  CHECK_THROWS_AS((ProbVec{0.0, 1.0}), DomainError);
  CHECK_THROWS_AS((ProbVec{-0.1, 1.1}), DomainError);
  CHECK_THROWS_AS((ProbVec{0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(ProbVec(Eigen::VectorXd(0)), DomainError);
  CHECK_THROWS_AS((ProbVec{std::nan(""), 1.0}), DomainError);
  CHECK_NOTHROW((ProbVec{0.5, 0.5 + 5e-10}));
}

TEST_CASE("NonnegVec admits zeros and PositiveMeasureVec has no sum constraint") {
  CHECK_NOTHROW((NonnegVec{1.0, 0.0}));
  CHECK_THROWS_AS((NonnegVec{1.5, -0.5}), DomainError);
  CHECK_NOTHROW((PositiveMeasureVec{4.0, 9.0}));
  CHECK_THROWS_AS((PositiveMeasureVec{4.0, 0.0}), DomainError);
  const NonnegVec widened = ProbVec{0.25, 0.75};
  CHECK(widened[1] == 0.75);
}

TEST_CASE("normalize examples") {
  const std::vector<double> equal{2.0, 2.0};
  const ProbVec a = normalize(equal);
  CHECK(a[0] == 0.5);
  CHECK(a[1] == 0.5);
  const std::vector<double> skewed{1.0, 3.0};
  const ProbVec b = normalize(skewed);
  CHECK(b[0] == 0.25);
  CHECK(b[1] == 0.75);

  const std::vector<double> with_zero{0.0, 1.0};
  CHECK_THROWS_AS(normalize(with_zero), DomainError);
  const std::vector<double> all_zero{0.0, 0.0};
  CHECK_THROWS_AS(normalize(all_zero, ZeroPolicy::clamp), DomainError);
  const std::vector<double> negative{-1.0, 2.0};
  CHECK_THROWS_AS(normalize(negative, ZeroPolicy::clamp), DomainError);

  const ProbVec clamped = normalize(with_zero, ZeroPolicy::clamp, 1e-12);
  CHECK(clamped[0] > 0.0);
  CHECK(clamped[0] == doctest::Approx(1e-12).epsilon(1e-9));
  CHECK(clamped[1] == doctest::Approx(1.0));
}

TEST_CASE("normalize yields valid probability vectors on random raw data") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> log_w(std::log(1e-12), std::log(1e12));
  std::uniform_int_distribution<int> len(1, 5000);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> raw(std::size_t(len(rng)));
    for (auto& w : raw) w = std::exp(log_w(rng));
    const ProbVec p = normalize(raw);
    CHECK((p.weights().array() > 0.0).all());
    CHECK(std::abs(p.weights().sum() - 1.0) <= 1e-9);
  }
}

TEST_CASE("binomial_pmf") {
  const ProbVec coin = binomial_pmf(1, 0.5);
  CHECK(coin[0] == doctest::Approx(0.5));
  CHECK(coin[1] == doctest::Approx(0.5));
  const ProbVec two = binomial_pmf(2, 0.5);
  CHECK(two[0] == doctest::Approx(0.25));
  CHECK(two[1] == doctest::Approx(0.5));
  CHECK(two[2] == doctest::Approx(0.25));

  // Oracle: C(10, k) 0.3^k 0.7^(10 - k) by direct multiplication.
  const ProbVec b = binomial_pmf(10, 0.3);
  REQUIRE(b.size() == 11);
  double choose = 1.0;
  Eigen::Index mode = 0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) choose = choose * (10 - k + 1) / k;
    CHECK(b[k] == doctest::Approx(choose * std::pow(0.3, k) * std::pow(0.7, 10 - k)).epsilon(1e-13));
    if (b[k] > b[mode]) mode = k;
  }
  CHECK(mode == 3);
  CHECK(std::abs(b.weights().sum() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(binomial_pmf(10, 0.0), DomainError);
  CHECK_THROWS_AS(binomial_pmf(10, 1.0), DomainError);
  CHECK_THROWS_AS(binomial_pmf(0, 0.5), DomainError);
}

TEST_CASE("tv_distance examples and metric properties") {
  const ProbVec p{0.5, 0.5};
  const ProbVec q{0.25, 0.75};
  CHECK(tv_distance(p, p) == 0.0);
  CHECK(tv_distance(p, q) == doctest::Approx(0.5));
  const ProbVec near_a{1.0 - 1e-12, 1e-12};
  const ProbVec near_b{1e-12, 1.0 - 1e-12};
  CHECK(tv_distance(near_a, near_b) == doctest::Approx(2.0));
  CHECK_THROWS_AS(tv_distance(p, ProbVec{0.2, 0.3, 0.5}), DomainError);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> w(0.01, 1.0);
  for (int i = 0; i < 300; ++i) {
    Eigen::VectorXd a(6), b(6), c(6);
    for (int k = 0; k < 6; ++k) {
      a[k] = w(rng);
      b[k] = w(rng);
      c[k] = w(rng);
    }
    const ProbVec x = normalize(a), y = normalize(b), z = normalize(c);
    CHECK(tv_distance(x, y) == tv_distance(y, x));
    CHECK(tv_distance(x, z) <= tv_distance(x, y) + tv_distance(y, z) + 1e-12);
  }
}

TEST_CASE("shannon_entropy") {
  CHECK(shannon_entropy(ProbVec{0.5, 0.5}) == doctest::Approx(std::numbers::ln2));
  CHECK(shannon_entropy(ProbVec{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(std::log(4.0)));
  CHECK(shannon_entropy(ProbVec{1.0 - 1e-15, 1e-15}) < 1e-13);
}

TEST_CASE("gaussian_density") {
  const DensityFn standard = gaussian_density(0.0, 1.0);
  CHECK(standard.evaluate(0.0) == doctest::Approx(0.3989422804014327));
  CHECK(gaussian_density(0.0, 0.5).evaluate(0.0) == doctest::Approx(0.5641895835477563));
  CHECK(standard.support().lo == doctest::Approx(-12.0));
  CHECK(standard.support().hi == doctest::Approx(12.0));
  REQUIRE(standard.gaussian().has_value());
  CHECK(standard.gaussian()->sigma2 == 1.0);
  CHECK_THROWS_AS(gaussian_density(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(gaussian_density(0.0, -1.0), DomainError);

  const QuadratureConfig cfg;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> mu(-10.0, 10.0);
  std::uniform_real_distribution<double> var(0.1, 10.0);
  for (int i = 0; i < 40; ++i) {
    const DensityFn d = gaussian_density(mu(rng), var(rng));
    const double mass = integrate_adaptive([&](double x) { return d.evaluate(x); }, d.support(), cfg);
    CHECK(std::abs(mass - 1.0) <= 1e-8);
  }
}

TEST_CASE("gaussian_kl closed form") {
  CHECK(gaussian_kl({0.0, 1.0}, {1.0, 1.0}) == doctest::Approx(0.5));
  CHECK(gaussian_kl({0.0, 0.5}, {0.5, 0.7}) == doctest::Approx(0.20395040402489218));
  CHECK(gaussian_kl({2.0, 3.0}, {2.0, 3.0}) == 0.0);
}
