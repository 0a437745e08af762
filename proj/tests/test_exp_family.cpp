#include <doctest.h>

#include <cmath>

#include "geoskew/density.hpp"
#include "geoskew/divergences.hpp"
#include "geoskew/exp_family.hpp"

using namespace geoskew;

TEST_CASE("gaussian natural parameters and log partition") {
  const ExpFamilySpec fam = gaussian_family();
  const Eigen::VectorXd theta = gaussian_natural_params(1.0, 2.0);
  CHECK(theta[0] == doctest::Approx(0.5));
  CHECK(theta[1] == doctest::Approx(-0.25));
  // psi = mu^2 / (2 s2) + ln(2 pi s2) / 2
  CHECK(fam.log_partition(theta) == doctest::Approx(0.25 + 0.5 * std::log(4.0 * M_PI)));
  CHECK(std::exp(fam.log_density(theta, 1.0)) == doctest::Approx(gaussian_density(1.0, 2.0).evaluate(1.0)));
  CHECK_THROWS_AS(gaussian_natural_params(0.0, 0.0), DomainError);
}

TEST_CASE("gaussian geodesic at lambda = 1/2 between N(0,1) and N(1,1)") {
  const ExpFamilySpec fam = gaussian_family();
  const Eigen::VectorXd tp = gaussian_natural_params(0.0, 1.0);
  const Eigen::VectorXd tq = gaussian_natural_params(1.0, 1.0);
  const OutcomeGrid grid = gaussian_outcome_grid(tp, tq);
  const ProbVec mid = natural_geodesic_density(fam, tp, tq, Lambda(0.5), grid);

  double mean = 0.0, second = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    mean += mid[i] * grid.points[i];
    second += mid[i] * grid.points[i] * grid.points[i];
  }
  CHECK(mean == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(second - mean * mean == doctest::Approx(1.0).epsilon(1e-10));

  const ProbVec geo = normalized_geometric_interpolation(fam, tp, tq, Lambda(0.5), grid);
  CHECK((mid.weights() - geo.weights()).cwiseAbs().maxCoeff() <= 1e-12);

  const ScaledKlReport report = verify_scaled_kl(fam, tp, tq, Lambda(0.5), grid);
  CHECK(report.scaled_kl == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(report.abs_difference <= 1e-8);
  // unit variance: psi = mu^2 / 2 + const
  CHECK(report.log_normalizer_gap == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("verify_scaled_kl at the endpoints") {
  const ExpFamilySpec fam = gaussian_family();
  const Eigen::VectorXd tp = gaussian_natural_params(0.0, 0.5);
  const Eigen::VectorXd tq = gaussian_natural_params(0.5, 0.7);
  const OutcomeGrid grid = gaussian_outcome_grid(tp, tq);
  const ScaledKlReport start = verify_scaled_kl(fam, tp, tq, Lambda(0.0), grid);
  CHECK(std::abs(start.geodesical_skew) <= 1e-12);
  CHECK(start.scaled_kl == 0.0);
  const ScaledKlReport end = verify_scaled_kl(fam, tp, tq, Lambda(1.0), grid);
  CHECK(end.scaled_kl == doctest::Approx(0.2039504040248922).epsilon(1e-9));
  CHECK(end.abs_difference <= 1e-8);
}

TEST_CASE("categorical geodesic equals p^0.7 q^0.3 / Z") {
  const ExpFamilySpec fam = categorical_family(3);
  Eigen::VectorXd tp(2), tq(2);
  tp << std::log(0.2 / 0.5), std::log(0.3 / 0.5);
  tq << std::log(0.6 / 0.3), std::log(0.1 / 0.3);
  const ProbVec p{0.2, 0.3, 0.5};
  const ProbVec q{0.6, 0.1, 0.3};
  const OutcomeGrid grid = categorical_grid(3);
  const ProbVec r = natural_geodesic_density(fam, tp, tq, Lambda(0.3), grid);

  Eigen::VectorXd g(3);
  for (int i = 0; i < 3; ++i) g[i] = std::pow(p[i], 0.7) * std::pow(q[i], 0.3);
  g /= g.sum();
  CHECK((r.weights() - g).cwiseAbs().maxCoeff() <= 1e-14);

  const ScaledKlReport report = verify_scaled_kl(fam, tp, tq, Lambda(0.3), grid);
  CHECK(report.scaled_kl == doctest::Approx(0.3 * kl(p, q)).epsilon(1e-13));
  CHECK(report.abs_difference <= 1e-13);
}

TEST_CASE("invalid natural parameters") {
  const ExpFamilySpec fam = gaussian_family();
  const Eigen::VectorXd good = gaussian_natural_params(0.0, 1.0);
  Eigen::VectorXd bad(2);
  bad << 0.0, 0.5;
  CHECK_THROWS_AS(gaussian_outcome_grid(good, bad), DomainError);
  const OutcomeGrid grid = gaussian_outcome_grid(good, good);
  CHECK_THROWS_AS(verify_scaled_kl(fam, good, bad, Lambda(0.5), grid), DomainError);
  CHECK_THROWS_AS(natural_geodesic_density(fam, good, Eigen::VectorXd::Zero(3), Lambda(0.5), grid), DomainError);
  CHECK_THROWS_AS(categorical_family(1), DomainError);
}
