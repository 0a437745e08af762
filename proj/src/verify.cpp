#include "geoskew/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "geoskew/continuous.hpp"
#include "geoskew/density.hpp"
#include "geoskew/divergences.hpp"
#include "geoskew/exp_family.hpp"
#include "geoskew/geodesics.hpp"
#include "geoskew/scalar_core.hpp"

namespace geoskew {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tracks the worst error seen for one property.
class Check {
 public:
  Check(std::string module, std::string name, double tolerance, bool asserted = true)
      : record_{std::move(module), std::move(name), asserted, true, 0.0, tolerance, 0} {}

  // error <= tolerance is a pass; NaN always fails.
  void observe(double error) {
    ++record_.samples;
    if (std::isnan(error)) {
      record_.worst = std::numeric_limits<double>::quiet_NaN();
      nan_seen_ = true;
      return;
    }
    if (!nan_seen_) record_.worst = std::max(record_.worst, error);
  }

  // lhs >= rhs - tolerance; records the shortfall.
  void observe_at_least(double lhs, double rhs) { observe(std::max(0.0, rhs - lhs)); }

  PropertyRecord finish() {
    if (record_.asserted) record_.passed = !nan_seen_ && record_.worst <= record_.tolerance;
    return record_;
  }

 private:
  PropertyRecord record_;
  bool nan_seen_ = false;
};

DivergenceKernel kernel_of(const VerifyOptions& options) {
  if (options.kernel) return options.kernel;
  return [](Alpha a, Lambda l, const ProbVec& p, const ProbVec& q) { return geodesical_skew(a, l, p, q); };
}

struct Pair {
  ProbVec p;
  ProbVec q;
};

std::vector<Pair> random_pairs(std::mt19937_64& rng, int count, Eigen::Index min_len = 2, Eigen::Index max_len = 64) {
  std::uniform_int_distribution<Eigen::Index> length(min_len, max_len);
  std::vector<Pair> pairs;
  pairs.reserve(std::size_t(count));
  for (int i = 0; i < count; ++i) {
    const Eigen::Index n = length(rng);
    ProbVec p = random_prob_vec(rng, n);
    ProbVec q = random_prob_vec(rng, n);
    pairs.push_back({std::move(p), std::move(q)});
  }
  return pairs;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), std::numeric_limits<double>::min());
}

double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  const double spacing = std::nextafter(std::max(a, b), kInf) - std::max(a, b);
  return std::abs(a - b) / spacing;
}

const std::vector<double>& ordering_grid() {
  static const std::vector<double> grid{-5.0, -2.0, -1.0, 0.0, 1.0, 3.0, 10.0};
  return grid;
}

}  // namespace

ProbVec random_prob_vec(std::mt19937_64& rng, Eigen::Index length) {
  // log-normal weights with a random spread give both flat and peaked vectors
  const double spread = uniform(rng, 0.1, 3.0);
  std::normal_distribution<double> normal(0.0, spread);
  Eigen::VectorXd raw(length);
  for (Eigen::Index i = 0; i < length; ++i) raw[i] = std::exp(normal(rng));
  return normalize(raw);
}

bool VerifyReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const PropertyRecord& r) { return !r.asserted || r.passed; });
}

const PropertyRecord* VerifyReport::find(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void VerifyReport::append(const std::vector<PropertyRecord>& more) {
  records.insert(records.end(), more.begin(), more.end());
}

void VerifyReport::print(std::ostream& out) const {
  char line[256];
  std::snprintf(line, sizeof(line), "%-6s %-12s %-58s %8s %12s %10s\n", "status", "module", "property", "samples",
                "worst", "tolerance");
  out << line;
  for (const auto& r : records) {
    const char* status = !r.asserted ? "INFO" : (r.passed ? "PASS" : "FAIL");
    std::snprintf(line, sizeof(line), "%-6s %-12s %-58s %8zu %12.4e %10.1e\n", status, r.module.c_str(),
                  r.name.c_str(), r.samples, r.worst, r.tolerance);
    out << line;
  }
  out << (passed() ? "overall: PASS\n" : "overall: FAIL\n");
}

std::vector<PropertyRecord> scalar_core_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x5ca1a5ULL);
  std::vector<PropertyRecord> out;
  const int n = options.pair_samples * 10;

  Check bracket("scalar-core", "f_interpolate stays within [min, max]", 0.0);
  Check endpoints("scalar-core", "f_interpolate endpoint recovery", 0.0);
  const std::vector<double> special{-kInf, -1e6, -7.0, -1.0, 0.0, 1.0, 1.0 + 5e-9, 3.0, 1e6, kInf};
  for (int i = 0; i < n; ++i) {
    const Alpha alpha(i % 2 == 0 ? special[std::size_t(i / 2) % special.size()] : uniform(rng, -40.0, 40.0));
    const Lambda lambda(uniform(rng, 0.0, 1.0));
    const double a = log_uniform(rng, 1e-300, 1e300);
    const double b = log_uniform(rng, 1e-300, 1e300);
    const double m = f_interpolate(alpha, lambda, a, b);
    bracket.observe(std::max({0.0, std::min(a, b) - m, m - std::max(a, b)}));
    const bool exact = f_interpolate(alpha, Lambda(0.0), a, b) == a && f_interpolate(alpha, Lambda(1.0), a, b) == b;
    endpoints.observe(exact ? 0.0 : 1.0);
  }
  out.push_back(bracket.finish());
  out.push_back(endpoints.finish());

  Check non_increasing("scalar-core", "f_interpolate non-increasing in alpha", 0.0);
  Check strict("scalar-core", "f_interpolate strictly decreasing (finite alpha)", 0.0);
  const std::vector<double> alphas{-kInf, -50.0, -10.0, -5.0, -2.0, -1.0, -0.5, 0.0, 0.5,
                                   1.0,   2.0,   3.0,   5.0,  10.0, 50.0, kInf};
  for (int i = 0; i < options.pair_samples; ++i) {
    const Lambda lambda(uniform(rng, 0.05, 0.95));
    const double a = log_uniform(rng, 1e-6, 1e3);
    const double b = a * (uniform(rng, 0.0, 1.0) < 0.5 ? log_uniform(rng, 1.1, 100.0) : 1.0 / log_uniform(rng, 1.1, 100.0));
    for (std::size_t k = 0; k + 1 < alphas.size(); ++k) {
      const double m0 = f_interpolate(Alpha(alphas[k]), lambda, a, b);
      const double m1 = f_interpolate(Alpha(alphas[k + 1]), lambda, a, b);
      non_increasing.observe(std::max(0.0, (m1 - m0) / std::max(a, b)));
      if (std::isfinite(alphas[k]) && std::isfinite(alphas[k + 1])) strict.observe(m1 < m0 ? 0.0 : 1.0);
    }
  }
  out.push_back(non_increasing.finish());
  out.push_back(strict.finish());

  Check continuity("scalar-core", "f_interpolate continuous at alpha = 1", 1e-5);
  Check limits("scalar-core", "f_interpolate at alpha = +/-1e6 matches min/max", 1e-4);
  for (int i = 0; i < options.pair_samples; ++i) {
    const double a = uniform(rng, 0.1, 10.0);
    const double b = uniform(rng, 0.1, 10.0);
    for (double lam : {0.25, 0.5, 0.75}) {
      const Lambda lambda(lam);
      const double geometric = std::pow(a, 1.0 - lam) * std::pow(b, lam);
      for (double eps : {1e-7, -1e-7}) {
        continuity.observe(relative_error(f_interpolate(Alpha(1.0 + eps), lambda, a, b), geometric));
      }
      limits.observe(relative_error(f_interpolate(Alpha(1e6), lambda, a, b), std::min(a, b)));
      limits.observe(relative_error(f_interpolate(Alpha(-1e6), lambda, a, b), std::max(a, b)));
    }
  }
  out.push_back(continuity.finish());
  out.push_back(limits.finish());

  Check round_trip("scalar-core", "f_alpha_inv(f_alpha(x)) within 4 ulp, x in [1e-6, 1e6]", 4.0);
  for (double a : {-7.0, -5.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 5.0}) {
    const Alpha alpha(a);
    for (int i = 0; i < options.pair_samples * 10; ++i) {
      const double x = log_uniform(rng, 1e-6, 1e6);
      round_trip.observe(ulp_distance(f_alpha_inv(alpha, f_alpha(alpha, x)), x));
    }
  }
  out.push_back(round_trip.finish());
  return out;
}

std::vector<PropertyRecord> measures_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x3ea5ULL);
  std::vector<PropertyRecord> out;

  Check construction("measures", "normalized vectors are positive with unit sum", kUnitSumTolerance);
  for (int i = 0; i < options.pair_samples; ++i) {
    const auto n = std::uniform_int_distribution<Eigen::Index>(1, 2000)(rng);
    Eigen::VectorXd raw(n);
    for (Eigen::Index k = 0; k < n; ++k) raw[k] = log_uniform(rng, 1e-12, 1e12);
    const ProbVec p = normalize(raw);
    const bool positive = (p.weights().array() > 0.0).all();
    construction.observe(positive ? std::abs(p.weights().sum() - 1.0) : 1.0);
  }
  out.push_back(construction.finish());

  Check symmetric("measures", "tv_distance symmetric", 0.0);
  Check identity("measures", "tv_distance identity of indiscernibles", 1e-12);
  Check triangle("measures", "tv_distance triangle inequality", 1e-12);
  for (int i = 0; i < options.pair_samples; ++i) {
    const auto n = std::uniform_int_distribution<Eigen::Index>(2, 64)(rng);
    const ProbVec p = random_prob_vec(rng, n);
    const ProbVec q = random_prob_vec(rng, n);
    const ProbVec r = random_prob_vec(rng, n);
    symmetric.observe(std::abs(tv_distance(p, q) - tv_distance(q, p)));
    identity.observe(tv_distance(p, p));
    triangle.observe(std::max(0.0, tv_distance(p, r) - tv_distance(p, q) - tv_distance(q, r)));
  }
  out.push_back(symmetric.finish());
  out.push_back(identity.finish());
  out.push_back(triangle.finish());

  Check gaussian("measures", "gaussian density integrates to 1", 1e-8);
  const QuadratureConfig cfg;
  for (int i = 0; i < std::max(1, options.pair_samples / 5); ++i) {
    const DensityFn d = gaussian_density(uniform(rng, -10.0, 10.0), uniform(rng, 0.1, 10.0));
    gaussian.observe(std::abs(integrate_adaptive([&](double x) { return d.evaluate(x); }, d.support(), cfg) - 1.0));
  }
  out.push_back(gaussian.finish());
  return out;
}

std::vector<PropertyRecord> identity_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x1de7ULL);
  const auto gs = kernel_of(options);
  const auto pairs = random_pairs(rng, options.pair_samples);
  constexpr double tol = 1e-12;

  Check at_one("divergences", "D_GS(alpha, 1) = KL", tol);
  Check at_zero("divergences", "D_GS(alpha, 0) = 0", tol);
  Check scaled("divergences", "D_GS(1, lambda) = lambda * KL", tol);
  Check skewed("divergences", "D_GS(-1, lambda) = skew(lambda)", tol);
  Check js_case("divergences", "symmetrized D_GS(-1, 1/2) = JS", tol);
  Check jeffreys_case("divergences", "symmetrized D_GS(alpha, 1) = Jeffreys / 2", tol);
  Check generic_scaled("divergences", "generic kernel: D_GS(1, lambda) = lambda * KL", tol);
  Check generic_skew("divergences", "generic kernel: D_GS(-1, lambda) = skew(lambda)", tol);
  Check generic_ends("divergences", "generic kernel: lambda in {0, 1} endpoints", tol);

  auto sym = [&](Alpha a, Lambda l, const ProbVec& p, const ProbVec& q) { return 0.5 * (gs(a, l, p, q) + gs(a, l, q, p)); };

  for (const auto& [p, q] : pairs) {
    const Alpha alpha(uniform(rng, -10.0, 10.0));
    const Lambda lambda(uniform(rng, 0.0, 1.0));
    const double kl_pq = kl(p, q);
    at_one.observe(std::abs(gs(alpha, Lambda(1.0), p, q) - kl_pq));
    at_one.observe(std::abs(gs(Alpha::plus_infinity(), Lambda(1.0), p, q) - kl_pq));
    at_zero.observe(std::abs(gs(alpha, Lambda(0.0), p, q)));
    scaled.observe(std::abs(gs(Alpha(1.0), lambda, p, q) - lambda.value() * kl_pq));
    skewed.observe(std::abs(gs(Alpha(-1.0), lambda, p, q) - skew(lambda, p, q)));
    js_case.observe(std::abs(sym(Alpha(-1.0), Lambda(0.5), p, q) - js(p, q)));
    jeffreys_case.observe(std::abs(sym(alpha, Lambda(1.0), p, q) - 0.5 * jeffreys(p, q)));

    generic_scaled.observe(std::abs(geodesical_skew_generic(Alpha(1.0), lambda, p, q) - lambda.value() * kl_pq));
    generic_skew.observe(std::abs(geodesical_skew_generic(Alpha(-1.0), lambda, p, q) - skew(lambda, p, q)));
    generic_ends.observe(std::abs(geodesical_skew_generic(alpha, Lambda(1.0), p, q) - kl_pq));
    generic_ends.observe(std::abs(geodesical_skew_generic(alpha, Lambda(0.0), p, q)));
  }
  return {at_one.finish(),  at_zero.finish(),        scaled.finish(),         skewed.finish(),      js_case.finish(),
          jeffreys_case.finish(), generic_scaled.finish(), generic_skew.finish(), generic_ends.finish()};
}

std::vector<PropertyRecord> ordering_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x0bde5ULL);
  const auto gs = kernel_of(options);
  const auto pairs = random_pairs(rng, options.pair_samples);
  constexpr double tol = 1e-10;

  Check monotone("divergences", "D_GS non-decreasing in alpha", tol);
  Check sandwich("divergences", "lower bound <= D_GS <= upper bound", tol);
  Check nonneg("divergences", "D_GS >= 0 for alpha >= -1", 1e-12);
  Check js_bound("divergences", "JS <= ln 2", 1e-12);
  Check bound_signs("divergences", "lower bound <= 0 <= upper bound", 0.0);

  const auto& grid = ordering_grid();
  for (const auto& [p, q] : pairs) {
    for (int rep = 0; rep < 3; ++rep) {
      const Lambda lambda(rep == 0 ? 0.5 : uniform(rng, 0.0, 1.0));
      std::vector<double> values;
      for (double a : grid) values.push_back(gs(Alpha(a), lambda, p, q));
      for (std::size_t k = 0; k + 1 < values.size(); ++k) monotone.observe_at_least(values[k + 1], values[k]);

      const double lo = divergence_lower_bound(p, q);
      const double hi = divergence_upper_bound(p, q);
      std::vector<double> alphas = grid;
      alphas.push_back(uniform(rng, -50.0, 50.0));
      alphas.push_back(kInf);
      alphas.push_back(-kInf);
      for (double a : alphas) {
        const double d = gs(Alpha(a), lambda, p, q);
        sandwich.observe(std::max({0.0, lo - d, d - hi}));
      }
      bound_signs.observe(std::max({0.0, lo, -hi}));

      for (double a : {-1.0, -0.5, 0.0, 1.0, 3.0, uniform(rng, -1.0, 20.0), kInf}) {
        nonneg.observe(std::max(0.0, -gs(Alpha(a), lambda, p, q)));
      }
    }
    js_bound.observe(std::max(0.0, js(p, q) - std::numbers::ln2));
  }
  return {monotone.finish(), sandwich.finish(), nonneg.finish(), js_bound.finish(), bound_signs.finish()};
}

std::vector<PropertyRecord> limit_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x1e7e5ULL);
  const auto gs = kernel_of(options);
  const auto pairs = random_pairs(rng, options.pair_samples);
  Check plus("divergences", "D_GS(1e6) matches the alpha = +inf closed form", 1e-4);
  Check minus("divergences", "D_GS(-1e6) matches the alpha = -inf closed form", 1e-4);
  for (const auto& [p, q] : pairs) {
    const Lambda lambda(uniform(rng, 0.0, 1.0));
    plus.observe(std::abs(gs(Alpha(1e6), lambda, p, q) - divergence_upper_bound(p, q)));
    minus.observe(std::abs(gs(Alpha(-1e6), lambda, p, q) - divergence_lower_bound(p, q)));
  }
  return {plus.finish(), minus.finish()};
}

std::vector<PropertyRecord> witness_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x3177e55ULL);
  const auto gs = kernel_of(options);
  std::vector<PropertyRecord> out;

  const ProbVec p{0.5, 0.5};
  const ProbVec q{0.25, 0.75};
  // Witnesses must differ by more than 1e-6; the check stores the shortfall.
  Check asym("divergences", "asymmetry witness D(p||q) != D(q||p)", 0.0);
  Check centro("divergences", "non-centrosymmetry witness D(lambda=1) != D(lambda=0)", 0.0);
  for (double a : {-5.0, -1.0, 0.0, 1.0, 3.0, 10.0}) {
    const Alpha alpha(a);
    asym.observe(std::max(0.0, 1e-6 - std::abs(gs(alpha, Lambda(1.0), p, q) - gs(alpha, Lambda(1.0), q, p))));
    centro.observe(std::max(0.0, 1e-6 - (gs(alpha, Lambda(1.0), p, q) - gs(alpha, Lambda(0.0), p, q))));
  }
  out.push_back(asym.finish());
  out.push_back(centro.finish());

  // |D(alpha + d, lambda + d') - D(alpha, lambda)| <= C (|d| + |d'|), where
  // C is ten times the finite-difference gradient norm at a coarse step.
  Check continuity("divergences", "D_GS continuous in (alpha, lambda)", 0.0);
  Check symmetric("divergences", "symmetrized D_GS symmetric in (p, q)", 1e-14);
  const auto pairs = random_pairs(rng, options.pair_samples);
  for (const auto& [pp, qq] : pairs) {
    const Alpha alpha(uniform(rng, -4.0, 6.0));
    const double lam = uniform(rng, 0.1, 0.9);
    const double h = 1e-3;
    const double d_alpha = (gs(Alpha(alpha.value() + h), Lambda(lam), pp, qq) -
                            gs(Alpha(alpha.value() - h), Lambda(lam), pp, qq)) / (2 * h);
    const double d_lambda = (gs(alpha, Lambda(lam + h), pp, qq) - gs(alpha, Lambda(lam - h), pp, qq)) / (2 * h);
    const double c = 10.0 * (std::abs(d_alpha) + std::abs(d_lambda)) + 1e-6;
    const double delta = 1e-6;
    const double change =
        std::abs(gs(Alpha(alpha.value() + delta), Lambda(lam + delta), pp, qq) - gs(alpha, Lambda(lam), pp, qq));
    continuity.observe(std::max(0.0, change - c * 2 * delta));

    const double fwd = 0.5 * (gs(alpha, Lambda(lam), pp, qq) + gs(alpha, Lambda(lam), qq, pp));
    const double bwd = 0.5 * (gs(alpha, Lambda(lam), qq, pp) + gs(alpha, Lambda(lam), pp, qq));
    symmetric.observe(std::abs(fwd - bwd));
    symmetric.observe(std::abs(symmetrized_geodesical_skew(alpha, Lambda(lam), pp, qq) -
                               symmetrized_geodesical_skew(alpha, Lambda(lam), qq, pp)));
  }
  out.push_back(continuity.finish());
  out.push_back(symmetric.finish());
  return out;
}

std::vector<PropertyRecord> strong_convexity_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0xc0e7ULL);
  Check convex("divergences", "strong convexity at fixed reference", 1e-10);
  for (int i = 0; i < options.convexity_samples; ++i) {
    const auto n = std::uniform_int_distribution<Eigen::Index>(2, 64)(rng);
    const ProbVec p = random_prob_vec(rng, n);
    const ProbVec q = random_prob_vec(rng, n);
    const Alpha alpha(uniform(rng, -5.0, 10.0));
    const Lambda lambda(uniform(rng, 0.0, 1.0));
    // r = m_f(p, q), normalized; normalization only shifts KL by a constant.
    Eigen::VectorXd m(n);
    for (Eigen::Index k = 0; k < n; ++k) m[k] = f_interpolate(alpha, lambda, p[k], q[k]);
    const ProbVec r = normalize(m);

    const ProbVec p0 = random_prob_vec(rng, n);
    const ProbVec p1 = random_prob_vec(rng, n);
    const double t = uniform(rng, 0.01, 0.99);
    const ProbVec pt = normalize(((1.0 - t) * p0.weights() + t * p1.weights()).eval());
    const double gap = (1.0 - t) * kl(p0, r) + t * kl(p1, r) - kl(pt, r);
    const double tv = tv_distance(p0, p1);
    convex.observe_at_least(gap, 0.5 * t * (1.0 - t) * tv * tv);
  }
  return {convex.finish()};
}

std::vector<PropertyRecord> geodesic_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x9e0dULL);
  const auto pairs = random_pairs(rng, options.pair_samples);
  Check endpoints("geodesics", "geodesic endpoints reproduce inputs", 1e-12);
  Check normalized("geodesics", "geodesic points sum to 1", 1e-9);
  Check involution("geodesics", "dual(-alpha) equals alpha representation", 1e-12);
  Check dual_route("geodesics", "eta = theta^((1+alpha)/(1-alpha))", 1e-10);
  for (const auto& [p, q] : pairs) {
    for (double a : {-kInf, -3.0, -1.0, 0.0, 0.5, 1.0, 3.0, kInf, uniform(rng, -10.0, 10.0)}) {
      const Alpha alpha(a);
      const auto start = alpha_geodesic_point(alpha, 0.0, p, q);
      const auto end = alpha_geodesic_point(alpha, 1.0, p, q);
      endpoints.observe((start.r.weights() - p.weights()).cwiseAbs().maxCoeff());
      endpoints.observe((end.r.weights() - q.weights()).cwiseAbs().maxCoeff());
      const auto mid = alpha_geodesic_point(alpha, uniform(rng, 0.0, 1.0), p, q);
      normalized.observe(std::abs(mid.r.weights().sum() - 1.0));
    }
    const PositiveMeasureVec m((p.weights() * uniform(rng, 0.1, 10.0)).eval());
    for (double a : {-3.0, -0.5, 0.0, 0.5, 2.0, uniform(rng, -5.0, 5.0)}) {
      const auto theta = alpha_representation(Alpha(a), m);
      const auto eta = dual_representation(Alpha(-a), m);
      involution.observe((theta.theta - eta.eta).cwiseAbs().maxCoeff());
      const auto dual = dual_representation(Alpha(a), m);
      const auto via_theta = dual_from_alpha_coords(theta);
      dual_route.observe(((dual.eta - via_theta.eta).array().abs() / dual.eta.array().abs()).maxCoeff());
    }
  }
  return {endpoints.finish(), normalized.finish(), involution.finish(), dual_route.finish()};
}

std::vector<PropertyRecord> exp_family_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0xe4fULL);
  constexpr double tol = 1e-8;
  Check gauss_geo("geodesics", "gaussian natural geodesic = normalized e-interpolation", tol);
  Check cat_geo("geodesics", "categorical natural geodesic = normalized e-interpolation", tol);
  Check scaled("geodesics", "natural D_GS(1, lambda) = lambda * KL", tol);
  Check continuous("divergences", "continuous D_GS(1, lambda) = lambda * gaussian KL", tol);

  auto max_relative = [](const ProbVec& a, const ProbVec& b) {
    return ((a.weights() - b.weights()).array().abs() / b.weights().array()).maxCoeff();
  };
  const std::vector<double> lambdas{0.0, 0.25, 0.5, 0.75, 1.0};
  const ExpFamilySpec gauss = gaussian_family();
  const int cases = std::max(1, options.pair_samples / 10);
  for (int i = 0; i < cases; ++i) {
    const GaussianParams gp{i == 0 ? 0.0 : uniform(rng, -2.0, 2.0), i == 0 ? 1.0 : uniform(rng, 0.3, 3.0)};
    const GaussianParams gq{i == 0 ? 1.0 : uniform(rng, -2.0, 2.0), i == 0 ? 1.0 : uniform(rng, 0.3, 3.0)};
    const Eigen::VectorXd tp = gaussian_natural_params(gp.mu, gp.sigma2);
    const Eigen::VectorXd tq = gaussian_natural_params(gq.mu, gq.sigma2);
    const OutcomeGrid grid = gaussian_outcome_grid(tp, tq);
    const DensityFn dp = gaussian_density(gp.mu, gp.sigma2);
    const DensityFn dq = gaussian_density(gq.mu, gq.sigma2);
    const double analytic = gaussian_kl(gp, gq);
    for (double lam : lambdas) {
      const Lambda lambda(lam);
      gauss_geo.observe(max_relative(natural_geodesic_density(gauss, tp, tq, lambda, grid),
                                     normalized_geometric_interpolation(gauss, tp, tq, lambda, grid)));
      scaled.observe(verify_scaled_kl(gauss, tp, tq, lambda, grid).abs_difference);
      continuous.observe(std::abs(geodesical_skew_continuous(Alpha(1.0), lambda, dp, dq) - lam * analytic));
    }
  }

  for (int i = 0; i < cases; ++i) {
    const int k = std::uniform_int_distribution<int>(2, 12)(rng);
    const ExpFamilySpec cat = categorical_family(k);
    Eigen::VectorXd tp(k - 1);
    Eigen::VectorXd tq(k - 1);
    for (int j = 0; j < k - 1; ++j) {
      tp[j] = uniform(rng, -3.0, 3.0);
      tq[j] = uniform(rng, -3.0, 3.0);
    }
    const OutcomeGrid grid = categorical_grid(k);
    for (double lam : lambdas) {
      const Lambda lambda(lam);
      cat_geo.observe(max_relative(natural_geodesic_density(cat, tp, tq, lambda, grid),
                                   normalized_geometric_interpolation(cat, tp, tq, lambda, grid)));
      scaled.observe(verify_scaled_kl(cat, tp, tq, lambda, grid).abs_difference);
    }
  }
  return {gauss_geo.finish(), cat_geo.finish(), scaled.finish(), continuous.finish()};
}

std::vector<PropertyRecord> exploratory_suite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0xe8a1ULL);
  const auto gs = kernel_of(options);
  const auto pairs = random_pairs(rng, options.pair_samples);

  // Claimed identity D_GS(3, lambda) = skew(lambda) + H(p) + H(q); reported
  // as the largest absolute discrepancy, never asserted.
  Check alpha_three("exploratory", "alpha = 3 identity claim: |discrepancy|", 0.0, false);
  // Subadditivity D(a + b) <= D(a) + D(b) over a, b in [-1, 5]: worst excess.
  Check subadditive("exploratory", "subadditivity in alpha over [-1, 5]: excess", 0.0, false);
  Check subadditive_count("exploratory", "subadditivity in alpha over [-1, 5]: fraction violated", 0.0, false);
  std::size_t violations = 0;
  std::size_t total = 0;
  for (const auto& [p, q] : pairs) {
    const Lambda lambda(uniform(rng, 0.05, 1.0));
    alpha_three.observe(
        std::abs(gs(Alpha(3.0), lambda, p, q) - (skew(lambda, p, q) + shannon_entropy(p) + shannon_entropy(q))));
    for (double a = -1.0; a <= 5.0; a += 1.0) {
      for (double b = -1.0; b <= 5.0; b += 1.0) {
        const double excess = gs(Alpha(a + b), lambda, p, q) - gs(Alpha(a), lambda, p, q) - gs(Alpha(b), lambda, p, q);
        subadditive.observe(std::max(0.0, excess));
        ++total;
        if (excess > 1e-12) ++violations;
      }
    }
  }
  auto fraction = subadditive_count.finish();
  fraction.worst = total == 0 ? 0.0 : double(violations) / double(total);
  fraction.samples = total;
  return {alpha_three.finish(), subadditive.finish(), fraction};
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.append(scalar_core_suite(options));
  report.append(measures_suite(options));
  report.append(identity_suite(options));
  report.append(ordering_suite(options));
  report.append(limit_suite(options));
  report.append(witness_suite(options));
  report.append(strong_convexity_suite(options));
  report.append(geodesic_suite(options));
  report.append(exp_family_suite(options));
  report.append(exploratory_suite(options));
  return report;
}

}  // namespace geoskew
