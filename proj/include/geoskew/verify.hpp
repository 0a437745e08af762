#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "geoskew/measures.hpp"
#include "geoskew/params.hpp"

namespace geoskew {

/// Signature of the geodesical skew divergence being checked. The default
/// is geodesical_skew; tests swap in mutated kernels to make sure the
/// suite notices.
using DivergenceKernel = std::function<double(Alpha, Lambda, const ProbVec&, const ProbVec&)>;

struct PropertyRecord {
  std::string module;
  std::string name;
  bool asserted = true;  // exploratory records never fail the run
  bool passed = true;
  double worst = 0.0;    // largest observed error or violation
  double tolerance = 0.0;
  std::size_t samples = 0;
};

struct VerifyReport {
  std::vector<PropertyRecord> records;

  bool passed() const;
  const PropertyRecord* find(const std::string& name) const;
  void append(const std::vector<PropertyRecord>& more);
  void print(std::ostream& out) const;
};

struct VerifyOptions {
  std::uint64_t seed = 20210701;
  int pair_samples = 100;       // random (p, q) pairs per property
  int convexity_samples = 200;  // random (p0, p1, t) triples
  DivergenceKernel kernel;      // empty means geodesical_skew
};

// Individual suites; run_verification runs all of them.
std::vector<PropertyRecord> scalar_core_suite(const VerifyOptions& options);
std::vector<PropertyRecord> measures_suite(const VerifyOptions& options);
std::vector<PropertyRecord> identity_suite(const VerifyOptions& options);
std::vector<PropertyRecord> ordering_suite(const VerifyOptions& options);
std::vector<PropertyRecord> limit_suite(const VerifyOptions& options);
std::vector<PropertyRecord> witness_suite(const VerifyOptions& options);
std::vector<PropertyRecord> strong_convexity_suite(const VerifyOptions& options);
std::vector<PropertyRecord> geodesic_suite(const VerifyOptions& options);
std::vector<PropertyRecord> exp_family_suite(const VerifyOptions& options);
std::vector<PropertyRecord> exploratory_suite(const VerifyOptions& options);

VerifyReport run_verification(const VerifyOptions& options = {});

/// Random strictly positive probability vector of the given length.
ProbVec random_prob_vec(std::mt19937_64& rng, Eigen::Index length);

}  // namespace geoskew
