#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geoskew/distribution_io.hpp"
#include "geoskew/params.hpp"

namespace geoskew::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,   // unreadable files, malformed text, unwritable output
  kDomainError = 3,  // zero weights in strict mode, length mismatch, bad parameters
};

struct SweepSpec {
  std::vector<Alpha> alphas;
  std::vector<Lambda> lambdas;
  std::string source = "binomial:10:0.3";
  std::string target = "binomial:10:0.7";
  LoadOptions load;
};

struct GaussianSweepSpec {
  double reference_mu = 0.0;
  double reference_var = 0.5;
  double mu_start = 0.0;
  double var_start = 0.5;
  double mu_step = 0.5;
  double var_step = 0.2;
  int count = 10;
  std::vector<Alpha> alphas;
  std::vector<Lambda> lambdas;
};

/// "a,b,c" with inf / -inf accepted.
std::vector<Alpha> parse_alpha_list(const std::string& text);

/// "a,b,c" or "lo:hi:step"; the range form includes both ends.
std::vector<Lambda> parse_lambda_grid(const std::string& text);

/// Numbers in CSV and on stdout: 12 significant digits.
std::string format_number(double value);

/// CSV `alpha,lambda,divergence`, rows ordered by (alpha index, lambda index).
std::string sweep_csv(const SweepSpec& spec);

/// CSV `j,mu,var,alpha,lambda,divergence` against a fixed Gaussian reference.
std::string gaussian_sweep_csv(const GaussianSweepSpec& spec);

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geoskew::cli
