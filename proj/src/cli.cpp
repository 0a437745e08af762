#include "geoskew/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "geoskew/continuous.hpp"
#include "geoskew/divergences.hpp"
#include "geoskew/verify.hpp"

namespace geoskew::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw ParseError("empty entry in list '" + text + "'");
    parts.push_back(item);
  }
  if (parts.empty()) throw ParseError("empty list");
  return parts;
}

double parse_real(const std::string& token) {
  // parse_alpha already handles plain numbers; reject infinities here.
  const Alpha value = parse_alpha(token);
  if (!value.is_finite()) throw ParseError("expected a finite number, got '" + token + "'");
  return value.value();
}

ZeroPolicy parse_mode(const std::string& mode) {
  if (mode == "strict") return ZeroPolicy::strict;
  if (mode == "clamp") return ZeroPolicy::clamp;
  throw ParseError("--mode must be 'strict' or 'clamp', got '" + mode + "'");
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError("cannot open output file '" + path + "'");
  file << text;
  file.flush();
  if (!file) throw ParseError("cannot write output file '" + path + "'");
}

// Joins "--flag value" into "--flag=value" so values that begin with '-'
// (negative alphas, "-inf", "-1,0,1,3") are never mistaken for options.
std::vector<std::string> normalized_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    const bool long_flag = arg.rfind("--", 0) == 0 && arg.size() > 2 && arg.find('=') == std::string::npos;
    if (long_flag && arg != "--help" && i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) {
      arg += "=";
      arg += argv[++i];
    }
    args.push_back(std::move(arg));
  }
  std::reverse(args.begin(), args.end());
  return args;
}

struct ComputeFlags {
  std::string alpha = "1";
  std::string lambda = "0.5";
  std::string p;
  std::string q;
  std::string kind = "gs";
  std::string mode = "strict";
  double eps = kDefaultClampFloor;
};

double compute_discrete(const std::string& kind, Alpha alpha, Lambda lambda, const ProbVec& p, const ProbVec& q) {
  if (kind == "gs") return geodesical_skew(alpha, lambda, p, q);
  if (kind == "sym") return symmetrized_geodesical_skew(alpha, lambda, p, q);
  if (kind == "kl") return kl(p, q);
  if (kind == "js") return js(p, q);
  if (kind == "jeffreys") return jeffreys(p, q);
  if (kind == "skew") return skew(lambda, p, q);
  if (kind == "alpha") return alpha_divergence(alpha, p, q);
  if (kind == "lower") return divergence_lower_bound(p, q);
  if (kind == "upper") return divergence_upper_bound(p, q);
  throw ParseError("unknown --kind '" + kind + "'");
}

double evaluate_pair(const std::string& kind, Alpha alpha, Lambda lambda, const Distribution& p,
                     const Distribution& q) {
  if (const auto* pv = std::get_if<ProbVec>(&p)) {
    if (const auto* qv = std::get_if<ProbVec>(&q)) return compute_discrete(kind, alpha, lambda, *pv, *qv);
  }
  const auto* pd = std::get_if<DensityFn>(&p);
  const auto* qd = std::get_if<DensityFn>(&q);
  if (pd == nullptr || qd == nullptr) {
    throw DomainError("cannot compare a discrete distribution with a continuous density");
  }
  if (kind == "gs") return geodesical_skew_continuous(alpha, lambda, *pd, *qd);
  if (kind == "sym") {
    return 0.5 * (geodesical_skew_continuous(alpha, lambda, *pd, *qd) +
                  geodesical_skew_continuous(alpha, lambda, *qd, *pd));
  }
  throw DomainError("--kind " + kind + " is only available for discrete distributions");
}

}  // namespace

std::vector<Alpha> parse_alpha_list(const std::string& text) {
  std::vector<Alpha> out;
  for (const auto& item : split_commas(text)) out.push_back(parse_alpha(item));
  return out;
}

std::vector<Lambda> parse_lambda_grid(const std::string& text) {
  std::vector<Lambda> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw ParseError("lambda range must look like lo:hi:step");
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const double step = parse_real(parts[2]);
    if (!(step > 0.0) || hi < lo) throw DomainError("lambda range needs lo <= hi and step > 0");
    const auto count = static_cast<long>(std::llround((hi - lo) / step));
    if (count > 1000000) throw DomainError("lambda range has too many points");
    if (std::abs(lo + double(count) * step - hi) > 1e-9 * std::max(1.0, std::abs(hi))) {
      throw DomainError("lambda range step does not divide hi - lo");
    }
    for (long i = 0; i <= count; ++i) {
      out.emplace_back(count == 0 ? lo : lo + (hi - lo) * double(i) / double(count));
    }
    return out;
  }
  for (const auto& item : split_commas(text)) out.emplace_back(parse_real(item));
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string sweep_csv(const SweepSpec& spec) {
  if (spec.alphas.empty() || spec.lambdas.empty()) throw DomainError("sweep grids must be non-empty");
  const Distribution p = resolve_distribution(spec.source, spec.load);
  const Distribution q = resolve_distribution(spec.target, spec.load);
  std::ostringstream csv;
  csv << "alpha,lambda,divergence\n";
  for (const Alpha& alpha : spec.alphas) {
    for (const Lambda& lambda : spec.lambdas) {
      csv << to_string(alpha) << ',' << format_number(lambda.value()) << ','
          << format_number(evaluate_pair("gs", alpha, lambda, p, q)) << '\n';
    }
  }
  return csv.str();
}

std::string gaussian_sweep_csv(const GaussianSweepSpec& spec) {
  if (spec.alphas.empty() || spec.lambdas.empty()) throw DomainError("sweep grids must be non-empty");
  if (spec.count < 1) throw DomainError("gaussian sweep needs count >= 1");
  const DensityFn reference = gaussian_density(spec.reference_mu, spec.reference_var);
  std::ostringstream csv;
  csv << "j,mu,var,alpha,lambda,divergence\n";
  for (int j = 1; j <= spec.count; ++j) {
    const double mu = spec.mu_start + spec.mu_step * (j - 1);
    const double var = spec.var_start + spec.var_step * (j - 1);
    const DensityFn input = gaussian_density(mu, var);
    for (const Alpha& alpha : spec.alphas) {
      for (const Lambda& lambda : spec.lambdas) {
        csv << j << ',' << format_number(mu) << ',' << format_number(var) << ',' << to_string(alpha) << ','
            << format_number(lambda.value()) << ','
            << format_number(geodesical_skew_continuous(alpha, lambda, input, reference)) << '\n';
      }
    }
  }
  return csv.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-geodesical skew divergence toolkit"};
  app.name("geoskew");
  app.require_subcommand(1);

  ComputeFlags compute;
  auto* cmd_compute = app.add_subcommand("compute", "Evaluate one divergence between two distributions");
  cmd_compute->add_option("--alpha", compute.alpha, "alpha (number, inf or -inf)");
  cmd_compute->add_option("--lambda", compute.lambda, "lambda in [0, 1]");
  cmd_compute->add_option("--p", compute.p, "source: file, binomial:n:p or gaussian:mu:var")->required();
  cmd_compute->add_option("--q", compute.q, "target: file, binomial:n:p or gaussian:mu:var")->required();
  cmd_compute->add_option("--kind", compute.kind, "gs|sym|kl|js|jeffreys|skew|alpha|lower|upper");
  cmd_compute->add_option("--mode", compute.mode, "strict|clamp");
  cmd_compute->add_option("--eps", compute.eps, "clamp floor");

  std::string sweep_alphas = "-1,0,1,3";
  std::string sweep_lambdas = "0:1:0.01";
  std::string sweep_p = "binomial:10:0.3";
  std::string sweep_q = "binomial:10:0.7";
  std::string sweep_out;
  std::string sweep_mode = "strict";
  double sweep_eps = kDefaultClampFloor;
  auto* cmd_sweep = app.add_subcommand("sweep", "Divergence over an alpha x lambda grid, as CSV");
  cmd_sweep->add_option("--alphas,--alpha", sweep_alphas, "comma-separated alphas");
  cmd_sweep->add_option("--lambdas,--lambda", sweep_lambdas, "comma list or lo:hi:step");
  cmd_sweep->add_option("--p", sweep_p, "source distribution");
  cmd_sweep->add_option("--q", sweep_q, "target distribution");
  cmd_sweep->add_option("--out", sweep_out, "output CSV path (stdout if omitted)");
  cmd_sweep->add_option("--mode", sweep_mode, "strict|clamp");
  cmd_sweep->add_option("--eps", sweep_eps, "clamp floor");

  GaussianSweepSpec gspec;
  std::string g_alphas = "-1,0,1,3";
  std::string g_lambdas = "0.5";
  std::string g_out;
  auto* cmd_gauss = app.add_subcommand("gaussian-sweep", "Divergence of a Gaussian family from a Gaussian reference");
  cmd_gauss->add_option("--ref-mu", gspec.reference_mu, "reference mean");
  cmd_gauss->add_option("--ref-var", gspec.reference_var, "reference variance");
  cmd_gauss->add_option("--mu-start", gspec.mu_start, "mean of the first input distribution");
  cmd_gauss->add_option("--var-start", gspec.var_start, "variance of the first input distribution");
  cmd_gauss->add_option("--mu-step", gspec.mu_step, "mean increment");
  cmd_gauss->add_option("--var-step", gspec.var_step, "variance increment");
  cmd_gauss->add_option("--count", gspec.count, "number of input distributions");
  cmd_gauss->add_option("--alphas,--alpha", g_alphas, "comma-separated alphas");
  cmd_gauss->add_option("--lambdas,--lambda", g_lambdas, "comma list or lo:hi:step");
  cmd_gauss->add_option("--out", g_out, "output CSV path (stdout if omitted)");

  VerifyOptions vopts;
  auto* cmd_verify = app.add_subcommand("verify", "Run the property verification suite");
  cmd_verify->add_option("--seed", vopts.seed, "pseudo-random seed");
  cmd_verify->add_option("--samples", vopts.pair_samples, "random pairs per property");
  cmd_verify->add_option("--convexity-samples", vopts.convexity_samples, "random triples for strong convexity");

  try {
    auto args = normalized_args(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (cmd_compute->parsed()) {
      const LoadOptions load{parse_mode(compute.mode), compute.eps};
      const Alpha alpha = parse_alpha(compute.alpha);
      const Lambda lambda(parse_real(compute.lambda));
      const Distribution p = resolve_distribution(compute.p, load);
      const Distribution q = resolve_distribution(compute.q, load);
      out << format_number(evaluate_pair(compute.kind, alpha, lambda, p, q)) << '\n';
      return kSuccess;
    }
    if (cmd_sweep->parsed()) {
      SweepSpec spec;
      spec.alphas = parse_alpha_list(sweep_alphas);
      spec.lambdas = parse_lambda_grid(sweep_lambdas);
      spec.source = sweep_p;
      spec.target = sweep_q;
      spec.load = {parse_mode(sweep_mode), sweep_eps};
      write_output(sweep_out, sweep_csv(spec), out);
      return kSuccess;
    }
    if (cmd_gauss->parsed()) {
      gspec.alphas = parse_alpha_list(g_alphas);
      gspec.lambdas = parse_lambda_grid(g_lambdas);
      write_output(g_out, gaussian_sweep_csv(gspec), out);
      return kSuccess;
    }
    if (cmd_verify->parsed()) {
      if (vopts.pair_samples < 1 || vopts.convexity_samples < 1) throw DomainError("sample counts must be >= 1");
      const VerifyReport report = run_verification(vopts);
      report.print(out);
      return report.passed() ? kSuccess : kVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const QuadratureError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kDomainError;
  }
  return kInputError;
}

}  // namespace geoskew::cli
