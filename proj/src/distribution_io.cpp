#include "geoskew/distribution_io.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace geoskew {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, const std::string& context) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("cannot parse number '" + std::string(token) + "' in " + context);
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

ProbVec to_prob_vec(const std::vector<double>& raw, bool renormalize, const LoadOptions& options) {
  if (raw.empty()) throw ParseError("distribution has no weights");
  if (!renormalize && options.policy == ZeroPolicy::strict) {
    return ProbVec(Eigen::Map<const Eigen::VectorXd>(raw.data(), Eigen::Index(raw.size())));
  }
  return normalize(std::span<const double>(raw), options.policy, options.clamp_floor);
}

ProbVec parse_json_weights(std::string_view text, const LoadOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON distribution: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array()) {
    throw ParseError("JSON distribution must be an object with a \"weights\" array");
  }
  bool renormalize = true;
  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean()) throw ParseError("\"normalize\" must be true or false");
    renormalize = doc["normalize"].get<bool>();
  }
  std::vector<double> raw;
  for (const auto& w : doc["weights"]) {
    if (!w.is_number()) throw ParseError("\"weights\" must contain only numbers");
    raw.push_back(w.get<double>());
  }
  return to_prob_vec(raw, renormalize, options);
}

ProbVec parse_csv_weights(std::string_view text, const LoadOptions& options) {
  std::vector<double> raw;
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    raw.push_back(parse_number(line, "line " + std::to_string(line_no)));
  }
  return to_prob_vec(raw, true, options);
}

}  // namespace

ProbVec parse_weights(std::string_view text, const LoadOptions& options) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_weights(body, options);
  return parse_csv_weights(body, options);
}

ProbVec load_weights_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open distribution file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read distribution file '" + path + "'");
  return parse_weights(buffer.str(), options);
}

Distribution resolve_distribution(const std::string& descriptor, const LoadOptions& options) {
  const auto parts = split(descriptor, ':');
  if (parts.size() == 3 && parts[0] == "binomial") {
    const double n = parse_number(parts[1], "binomial descriptor");
    if (n != std::floor(n) || n < 1 || n > 1e6) throw DomainError("binomial n must be a positive integer");
    return binomial_pmf(static_cast<int>(n), parse_number(parts[2], "binomial descriptor"));
  }
  if (parts.size() == 3 && parts[0] == "gaussian") {
    return gaussian_density(parse_number(parts[1], "gaussian descriptor"),
                            parse_number(parts[2], "gaussian descriptor"));
  }
  if (parts[0] == "binomial" || parts[0] == "gaussian") {
    throw ParseError("generator descriptor '" + descriptor + "' must look like " + std::string(parts[0]) +
                     ":<a>:<b>");
  }
  return load_weights_file(descriptor, options);
}

}  // namespace geoskew
