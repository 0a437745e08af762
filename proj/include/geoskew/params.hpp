#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geoskew {

/// Raised when an argument lies outside the documented domain of an operation
/// (non-positive masses, mismatched lengths, parameters out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for inputs that are valid values but are not handled by a given
/// kernel, e.g. an infinite alpha passed to f_alpha.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Divergence-family parameter on the extended real line.
class Alpha {
 public:
  constexpr Alpha() = default;
  explicit Alpha(double value) : value_(value) {
    if (std::isnan(value)) throw DomainError("alpha must not be NaN");
  }

  static Alpha plus_infinity() { return Alpha(std::numeric_limits<double>::infinity()); }
  static Alpha minus_infinity() { return Alpha(-std::numeric_limits<double>::infinity()); }

  double value() const { return value_; }
  bool is_finite() const { return std::isfinite(value_); }
  bool is_plus_infinity() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool is_minus_infinity() const { return value_ == -std::numeric_limits<double>::infinity(); }

  Alpha operator-() const { return Alpha(-value_); }

  friend auto operator<=>(const Alpha&, const Alpha&) = default;

 private:
  double value_ = 0.0;
};

/// Interpolation weight in [0, 1].
class Lambda {
 public:
  constexpr Lambda() = default;
  explicit Lambda(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("lambda must lie in [0, 1], got " + std::to_string(value));
    }
  }

  double value() const { return value_; }
  double complement() const { return 1.0 - value_; }

  friend auto operator<=>(const Lambda&, const Lambda&) = default;

 private:
  double value_ = 0.0;
};

/// Power-mean exponent u = (1 - alpha) / 2 for finite alpha.
class UExponent {
 public:
  explicit UExponent(Alpha alpha) {
    if (!alpha.is_finite()) throw UnsupportedError("u exponent is undefined for infinite alpha");
    value_ = (1.0 - alpha.value()) / 2.0;
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// Parses "inf", "+inf", "-inf" (any case) or a decimal/scientific number.
inline Alpha parse_alpha(std::string_view text) {
  auto lowered = std::string(text);
  for (auto& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lowered == "inf" || lowered == "+inf" || lowered == "infinity" || lowered == "+infinity") {
    return Alpha::plus_infinity();
  }
  if (lowered == "-inf" || lowered == "-infinity") return Alpha::minus_infinity();

  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
    throw ParseError("cannot parse alpha from '" + std::string(text) + "'");
  }
  if (std::isnan(value)) throw ParseError("alpha must not be NaN");
  return Alpha(value);
}

/// Shortest text that parses back to the same alpha.
inline std::string to_string(Alpha alpha) {
  if (alpha.is_plus_infinity()) return "inf";
  if (alpha.is_minus_infinity()) return "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), alpha.value());
  return std::string(buf, ptr);
}

}  // namespace geoskew
