#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "geoskew/density.hpp"
#include "geoskew/measures.hpp"

namespace geoskew {

using Distribution = std::variant<ProbVec, DensityFn>;

struct LoadOptions {
  ZeroPolicy policy = ZeroPolicy::strict;
  double clamp_floor = kDefaultClampFloor;
};

/// Parses a weight document: either a JSON object {"weights": [...],
/// "normalize": bool} or CSV text with one weight per line and no header.
ProbVec parse_weights(std::string_view text, const LoadOptions& options = {});

/// Reads a distribution file (JSON or CSV, detected from the content).
ProbVec load_weights_file(const std::string& path, const LoadOptions& options = {});

/// Resolves `binomial:<n>:<p>`, `gaussian:<mu>:<var>` or a file path.
Distribution resolve_distribution(const std::string& descriptor, const LoadOptions& options = {});

}  // namespace geoskew
