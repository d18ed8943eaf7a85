#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexity/space.hpp"

namespace convexity {

struct PropertyResult {
  std::string module;
  std::string property;
  bool passed = true;
  std::string witness;  // set on failure
};

struct SelftestSummary {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool ok() const;
  std::size_t failures() const;
};

struct SelftestOptions {
  std::uint64_t seed = 0;
  /// Extra explicit space whose axioms are checked (corrupt files must fail).
  std::optional<SpaceDescriptor> fixture;
};

/// Runs the property suite across all modules at desk scale. Random
/// instances depend on the seed; outcomes must not.
SelftestSummary run_selftest(const SelftestOptions& options);

}  // namespace convexity
