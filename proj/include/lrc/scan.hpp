#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/classifier.hpp"

namespace lrc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sweep over exact parameter grids. Each scalar parameter draws from a
/// named set of rationals; the equality-constrained families solve their
/// constraint for one parameter instead of filtering.
struct ScanConfig {
  std::vector<Family> families;
  std::vector<Flavor> flavors;
  std::map<std::string, std::vector<Rational>> parameter_sets;
  /// "alpha" / "beta" / "gamma" / "delta" -> name of a parameter set.
  std::map<std::string, std::string> parameters;
  std::vector<int> eta{-1, 1};
  /// Add points on the boundary manifolds of the case predicates.
  bool boundaries = true;
  /// Extra explicit points, appended to the grid of their family.
  std::vector<std::pair<Family, Params>> points;
};

ScanConfig default_scan_config();

/// Throws ConfigError when a referenced set is missing, a family or flavor
/// is Custom/Levi-Civita, or eta is not +-1.
void validate(const ScanConfig& config);

/// Sorted, duplicate-free, constraint-satisfying points for one family.
std::vector<Params> grid_points(Family family, const ScanConfig& config);

struct ScanSummary {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t uncovered = 0;

  std::size_t total() const { return match + mismatch + uncovered; }
  double match_fraction() const {
    return total() == 0 ? 1.0 : static_cast<double>(match) / static_cast<double>(total());
  }
  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

ScanSummary summarize(const std::vector<CaseReport>& reports);

struct ScanResult {
  std::vector<CaseReport> reports;  // sorted by report_less
  ScanSummary summary;
};

/// Evaluates every (family, flavor, point). threads == 0 picks the hardware
/// concurrency; the output order never depends on it.
ScanResult scan(const ScanConfig& config, unsigned threads = 0);

}  // namespace lrc
