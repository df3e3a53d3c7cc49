#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skyq/dataset.hpp"

namespace skyq {

/// Absolute tolerance for score comparisons and tie detection.
inline constexpr double kScoreTolerance = 1e-9;

struct RankedEntry {
  std::string id;
  double score = 0.0;
  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

/// Scores non-decreasing; scores within kScoreTolerance are ordered by id.
struct RankedResult {
  std::vector<RankedEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<std::string> ids() const;
  IdSet idSet() const;
  friend bool operator==(const RankedResult&, const RankedResult&) = default;
};

bool paretoDominates(std::span<const double> t, std::span<const double> r);
bool paretoDominates(const Tuple& t, const Tuple& r);

/// Block-nested-loops skyline.
IdSet skyline(const Dataset& ds);
std::vector<std::size_t> skylineIndices(const Dataset& ds);

/// Tuples with fewer than k Pareto dominators.
IdSet kSkyband(const Dataset& ds, std::size_t k);

double score(std::span<const double> w, std::span<const double> attrs);

/// Throws InvalidArgument unless w has d non-negative components summing to 1.
void requireSimplexWeights(std::span<const double> w, std::size_t d);

/// k smallest weighted sums via bounded-heap selection.
RankedResult topK(const Dataset& ds, std::span<const double> w, std::size_t k);

struct ThresholdTopK {
  RankedResult result;
  std::size_t fullyScored = 0;
};

/// Threshold-algorithm traversal of per-attribute sorted lists. Produces the
/// same result as topK and reports how many tuples were fully scored.
ThresholdTopK topKThreshold(const Dataset& ds, std::span<const double> w, std::size_t k);

/// Applies the global tie rule to scored candidates and keeps the first k.
/// Candidates are (index, score) pairs into ds.
RankedResult rankAndTruncate(const Dataset& ds,
                             std::vector<std::pair<std::size_t, double>> scored,
                             std::size_t k);

}  // namespace skyq
