#include "skyq/representative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "skyq/classic.hpp"
#include "skyq/error.hpp"

namespace skyq {

namespace {

// Skyline members in id order.
std::vector<std::size_t> skylineById(const Dataset& ds) {
  auto sky = skylineIndices(ds);
  std::sort(sky.begin(), sky.end(), [&](std::size_t a, std::size_t b) { return ds[a].id < ds[b].id; });
  return sky;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<std::size_t> resolveChosen(const Dataset& ds, const IdSet& chosen,
                                       const std::vector<std::size_t>& sky) {
  std::vector<std::size_t> out;
  for (const auto& id : chosen) {
    auto idx = ds.indexOf(id);
    if (!idx || std::find(sky.begin(), sky.end(), *idx) == sky.end())
      throw InvalidArgument("'" + id + "' is not a skyline tuple");
    out.push_back(*idx);
  }
  return out;
}

// covers[i][j]: skyline member i dominates non-skyline tuple j
struct CoverageTable {
  std::vector<std::vector<bool>> covers;

  CoverageTable(const Dataset& ds, const std::vector<std::size_t>& sky) {
    std::vector<bool> inSky(ds.size(), false);
    for (std::size_t s : sky) inSky[s] = true;
    for (std::size_t s : sky) {
      std::vector<bool> row(ds.size(), false);
      for (std::size_t j = 0; j < ds.size(); ++j)
        row[j] = !inSky[j] && paretoDominates(ds[s].attrs, ds[j].attrs);
      covers.push_back(std::move(row));
    }
  }

  std::size_t count(std::span<const std::size_t> picks) const {
    if (covers.empty()) return 0;
    std::size_t n = 0;
    for (std::size_t j = 0; j < covers.front().size(); ++j)
      for (std::size_t p : picks)
        if (covers[p][j]) {
          ++n;
          break;
        }
    return n;
  }
};

// Objective over positions into `sky`.
double kCenterObjective(const Dataset& ds, const std::vector<std::size_t>& sky,
                        std::span<const std::size_t> picks) {
  double worst = 0.0;
  for (std::size_t i = 0; i < sky.size(); ++i) {
    if (std::find(picks.begin(), picks.end(), i) != picks.end()) continue;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t p : picks) nearest = std::min(nearest, euclidean(ds[sky[i]].attrs, ds[sky[p]].attrs));
    worst = std::max(worst, nearest);
  }
  return worst;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Visits k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void forEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void checkBudget(std::size_t n, std::size_t k) {
  if (binomial(n, k) > kExactSubsetBudget)
    throw BudgetExceeded("exact search over C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") subsets exceeds the budget");
}

std::vector<std::string> toIds(const Dataset& ds, const std::vector<std::size_t>& sky,
                               std::span<const std::size_t> picks) {
  std::vector<std::string> out;
  for (std::size_t p : picks) out.push_back(ds[sky[p]].id);
  return out;
}

}  // namespace

std::size_t coverage(const Dataset& ds, const IdSet& chosen) {
  const auto sky = skylineById(ds);
  const auto picks = resolveChosen(ds, chosen, sky);
  std::vector<std::size_t> positions;
  for (std::size_t p : picks)
    positions.push_back(static_cast<std::size_t>(std::find(sky.begin(), sky.end(), p) - sky.begin()));
  return CoverageTable(ds, sky).count(positions);
}

double distanceObjective(const Dataset& ds, const IdSet& chosen) {
  const auto sky = skylineById(ds);
  const auto picks = resolveChosen(ds, chosen, sky);
  if (picks.empty()) return sky.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  std::vector<std::size_t> positions;
  for (std::size_t p : picks)
    positions.push_back(static_cast<std::size_t>(std::find(sky.begin(), sky.end(), p) - sky.begin()));
  return kCenterObjective(ds, sky, positions);
}

std::vector<std::string> dominanceRepresentative(const Dataset& ds, std::size_t k,
                                                 SolverMode mode) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const auto sky = skylineById(ds);
  const std::size_t size = std::min(k, sky.size());
  if (size == 0) return {};
  const CoverageTable table(ds, sky);

  if (mode == SolverMode::Exact) {
    checkBudget(sky.size(), size);
    std::vector<std::size_t> best;
    std::size_t bestCount = 0;
    forEachCombination(sky.size(), size, [&](std::span<const std::size_t> picks) {
      const std::size_t c = table.count(picks);
      if (best.empty() || c > bestCount) {
        best.assign(picks.begin(), picks.end());
        bestCount = c;
      }
    });
    return toIds(ds, sky, best);
  }

  std::vector<std::size_t> picks;
  std::vector<bool> covered(ds.size(), false), picked(sky.size(), false);
  while (picks.size() < size) {
    std::size_t bestPos = sky.size(), bestGain = 0;
    for (std::size_t i = 0; i < sky.size(); ++i) {
      if (picked[i]) continue;
      std::size_t gain = 0;
      for (std::size_t j = 0; j < ds.size(); ++j) gain += table.covers[i][j] && !covered[j];
      if (bestPos == sky.size() || gain > bestGain) {
        bestPos = i;
        bestGain = gain;
      }
    }
    picked[bestPos] = true;
    picks.push_back(bestPos);
    for (std::size_t j = 0; j < ds.size(); ++j) covered[j] = covered[j] || table.covers[bestPos][j];
  }
  return toIds(ds, sky, picks);
}

std::vector<std::string> distanceRepresentative(const Dataset& ds, std::size_t k,
                                                SolverMode mode) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const auto sky = skylineById(ds);
  const std::size_t size = std::min(k, sky.size());
  if (size == 0) return {};

  if (mode == SolverMode::Exact) {
    checkBudget(sky.size(), size);
    std::vector<std::size_t> best;
    double bestValue = std::numeric_limits<double>::infinity();
    forEachCombination(sky.size(), size, [&](std::span<const std::size_t> picks) {
      const double value = kCenterObjective(ds, sky, picks);
      if (best.empty() || value < bestValue - 1e-12) {
        best.assign(picks.begin(), picks.end());
        bestValue = value;
      }
    });
    return toIds(ds, sky, best);
  }

  auto dist = [&](std::size_t a, std::size_t b) { return euclidean(ds[sky[a]].attrs, ds[sky[b]].attrs); };
  // seed: the skyline tuple closest to all others in the max sense
  std::size_t seed = 0;
  double seedRadius = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sky.size(); ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < sky.size(); ++j) radius = std::max(radius, dist(i, j));
    if (radius < seedRadius - 1e-12) {
      seed = i;
      seedRadius = radius;
    }
  }
  std::vector<std::size_t> picks{seed};
  std::vector<double> nearest(sky.size());
  for (std::size_t i = 0; i < sky.size(); ++i) nearest[i] = dist(i, seed);
  while (picks.size() < size) {
    std::size_t far = sky.size();
    for (std::size_t i = 0; i < sky.size(); ++i) {
      if (std::find(picks.begin(), picks.end(), i) != picks.end()) continue;
      if (far == sky.size() || nearest[i] > nearest[far] + 1e-12) far = i;
    }
    picks.push_back(far);
    for (std::size_t i = 0; i < sky.size(); ++i) nearest[i] = std::min(nearest[i], dist(i, far));
  }
  return toIds(ds, sky, picks);
}

}  // namespace skyq
