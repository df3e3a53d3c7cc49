#include "skyq/oss.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "skyq/classic.hpp"
#include "skyq/error.hpp"
#include "skyq/flexible.hpp"

namespace skyq {

namespace {

void validate(const Dataset& ds, std::span<const double> w, double rho, std::size_t kDepth) {
  requireSimplexWeights(w, ds.dim());
  if (!(rho >= 0.0)) throw InvalidArgument("rho must be >= 0");
  if (kDepth < 1) throw InvalidArgument("kDepth must be >= 1");
}

void validateSize(const Dataset& ds, std::size_t m) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (m > ds.size())
    throw InvalidArgument("m = " + std::to_string(m) + " exceeds dataset size " +
                          std::to_string(ds.size()));
}

std::vector<std::size_t> nonDominatedIndices(const Dataset& ds, const RegionOptimizer& opt,
                                             std::size_t kDepth) {
  if (kDepth == 1) return ndIndices(ds, opt);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    std::size_t dominators = 0;
    for (std::size_t t = 0; t < ds.size() && dominators < kDepth; ++t)
      if (t != r && fDominates(ds[t].attrs, ds[r].attrs, opt)) ++dominators;
    if (dominators < kDepth) out.push_back(r);
  }
  return out;
}

bool isTopDepthSomewhere(const Dataset& ds, const RegionOptimizer& opt, std::size_t target,
                         std::size_t kDepth) {
  std::vector<std::vector<double>> deltas;
  deltas.reserve(ds.size());
  for (std::size_t r = 0; r < ds.size(); ++r) {
    if (r == target) continue;
    std::vector<double> delta(ds.dim());
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = ds[target].attrs[i] - ds[r].attrs[i];
    deltas.push_back(std::move(delta));
  }
  return findWinningWeight(opt, deltas, true, kDepth - 1).exists;
}

std::vector<std::size_t> oruIndices(const Dataset& ds, std::span<const double> w, double rho,
                                    std::size_t kDepth) {
  RegionOptimizer opt(ballRegion(w, rho));
  // a top-kDepth tuple has fewer than kDepth rho-dominators
  std::vector<std::size_t> out;
  for (std::size_t t : nonDominatedIndices(ds, opt, kDepth))
    if (isTopDepthSomewhere(ds, opt, t, kDepth)) out.push_back(t);
  return out;
}

// Least radius on the bisection grid of [0, kMaxRadius] where `holds` becomes
// true; `holds` must be monotone in the radius. Returns the final bracket.
std::pair<double, double> bracketThreshold(const std::function<bool(double)>& holds) {
  if (holds(0.0)) return {0.0, 0.0};
  double lo = 0.0, hi = kMaxRadius;
  while (hi - lo > kRadiusTolerance) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return {lo, hi};
}

double reportedRadius(std::pair<double, double> bracket) {
  return bracket.second == 0.0 ? 0.0 : 0.5 * (bracket.first + bracket.second);
}

}  // namespace

WeightRegion ballRegion(std::span<const double> w, double rho) {
  return WeightRegion::ball(std::vector<double>(w.begin(), w.end()), rho);
}

bool rhoDominates(const Tuple& r1, const Tuple& r2, std::span<const double> w, double rho) {
  requireSimplexWeights(w, r1.dim());
  if (!(rho >= 0.0)) throw InvalidArgument("rho must be >= 0");
  return fDominates(r1, r2, ballRegion(w, rho));
}

IdSet nonRhoDominated(const Dataset& ds, std::span<const double> w, double rho,
                      std::size_t kDepth) {
  validate(ds, w, rho, kDepth);
  RegionOptimizer opt(ballRegion(w, rho));
  IdSet out;
  for (std::size_t i : nonDominatedIndices(ds, opt, kDepth)) out.insert(ds[i].id);
  return out;
}

IdSet oruMembers(const Dataset& ds, std::span<const double> w, double rho, std::size_t kDepth) {
  validate(ds, w, rho, kDepth);
  IdSet out;
  for (std::size_t i : oruIndices(ds, w, rho, kDepth)) out.insert(ds[i].id);
  return out;
}

OssResult ord(const Dataset& ds, std::span<const double> w, std::size_t m, std::size_t kDepth) {
  validate(ds, w, 0.0, kDepth);
  validateSize(ds, m);
  auto survivors = [&](double rho) {
    return nonDominatedIndices(ds, RegionOptimizer(ballRegion(w, rho)), kDepth);
  };
  const auto widest = survivors(kMaxRadius);
  if (widest.size() < m) throw Unreachable(m, widest.size());

  const auto bracket =
      bracketThreshold([&](double rho) { return survivors(rho).size() >= m; });
  std::vector<std::pair<std::size_t, double>> scored;
  for (std::size_t i : survivors(bracket.second)) scored.emplace_back(i, score(w, ds[i].attrs));
  OssResult out;
  out.ids = rankAndTruncate(ds, std::move(scored), m).ids();
  out.rhoStar = reportedRadius(bracket);
  out.kDepth = kDepth;
  return out;
}

OssResult oru(const Dataset& ds, std::span<const double> w, std::size_t m, std::size_t kDepth) {
  validate(ds, w, 0.0, kDepth);
  validateSize(ds, m);
  const auto widest = oruIndices(ds, w, kMaxRadius, kDepth);
  if (widest.size() < m) throw Unreachable(m, widest.size());

  const auto bracket =
      bracketThreshold([&](double rho) { return oruIndices(ds, w, rho, kDepth).size() >= m; });
  const auto members = oruIndices(ds, w, bracket.second, kDepth);

  // entry radius of each member on the same bisection grid
  struct Entry {
    double radius;
    double score;
    std::size_t index;
  };
  std::vector<Entry> entries;
  for (std::size_t t : members) {
    const auto own = bracketThreshold([&](double rho) {
      return isTopDepthSomewhere(ds, RegionOptimizer(ballRegion(w, rho)), t, kDepth);
    });
    entries.push_back({own.second, score(w, ds[t].attrs), t});
  }
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    if (std::abs(a.score - b.score) > kScoreTolerance) return a.score < b.score;
    return ds[a.index].id < ds[b.index].id;
  });
  OssResult out;
  for (std::size_t i = 0; i < entries.size() && i < m; ++i) out.ids.push_back(ds[entries[i].index].id);
  out.rhoStar = reportedRadius(bracket);
  out.kDepth = kDepth;
  return out;
}

}  // namespace skyq
