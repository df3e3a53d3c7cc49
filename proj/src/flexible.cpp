#include "skyq/flexible.hpp"

#include <algorithm>
#include <numeric>

#include "skyq/classic.hpp"
#include "skyq/error.hpp"

namespace skyq {

LinearConstraint constraintFromPreference(const Tuple& preferred, const Tuple& other) {
  if (preferred.dim() != other.dim()) throw InvalidArgument("dimension mismatch");
  if (preferred.attrs == other.attrs) throw InvalidArgument("uninformative preference");
  LinearConstraint c;
  c.coeffs.resize(preferred.dim());
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    c.coeffs[i] = preferred.attrs[i] - other.attrs[i];
  c.relation = Relation::Less;
  c.rhs = 0.0;
  return c;
}

bool fDominates(std::span<const double> r1, std::span<const double> r2,
                const RegionOptimizer& optimizer) {
  if (r1.size() != r2.size() || r1.size() != optimizer.dim())
    throw InvalidArgument("dimension mismatch");
  std::vector<double> c(r1.size());
  bool zero = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = r1[i] - r2[i];
    zero = zero && c[i] == 0.0;
  }
  if (optimizer.empty()) throw EmptyRegion();
  if (zero) return false;
  return optimizer.maximize(c).value <= kStrictMargin &&
         optimizer.minimize(c).value < -kStrictMargin;
}

bool fDominates(const Tuple& r1, const Tuple& r2, const WeightRegion& region) {
  return fDominates(r1.attrs, r2.attrs, RegionOptimizer(region));
}

std::vector<std::size_t> ndIndices(const Dataset& ds, const RegionOptimizer& optimizer) {
  if (optimizer.empty()) throw EmptyRegion();
  if (ds.dim() != optimizer.dim()) throw InvalidArgument("dimension mismatch");
  const std::size_t n = ds.size();
  // Try likely dominators first: low scores at an interior weight vector.
  const auto probe = optimizer.interiorPoint();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> probeScore(n);
  for (std::size_t i = 0; i < n; ++i) probeScore[i] = score(probe, ds[i].attrs);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return probeScore[a] < probeScore[b]; });

  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < n; ++r) {
    bool dominated = false;
    for (std::size_t t : order) {
      if (t == r) continue;
      if (fDominates(ds[t].attrs, ds[r].attrs, optimizer)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(r);
  }
  return out;
}

IdSet nd(const Dataset& ds, const WeightRegion& region) {
  RegionOptimizer optimizer(region);
  IdSet out;
  for (std::size_t i : ndIndices(ds, optimizer)) out.insert(ds[i].id);
  return out;
}

std::vector<std::size_t> poIndices(const Dataset& ds, const RegionOptimizer& optimizer,
                                   Optimality optimality) {
  const bool strict = optimality == Optimality::Strict;
  // Strict optimality implies non-domination, so only ND members are tested.
  // The weak variant is checked against the whole dataset.
  std::vector<std::size_t> candidates;
  if (strict) {
    candidates = ndIndices(ds, optimizer);
  } else {
    if (optimizer.empty()) throw EmptyRegion();
    candidates.resize(ds.size());
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  }
  std::vector<std::size_t> out;
  std::vector<std::vector<double>> deltas;
  for (std::size_t target : candidates) {
    deltas.clear();
    for (std::size_t r = 0; r < ds.size(); ++r) {
      if (r == target) continue;
      std::vector<double> delta(ds.dim());
      for (std::size_t i = 0; i < delta.size(); ++i)
        delta[i] = ds[target].attrs[i] - ds[r].attrs[i];
      deltas.push_back(std::move(delta));
    }
    if (findWinningWeight(optimizer, deltas, strict).exists) out.push_back(target);
  }
  return out;
}

IdSet po(const Dataset& ds, const WeightRegion& region, Optimality optimality) {
  RegionOptimizer optimizer(region);
  IdSet out;
  for (std::size_t i : poIndices(ds, optimizer, optimality)) out.insert(ds[i].id);
  return out;
}

}  // namespace skyq
