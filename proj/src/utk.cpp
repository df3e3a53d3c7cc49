#include "skyq/utk.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "skyq/classic.hpp"
#include "skyq/error.hpp"

namespace skyq {

namespace {

void validate(const Dataset& ds, std::size_t k, const WeightRegion& region) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (!region.isPolytope()) throw InvalidArgument("UTK regions must be polytopes");
  if (region.dim() != ds.dim()) throw InvalidArgument("dimension mismatch");
  if (ds.dim() > kMaxGridDim)
    throw Unsupported("UTK supports at most " + std::to_string(kMaxGridDim) + " dimensions");
  if (isEmpty(region)) throw EmptyRegion();
}

std::vector<PartitionCell> exactCells(const Dataset& ds, std::size_t k, const WeightRegion& region,
                                      CellLabel labelling) {
  const auto [lo, hi] = intervalOf(region);
  std::vector<double> cuts{lo};
  for (double b : orderBreakpoints(ds, lo, hi)) cuts.push_back(b);
  if (hi > lo) cuts.push_back(hi);

  std::vector<PartitionCell> cells;
  auto labelAt = [&](double v1, PartitionCell& cell) {
    const std::vector<double> w{v1, 1.0 - v1};
    const RankedResult top = topK(ds, w, k);
    cell.label = top.idSet();
    cell.order = top.ids();
  };
  if (cuts.size() == 1) {
    PartitionCell cell;
    cell.lo = cell.hi = lo;
    labelAt(lo, cell);
    return {cell};
  }
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    PartitionCell cell;
    cell.lo = cuts[i];
    cell.hi = cuts[i + 1];
    labelAt(0.5 * (cell.lo + cell.hi), cell);
    const bool same = !cells.empty() && (labelling == CellLabel::Set
                                             ? cells.back().label == cell.label
                                             : cells.back().order == cell.order);
    if (same)
      cells.back().hi = cell.hi;
    else
      cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<PartitionCell> sampledCells(const Dataset& ds, std::size_t k,
                                        const WeightRegion& region, CellLabel labelling) {
  // lattice points plus the vertices and an interior point, so thin regions
  // still get samples
  auto points = gridSample(region, kUtkGridResolution);
  RegionOptimizer opt(region);
  for (const auto& v : opt.vertices()) points.push_back(v);
  points.push_back(opt.interiorPoint());

  std::vector<PartitionCell> cells;
  std::map<std::vector<std::string>, std::size_t> byKey;
  for (const auto& v : points) {
    const RankedResult top = topK(ds, v, k);
    std::vector<std::string> key = top.ids();
    if (labelling == CellLabel::Set) std::sort(key.begin(), key.end());
    auto [it, inserted] = byKey.emplace(key, cells.size());
    if (inserted) {
      PartitionCell cell;
      cell.kind = PartitionCell::Kind::SampleCloud;
      cell.exact = false;
      cell.label = top.idSet();
      cell.order = top.ids();
      cells.push_back(std::move(cell));
    }
    cells[it->second].samples.push_back(v);
  }
  return cells;
}

}  // namespace

std::vector<double> orderBreakpoints(const Dataset& ds, double lo, double hi) {
  if (ds.dim() != 2) throw InvalidArgument("order breakpoints need two-dimensional data");
  std::vector<double> roots;
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = a + 1; b < ds.size(); ++b) {
      const auto& t = ds[a].attrs;
      const auto& u = ds[b].attrs;
      const double denom = (t[0] - u[0]) - (t[1] - u[1]);
      if (std::abs(denom) <= 1e-12) continue;
      const double root = (u[1] - t[1]) / denom;
      if (root > lo && root < hi) roots.push_back(root);
    }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
  return out;
}

std::vector<double> orderBreakpoints(const Dataset& ds, const WeightRegion& region) {
  const auto [lo, hi] = intervalOf(region);
  return orderBreakpoints(ds, lo, hi);
}

std::vector<PartitionCell> utk2(const Dataset& ds, std::size_t k, const WeightRegion& region,
                                CellLabel labelling) {
  validate(ds, k, region);
  if (ds.empty()) throw InvalidArgument("UTK needs a non-empty dataset");
  if (ds.dim() == 2) return exactCells(ds, k, region, labelling);
  if (ds.dim() == 1) {
    PartitionCell cell;
    cell.lo = cell.hi = 1.0;
    const RankedResult top = topK(ds, std::vector<double>{1.0}, k);
    cell.label = top.idSet();
    cell.order = top.ids();
    return {cell};
  }
  return sampledCells(ds, k, region, labelling);
}

Utk1Result utk1(const Dataset& ds, std::size_t k, const WeightRegion& region) {
  Utk1Result out;
  for (const auto& cell : utk2(ds, k, region)) {
    out.ids.insert(cell.label.begin(), cell.label.end());
    out.exact = out.exact && cell.exact;
  }
  return out;
}

}  // namespace skyq
