#include "skyq/classic.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <queue>

#include "skyq/error.hpp"

namespace skyq {

std::vector<std::string> RankedResult::ids() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.id);
  return out;
}

IdSet RankedResult::idSet() const {
  IdSet out;
  for (const auto& e : entries) out.insert(e.id);
  return out;
}

bool paretoDominates(std::span<const double> t, std::span<const double> r) {
  if (t.size() != r.size()) throw InvalidArgument("dimension mismatch");
  bool strict = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > r[i]) return false;
    if (t[i] < r[i]) strict = true;
  }
  return strict;
}

bool paretoDominates(const Tuple& t, const Tuple& r) {
  return paretoDominates(t.attrs, r.attrs);
}

std::vector<std::size_t> skylineIndices(const Dataset& ds) {
  // In-memory window; every tuple fits so no overflow pass is needed.
  std::list<std::size_t> window;
  for (std::size_t p = 0; p < ds.size(); ++p) {
    const auto& candidate = ds[p].attrs;
    bool dominated = false;
    for (auto it = window.begin(); it != window.end();) {
      const auto& resident = ds[*it].attrs;
      if (paretoDominates(resident, candidate)) {
        dominated = true;
        break;
      }
      if (paretoDominates(candidate, resident))
        it = window.erase(it);
      else
        ++it;
    }
    if (!dominated) window.push_back(p);
  }
  std::vector<std::size_t> out(window.begin(), window.end());
  std::sort(out.begin(), out.end());
  return out;
}

IdSet skyline(const Dataset& ds) {
  IdSet out;
  for (std::size_t i : skylineIndices(ds)) out.insert(ds[i].id);
  return out;
}

IdSet kSkyband(const Dataset& ds, std::size_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  IdSet out;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    std::size_t dominators = 0;
    for (std::size_t t = 0; t < ds.size() && dominators < k; ++t)
      if (t != r && paretoDominates(ds[t].attrs, ds[r].attrs)) ++dominators;
    if (dominators < k) out.insert(ds[r].id);
  }
  return out;
}

double score(std::span<const double> w, std::span<const double> attrs) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * attrs[i];
  return s;
}

void requireSimplexWeights(std::span<const double> w, std::size_t d) {
  if (w.size() != d)
    throw InvalidArgument("weight vector has " + std::to_string(w.size()) +
                          " components, expected " + std::to_string(d));
  double sum = 0.0;
  for (double x : w) {
    if (!std::isfinite(x) || x < 0.0) throw InvalidArgument("weights must be >= 0");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("weights must sum to 1");
}

RankedResult rankAndTruncate(const Dataset& ds,
                             std::vector<std::pair<std::size_t, double>> scored,
                             std::size_t k) {
  auto byId = [&](const auto& a, const auto& b) { return ds[a.first].id < ds[b.first].id; };
  std::sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return byId(a, b);
  });
  // runs of scores within tolerance of their neighbour are ordered by id
  for (std::size_t start = 0; start < scored.size();) {
    std::size_t end = start + 1;
    while (end < scored.size() &&
           scored[end].second - scored[end - 1].second <= kScoreTolerance)
      ++end;
    std::sort(scored.begin() + start, scored.begin() + end, byId);
    start = end;
  }
  RankedResult out;
  for (std::size_t i = 0; i < scored.size() && i < k; ++i)
    out.entries.push_back({ds[scored[i].first].id, scored[i].second});
  return out;
}

namespace {

void validateTopK(const Dataset& ds, std::span<const double> w, std::size_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  requireSimplexWeights(w, ds.dim());
}

// Exact (score, id) order used for heap selection.
struct HeapLess {
  const Dataset* ds;
  bool operator()(const std::pair<std::size_t, double>& a,
                  const std::pair<std::size_t, double>& b) const {
    if (a.second != b.second) return a.second < b.second;
    return (*ds)[a.first].id < (*ds)[b.first].id;
  }
};

// Everything within tolerance of the k-th exact score, so the tie rule can
// reorder across the cut.
RankedResult finishSelection(const Dataset& ds,
                             const std::vector<std::pair<std::size_t, double>>& scored,
                             std::size_t k) {
  if (scored.size() <= k) return rankAndTruncate(ds, scored, k);
  std::priority_queue<std::pair<std::size_t, double>,
                      std::vector<std::pair<std::size_t, double>>, HeapLess>
      heap(HeapLess{&ds});
  for (const auto& entry : scored) {
    if (heap.size() < k) {
      heap.push(entry);
    } else if (HeapLess{&ds}(entry, heap.top())) {
      heap.pop();
      heap.push(entry);
    }
  }
  const double kth = heap.top().second;
  std::vector<std::pair<std::size_t, double>> gathered;
  for (const auto& entry : scored)
    if (entry.second <= kth + kScoreTolerance) gathered.push_back(entry);
  return rankAndTruncate(ds, std::move(gathered), k);
}

}  // namespace

RankedResult topK(const Dataset& ds, std::span<const double> w, std::size_t k) {
  validateTopK(ds, w, k);
  std::vector<std::pair<std::size_t, double>> scored;
  scored.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) scored.emplace_back(i, score(w, ds[i].attrs));
  return finishSelection(ds, scored, k);
}

ThresholdTopK topKThreshold(const Dataset& ds, std::span<const double> w, std::size_t k) {
  validateTopK(ds, w, k);
  const std::size_t n = ds.size();
  const std::size_t d = ds.dim();

  std::vector<std::vector<std::size_t>> lists(d, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < d; ++a) {
    std::iota(lists[a].begin(), lists[a].end(), std::size_t{0});
    std::stable_sort(lists[a].begin(), lists[a].end(), [&](std::size_t x, std::size_t y) {
      return ds[x].attrs[a] < ds[y].attrs[a];
    });
  }

  std::vector<bool> seen(n, false);
  std::vector<std::pair<std::size_t, double>> scored;
  std::priority_queue<double> best;  // k smallest scores seen so far
  for (std::size_t depth = 0; depth < n; ++depth) {
    double threshold = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      const std::size_t idx = lists[a][depth];
      threshold += w[a] * ds[idx].attrs[a];
      if (seen[idx]) continue;
      seen[idx] = true;
      const double s = score(w, ds[idx].attrs);
      scored.emplace_back(idx, s);
      best.push(s);
      if (best.size() > k) best.pop();
    }
    // unseen tuples score at least `threshold`; stop once none can tie in
    if (best.size() == k && best.top() + kScoreTolerance < threshold) break;
  }
  ThresholdTopK out;
  out.fullyScored = scored.size();
  out.result = finishSelection(ds, scored, k);
  return out;
}

}  // namespace skyq
