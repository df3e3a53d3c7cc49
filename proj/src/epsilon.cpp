#include "skyq/epsilon.hpp"

#include "skyq/classic.hpp"
#include "skyq/error.hpp"

namespace skyq {

namespace {

void requireEps(double eps) {
  if (!(eps >= -1.0 && eps <= 1.0)) throw InvalidArgument("eps must lie in [-1, 1]");
}

bool dominates(std::span<const double> r1, std::span<const double> r2, std::span<const double> w,
               double eps) {
  bool better = false;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    if (w[i] * r1[i] > w[i] * r2[i] + eps) return false;
    better = better || r1[i] < r2[i];
  }
  return better;
}

}  // namespace

bool epsilonDominates(const Tuple& r1, const Tuple& r2, std::span<const double> w, double eps) {
  if (r1.dim() != r2.dim()) throw InvalidArgument("dimension mismatch");
  requireSimplexWeights(w, r1.dim());
  requireEps(eps);
  for (const Tuple* t : {&r1, &r2})
    for (double x : t->attrs)
      if (x > 1.0) throw DataError("eps-dominance needs attributes in [0,1]");
  return dominates(r1.attrs, r2.attrs, w, eps);
}

IdSet epsilonSkyline(const Dataset& ds, std::span<const double> w, double eps) {
  if (!ds.normalized()) throw DataError("eps-skyline needs a normalized dataset");
  requireSimplexWeights(w, ds.dim());
  requireEps(eps);
  IdSet out;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    bool dominated = false;
    for (std::size_t t = 0; t < ds.size() && !dominated; ++t)
      dominated = t != r && dominates(ds[t].attrs, ds[r].attrs, w, eps);
    if (!dominated) out.insert(ds[r].id);
  }
  return out;
}

}  // namespace skyq
