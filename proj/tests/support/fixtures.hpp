#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skyq/dataset.hpp"
#include "skyq/region.hpp"

namespace skyq::testing {

/// {a:(1,5), b:(2,2), c:(5,1), d:(4,4), e:(3,3)}
inline Dataset d1() {
  return Dataset({"a1", "a2"},
                 {{"a", {1, 5}}, {"b", {2, 2}}, {"c", {5, 1}}, {"d", {4, 4}}, {"e", {3, 3}}});
}

inline IdSet ids(std::initializer_list<const char*> names) {
  IdSet out;
  for (const char* n : names) out.insert(n);
  return out;
}

inline std::string show(const IdSet& s) {
  std::string out = "{";
  for (const auto& id : s) out += (out.size() > 1 ? "," : "") + id;
  return out + "}";
}

inline bool subset(const IdSet& a, const IdSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Uniform attributes in [0,1], ids t00, t01, ... so id order equals row order.
inline Dataset randomDataset(std::mt19937_64& rng, std::size_t n, std::size_t d,
                             bool normalized = true) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Tuple> tuples;
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream id;
    id << 't' << (i < 10 ? "00" : i < 100 ? "0" : "") << i;
    Tuple t{id.str(), std::vector<double>(d)};
    for (double& x : t.attrs) x = unit(rng);
    tuples.push_back(std::move(t));
  }
  return Dataset(defaultSchema(d), std::move(tuples), normalized);
}

/// Random point in the relative interior of the simplex.
inline std::vector<double> randomSimplexPoint(std::mt19937_64& rng, std::size_t d) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> p(d);
  double sum = 0.0;
  for (double& x : p) sum += (x = ex(rng) + 1e-3);
  for (double& x : p) x /= sum;
  return p;
}

/// Adds `count` random half-spaces that keep `anchor` feasible.
inline WeightRegion addRandomConstraints(std::mt19937_64& rng, WeightRegion region,
                                         std::span<const double> anchor, std::size_t count) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> slack(0.0, 0.3);
  for (std::size_t j = 0; j < count; ++j) {
    LinearConstraint c;
    c.coeffs.resize(region.dim());
    double at = 0.0;
    for (std::size_t i = 0; i < region.dim(); ++i) {
      c.coeffs[i] = gauss(rng);
      at += c.coeffs[i] * anchor[i];
    }
    c.rhs = at + slack(rng);
    region = region.with(std::move(c));
  }
  return region;
}

inline WeightRegion randomPolytope(std::mt19937_64& rng, std::size_t d) {
  const auto anchor = randomSimplexPoint(rng, d);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  return addRandomConstraints(rng, WeightRegion::simplex(d), anchor, count(rng));
}

/// Two-dimensional interval whose endpoints lie on the 1/resolution lattice.
inline WeightRegion latticeInterval(std::mt19937_64& rng, std::size_t resolution) {
  std::uniform_int_distribution<std::size_t> pick(0, resolution);
  std::size_t a = pick(rng), b = pick(rng);
  if (a > b) std::swap(a, b);
  if (a == b) b = std::min(resolution, a + 1), a = b - 1;
  const double res = static_cast<double>(resolution);
  return WeightRegion::interval(static_cast<double>(a) / res, static_cast<double>(b) / res);
}

}  // namespace skyq::testing
