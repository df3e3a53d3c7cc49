#include "skyq/region.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "skyq/error.hpp"
#include "skyq/lp.hpp"

namespace skyq {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

void requireDim(const WeightRegion& region, std::size_t n) {
  if (n != region.dim())
    throw InvalidArgument("dimension mismatch: region has " + std::to_string(region.dim()) +
                          ", vector has " + std::to_string(n));
}

bool onSimplex(std::span<const double> v, double tol) {
  double sum = 0.0;
  for (double x : v) {
    if (x < -tol) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= tol;
}

// Polyhedral constraints as rows a . v <= b, the non-negativity bounds last.
struct HalfSpace {
  std::vector<double> a;
  double b;
};

std::vector<HalfSpace> halfSpaces(const WeightRegion& region) {
  std::vector<HalfSpace> out;
  for (const auto& c : region.constraints()) out.push_back({c.coeffs, c.rhs});
  for (std::size_t i = 0; i < region.dim(); ++i) {
    std::vector<double> a(region.dim(), 0.0);
    a[i] = -1.0;
    out.push_back({std::move(a), 0.0});
  }
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void forEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Equality system: sum(v) = 1 plus the selected half-spaces held tight.
void buildActiveSystem(const std::vector<HalfSpace>& hs, std::span<const std::size_t> active,
                       std::size_t d, Eigen::MatrixXd& E, Eigen::VectorXd& f) {
  const auto rows = static_cast<Eigen::Index>(active.size() + 1);
  E.resize(rows, static_cast<Eigen::Index>(d));
  f.resize(rows);
  E.row(0).setOnes();
  f(0) = 1.0;
  for (std::size_t r = 0; r < active.size(); ++r) {
    for (std::size_t j = 0; j < d; ++j)
      E(static_cast<Eigen::Index>(r + 1), static_cast<Eigen::Index>(j)) = hs[active[r]].a[j];
    f(static_cast<Eigen::Index>(r + 1)) = hs[active[r]].b;
  }
}

std::vector<std::vector<double>> polytopeVertices(const WeightRegion& region) {
  const std::size_t d = region.dim();
  if (d > kMaxVertexDim)
    throw Unsupported("vertex enumeration supports at most " + std::to_string(kMaxVertexDim) +
                      " dimensions");
  const auto hs = halfSpaces(region);
  if (binomial(hs.size(), d - 1) > 5e6)
    throw Unsupported("too many constraints for vertex enumeration");

  std::vector<std::vector<double>> out;
  Eigen::MatrixXd E;
  Eigen::VectorXd f;
  forEachSubset(hs.size(), d - 1, [&](std::span<const std::size_t> active) {
    buildActiveSystem(hs, active, d, E, f);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(E);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return;
    Eigen::VectorXd x = lu.solve(f);
    x += lu.solve(f - E * x);  // one step of iterative refinement
    std::vector<double> v(x.data(), x.data() + x.size());
    for (double& xi : v)
      if (std::abs(xi) < 1e-15) xi = 0.0;
    if (!containsClosure(region, v)) return;
    for (const auto& seen : out) {
      double diff = 0.0;
      for (std::size_t i = 0; i < d; ++i) diff = std::max(diff, std::abs(seen[i] - v[i]));
      if (diff <= 1e-9) return;
    }
    out.push_back(std::move(v));
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightRegion

WeightRegion::WeightRegion(std::size_t dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("region dimension must be >= 1");
}

WeightRegion WeightRegion::ball(std::vector<double> center, double radius) {
  WeightRegion r(center.size());
  return r.withBall(Ball{std::move(center), radius});
}

WeightRegion WeightRegion::interval(double lo, double hi) {
  if (lo > hi) throw InvalidArgument("interval bounds out of order");
  return WeightRegion(2)
      .with({{-1.0, 0.0}, Relation::LessEqual, -lo})
      .with({{1.0, 0.0}, Relation::LessEqual, hi});
}

WeightRegion WeightRegion::with(LinearConstraint constraint) const {
  requireDim(*this, constraint.coeffs.size());
  WeightRegion out = *this;
  out.constraints_.push_back(std::move(constraint));
  return out;
}

WeightRegion WeightRegion::withBall(Ball ball) const {
  requireDim(*this, ball.center.size());
  if (!onSimplex(ball.center, 1e-9)) throw InvalidArgument("ball center must lie on the simplex");
  if (!(ball.radius >= 0.0) || !std::isfinite(ball.radius))
    throw InvalidArgument("ball radius must be >= 0");
  WeightRegion out = *this;
  out.ball_ = std::move(ball);
  return out;
}

bool containsClosure(const WeightRegion& region, std::span<const double> v, double tolerance) {
  requireDim(region, v.size());
  if (!onSimplex(v, tolerance)) return false;
  for (const auto& c : region.constraints())
    if (dot(c.coeffs, v) > c.rhs + tolerance) return false;
  if (const auto& ball = region.ballConstraint())
    if (distance(v, ball->center) > ball->radius + tolerance) return false;
  return true;
}

bool contains(const WeightRegion& region, std::span<const double> v) {
  if (!containsClosure(region, v, kMembershipTolerance)) return false;
  for (const auto& c : region.constraints())
    if (c.relation == Relation::Less && dot(c.coeffs, v) >= c.rhs) return false;
  return true;
}

// ---------------------------------------------------------------------------
// RegionOptimizer

// Affine slices of the polyhedral part that meet the ball.
struct RegionOptimizer::BallSlices {
  struct Slice {
    Eigen::VectorXd center;  // projection of the ball center onto the slice
    double radius;           // radius of the disc cut out of the ball
    Eigen::MatrixXd projector;  // onto the slice's direction space
  };
  std::vector<HalfSpace> halfSpaces;
  std::vector<Slice> slices;
  // slice centers that are feasible points of the region
  std::vector<std::vector<double>> fixedPoints;

  bool feasible(std::span<const double> v) const {
    for (const auto& h : halfSpaces)
      if (dot(h.a, v) > h.b + kMembershipTolerance) return false;
    double sum = 0.0;
    for (double x : v) sum += x;
    return std::abs(sum - 1.0) <= kMembershipTolerance;
  }
};

RegionOptimizer::RegionOptimizer(WeightRegion region) : region_(std::move(region)) {
  const std::size_t d = region_.dim();
  if (region_.isPolytope()) {
    vertices_ = polytopeVertices(region_);
    return;
  }
  if (d > kMaxVertexDim)
    throw Unsupported("ball regions support at most " + std::to_string(kMaxVertexDim) +
                      " dimensions");
  const Ball& ball = *region_.ballConstraint();
  slices_ = std::make_unique<BallSlices>();
  slices_->halfSpaces = halfSpaces(region_);
  const auto& hs = slices_->halfSpaces;

  double subsets = 0.0;
  for (std::size_t k = 0; k < d; ++k) subsets += binomial(hs.size(), k);
  if (subsets > 2e6) throw Unsupported("too many constraints for a ball region");

  const Eigen::Map<const Eigen::VectorXd> w(ball.center.data(), static_cast<Eigen::Index>(d));
  Eigen::MatrixXd E;
  Eigen::VectorXd f;
  for (std::size_t k = 0; k < d; ++k) {
    forEachSubset(hs.size(), k, [&](std::span<const std::size_t> active) {
      buildActiveSystem(hs, active, d, E, f);
      const Eigen::MatrixXd gram = E * E.transpose();
      Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
      lu.setThreshold(1e-12);
      if (!lu.isInvertible()) return;
      Eigen::VectorXd center = w - E.transpose() * lu.solve(E * w - f);
      const double dist = (center - w).norm();
      if (dist > ball.radius + kStrictMargin) return;
      const double radius =
          std::sqrt(std::max(0.0, ball.radius * ball.radius - dist * dist));
      std::vector<double> c(center.data(), center.data() + center.size());
      if (slices_->feasible(c)) slices_->fixedPoints.push_back(c);
      if (k + 1 < d && radius > 0.0) {
        Eigen::MatrixXd projector = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                                              static_cast<Eigen::Index>(d)) -
                                    E.transpose() * lu.solve(E);
        slices_->slices.push_back({std::move(center), radius, std::move(projector)});
      }
    });
  }
}

RegionOptimizer::~RegionOptimizer() = default;
RegionOptimizer::RegionOptimizer(RegionOptimizer&&) noexcept = default;
RegionOptimizer& RegionOptimizer::operator=(RegionOptimizer&&) noexcept = default;

bool RegionOptimizer::empty() const {
  return slices_ ? slices_->fixedPoints.empty() : vertices_.empty();
}

Extremum RegionOptimizer::minimize(std::span<const double> c) const {
  requireDim(region_, c.size());
  if (empty()) throw EmptyRegion();
  Extremum best{std::numeric_limits<double>::infinity(), {}};
  auto consider = [&](std::span<const double> v) {
    const double value = dot(c, v);
    if (value < best.value) best = {value, std::vector<double>(v.begin(), v.end())};
  };
  if (!slices_) {
    for (const auto& v : vertices_) consider(v);
    return best;
  }
  for (const auto& v : slices_->fixedPoints) consider(v);
  const Eigen::Map<const Eigen::VectorXd> cv(c.data(), static_cast<Eigen::Index>(c.size()));
  for (const auto& slice : slices_->slices) {
    const Eigen::VectorXd g = slice.projector * cv;
    const double norm = g.norm();
    if (norm < 1e-14) continue;  // objective constant on the slice
    const Eigen::VectorXd x = slice.center - (slice.radius / norm) * g;
    std::vector<double> v(x.data(), x.data() + x.size());
    if (slices_->feasible(v)) consider(v);
  }
  return best;
}

Extremum RegionOptimizer::maximize(std::span<const double> c) const {
  std::vector<double> negated(c.begin(), c.end());
  for (double& x : negated) x = -x;
  Extremum e = minimize(negated);
  e.value = -e.value;
  return e;
}

std::vector<double> RegionOptimizer::interiorPoint() const {
  if (empty()) throw EmptyRegion();
  const std::size_t d = dim();
  auto mean = [d](const std::vector<std::vector<double>>& pts) {
    std::vector<double> m(d, 0.0);
    for (const auto& p : pts)
      for (std::size_t i = 0; i < d; ++i) m[i] += p[i] / static_cast<double>(pts.size());
    return m;
  };
  if (!slices_) return mean(vertices_);

  const Ball& ball = *region_.ballConstraint();
  WeightRegion polytope(d);
  for (const auto& c : region_.constraints()) polytope = polytope.with(c);
  if (containsClosure(polytope, ball.center)) {
    // pull the polytope's vertex mean into the ball, half a radius at most
    const auto pm = mean(polytopeVertices(polytope));
    const double gap = distance(pm, ball.center);
    const double theta = gap < 1e-15 ? 0.0 : std::min(1.0, 0.5 * ball.radius / gap);
    std::vector<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = ball.center[i] + theta * (pm[i] - ball.center[i]);
    return v;
  }
  const auto& pts = slices_->fixedPoints;
  return *std::min_element(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return distance(a, ball.center) < distance(b, ball.center);
  });
}

std::vector<std::vector<double>> enumerateVertices(const WeightRegion& region) {
  if (!region.isPolytope()) throw InvalidArgument("vertex enumeration needs a ball-free region");
  auto vertices = polytopeVertices(region);
  if (vertices.empty()) throw EmptyRegion();
  return vertices;
}

bool isEmpty(const WeightRegion& region) { return RegionOptimizer(region).empty(); }

Extremum minimizeLinear(const WeightRegion& region, std::span<const double> c) {
  return RegionOptimizer(region).minimize(c);
}

Extremum maximizeLinear(const WeightRegion& region, std::span<const double> c) {
  return RegionOptimizer(region).maximize(c);
}

std::pair<double, double> intervalOf(const WeightRegion& region) {
  if (region.dim() != 2) throw InvalidArgument("interval view needs a two-dimensional region");
  RegionOptimizer opt(region);
  const std::vector<double> e1{1.0, 0.0};
  return {opt.minimize(e1).value, opt.maximize(e1).value};
}

// ---------------------------------------------------------------------------
// Optimality search

namespace {

struct GapSearch {
  bool exists = false;
  std::vector<double> witness;
  double upper = std::numeric_limits<double>::infinity();
  double lower = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> tight;  // rivals binding at the final relaxation
};

bool decided(bool strict, double value) {
  return strict ? value < -kStrictMargin : value <= kStrictMargin;
}

// Minimizes g(v) = max over live deltas of v . delta across the region by
// solving LP relaxations in (v, s) and adding violated rival rows and
// tangent cuts of the ball until the decision is settled.
GapSearch searchGap(const RegionOptimizer& opt, std::span<const std::vector<double>> deltas,
                    const std::vector<bool>& live, bool strict) {
  const WeightRegion& region = opt.region();
  const std::size_t d = region.dim();
  const auto& ball = region.ballConstraint();

  double bigM = 1.0;
  for (std::size_t t = 0; t < deltas.size(); ++t) {
    if (!live[t]) continue;
    double l1 = 0.0;
    for (double x : deltas[t]) l1 += std::abs(x);
    bigM = std::max(bigM, l1 + 1.0);
  }

  auto gapAt = [&](std::span<const double> v, std::size_t* argmax) {
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < deltas.size(); ++t) {
      if (!live[t]) continue;
      const double s = dot(deltas[t], v);
      if (s > g) {
        g = s;
        if (argmax) *argmax = t;
      }
    }
    return g;
  };

  GapSearch out;
  const std::vector<double> start = opt.interiorPoint();
  {
    const double g = gapAt(start, nullptr);
    out.upper = g;
    out.witness = start;
    if (g == -std::numeric_limits<double>::infinity()) {
      out.exists = true;
      return out;
    }
  }

  lp::Problem base;
  base.objective.assign(d + 1, 0.0);
  base.objective[d] = 1.0;
  {
    lp::Row simplexRow{std::vector<double>(d + 1, 1.0), lp::Sense::Equal, 1.0};
    simplexRow.coeffs[d] = 0.0;
    base.rows.push_back(std::move(simplexRow));
    for (const auto& c : region.constraints()) {
      lp::Row row{c.coeffs, lp::Sense::LessEqual, c.rhs};
      row.coeffs.push_back(0.0);
      base.rows.push_back(std::move(row));
    }
  }
  const bool centerInPolytope = [&] {
    if (!ball) return false;
    for (const auto& c : region.constraints())
      if (dot(c.coeffs, ball->center) > c.rhs + kMembershipTolerance) return false;
    return true;
  }();

  std::vector<std::size_t> active;
  std::vector<bool> isActive(deltas.size(), false);
  auto activate = [&](std::size_t t) {
    if (isActive[t]) return false;
    isActive[t] = true;
    active.push_back(t);
    lp::Row row{deltas[t], lp::Sense::LessEqual, -bigM};
    row.coeffs.push_back(-1.0);
    base.rows.push_back(std::move(row));
    return true;
  };
  {
    std::size_t worst = 0;
    gapAt(start, &worst);
    activate(worst);
  }

  for (int iter = 0; iter < 600; ++iter) {
    const lp::Solution sol = lp::solve(base);
    if (sol.status != lp::Status::Optimal) throw EmptyRegion();
    std::vector<double> v(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(d));
    out.lower = std::max(out.lower, sol.x[d] - bigM);

    out.tight.clear();
    for (std::size_t t : active)
      if (dot(deltas[t], v) >= sol.x[d] - bigM - 1e-9) out.tight.push_back(t);

    // a feasible point close to the relaxation optimum bounds g from above
    bool ballViolated = false;
    std::vector<double> feasible = v;
    if (ball) {
      const double r = distance(v, ball->center);
      if (r > ball->radius + kStrictMargin) {
        ballViolated = true;
        if (centerInPolytope) {
          for (std::size_t i = 0; i < d; ++i)
            feasible[i] = ball->center[i] + (v[i] - ball->center[i]) * (ball->radius / r);
        } else {
          feasible.clear();
        }
      }
    }
    if (!feasible.empty()) {
      const double g = gapAt(feasible, nullptr);
      if (g < out.upper) {
        out.upper = g;
        out.witness = feasible;
      }
    }
    if (decided(strict, out.upper)) {
      out.exists = true;
      return out;
    }
    if (!decided(strict, out.lower)) return out;  // even the relaxation cannot win

    bool added = false;
    if (ballViolated) {
      const double r = distance(v, ball->center);
      lp::Row cut{std::vector<double>(d + 1, 0.0), lp::Sense::LessEqual, ball->radius};
      for (std::size_t i = 0; i < d; ++i) {
        cut.coeffs[i] = (v[i] - ball->center[i]) / r;
        cut.rhs += cut.coeffs[i] * ball->center[i];
      }
      base.rows.push_back(std::move(cut));
      added = true;
    }
    // rivals beating the relaxation's level at v
    std::vector<std::pair<double, std::size_t>> violators;
    const double level = sol.x[d] - bigM;
    for (std::size_t t = 0; t < deltas.size(); ++t)
      if (live[t] && !isActive[t]) {
        const double s = dot(deltas[t], v);
        if (s > level + kStrictMargin) violators.emplace_back(s, t);
      }
    std::sort(violators.begin(), violators.end(), std::greater<>());
    for (std::size_t i = 0; i < violators.size() && i < 8; ++i)
      added = activate(violators[i].second) || added;
    if (!added) return out;  // relaxation is exact at v
  }
  return out;
}

// Moves a witness off the boundary of strict region constraints, keeping the
// decision intact.
bool settleStrictness(const RegionOptimizer& opt, std::span<const std::vector<double>> deltas,
                      const std::vector<bool>& live, bool strict, std::vector<double>& witness) {
  const auto& constraints = opt.region().constraints();
  auto strictOk = [&](std::span<const double> v) {
    for (const auto& c : constraints)
      if (c.relation == Relation::Less && dot(c.coeffs, v) > c.rhs - kStrictMargin) return false;
    return true;
  };
  if (strictOk(witness)) return true;
  const auto inner = opt.interiorPoint();
  std::vector<double> v(witness.size());
  for (double theta = 0.5; theta > 1e-12; theta *= 0.5) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = witness[i] + theta * (inner[i] - witness[i]);
    if (!strictOk(v)) continue;
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < deltas.size(); ++t)
      if (live[t]) g = std::max(g, dot(deltas[t], v));
    if (decided(strict, g)) {
      witness = v;
      return true;
    }
  }
  return false;
}

}  // namespace

OptimumWitness findWinningWeight(const RegionOptimizer& optimizer,
                                 std::span<const std::vector<double>> deltas, bool strict,
                                 std::size_t exclusions) {
  if (optimizer.empty()) throw EmptyRegion();
  for (const auto& delta : deltas) requireDim(optimizer.region(), delta.size());

  std::vector<bool> live(deltas.size(), true);
  if (strict)
    for (std::size_t t = 0; t < deltas.size(); ++t)
      live[t] = std::any_of(deltas[t].begin(), deltas[t].end(), [](double x) { return x != 0.0; });

  // Branch over rivals binding at a failed relaxation: removing a non-binding
  // rival leaves the relaxation's optimum, hence the failure, unchanged.
  std::set<std::vector<std::size_t>> visited;
  OptimumWitness best;
  best.gap = std::numeric_limits<double>::infinity();
  auto recurse = [&](auto&& self, std::vector<std::size_t>& excluded, std::size_t budget) -> bool {
    std::vector<bool> mask = live;
    for (std::size_t t : excluded) mask[t] = false;
    GapSearch s = searchGap(optimizer, deltas, mask, strict);
    if (s.exists && settleStrictness(optimizer, deltas, mask, strict, s.witness)) {
      best = {true, s.witness, s.upper};
      return true;
    }
    if (s.upper < best.gap) {
      best.gap = s.upper;
      best.witness = s.witness;
    }
    if (budget == 0) return false;
    for (std::size_t t : s.tight) {
      excluded.push_back(t);
      std::vector<std::size_t> key = excluded;
      std::sort(key.begin(), key.end());
      if (visited.insert(key).second && self(self, excluded, budget - 1)) return true;
      excluded.pop_back();
    }
    return false;
  };
  std::vector<std::size_t> excluded;
  recurse(recurse, excluded, exclusions);
  if (!best.exists) best.witness.reset();
  return best;
}

OptimumWitness existsWeakOptimum(const WeightRegion& region, const Tuple& target,
                                 std::span<const Tuple> rivals, bool strict) {
  requireDim(region, target.dim());
  std::vector<std::vector<double>> deltas;
  deltas.reserve(rivals.size());
  for (const Tuple& r : rivals) {
    requireDim(region, r.dim());
    std::vector<double> delta(target.dim());
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = target.attrs[i] - r.attrs[i];
    deltas.push_back(std::move(delta));
  }
  return findWinningWeight(RegionOptimizer(region), deltas, strict);
}

// ---------------------------------------------------------------------------
// Lattice sampling

std::vector<std::vector<double>> gridSample(const WeightRegion& region, std::size_t resolution) {
  if (resolution < 1) throw InvalidArgument("resolution must be >= 1");
  const std::size_t d = region.dim();
  if (d > kMaxGridDim)
    throw Unsupported("grid sampling supports at most " + std::to_string(kMaxGridDim) +
                      " dimensions");
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> counts(d, 0);
  std::vector<double> v(d);
  const double res = static_cast<double>(resolution);
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == d) {
      counts[pos] = left;
      for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<double>(counts[i]) / res;
      if (contains(region, v)) out.push_back(v);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  recurse(recurse, 0, resolution);
  return out;
}

// ---------------------------------------------------------------------------
// Region literals

namespace {


[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidArgument("region line " + std::to_string(line) + ": " + what);
}

bool parseDouble(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::vector<std::string> tokenize(std::string_view line, std::size_t lineNo) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '<' || ch == '>' || ch == '=') {
      std::string op(1, ch);
      if (i + 1 < line.size() && line[i + 1] == '=' && ch != '=') op += '=';
      i += op.size();
      tokens.push_back(op);
    } else if (ch == '+' || ch == '-' || ch == '*') {
      tokens.emplace_back(1, ch);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.' ||
              line[j] == 'e' || line[j] == 'E' ||
              ((line[j] == '-' || line[j] == '+') && (line[j - 1] == 'e' || line[j - 1] == 'E'))))
        ++j;
      tokens.emplace_back(line.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      tokens.emplace_back(line.substr(i, j - i));
      i = j;
    } else {
      fail(lineNo, std::string("unexpected character '") + ch + "'");
    }
  }
  return tokens;
}

std::optional<std::size_t> weightIndex(const std::string& name, std::size_t dim,
                                       std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  if (name.size() >= 2 && name[0] == 'w') {
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec == std::errc() && ptr == name.data() + name.size() && idx >= 1 && idx <= dim)
      return idx - 1;
  }
  return std::nullopt;
}

// Linear expression: coefficients per weight plus a constant.
std::pair<std::vector<double>, double> parseExpression(const std::vector<std::string>& tokens,
                                                       std::size_t begin, std::size_t end,
                                                       std::size_t dim,
                                                       std::span<const std::string> names,
                                                       std::size_t lineNo) {
  std::vector<double> coeffs(dim, 0.0);
  double constant = 0.0;
  std::size_t i = begin;
  if (i == end) fail(lineNo, "empty expression");
  while (i < end) {
    double sign = 1.0;
    while (i < end && (tokens[i] == "+" || tokens[i] == "-")) {
      if (tokens[i] == "-") sign = -sign;
      ++i;
    }
    if (i == end) fail(lineNo, "dangling sign");
    double factor = 1.0;
    bool haveNumber = false;
    double parsed = 0.0;
    if (parseDouble(tokens[i], parsed)) {
      factor = parsed;
      haveNumber = true;
      ++i;
      if (i < end && tokens[i] == "*") ++i;
    }
    if (i < end && tokens[i] != "+" && tokens[i] != "-") {
      auto idx = weightIndex(tokens[i], dim, names);
      if (!idx) fail(lineNo, "unknown weight '" + tokens[i] + "'");
      coeffs[*idx] += sign * factor;
      ++i;
    } else if (haveNumber) {
      constant += sign * factor;
    } else {
      fail(lineNo, "expected a term");
    }
  }
  return {coeffs, constant};
}

}  // namespace

WeightRegion parseRegion(std::string_view text, std::size_t dim,
                         std::span<const std::string> attributeNames) {
  WeightRegion region(dim);
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line, lineNo);
    if (tokens.empty()) continue;

    if (tokens[0] == "ball") {
      if (tokens.size() != dim + 2)
        fail(lineNo, "ball needs " + std::to_string(dim) + " center coordinates and a radius");
      Ball ball;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        double x = 0.0;
        if (!parseDouble(tokens[i], x)) fail(lineNo, "malformed number '" + tokens[i] + "'");
        if (i <= dim)
          ball.center.push_back(x);
        else
          ball.radius = x;
      }
      if (region.ballConstraint()) fail(lineNo, "at most one ball per region");
      try {
        region = region.withBall(std::move(ball));
      } catch (const InvalidArgument& e) {
        fail(lineNo, e.what());
      }
      continue;
    }

    std::size_t relPos = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i] == "<" || tokens[i] == "<=" || tokens[i] == ">" || tokens[i] == ">=" ||
          tokens[i] == "=") {
        if (relPos != tokens.size()) fail(lineNo, "more than one relation");
        relPos = i;
      }
    if (relPos == tokens.size()) fail(lineNo, "missing relation");
    auto [lhs, lconst] = parseExpression(tokens, 0, relPos, dim, attributeNames, lineNo);
    auto [rhs, rconst] = parseExpression(tokens, relPos + 1, tokens.size(), dim, attributeNames, lineNo);
    // lhs - rhs <rel> rconst - lconst
    std::vector<double> coeffs(dim);
    for (std::size_t i = 0; i < dim; ++i) coeffs[i] = lhs[i] - rhs[i];
    const double bound = rconst - lconst;
    auto negated = [&] {
      std::vector<double> n = coeffs;
      for (double& x : n) x = -x;
      return n;
    };
    const std::string& rel = tokens[relPos];
    if (rel == "<=")
      region = region.with({coeffs, Relation::LessEqual, bound});
    else if (rel == "<")
      region = region.with({coeffs, Relation::Less, bound});
    else if (rel == ">=")
      region = region.with({negated(), Relation::LessEqual, -bound});
    else if (rel == ">")
      region = region.with({negated(), Relation::Less, -bound});
    else
      region = region.with({coeffs, Relation::LessEqual, bound})
                   .with({negated(), Relation::LessEqual, -bound});
  }
  return region;
}

WeightRegion loadRegion(const std::filesystem::path& path, std::size_t dim,
                        std::span<const std::string> attributeNames) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open region file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseRegion(buf.str(), dim, attributeNames);
}

std::string formatRegion(const WeightRegion& region) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& c : region.constraints()) {
    bool first = true;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      if (c.coeffs[i] == 0.0) continue;
      out << (first ? (c.coeffs[i] < 0 ? "-" : "") : (c.coeffs[i] < 0 ? " - " : " + "))
          << std::abs(c.coeffs[i]) << " w" << (i + 1);
      first = false;
    }
    if (first) out << "0 w1";
    out << (c.relation == Relation::Less ? " < " : " <= ") << c.rhs << '\n';
  }
  if (const auto& ball = region.ballConstraint()) {
    out << "ball";
    for (double x : ball->center) out << ' ' << x;
    out << ' ' << ball->radius << '\n';
  }
  return out.str();
}

}  // namespace skyq
