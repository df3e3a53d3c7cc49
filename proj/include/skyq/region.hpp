#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skyq/dataset.hpp"

namespace skyq {

/// Tolerance for simplex, linear and ball membership.
inline constexpr double kMembershipTolerance = 1e-9;
/// Margin separating "strictly better" from "tied" in dominance and
/// optimality decisions.
inline constexpr double kStrictMargin = 1e-12;
/// Vertex enumeration is combinatorial in the dimension.
inline constexpr std::size_t kMaxVertexDim = 7;
/// Lattice sampling is only offered for low dimensions.
inline constexpr std::size_t kMaxGridDim = 4;

enum class Relation { LessEqual, Less };

/// coeffs . v <relation> rhs
struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Closed Euclidean ball |v - center| <= radius.
struct Ball {
  std::vector<double> center;
  double radius = 0.0;
  friend bool operator==(const Ball&, const Ball&) = default;
};

/// Convex subset of the preference simplex {v >= 0, sum(v) = 1}: the simplex
/// constraints are implicit, on top of which come linear constraints and at
/// most one ball. Regions are values; the builders return modified copies.
class WeightRegion {
 public:
  explicit WeightRegion(std::size_t dim);

  static WeightRegion simplex(std::size_t dim) { return WeightRegion(dim); }
  static WeightRegion ball(std::vector<double> center, double radius);
  /// Two-dimensional region lo <= v1 <= hi.
  static WeightRegion interval(double lo, double hi);

  WeightRegion with(LinearConstraint constraint) const;
  WeightRegion withBall(Ball ball) const;

  std::size_t dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::optional<Ball>& ballConstraint() const { return ball_; }
  bool isPolytope() const { return !ball_.has_value(); }

  friend bool operator==(const WeightRegion&, const WeightRegion&) = default;

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
  std::optional<Ball> ball_;
};

/// Membership with strict constraints honoured: a "<" constraint rejects any
/// v with coeffs . v >= rhs.
bool contains(const WeightRegion& region, std::span<const double> v);
/// Membership in the closure of the region (strict constraints relaxed).
bool containsClosure(const WeightRegion& region, std::span<const double> v,
                     double tolerance = kMembershipTolerance);

struct Extremum {
  double value = 0.0;
  std::vector<double> point;
};

/// Exact linear optimization over one region, prepared once and reused for
/// many objectives.
///
/// Polytopes are handled through their vertex list. With a ball the optimum
/// is found by enumerating active sets of the polyhedral constraints: on
/// every affine slice the minimizer of a linear function over the slice's
/// disc has a closed form, and the global minimum is the best feasible
/// candidate. Both paths optimize over the closure of the region.
class RegionOptimizer {
 public:
  explicit RegionOptimizer(WeightRegion region);
  ~RegionOptimizer();
  RegionOptimizer(RegionOptimizer&&) noexcept;
  RegionOptimizer& operator=(RegionOptimizer&&) noexcept;

  const WeightRegion& region() const { return region_; }
  std::size_t dim() const { return region_.dim(); }
  bool empty() const;

  /// Polytope vertices (empty for regions with a ball).
  const std::vector<std::vector<double>>& vertices() const { return vertices_; }

  Extremum minimize(std::span<const double> c) const;
  Extremum maximize(std::span<const double> c) const;

  /// A point of the region, in its relative interior whenever one can be
  /// found cheaply.
  std::vector<double> interiorPoint() const;

 private:
  struct BallSlices;
  WeightRegion region_;
  std::vector<std::vector<double>> vertices_;
  std::unique_ptr<BallSlices> slices_;
};

/// All vertices of a ball-free region. Throws EmptyRegion or Unsupported
/// (dimension above kMaxVertexDim).
std::vector<std::vector<double>> enumerateVertices(const WeightRegion& region);

bool isEmpty(const WeightRegion& region);

Extremum minimizeLinear(const WeightRegion& region, std::span<const double> c);
Extremum maximizeLinear(const WeightRegion& region, std::span<const double> c);

/// [min v1, max v1] over a two-dimensional region.
std::pair<double, double> intervalOf(const WeightRegion& region);

struct OptimumWitness {
  bool exists = false;
  std::optional<std::vector<double>> witness;
  /// Best value found for max over rivals of v.(target - rival).
  double gap = 0.0;
};

/// Decides whether some v in the region makes the target at least as good as
/// every rival (strict = false) or strictly better than every rival whose
/// attributes differ from the target's (strict = true).
OptimumWitness existsWeakOptimum(const WeightRegion& region, const Tuple& target,
                                 std::span<const Tuple> rivals, bool strict);

/// Same decision on a prepared region, with rivals given as difference
/// vectors target - rival. Up to `exclusions` rivals may be ignored, which
/// turns the test into "ranked within the top exclusions + 1 somewhere".
OptimumWitness findWinningWeight(const RegionOptimizer& optimizer,
                                 std::span<const std::vector<double>> deltas, bool strict,
                                 std::size_t exclusions = 0);

/// Simplex lattice points (i_1/res, ..., i_d/res) inside the region.
std::vector<std::vector<double>> gridSample(const WeightRegion& region, std::size_t resolution);

/// Parses the region literal format, one item per line:
///   3 w1 - 1 w2 >= 0
///   ball 0.5 0.5 0.1
/// Weight names are w1..wd or, when given, the attribute names. '#' starts a
/// comment.
WeightRegion parseRegion(std::string_view text, std::size_t dim,
                         std::span<const std::string> attributeNames = {});
WeightRegion loadRegion(const std::filesystem::path& path, std::size_t dim,
                        std::span<const std::string> attributeNames = {});

std::string formatRegion(const WeightRegion& region);

}  // namespace skyq
