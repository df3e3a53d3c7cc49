#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "skyq/dataset.hpp"
#include "skyq/region.hpp"

namespace skyq {

/// Resolution of the radius searches.
inline constexpr double kRadiusTolerance = 1e-6;
/// Diameter of the simplex: a ball this large around any simplex point covers
/// the whole simplex.
inline const double kMaxRadius = std::sqrt(2.0);

struct OssResult {
  std::vector<std::string> ids;
  double rhoStar = 0.0;
  std::size_t kDepth = 1;
};

/// Ball of radius rho around w, intersected with the simplex.
WeightRegion ballRegion(std::span<const double> w, double rho);

bool rhoDominates(const Tuple& r1, const Tuple& r2, std::span<const double> w, double rho);

/// Tuples rho-dominated by fewer than kDepth others.
IdSet nonRhoDominated(const Dataset& ds, std::span<const double> w, double rho,
                      std::size_t kDepth = 1);

/// Tuples strictly within the top kDepth for some vector of the ball.
IdSet oruMembers(const Dataset& ds, std::span<const double> w, double rho,
                 std::size_t kDepth = 1);

/// m tuples that are not rho-dominated at the least radius admitting m of
/// them. When the count jumps past m the survivors are ranked by their score
/// at w (ties by id) and cut to m; ids come back in that order.
OssResult ord(const Dataset& ds, std::span<const double> w, std::size_t m,
              std::size_t kDepth = 1);

/// m tuples that are top-kDepth for some vector at the least radius admitting
/// m of them. Ids are ordered by the radius at which each tuple enters, then
/// score at w, then id; overshoot is cut in that order.
OssResult oru(const Dataset& ds, std::span<const double> w, std::size_t m,
              std::size_t kDepth = 1);

}  // namespace skyq
