#pragma once

#include <span>

#include "skyq/dataset.hpp"

namespace skyq {

/// (for all i: w_i r1_i <= w_i r2_i + eps) and (exists i: r1_i < r2_i).
/// The strict clause compares raw attributes without weights or eps.
/// Attributes are expected in [0,1]; eps must lie in [-1, 1].
bool epsilonDominates(const Tuple& r1, const Tuple& r2, std::span<const double> w, double eps);

/// Tuples not eps-dominated by any other tuple. Requires a normalized dataset.
IdSet epsilonSkyline(const Dataset& ds, std::span<const double> w, double eps);

}  // namespace skyq
