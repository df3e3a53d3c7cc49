#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skyq/dataset.hpp"

namespace skyq {

enum class SolverMode { Exact, Greedy };

/// Exhaustive solvers refuse instances with more candidate subsets.
inline constexpr double kExactSubsetBudget = 1e6;

/// Number of non-skyline tuples Pareto-dominated by at least one chosen
/// tuple. Every chosen id must belong to the skyline.
std::size_t coverage(const Dataset& ds, const IdSet& chosen);

/// Largest distance from an unpicked skyline tuple to its nearest picked
/// tuple (Euclidean, in the dataset's attribute space). Zero when everything
/// is picked.
double distanceObjective(const Dataset& ds, const IdSet& chosen);

/// min(k, |SKY|) skyline tuples maximizing coverage. Greedy returns ids in
/// pick order, exact in id order.
std::vector<std::string> dominanceRepresentative(const Dataset& ds, std::size_t k,
                                                 SolverMode mode);

/// min(k, |SKY|) skyline tuples minimizing distanceObjective. Greedy is a
/// farthest-point traversal seeded at the skyline's 1-center; ids come back
/// in pick order.
std::vector<std::string> distanceRepresentative(const Dataset& ds, std::size_t k,
                                                SolverMode mode);

}  // namespace skyq
