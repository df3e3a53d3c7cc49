#pragma once

#include "skyq/dataset.hpp"
#include "skyq/region.hpp"

namespace skyq {

/// A stated preference for `preferred` over `other` under a linear scoring
/// function v.r (lower is better): (preferred - other) . v < 0.
LinearConstraint constraintFromPreference(const Tuple& preferred, const Tuple& other);

/// r1 scores no worse than r2 everywhere in the region and strictly better
/// somewhere.
bool fDominates(const Tuple& r1, const Tuple& r2, const WeightRegion& region);
bool fDominates(std::span<const double> r1, std::span<const double> r2,
                const RegionOptimizer& optimizer);

/// Tuples not F-dominated by any other tuple.
IdSet nd(const Dataset& ds, const WeightRegion& region);
std::vector<std::size_t> ndIndices(const Dataset& ds, const RegionOptimizer& optimizer);

enum class Optimality { Strict, Weak };

/// Tuples optimal for at least one weight vector of the region.
///
/// Strict optimality is the default: a member must beat every rival with a
/// different attribute vector strictly. Under weak optimality a tuple that
/// only ties at the region boundary qualifies even when it is F-dominated,
/// which breaks PO being a subset of ND; the weak variant is kept for
/// experiments.
IdSet po(const Dataset& ds, const WeightRegion& region,
         Optimality optimality = Optimality::Strict);
std::vector<std::size_t> poIndices(const Dataset& ds, const RegionOptimizer& optimizer,
                                   Optimality optimality = Optimality::Strict);

}  // namespace skyq
