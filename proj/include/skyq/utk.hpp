#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skyq/dataset.hpp"
#include "skyq/region.hpp"

namespace skyq {

/// Lattice resolution used for regions of dimension 3 and 4.
inline constexpr std::size_t kUtkGridResolution = 64;

/// One piece of a UTK2 partition together with its top-k result.
struct PartitionCell {
  enum class Kind { ExactInterval, SampleCloud };

  Kind kind = Kind::ExactInterval;
  double lo = 0.0;  // v1 bounds, exact cells only
  double hi = 0.0;
  std::vector<std::vector<double>> samples;  // sample clouds only
  IdSet label;
  std::vector<std::string> order;  // ranked top-k at the labelling point
  bool exact = true;
};

/// How cells are distinguished: by the top-k set or by the ranked top-k list.
enum class CellLabel { Set, Order };

struct Utk1Result {
  IdSet ids;
  bool exact = true;
};

/// Union of top-k results over the region. Exact for d = 2, sampled for
/// d in {3, 4}.
Utk1Result utk1(const Dataset& ds, std::size_t k, const WeightRegion& region);

/// Partition of the region into cells with a constant top-k result. For d = 2
/// the cells are closed v1-intervals sharing endpoints, ascending; at a
/// shared endpoint both adjacent labels are valid.
std::vector<PartitionCell> utk2(const Dataset& ds, std::size_t k, const WeightRegion& region,
                                CellLabel labelling = CellLabel::Set);

/// v1 values strictly inside (lo, hi) where two tuples swap order under
/// v = (v1, 1 - v1); deduplicated within 1e-9, ascending.
std::vector<double> orderBreakpoints(const Dataset& ds, double lo, double hi);
std::vector<double> orderBreakpoints(const Dataset& ds, const WeightRegion& region);

}  // namespace skyq
