#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skyq/dataset.hpp"
#include "skyq/region.hpp"

namespace skyq {

struct CompareOptions {
  std::vector<double> weights;  // empty: uniform
  std::optional<WeightRegion> region;  // empty: full simplex
  std::size_t k = 3;
  std::size_t m = 3;
  double eps = 0.1;
};

/// Measured properties of one operator run.
struct OperatorFacts {
  std::string name;
  std::size_t cardinality = 0;
  std::optional<std::size_t> requested;  // cardinality parameter, if any
  std::string requestName;               // "k" or "m"
  bool perCell = false;                  // cardinality measured per UTK cell
  std::optional<std::size_t> unionSize;  // UTK only
  bool ranked = false;
  bool preferenceInput = false;
  std::size_t parameters = 0;  // inputs beyond the dataset
  std::vector<std::string> ids;
  std::string error;  // operator failed (e.g. m unreachable)

  bool controlled() const { return error.empty() && requested && cardinality == *requested; }
};

struct ContainmentCheck {
  std::size_t po = 0, nd = 0, sky = 0;
  bool ok = true;
};

struct CompareReport {
  std::vector<OperatorFacts> rows;
  ContainmentCheck containment;
};

/// Runs every operator on one dataset. eps-skyline and the representative
/// skylines see the min-max normalized data; the rest see it as given.
CompareReport compareOperators(const Dataset& ds, const CompareOptions& options);

std::string formatRow(const OperatorFacts& row);
std::string formatContainment(const ContainmentCheck& check);

}  // namespace skyq
