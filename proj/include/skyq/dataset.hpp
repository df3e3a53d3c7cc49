#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skyq {

/// One record. Attributes are lower-is-better.
struct Tuple {
  std::string id;
  std::vector<double> attrs;

  std::size_t dim() const { return attrs.size(); }
  friend bool operator==(const Tuple&, const Tuple&) = default;
};

/// Result sets are ordered by id so outputs are deterministic.
using IdSet = std::set<std::string>;

/// Immutable collection of same-dimension tuples. The constructor enforces the
/// invariants: shared dimension, unique ids, finite non-negative attributes and,
/// when `normalized` is set, attributes inside [0,1].
class Dataset {
 public:
  Dataset(std::vector<std::string> schema, std::vector<Tuple> tuples,
          bool normalized = false);

  std::size_t dim() const { return schema_.size(); }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  bool normalized() const { return normalized_; }

  const std::vector<std::string>& schema() const { return schema_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  const Tuple& operator[](std::size_t i) const { return tuples_[i]; }

  std::optional<std::size_t> indexOf(std::string_view id) const;
  IdSet ids() const;

  /// Sub-dataset keeping the given indices, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<std::string> schema_;
  std::vector<Tuple> tuples_;
  bool normalized_ = false;
};

/// Default schema "a1".."ad".
std::vector<std::string> defaultSchema(std::size_t d);

Dataset parseCsv(std::istream& in);
Dataset loadCsv(const std::filesystem::path& path);

/// Writes "id,<schema...>" followed by one row per tuple, numbers with 17
/// significant digits so that loadCsv(writeCsv(ds)) reproduces ds exactly.
void writeCsv(const Dataset& ds, std::ostream& out);
void writeCsv(const Dataset& ds, const std::filesystem::path& path);

/// Per-attribute min-max rescale to [0,1]; constant columns map to 0.
Dataset normalize(const Dataset& ds);

enum class Distribution { Independent, Correlated, Anticorrelated };

Distribution parseDistribution(std::string_view name);
std::string_view toString(Distribution dist);

/// Standard skyline benchmark families. Deterministic in (dist, n, d, seed).
Dataset generate(Distribution dist, std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace skyq
