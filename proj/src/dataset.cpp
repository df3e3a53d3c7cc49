#include "skyq/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "skyq/error.hpp"

namespace skyq {

Dataset::Dataset(std::vector<std::string> schema, std::vector<Tuple> tuples,
                 bool normalized)
    : schema_(std::move(schema)), tuples_(std::move(tuples)), normalized_(normalized) {
  if (schema_.empty()) throw DataError("dataset needs at least one attribute");
  std::unordered_set<std::string_view> seen;
  for (const Tuple& t : tuples_) {
    if (t.attrs.size() != schema_.size())
      throw DataError("tuple '" + t.id + "': expected " + std::to_string(schema_.size()) +
                      " attributes, got " + std::to_string(t.attrs.size()));
    if (!seen.insert(t.id).second) throw DataError("duplicate id '" + t.id + "'");
    for (double x : t.attrs) {
      if (!std::isfinite(x) || x < 0.0)
        throw DataError("tuple '" + t.id + "': attributes must be finite and >= 0");
      if (normalized_ && x > 1.0)
        throw DataError("tuple '" + t.id + "': normalized attribute outside [0,1]");
    }
  }
}

std::optional<std::size_t> Dataset::indexOf(std::string_view id) const {
  for (std::size_t i = 0; i < tuples_.size(); ++i)
    if (tuples_[i].id == id) return i;
  return std::nullopt;
}

IdSet Dataset::ids() const {
  IdSet out;
  for (const Tuple& t : tuples_) out.insert(t.id);
  return out;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<Tuple> kept;
  kept.reserve(indices.size());
  for (std::size_t i : indices) kept.push_back(tuples_.at(i));
  return Dataset(schema_, std::move(kept), normalized_);
}

std::vector<std::string> defaultSchema(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> splitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string rowError(std::size_t row, const std::string& what) {
  return "row " + std::to_string(row) + ": " + what;
}

double parseNumber(std::string_view field, std::size_t row) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last)
    throw DataError(rowError(row, "malformed number '" + std::string(field) + "'"));
  if (!std::isfinite(value) || value < 0.0)
    throw DataError(rowError(row, "attribute '" + std::string(field) +
                                      "' must be finite and >= 0"));
  return value;
}

}  // namespace

Dataset parseCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("missing header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  auto header = splitFields(line);
  const bool hasId = header.front() == "id";
  std::vector<std::string> schema;
  for (std::size_t i = hasId ? 1 : 0; i < header.size(); ++i)
    schema.emplace_back(header[i]);
  if (schema.empty()) throw DataError("header declares no attributes");

  std::vector<Tuple> tuples;
  std::unordered_set<std::string> seen;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    auto fields = splitFields(line);
    const std::size_t nattrs = fields.size() - (hasId ? 1 : 0);
    if (nattrs != schema.size())
      throw DataError(rowError(row, "expected " + std::to_string(schema.size()) +
                                        " attributes"));
    Tuple t;
    t.id = hasId ? std::string(fields[0]) : std::to_string(row);
    if (t.id.empty()) throw DataError(rowError(row, "empty id"));
    if (!seen.insert(t.id).second)
      throw DataError(rowError(row, "duplicate id '" + t.id + "'"));
    for (std::size_t i = hasId ? 1 : 0; i < fields.size(); ++i)
      t.attrs.push_back(parseNumber(fields[i], row));
    tuples.push_back(std::move(t));
  }
  return Dataset(std::move(schema), std::move(tuples), false);
}

Dataset loadCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return parseCsv(in);
}

void writeCsv(const Dataset& ds, std::ostream& out) {
  out << "id";
  for (const auto& name : ds.schema()) out << ',' << name;
  out << '\n';
  char buf[64];
  for (const Tuple& t : ds.tuples()) {
    out << t.id;
    for (double x : t.attrs) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out << ',' << buf;
    }
    out << '\n';
  }
}

void writeCsv(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  writeCsv(ds, out);
}

Dataset normalize(const Dataset& ds) {
  if (ds.empty()) throw DataError("cannot normalize an empty dataset");
  const std::size_t d = ds.dim();
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (const Tuple& t : ds.tuples())
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], t.attrs[i]);
      hi[i] = std::max(hi[i], t.attrs[i]);
    }
  std::vector<Tuple> out = ds.tuples();
  for (Tuple& t : out)
    for (std::size_t i = 0; i < d; ++i) {
      const double span = hi[i] - lo[i];
      t.attrs[i] = span > 0.0 ? std::clamp((t.attrs[i] - lo[i]) / span, 0.0, 1.0) : 0.0;
    }
  return Dataset(ds.schema(), std::move(out), true);
}

Distribution parseDistribution(std::string_view name) {
  if (name == "independent") return Distribution::Independent;
  if (name == "correlated") return Distribution::Correlated;
  if (name == "anticorrelated") return Distribution::Anticorrelated;
  throw InvalidArgument("unknown distribution '" + std::string(name) + "'");
}

std::string_view toString(Distribution dist) {
  switch (dist) {
    case Distribution::Independent: return "independent";
    case Distribution::Correlated: return "correlated";
    case Distribution::Anticorrelated: return "anticorrelated";
  }
  return "?";
}

Dataset generate(Distribution dist, std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> spread(0.0, 0.05);

  std::vector<Tuple> tuples;
  tuples.reserve(n);
  for (std::size_t row = 1; row <= n; ++row) {
    Tuple t{std::to_string(row), std::vector<double>(d)};
    switch (dist) {
      case Distribution::Independent:
        for (double& x : t.attrs) x = unit(rng);
        break;
      case Distribution::Correlated: {
        // attributes scatter around a shared base value on the diagonal
        const double base = unit(rng);
        for (double& x : t.attrs) {
          double y;
          do y = base + spread(rng);
          while (y < 0.0 || y > 1.0);
          x = y;
        }
        break;
      }
      case Distribution::Anticorrelated: {
        // points close to the hyperplane sum(x) = d * level
        while (true) {
          double level;
          do level = 0.5 + spread(rng);
          while (level <= 0.0 || level >= 1.0);
          double sum = 0.0;
          for (double& x : t.attrs) sum += (x = unit(rng));
          if (sum <= 0.0) continue;
          const double scale = static_cast<double>(d) * level / sum;
          bool inside = true;
          for (double& x : t.attrs) {
            x *= scale;
            inside = inside && x <= 1.0;
          }
          if (inside) break;
        }
        break;
      }
    }
    tuples.push_back(std::move(t));
  }
  return Dataset(defaultSchema(d), std::move(tuples), true);
}

}  // namespace skyq
