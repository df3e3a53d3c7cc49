#include "skyq/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "skyq/classic.hpp"
#include "skyq/compare.hpp"
#include "skyq/dataset.hpp"
#include "skyq/epsilon.hpp"
#include "skyq/error.hpp"
#include "skyq/flexible.hpp"
#include "skyq/oss.hpp"
#include "skyq/region.hpp"
#include "skyq/representative.hpp"
#include "skyq/utk.hpp"

namespace skyq::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kOperators = {"skyline", "skyband", "topk",  "nd",
                                             "po",      "ord",     "oru",   "utk1",
                                             "utk2",    "eskyline", "repdom", "repdist"};

std::string number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> asVector(const IdSet& ids) { return {ids.begin(), ids.end()}; }

std::vector<double> parseWeights(const std::string& text) {
  std::vector<double> w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    double x = 0.0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first != last && *first == ' ') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last) throw UsageError("malformed weight '" + item + "'");
    w.push_back(x);
  }
  return w;
}

struct QueryFlags {
  std::string op;
  std::string data;
  std::optional<long long> k, m;
  long long kDepth = 1;
  std::optional<std::string> weights;
  std::optional<double> rho, eps;
  std::optional<std::string> region;
  bool normalize = false;
  std::string mode = "greedy";
  std::string format = "csv";
  std::string labels = "set";
  std::string optimality = "strict";
};

std::size_t positive(const std::optional<long long>& value, const char* flag, const std::string& op) {
  if (!value) throw UsageError(op + " requires --" + std::string(flag));
  if (*value < 1) throw UsageError("--" + std::string(flag) + " must be >= 1");
  return static_cast<std::size_t>(*value);
}

std::vector<double> requireWeights(const QueryFlags& f) {
  if (!f.weights) throw UsageError(f.op + " requires --weights");
  return parseWeights(*f.weights);
}

// Region from --region, intersected with the ball (--weights, --rho) if given.
WeightRegion buildRegion(const QueryFlags& f, const Dataset& ds) {
  WeightRegion region = f.region ? loadRegion(*f.region, ds.dim(), ds.schema())
                                 : WeightRegion::simplex(ds.dim());
  if (f.rho) {
    if (!f.weights) throw UsageError("--rho needs --weights as the ball center");
    if (region.ballConstraint()) throw UsageError("region already has a ball");
    region = region.withBall(Ball{parseWeights(*f.weights), *f.rho});
  }
  return region;
}

struct Output {
  Json json;
  std::string csv;
};

Output setOutput(const std::string& op, Json params, const std::vector<std::string>& ids) {
  Output o;
  o.json["operator"] = op;
  o.json["params"] = std::move(params);
  o.json["ids"] = ids;
  o.csv = join(ids, ',') + "\n";
  return o;
}

Output runQuery(const QueryFlags& f) {
  Dataset ds = loadCsv(f.data);
  if (f.normalize && !ds.empty()) ds = normalize(ds);
  Json params = Json::object();
  params["data"] = f.data;
  if (f.normalize) params["normalize"] = true;
  const std::string& op = f.op;

  if (op == "skyline") return setOutput(op, params, asVector(skyline(ds)));
  if (op == "skyband") {
    const auto k = positive(f.k, "k", op);
    params["k"] = k;
    return setOutput(op, params, asVector(kSkyband(ds, k)));
  }
  if (op == "topk") {
    const auto k = positive(f.k, "k", op);
    const auto w = requireWeights(f);
    params["k"] = k;
    params["weights"] = w;
    const RankedResult r = topK(ds, w, k);
    Output o = setOutput(op, params, r.ids());
    std::vector<double> scores;
    o.csv = "id,score\n";
    for (const auto& e : r.entries) {
      scores.push_back(e.score);
      o.csv += e.id + "," + number(e.score) + "\n";
    }
    o.json["scores"] = scores;
    return o;
  }
  if (op == "nd" || op == "po") {
    const WeightRegion region = buildRegion(f, ds);
    params["region"] = formatRegion(region);
    if (op == "nd") return setOutput(op, params, asVector(nd(ds, region)));
    if (f.optimality != "strict" && f.optimality != "weak")
      throw UsageError("--optimality must be strict or weak");
    params["optimality"] = f.optimality;
    return setOutput(op, params,
                     asVector(po(ds, region, f.optimality == "weak" ? Optimality::Weak
                                                                    : Optimality::Strict)));
  }
  if (op == "ord" || op == "oru") {
    const auto m = positive(f.m, "m", op);
    const auto w = requireWeights(f);
    if (f.kDepth < 1) throw UsageError("--kdepth must be >= 1");
    params["m"] = m;
    params["weights"] = w;
    params["kDepth"] = f.kDepth;
    if (m > ds.size()) throw UsageError("--m exceeds the dataset size");
    const OssResult r = (op == "ord" ? ord : oru)(ds, w, m, static_cast<std::size_t>(f.kDepth));
    Output o = setOutput(op, params, r.ids);
    o.json["rhoStar"] = r.rhoStar;
    o.csv += "rhoStar," + number(r.rhoStar) + "\n";
    return o;
  }
  if (op == "utk1" || op == "utk2") {
    const auto k = positive(f.k, "k", op);
    const WeightRegion region = buildRegion(f, ds);
    params["k"] = k;
    params["region"] = formatRegion(region);
    if (op == "utk1") {
      const Utk1Result r = utk1(ds, k, region);
      Output o = setOutput(op, params, asVector(r.ids));
      o.json["exact"] = r.exact;
      o.csv += std::string("exact,") + (r.exact ? "true" : "false") + "\n";
      return o;
    }
    if (f.labels != "set" && f.labels != "order") throw UsageError("--labels must be set or order");
    params["labels"] = f.labels;
    const auto cells = utk2(ds, k, region, f.labels == "order" ? CellLabel::Order : CellLabel::Set);
    IdSet all;
    Json jcells = Json::array();
    std::string csv = "lo,hi,samples,exact,label\n";
    for (const auto& cell : cells) {
      all.insert(cell.label.begin(), cell.label.end());
      Json jc;
      const auto label = f.labels == "order" ? cell.order : asVector(cell.label);
      if (cell.kind == PartitionCell::Kind::ExactInterval) {
        jc["lo"] = cell.lo;
        jc["hi"] = cell.hi;
        csv += number(cell.lo) + "," + number(cell.hi) + ",,";
      } else {
        jc["samples"] = cell.samples.size();
        csv += ",," + std::to_string(cell.samples.size()) + ",";
      }
      jc["exact"] = cell.exact;
      jc["label"] = label;
      csv += std::string(cell.exact ? "true" : "false") + "," + join(label, ';') + "\n";
      jcells.push_back(std::move(jc));
    }
    Output o = setOutput(op, params, asVector(all));
    o.json["cells"] = std::move(jcells);
    o.csv = std::move(csv);
    return o;
  }
  if (op == "eskyline") {
    const auto w = requireWeights(f);
    if (!f.eps) throw UsageError("eskyline requires --eps");
    params["weights"] = w;
    params["eps"] = *f.eps;
    return setOutput(op, params, asVector(epsilonSkyline(ds, w, *f.eps)));
  }
  if (op == "repdom" || op == "repdist") {
    const auto k = positive(f.k, "k", op);
    if (f.mode != "exact" && f.mode != "greedy") throw UsageError("--mode must be exact or greedy");
    const SolverMode mode = f.mode == "exact" ? SolverMode::Exact : SolverMode::Greedy;
    params["k"] = k;
    params["mode"] = f.mode;
    return setOutput(op, params,
                     op == "repdom" ? dominanceRepresentative(ds, k, mode)
                                    : distanceRepresentative(ds, k, mode));
  }
  throw UsageError("unknown operator '" + op + "'");
}

int runCompare(const std::string& data, const std::optional<std::string>& weights,
               const std::optional<std::string>& regionFile, long long k, long long m, double eps,
               const std::string& format, std::ostream& out) {
  if (k < 1 || m < 1) throw UsageError("--k and --m must be >= 1");
  const Dataset ds = loadCsv(data);
  CompareOptions options;
  if (weights) options.weights = parseWeights(*weights);
  if (regionFile) options.region = loadRegion(*regionFile, ds.dim(), ds.schema());
  options.k = static_cast<std::size_t>(k);
  options.m = static_cast<std::size_t>(m);
  options.eps = eps;
  const CompareReport report = compareOperators(ds, options);
  if (format == "json") {
    Json j;
    j["operator"] = "compare";
    j["rows"] = Json::array();
    for (const auto& row : report.rows) {
      Json r;
      r["name"] = row.name;
      r["cardinality"] = row.cardinality;
      if (row.requested) r["requested"] = *row.requested;
      r["controlled"] = row.controlled();
      r["ranked"] = row.ranked;
      r["preferenceInput"] = row.preferenceInput;
      r["parameters"] = row.parameters;
      r["ids"] = row.ids;
      if (!row.error.empty()) r["error"] = row.error;
      j["rows"].push_back(std::move(r));
    }
    j["containment"] = {{"po", report.containment.po},
                        {"nd", report.containment.nd},
                        {"sky", report.containment.sky},
                        {"ok", report.containment.ok}};
    out << j.dump() << '\n';
  } else {
    for (const auto& row : report.rows) out << formatRow(row) << '\n';
    out << formatContainment(report.containment) << '\n';
  }
  return report.containment.ok ? kOk : kContainmentViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skyline, top-k and preference-region query operators", "skyq"};
  app.require_subcommand(1);

  QueryFlags q;
  auto* query = app.add_subcommand("query", "Run one operator on a CSV dataset");
  query->add_option("operator", q.op, "Operator")->required()->check(CLI::IsMember(kOperators));
  query->add_option("--data", q.data, "CSV dataset")->required();
  query->add_option("--k", q.k, "Result size / depth k");
  query->add_option("--m", q.m, "Output size m (ord, oru)");
  query->add_option("--kdepth", q.kDepth, "Dominance/rank depth for ord and oru");
  query->add_option("--weights", q.weights, "Weight vector, e.g. 0.5,0.5");
  query->add_option("--rho", q.rho, "Ball radius around --weights (nd, po, utk)");
  query->add_option("--eps", q.eps, "Epsilon for eskyline");
  query->add_option("--region", q.region, "Region file");
  query->add_flag("--normalize", q.normalize, "Min-max normalize the data first");
  query->add_option("--mode", q.mode, "exact|greedy (repdom, repdist)");
  query->add_option("--format", q.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  query->add_option("--labels", q.labels, "set|order (utk2)");
  query->add_option("--optimality", q.optimality, "strict|weak (po)");

  std::string cData, cFormat = "text";
  std::optional<std::string> cWeights, cRegion;
  long long cK = 3, cM = 3;
  double cEps = 0.1;
  auto* compare = app.add_subcommand("compare", "Run every operator and report their properties");
  compare->add_option("--data", cData, "CSV dataset")->required();
  compare->add_option("--weights", cWeights, "Weight vector (default uniform)");
  compare->add_option("--region", cRegion, "Region file (default whole simplex)");
  compare->add_option("--k", cK, "k for top-k, UTK and representatives");
  compare->add_option("--m", cM, "m for ORD/ORU");
  compare->add_option("--eps", cEps, "eps for the eps-skyline");
  compare->add_option("--format", cFormat, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::string gDist, gOut;
  long long gN = 0, gD = 0;
  std::uint64_t gSeed = 0;
  auto* gen = app.add_subcommand("generate", "Write a synthetic dataset");
  gen->add_option("--dist", gDist, "independent|correlated|anticorrelated")->required();
  gen->add_option("--n", gN, "Number of tuples")->required();
  gen->add_option("--d", gD, "Dimension")->required();
  gen->add_option("--seed", gSeed, "Random seed")->required();
  gen->add_option("--out", gOut, "Output file (default standard output)");

  std::vector<std::string> argv{"skyq"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> raw;
  for (auto& a : argv) raw.push_back(a.data());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (query->parsed()) {
      const Output o = runQuery(q);
      if (q.format == "json")
        out << o.json.dump() << '\n';
      else
        out << o.csv;
      return kOk;
    }
    if (compare->parsed()) return runCompare(cData, cWeights, cRegion, cK, cM, cEps, cFormat, out);
    if (gen->parsed()) {
      if (gN < 0 || gD < 1) throw UsageError("--n must be >= 0 and --d >= 1");
      const Distribution dist = parseDistribution(gDist);
      const Dataset ds = generate(dist, static_cast<std::size_t>(gN), static_cast<std::size_t>(gD), gSeed);
      if (gOut.empty())
        writeCsv(ds, out);
      else
        writeCsv(ds, std::filesystem::path(gOut));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace skyq::cli
