#include "skyq/compare.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "skyq/classic.hpp"
#include "skyq/epsilon.hpp"
#include "skyq/error.hpp"
#include "skyq/flexible.hpp"
#include "skyq/oss.hpp"
#include "skyq/representative.hpp"
#include "skyq/utk.hpp"

namespace skyq {

namespace {

OperatorFacts facts(std::string name, bool ranked, bool preference, std::size_t parameters) {
  OperatorFacts f;
  f.name = std::move(name);
  f.ranked = ranked;
  f.preferenceInput = preference;
  f.parameters = parameters;
  return f;
}

void setIds(OperatorFacts& f, std::vector<std::string> ids) {
  f.cardinality = ids.size();
  f.ids = std::move(ids);
}

void setIds(OperatorFacts& f, const IdSet& ids) { setIds(f, std::vector<std::string>(ids.begin(), ids.end())); }

void guarded(OperatorFacts& f, const std::function<void()>& run) {
  try {
    run();
  } catch (const Error& e) {
    f.error = e.what();
  }
}

}  // namespace

CompareReport compareOperators(const Dataset& ds, const CompareOptions& options) {
  const std::size_t d = ds.dim();
  std::vector<double> w = options.weights;
  if (w.empty()) w.assign(d, 1.0 / static_cast<double>(d));
  requireSimplexWeights(w, d);
  const WeightRegion region = options.region.value_or(WeightRegion::simplex(d));
  const Dataset scaled = ds.normalized() || ds.empty() ? ds : normalize(ds);

  CompareReport report;
  auto& rows = report.rows;

  {
    auto f = facts("Top-k", true, true, 2);
    f.requested = options.k;
    f.requestName = "k";
    guarded(f, [&] { setIds(f, topK(ds, w, options.k).ids()); });
    rows.push_back(std::move(f));
  }
  IdSet sky = skyline(ds);
  {
    auto f = facts("Skyline", false, false, 0);
    setIds(f, sky);
    rows.push_back(std::move(f));
  }
  IdSet ndSet, poSet;
  {
    auto f = facts("ND", false, true, 1);
    guarded(f, [&] {
      ndSet = nd(ds, region);
      setIds(f, ndSet);
    });
    rows.push_back(std::move(f));
  }
  {
    auto f = facts("PO", false, true, 1);
    guarded(f, [&] {
      poSet = po(ds, region);
      setIds(f, poSet);
    });
    rows.push_back(std::move(f));
  }
  for (const bool dominance : {true, false}) {
    auto f = facts(dominance ? "ORD" : "ORU", false, true, 2);
    f.requested = options.m;
    f.requestName = "m";
    guarded(f, [&] { setIds(f, (dominance ? ord : oru)(ds, w, options.m, 1).ids); });
    rows.push_back(std::move(f));
  }
  {
    auto f = facts("UTK", false, true, 2);
    f.requested = options.k;
    f.requestName = "k";
    f.perCell = true;
    guarded(f, [&] {
      const auto cells = utk2(ds, options.k, region);
      IdSet all;
      std::size_t size = cells.front().label.size();
      for (const auto& cell : cells) {
        all.insert(cell.label.begin(), cell.label.end());
        if (cell.label.size() != size) size = 0;
      }
      f.ids.assign(all.begin(), all.end());
      f.cardinality = size;
      f.unionSize = all.size();
    });
    rows.push_back(std::move(f));
  }
  {
    auto f = facts("eps-skyline", false, true, 2);
    guarded(f, [&] { setIds(f, epsilonSkyline(scaled, w, options.eps)); });
    rows.push_back(std::move(f));
  }
  for (const bool dominance : {true, false}) {
    auto f = facts(dominance ? "Representative (dominance)" : "Representative (distance)", true,
                   false, 1);
    f.requested = options.k;
    f.requestName = "k";
    guarded(f, [&] {
      setIds(f, dominance ? dominanceRepresentative(scaled, options.k, SolverMode::Greedy)
                          : distanceRepresentative(scaled, options.k, SolverMode::Greedy));
    });
    rows.push_back(std::move(f));
  }

  auto& c = report.containment;
  c.po = poSet.size();
  c.nd = ndSet.size();
  c.sky = sky.size();
  c.ok = std::includes(ndSet.begin(), ndSet.end(), poSet.begin(), poSet.end()) &&
         std::includes(sky.begin(), sky.end(), ndSet.begin(), ndSet.end());
  return report;
}

std::string formatRow(const OperatorFacts& row) {
  std::ostringstream out;
  out << row.name << ": ";
  if (!row.error.empty()) {
    out << "failed (" << row.error << ")";
  } else {
    out << "cardinality " << row.cardinality;
    if (row.perCell) out << " per cell";
    if (!row.requested)
      out << " (uncontrolled)";
    else if (row.controlled())
      out << " (= " << row.requestName << ", controlled)";
    else
      out << " (requested " << row.requestName << " = " << *row.requested << ", not controlled)";
    if (row.unionSize) out << ", union " << *row.unionSize;
  }
  out << ", ranked " << (row.ranked ? "yes" : "no") << ", preference input "
      << (row.preferenceInput ? "yes" : "no") << ", parameters " << row.parameters;
  return out.str();
}

std::string formatContainment(const ContainmentCheck& check) {
  std::ostringstream out;
  out << "PO(" << check.po << ") ⊆ ND(" << check.nd << ") ⊆ SKY(" << check.sky
      << "): " << (check.ok ? "OK" : "VIOLATION");
  return out.str();
}

}  // namespace skyq
