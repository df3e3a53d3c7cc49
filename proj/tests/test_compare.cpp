#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "skyq/compare.hpp"
#include "skyq/region.hpp"

using namespace skyq;
using skyq::testing::d1;

namespace {

const OperatorFacts& row(const CompareReport& r, const std::string& name) {
  for (const auto& f : r.rows)
    if (f.name == name) return f;
  throw std::runtime_error("no row " + name);
}

}  // namespace

TEST(Compare, D1Defaults) {
  const CompareReport r = compareOperators(d1(), {});
  EXPECT_EQ(formatRow(row(r, "ORD")),
            "ORD: cardinality 3 (= m, controlled), ranked no, preference input yes, parameters 2");
  EXPECT_EQ(formatRow(row(r, "Skyline")),
            "Skyline: cardinality 3 (uncontrolled), ranked no, preference input no, parameters 0");
  EXPECT_TRUE(row(r, "Top-k").controlled());
  EXPECT_TRUE(row(r, "Top-k").ranked);
  EXPECT_TRUE(row(r, "ORU").controlled());
  EXPECT_FALSE(row(r, "Skyline").controlled());
  EXPECT_FALSE(row(r, "ND").controlled());
  EXPECT_TRUE(row(r, "Representative (dominance)").controlled());
  EXPECT_TRUE(r.containment.ok);
}

TEST(Compare, ContainmentLineUnderRegion) {
  CompareOptions o;
  o.region = WeightRegion(2).with({{-1, 3}, Relation::LessEqual, 0});
  const CompareReport r = compareOperators(d1(), o);
  EXPECT_EQ(formatContainment(r.containment), "PO(1) ⊆ ND(1) ⊆ SKY(3): OK");
}

TEST(Compare, UnreachableIsReportedNotThrown) {
  CompareOptions o;
  o.m = 5;
  const CompareReport r = compareOperators(d1(), o);
  EXPECT_FALSE(row(r, "ORU").error.empty());
  EXPECT_FALSE(row(r, "ORU").controlled());
  EXPECT_NE(formatRow(row(r, "ORU")).find("failed (m unreachable"), std::string::npos);
}

TEST(Compare, ControlledOnlyWhenSizesMatch) {
  std::mt19937_64 rng(70);
  for (int rep = 0; rep < 20; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 60, 3);
    CompareOptions o;
    o.region = skyq::testing::randomPolytope(rng, 3);
    const CompareReport r = compareOperators(ds, o);
    EXPECT_TRUE(r.containment.ok);
    for (const auto& f : r.rows) {
      const bool want = f.error.empty() && f.requested && f.cardinality == *f.requested;
      EXPECT_EQ(f.controlled(), want) << f.name;
      if (f.controlled()) EXPECT_NE(formatRow(f).find("controlled)"), std::string::npos);
    }
  }
}
