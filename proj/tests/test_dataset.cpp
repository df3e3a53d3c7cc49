#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skyq/classic.hpp"
#include "skyq/dataset.hpp"
#include "skyq/error.hpp"

using namespace skyq;
using skyq::testing::d1;

TEST(Csv, ParsesIdColumn) {
  std::istringstream in("id,a1,a2\na,1,5\n");
  const Dataset ds = parseCsv(in);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.tuples()[0].id, "a");
  EXPECT_EQ(ds.tuples()[0].attrs, (std::vector<double>{1, 5}));
  EXPECT_FALSE(ds.normalized());
}

TEST(Csv, RowIndexIdsWithoutIdColumn) {
  std::istringstream in("x,y\n1,2\n3,4\n");
  const Dataset ds = parseCsv(in);
  EXPECT_EQ(ds.tuples()[0].id, "1");
  EXPECT_EQ(ds.tuples()[1].id, "2");
  EXPECT_EQ(ds.schema(), (std::vector<std::string>{"x", "y"}));
}

TEST(Csv, EmptyDataSection) {
  std::istringstream in("id,a1,a2\n");
  EXPECT_EQ(parseCsv(in).size(), 0u);
}

TEST(Csv, ShortRowNamesRow) {
  std::istringstream in("id,a1,a2\na,1\n");
  try {
    parseCsv(in);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("row 1: expected 2 attributes"), std::string::npos);
  }
}

TEST(Csv, MalformedNumberAndDuplicateId) {
  std::istringstream bad("id,a1\na,x\n");
  EXPECT_THROW(parseCsv(bad), DataError);
  std::istringstream dup("id,a1\na,1\na,2\n");
  EXPECT_THROW(parseCsv(dup), DataError);
}

TEST(Csv, RoundTripIsExact) {
  std::mt19937_64 rng(3);
  const Dataset ds = skyq::testing::randomDataset(rng, 40, 3, false);
  std::stringstream buf;
  writeCsv(ds, buf);
  EXPECT_EQ(parseCsv(buf), ds);
}

TEST(Normalize, Column) {
  const Dataset ds({"a1"}, {{"x", {1}}, {"y", {2}}, {"z", {5}}});
  const Dataset n = normalize(ds);
  EXPECT_TRUE(n.normalized());
  EXPECT_EQ(n.tuples()[0].attrs[0], 0.0);
  EXPECT_EQ(n.tuples()[1].attrs[0], 0.25);
  EXPECT_EQ(n.tuples()[2].attrs[0], 1.0);
}

TEST(Normalize, ConstantColumnMapsToZero) {
  const Dataset n = normalize(Dataset({"a1"}, {{"x", {3}}, {"y", {3}}}));
  EXPECT_EQ(n.tuples()[0].attrs[0], 0.0);
  EXPECT_EQ(n.tuples()[1].attrs[0], 0.0);
}

TEST(Normalize, D1ByHand) {
  const Dataset n = normalize(d1());
  // min-max per column: a1 in [1,5], a2 in [1,5]
  const std::map<std::string, std::vector<double>> want{
      {"a", {0, 1}}, {"b", {0.25, 0.25}}, {"c", {1, 0}}, {"d", {0.75, 0.75}}, {"e", {0.5, 0.5}}};
  for (const Tuple& t : n.tuples()) EXPECT_EQ(t.attrs, want.at(t.id)) << t.id;
}

TEST(Normalize, IdempotentAndRejectsEmpty) {
  std::mt19937_64 rng(5);
  const Dataset n = normalize(skyq::testing::randomDataset(rng, 30, 3, false));
  EXPECT_EQ(normalize(n), n);
  EXPECT_THROW(normalize(Dataset({"a1"}, {})), Error);
}

TEST(Dataset, RejectsBadTuples) {
  EXPECT_THROW(Dataset({"a1"}, {{"x", {-1}}}), DataError);
  EXPECT_THROW(Dataset({"a1"}, {{"x", {2}}}, true), DataError);
  EXPECT_THROW(Dataset({"a1", "a2"}, {{"x", {1}}}), DataError);
}

TEST(Generate, EmptyAndDeterministic) {
  EXPECT_EQ(generate(Distribution::Independent, 0, 2, 7).size(), 0u);
  for (auto dist : {Distribution::Independent, Distribution::Correlated, Distribution::Anticorrelated}) {
    const Dataset a = generate(dist, 200, 3, 11), b = generate(dist, 200, 3, 11);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.normalized());
    for (const Tuple& t : a.tuples())
      for (double x : t.attrs) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
      }
  }
  EXPECT_NE(generate(Distribution::Independent, 10, 2, 1), generate(Distribution::Independent, 10, 2, 2));
}

TEST(Generate, AnticorrelatedSkylineIsLarger) {
  const auto anti = oracle::skyline(generate(Distribution::Anticorrelated, 1000, 2, 1));
  const auto corr = oracle::skyline(generate(Distribution::Correlated, 1000, 2, 1));
  EXPECT_GT(anti.size(), corr.size());
}

TEST(Generate, UnknownDistribution) {
  EXPECT_EQ(parseDistribution("anticorrelated"), Distribution::Anticorrelated);
  EXPECT_THROW(parseDistribution("foo"), InvalidArgument);
}
