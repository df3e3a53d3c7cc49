#include <gtest/gtest.h>

#include "skyq/lp.hpp"

using namespace skyq::lp;

TEST(Lp, SmallMaximization) {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
  Problem p{{-1, -1}, {{{1, 2}, Sense::LessEqual, 4}, {{3, 1}, Sense::LessEqual, 6}}};
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.value, -2.8, 1e-12);
  EXPECT_NEAR(s.x[0], 1.6, 1e-12);
  EXPECT_NEAR(s.x[1], 1.2, 1e-12);
}

TEST(Lp, EqualityAndGreater) {
  // min x  s.t. x + y = 1, y <= 0.3, x >= 0.2
  Problem p{{1, 0},
            {{{1, 1}, Sense::Equal, 1}, {{0, 1}, Sense::LessEqual, 0.3}, {{1, 0}, Sense::GreaterEqual, 0.2}}};
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.value, 0.7, 1e-12);
}

TEST(Lp, Infeasible) {
  Problem p{{1}, {{{1}, Sense::GreaterEqual, 2}, {{1}, Sense::LessEqual, 1}}};
  EXPECT_EQ(solve(p).status, Status::Infeasible);
}

TEST(Lp, Unbounded) {
  Problem p{{-1, 0}, {{{0, 1}, Sense::LessEqual, 1}}};
  EXPECT_EQ(solve(p).status, Status::Unbounded);
}

TEST(Lp, RedundantEqualities) {
  Problem p{{1, 2}, {{{1, 1}, Sense::Equal, 1}, {{2, 2}, Sense::Equal, 2}}};
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.value, 1.0, 1e-12);
}

TEST(Lp, NegativeRightHandSide) {
  // -x <= -3  is x >= 3
  Problem p{{1}, {{{-1}, Sense::LessEqual, -3}}};
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.x[0], 3.0, 1e-12);
}
