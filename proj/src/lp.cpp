#include "skyq/lp.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "skyq/error.hpp"

namespace skyq::lp {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

class Tableau {
 public:
  // rows 0..m-1 are constraints, row m is the objective (reduced costs);
  // the last column holds the right-hand side.
  Tableau(Eigen::MatrixXd t, std::vector<std::size_t> basis)
      : t_(std::move(t)), basis_(std::move(basis)) {}

  std::size_t rows() const { return static_cast<std::size_t>(t_.rows()) - 1; }
  std::size_t cols() const { return static_cast<std::size_t>(t_.cols()) - 1; }

  void pivot(std::size_t r, std::size_t c) {
    t_.row(r) /= t_(r, c);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == static_cast<Eigen::Index>(r)) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[r] = c;
  }

  // Runs simplex iterations over the columns flagged in `allowed`.
  Status optimize(const std::vector<bool>& allowed) {
    const std::size_t m = rows();
    for (std::size_t iter = 0; iter < 50000; ++iter) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j)
        if (allowed[j] && t_(m, j) < -kCostEps) {
          enter = j;
          break;
        }
      if (enter == cols()) return Status::Optimal;
      std::size_t leave = m;
      double bestRatio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = t_(i, cols()) / a;
        if (leave == m || ratio < bestRatio - 1e-13 ||
            (std::abs(ratio - bestRatio) <= 1e-13 && basis_[i] < basis_[leave])) {
          bestRatio = ratio;
          leave = i;
        }
      }
      if (leave == m) return Status::Unbounded;
      pivot(leave, enter);
    }
    throw Error("simplex iteration limit reached");
  }

  Eigen::MatrixXd& data() { return t_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void dropRow(std::size_t r) {
    const Eigen::Index n = t_.rows() - 1;
    t_.row(static_cast<Eigen::Index>(r)).swap(t_.row(n - 1));
    std::swap(basis_[r], basis_[static_cast<std::size_t>(n - 1)]);
    // move the objective row up over the dropped constraint
    t_.row(n - 1).swap(t_.row(n));
    t_.conservativeResize(n, Eigen::NoChange);
    basis_.pop_back();
  }

 private:
  Eigen::MatrixXd t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.rows.size();

  // Normalize every row to a non-negative right-hand side.
  std::vector<Row> rows = problem.rows;
  for (Row& row : rows) {
    if (row.coeffs.size() != n) throw InvalidArgument("lp row width mismatch");
    if (row.rhs < 0.0) {
      for (double& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.sense == Sense::LessEqual)
        row.sense = Sense::GreaterEqual;
      else if (row.sense == Sense::GreaterEqual)
        row.sense = Sense::LessEqual;
    }
  }

  std::size_t nSlack = 0, nArtificial = 0;
  for (const Row& row : rows) {
    if (row.sense != Sense::Equal) ++nSlack;
    if (row.sense != Sense::LessEqual) ++nArtificial;
  }
  const std::size_t total = n + nSlack + nArtificial;
  const std::size_t firstArtificial = n + nSlack;

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m + 1),
                                            static_cast<Eigen::Index>(total + 1));
  std::vector<std::size_t> basis(m);
  std::size_t slack = n, artificial = firstArtificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    for (std::size_t j = 0; j < n; ++j) t(r, static_cast<Eigen::Index>(j)) = rows[i].coeffs[j];
    t(r, static_cast<Eigen::Index>(total)) = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::LessEqual:
        t(r, static_cast<Eigen::Index>(slack)) = 1.0;
        basis[i] = slack++;
        break;
      case Sense::GreaterEqual:
        t(r, static_cast<Eigen::Index>(slack++)) = -1.0;
        t(r, static_cast<Eigen::Index>(artificial)) = 1.0;
        basis[i] = artificial++;
        break;
      case Sense::Equal:
        t(r, static_cast<Eigen::Index>(artificial)) = 1.0;
        basis[i] = artificial++;
        break;
    }
  }

  Tableau tab(std::move(t), std::move(basis));
  auto& T = tab.data();
  const auto objRow = static_cast<Eigen::Index>(m);

  // Phase 1: minimize the sum of artificials.
  if (nArtificial > 0) {
    for (std::size_t j = firstArtificial; j < total; ++j) T(objRow, static_cast<Eigen::Index>(j)) = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis()[i] >= firstArtificial) T.row(objRow) -= T.row(static_cast<Eigen::Index>(i));
    std::vector<bool> all(total, true);
    tab.optimize(all);
    if (-T(T.rows() - 1, static_cast<Eigen::Index>(total)) > 1e-9) return Solution{Status::Infeasible, 0.0, {}};
    // drive remaining artificials out of the basis
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < firstArtificial) {
        ++i;
        continue;
      }
      std::size_t col = firstArtificial;
      for (std::size_t j = 0; j < firstArtificial; ++j)
        if (std::abs(T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > 1e-9) {
          col = j;
          break;
        }
      if (col < firstArtificial) {
        tab.pivot(i, col);
        ++i;
      } else {
        tab.dropRow(i);  // redundant constraint
      }
    }
  }

  // Phase 2.
  auto& T2 = tab.data();
  const auto obj = T2.rows() - 1;
  T2.row(obj).setZero();
  for (std::size_t j = 0; j < n; ++j) T2(obj, static_cast<Eigen::Index>(j)) = problem.objective[j];
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const std::size_t b = tab.basis()[i];
    const double c = b < n ? problem.objective[b] : 0.0;
    if (c != 0.0) T2.row(obj) -= c * T2.row(static_cast<Eigen::Index>(i));
  }
  std::vector<bool> allowed(total, true);
  for (std::size_t j = firstArtificial; j < total; ++j) allowed[j] = false;
  if (tab.optimize(allowed) == Status::Unbounded) return Solution{Status::Unbounded, 0.0, {}};

  Solution sol;
  sol.status = Status::Optimal;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] < n)
      sol.x[tab.basis()[i]] = std::max(0.0, T2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(total)));
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.value += problem.objective[j] * sol.x[j];
  return sol;
}

}  // namespace skyq::lp
