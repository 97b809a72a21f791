#pragma once

#include <Eigen/Dense>

namespace vstoch {

inline constexpr double kDefaultTol = 1e-9;

/// An n x n bistochastic matrix: entries >= -tol and every row and column
/// sum within tol of 1. Validated on construction, immutable afterwards.
/// Entry (row, col) follows (row, column) ordering throughout.
class Bistochastic {
 public:
  explicit Bistochastic(Eigen::MatrixXd entries, double tol = kDefaultTol);

  int n() const { return static_cast<int>(m_.rows()); }
  double tol() const { return tol_; }
  double operator()(int row, int col) const { return m_(row, col); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::VectorXd diagonal() const { return m_.diagonal(); }

  bool is_symmetric(double tol) const;

  /// The n x n identity, bistochastic for any n.
  static Bistochastic identity(int n);
  /// The flat matrix with all entries 1/n.
  static Bistochastic uniform(int n);

 private:
  Eigen::MatrixXd m_;
  double tol_;
};

}  // namespace vstoch
