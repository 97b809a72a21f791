#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vstoch/bistochastic.hpp"
#include "vstoch/core_ops.hpp"
#include "vstoch/vector_matrix.hpp"

namespace vstoch {

/// Tolerance for feasibility verdicts and for clamping solved squares.
inline constexpr double kFeasibilityTol = 1e-12;
/// A construction certifies its output when both residuals are below this.
inline constexpr double kCertifiedTol = 1e-9;

/// Solves the cyclic system x_i + x_{i+1} = xi_{i+2} (indices mod n) by the
/// closed-form alternating sum. Throws EvenNError for even n, where the
/// system is singular.
std::vector<double> solve_cyclic(std::span<const double> xi);

/// Builds a real skew-symmetric matrix supported on cyclic-neighbor pairs
/// whose column square sums equal xi. Entries above the diagonal are
/// nonnegative. Throws InfeasibleXiError when the cyclic solve yields a
/// square below -kFeasibilityTol.
Eigen::MatrixXd build_skew(std::span<const double> xi);

/// Per-inequality slack report for the alternating diagonal-sum conditions.
struct FeasibilityReport {
  enum class Verdict { strict_interior, boundary, infeasible };

  int n = 0;
  std::vector<double> slacks;                      // RHS_i - LHS_i, one per i
  std::vector<std::pair<int, int>> offdiag_zero_pairs;  // (row, col), row != col
  Verdict verdict = Verdict::infeasible;

  double min_slack() const;
};

const char* to_string(FeasibilityReport::Verdict v);

/// Evaluates the n alternating diagonal-sum inequalities (for n = 3 these
/// are the triangle inequalities on the diagonal). Odd n only.
FeasibilityReport check_feasibility(const Bistochastic& p);

enum class ConstructMode { paper_literal, weighted };

const char* to_string(ConstructMode m);

/// Result of the d = n-1 construction. Residuals are always recorded; the
/// result certifies membership only when success() holds.
struct ConstructionResult {
  VectorMatrixR V;
  Eigen::MatrixXd A;     // cyclic-neighbor coefficients of the diagonal entries
  ConstructMode mode = ConstructMode::weighted;
  double residual_nu = 0.0;
  double residual_isometry = 0.0;

  bool success() const {
    return residual_nu <= kCertifiedTol && residual_isometry <= kCertifiedTol;
  }
};

/// Builds a real certificate with internal dimension n-1 for odd n > 1.
///
/// Off-diagonal entries are sqrt(p) times fixed basis directions; diagonal
/// entries combine the normalized neighbors with coefficients from A.
/// paper_literal takes A skew-symmetric with column square sums equal to the
/// diagonal of P; the column frames are then orthogonal exactly when P is
/// symmetric, so residuals are only guaranteed small in that case. weighted
/// instead makes a_i^j sqrt(p_i^j) skew-symmetric, which cancels the cross
/// terms for arbitrary P; it succeeds whenever the weighted cyclic system
/// has a nonnegative solution.
ConstructionResult construct_nminus1(const Bistochastic& p, ConstructMode mode);

/// Certificate with d >= n over any field: entry (row, col) is
/// sqrt(p(row, col)) times basis vector e_col.
AnyVectorMatrix construct_full(const Bistochastic& p, Field field, int d);

/// Constructive upper bound on the minimal internal dimension, with the
/// certificate that attains it. Tries d = n-1 (weighted mode, real field,
/// odd n) and falls back to the always-successful d = n construction.
struct DminUpperBound {
  int d_upper;
  AnyVectorMatrix certificate;
};

DminUpperBound dmin_upper_bound(const Bistochastic& p, Field field);

}  // namespace vstoch
