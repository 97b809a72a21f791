#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vstoch/bistochastic.hpp"
#include "vstoch/vector_matrix.hpp"

namespace vstoch {

/// Residuals of the two isometry conditions. residual_cols measures the
/// column-frame Gram matrix against the identity (this is the binding
/// condition: ok is keyed on it). residual_rows measures the row-pair sums
/// sum_i <v_i^j, v_i^k> against delta(j,k); it is reported for diagnostics.
/// The two vanish together for d = 1 but not in general; see the tests.
struct IsometryReport {
  bool ok = false;
  double tol = kDefaultTol;
  Eigen::MatrixXd residual_cols;
  Eigen::MatrixXd residual_rows;
  double max_residual_cols = 0.0;
  double max_residual_rows = 0.0;
  int worst_col_j = 0;  // offending column pair for residual_cols
  int worst_col_k = 0;
};

template <ScalarType T>
IsometryReport check_isometry(const VectorMatrix<T>& v, double tol = kDefaultTol);
IsometryReport check_isometry(const AnyVectorMatrix& v, double tol = kDefaultTol);

/// Squared-norm map onto bistochastic matrices. Requires the column Gram
/// residual within tol and every row of squared norms within 2*tol of 1;
/// throws IsometryViolationError otherwise. The result carries tolerance
/// 2*tol.
template <ScalarType T>
Bistochastic nu(const VectorMatrix<T>& v, double tol = kDefaultTol);
Bistochastic nu(const AnyVectorMatrix& v, double tol = kDefaultTol);

/// Applies permutations: entry (sigma[row], tau[col]) of the result is entry
/// (row, col) of the input. The same convention permutes real matrices.
template <ScalarType T>
VectorMatrix<T> act_perm(const VectorMatrix<T>& v, std::span<const int> sigma,
                         std::span<const int> tau);
AnyVectorMatrix act_perm(const AnyVectorMatrix& v, std::span<const int> sigma,
                         std::span<const int> tau);
Eigen::MatrixXd act_perm(const Eigen::MatrixXd& m, std::span<const int> sigma,
                         std::span<const int> tau);

/// Row j entries are left-multiplied by blocks[j] (a d x d isometry given as
/// a VectorMatrix with n = d, d = 1); column i entries are right-multiplied
/// by the unit scalar phases[i]. Squared norms are unchanged.
template <ScalarType T>
VectorMatrix<T> act_diag(const VectorMatrix<T>& v,
                         std::span<const VectorMatrix<T>> blocks,
                         std::span<const T> phases, double tol = kDefaultTol);

/// C^d -> R^{2d} with interleaved coordinates (Re z_k, Im z_k); squared
/// norms are preserved to the last ulp.
VectorMatrixR realify(const VectorMatrixC& v);

/// H^d -> C^{2d} via q = z1 + j z2 with interleaved coordinates
/// (w_k + x_k i, y_k - z_k i); right-module compatible, norms preserved.
VectorMatrixC complexify_from_quaternion(const VectorMatrixH& v);

/// Extends every entry by zeros to dimension new_d >= d.
template <ScalarType T>
VectorMatrix<T> pad_dimension(const VectorMatrix<T>& v, int new_d);
AnyVectorMatrix pad_dimension(const AnyVectorMatrix& v, int new_d);

/// Real dimensions of the isometry set and of its quotient by the diagonal
/// actions, evaluated from the closed-form polynomials in (n, d). These are
/// formula values; no geometry is computed.
struct DimensionReport {
  Field field;
  int n;
  int d;
  std::int64_t dim_iso;
  std::int64_t dim_doc;
};

DimensionReport dims(Field field, int n, int d);

}  // namespace vstoch
