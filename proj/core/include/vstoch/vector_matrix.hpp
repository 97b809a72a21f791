#pragma once

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "vstoch/scalar.hpp"

namespace vstoch {

/// An n x n matrix whose entries are vectors in F^d. Stacking the entries of
/// column i over the rows gives the column frame w_i in F^{nd}; the matrix is
/// an isometry when these frames are orthonormal. Storage is row-major:
/// (row, col, slot).
template <ScalarType T>
class VectorMatrix {
 public:
  VectorMatrix(int n, int d)
      : n_(n), d_(d), data_(static_cast<std::size_t>(n) * n * d, from_real<T>(0.0)) {
    if (n < 1 || d < 1) throw InvalidInputError("VectorMatrix requires n >= 1 and d >= 1");
  }

  static constexpr Field field() { return field_of_v<T>; }
  int n() const { return n_; }
  int d() const { return d_; }

  std::span<T> entry(int row, int col) {
    return {data_.data() + offset(row, col), static_cast<std::size_t>(d_)};
  }
  std::span<const T> entry(int row, int col) const {
    return {data_.data() + offset(row, col), static_cast<std::size_t>(d_)};
  }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  friend bool operator==(const VectorMatrix& a, const VectorMatrix& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(int row, int col) const {
    return (static_cast<std::size_t>(row) * n_ + col) * d_;
  }

  int n_;
  int d_;
  std::vector<T> data_;
};

using VectorMatrixR = VectorMatrix<double>;
using VectorMatrixC = VectorMatrix<Complex>;
using VectorMatrixH = VectorMatrix<Quaternion>;

using AnyVectorMatrix = std::variant<VectorMatrixR, VectorMatrixC, VectorMatrixH>;

Field field_of(const AnyVectorMatrix& v);
int n_of(const AnyVectorMatrix& v);
int d_of(const AnyVectorMatrix& v);

/// Inner product of column frames w_a and w_b in F^{nd}.
template <ScalarType T>
T column_inner(const VectorMatrix<T>& v, int a, int b) {
  T acc = from_real<T>(0.0);
  for (int row = 0; row < v.n(); ++row) acc += inner(v.entry(row, a), v.entry(row, b));
  return acc;
}

/// Matrix of squared entry norms. No isometry requirement; see nu() for the
/// checked map onto bistochastic matrices.
template <ScalarType T>
Eigen::MatrixXd squared_norms(const VectorMatrix<T>& v);

Eigen::MatrixXd squared_norms(const AnyVectorMatrix& v);

/// Orthonormalizes the column frames in place (modified Gram-Schmidt with a
/// second reorthogonalization pass). Degenerate columns are replaced by the
/// first standard basis direction not in the span.
template <ScalarType T>
void orthonormalize_columns(VectorMatrix<T>& v);

}  // namespace vstoch
