#include "vstoch/vector_matrix.hpp"

#include <cmath>

namespace vstoch {

Field field_of(const AnyVectorMatrix& v) {
  return std::visit([](const auto& m) { return m.field(); }, v);
}

int n_of(const AnyVectorMatrix& v) {
  return std::visit([](const auto& m) { return m.n(); }, v);
}

int d_of(const AnyVectorMatrix& v) {
  return std::visit([](const auto& m) { return m.d(); }, v);
}

template <ScalarType T>
Eigen::MatrixXd squared_norms(const VectorMatrix<T>& v) {
  Eigen::MatrixXd out(v.n(), v.n());
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) out(r, c) = norm_sq(v.entry(r, c));
  return out;
}

Eigen::MatrixXd squared_norms(const AnyVectorMatrix& v) {
  return std::visit([](const auto& m) { return squared_norms(m); }, v);
}

namespace {

// Subtracts from column b its projection onto the unit column a.
template <ScalarType T>
void project_out(VectorMatrix<T>& v, int a, int b) {
  const T c = column_inner(v, a, b);
  for (int row = 0; row < v.n(); ++row) {
    auto eb = v.entry(row, b);
    auto ea = v.entry(row, a);
    for (int s = 0; s < v.d(); ++s) eb[s] -= ea[s] * c;
  }
}

template <ScalarType T>
double column_norm(const VectorMatrix<T>& v, int a) {
  double acc = 0.0;
  for (int row = 0; row < v.n(); ++row) acc += norm_sq(v.entry(row, a));
  return std::sqrt(acc);
}

template <ScalarType T>
void scale_column(VectorMatrix<T>& v, int a, double s) {
  for (int row = 0; row < v.n(); ++row) {
    auto e = v.entry(row, a);
    for (int k = 0; k < v.d(); ++k) e[k] = e[k] * s;
  }
}

// Writes standard basis direction `index` of F^{nd} into column a.
template <ScalarType T>
void set_column_basis(VectorMatrix<T>& v, int a, int index) {
  for (int row = 0; row < v.n(); ++row) {
    auto e = v.entry(row, a);
    for (int k = 0; k < v.d(); ++k) e[k] = from_real<T>(0.0);
  }
  v.entry(index / v.d(), a)[index % v.d()] = from_real<T>(1.0);
}

}  // namespace

template <ScalarType T>
void orthonormalize_columns(VectorMatrix<T>& v) {
  const int n = v.n();
  const int nd = v.n() * v.d();
  for (int col = 0; col < n; ++col) {
    for (int pass = 0; pass < 2; ++pass)
      for (int prev = 0; prev < col; ++prev) project_out(v, prev, col);
    double nrm = column_norm(v, col);
    int basis = 0;
    while (nrm < 1e-12 && basis < nd) {
      set_column_basis(v, col, basis++);
      for (int pass = 0; pass < 2; ++pass)
        for (int prev = 0; prev < col; ++prev) project_out(v, prev, col);
      nrm = column_norm(v, col);
    }
    scale_column(v, col, 1.0 / nrm);
  }
}

template Eigen::MatrixXd squared_norms<double>(const VectorMatrix<double>&);
template Eigen::MatrixXd squared_norms<Complex>(const VectorMatrix<Complex>&);
template Eigen::MatrixXd squared_norms<Quaternion>(const VectorMatrix<Quaternion>&);

template void orthonormalize_columns<double>(VectorMatrix<double>&);
template void orthonormalize_columns<Complex>(VectorMatrix<Complex>&);
template void orthonormalize_columns<Quaternion>(VectorMatrix<Quaternion>&);

}  // namespace vstoch
