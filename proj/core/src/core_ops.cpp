#include "vstoch/core_ops.hpp"

#include <algorithm>
#include <cmath>

#include "vstoch/errors.hpp"

namespace vstoch {

namespace {

void validate_permutation(std::span<const int> perm, int n, const char* which) {
  if (static_cast<int>(perm.size()) != n)
    throw InvalidInputError(std::string(which) + " permutation has wrong size");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw InvalidInputError(std::string(which) + " is not a permutation");
    seen[p] = 1;
  }
}

}  // namespace

template <ScalarType T>
IsometryReport check_isometry(const VectorMatrix<T>& v, double tol) {
  const int n = v.n();
  IsometryReport rep;
  rep.tol = tol;
  rep.residual_cols = Eigen::MatrixXd::Zero(n, n);
  rep.residual_rows = Eigen::MatrixXd::Zero(n, n);

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      T g = column_inner(v, j, k);
      if (j == k) g -= from_real<T>(1.0);
      const double res = abs_of(g);
      rep.residual_cols(j, k) = res;
      if (res > rep.max_residual_cols) {
        rep.max_residual_cols = res;
        rep.worst_col_j = j;
        rep.worst_col_k = k;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      T g = from_real<T>(0.0);
      for (int col = 0; col < n; ++col) g += inner(v.entry(j, col), v.entry(k, col));
      if (j == k) g -= from_real<T>(1.0);
      rep.residual_rows(j, k) = abs_of(g);
    }
  }
  rep.max_residual_rows = rep.residual_rows.maxCoeff();
  rep.ok = rep.max_residual_cols <= tol;
  return rep;
}

IsometryReport check_isometry(const AnyVectorMatrix& v, double tol) {
  return std::visit([&](const auto& m) { return check_isometry(m, tol); }, v);
}

template <ScalarType T>
Bistochastic nu(const VectorMatrix<T>& v, double tol) {
  const IsometryReport rep = check_isometry(v, tol);
  if (!rep.ok)
    throw IsometryViolationError(rep.max_residual_cols, rep.worst_col_j, rep.worst_col_k,
                                 "column frame");
  Eigen::MatrixXd p = squared_norms(v);
  for (int r = 0; r < v.n(); ++r) {
    const double s = p.row(r).sum();
    if (std::abs(s - 1.0) > 2.0 * tol)
      throw IsometryViolationError(std::abs(s - 1.0), r, r, "row norm");
  }
  return Bistochastic(std::move(p), 2.0 * tol);
}

Bistochastic nu(const AnyVectorMatrix& v, double tol) {
  return std::visit([&](const auto& m) { return nu(m, tol); }, v);
}

template <ScalarType T>
VectorMatrix<T> act_perm(const VectorMatrix<T>& v, std::span<const int> sigma,
                         std::span<const int> tau) {
  validate_permutation(sigma, v.n(), "row");
  validate_permutation(tau, v.n(), "column");
  VectorMatrix<T> out(v.n(), v.d());
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) {
      auto dst = out.entry(sigma[r], tau[c]);
      auto src = v.entry(r, c);
      std::copy(src.begin(), src.end(), dst.begin());
    }
  return out;
}

AnyVectorMatrix act_perm(const AnyVectorMatrix& v, std::span<const int> sigma,
                         std::span<const int> tau) {
  return std::visit(
      [&](const auto& m) { return AnyVectorMatrix(act_perm(m, sigma, tau)); }, v);
}

Eigen::MatrixXd act_perm(const Eigen::MatrixXd& m, std::span<const int> sigma,
                         std::span<const int> tau) {
  validate_permutation(sigma, static_cast<int>(m.rows()), "row");
  validate_permutation(tau, static_cast<int>(m.cols()), "column");
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(sigma[r], tau[c]) = m(r, c);
  return out;
}

template <ScalarType T>
VectorMatrix<T> act_diag(const VectorMatrix<T>& v,
                         std::span<const VectorMatrix<T>> blocks,
                         std::span<const T> phases, double tol) {
  const int n = v.n();
  const int d = v.d();
  if (static_cast<int>(blocks.size()) != n)
    throw InvalidInputError("act_diag needs one block per row");
  if (static_cast<int>(phases.size()) != n)
    throw InvalidInputError("act_diag needs one phase per column");
  for (const auto& b : blocks) {
    if (b.n() != d || b.d() != 1)
      throw InvalidInputError("block has wrong shape; expected d x d scalars");
    if (!check_isometry(b, tol).ok)
      throw InvalidInputError("block is not an isometry within tolerance");
  }
  for (const T& ph : phases)
    if (std::abs(norm_sq_of(ph) - 1.0) > tol)
      throw InvalidInputError("phase is not a unit scalar");

  VectorMatrix<T> out(n, d);
  std::vector<T> tmp(d);
  for (int r = 0; r < n; ++r) {
    const VectorMatrix<T>& b = blocks[r];
    for (int c = 0; c < n; ++c) {
      auto src = v.entry(r, c);
      for (int i = 0; i < d; ++i) {
        T acc = from_real<T>(0.0);
        for (int k = 0; k < d; ++k) acc += b.entry(i, k)[0] * src[k];
        tmp[i] = acc;
      }
      auto dst = out.entry(r, c);
      for (int i = 0; i < d; ++i) dst[i] = tmp[i] * phases[c];
    }
  }
  return out;
}

VectorMatrixR realify(const VectorMatrixC& v) {
  VectorMatrixR out(v.n(), 2 * v.d());
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) {
      auto src = v.entry(r, c);
      auto dst = out.entry(r, c);
      for (int k = 0; k < v.d(); ++k) {
        dst[2 * k] = src[k].real();
        dst[2 * k + 1] = src[k].imag();
      }
    }
  return out;
}

VectorMatrixC complexify_from_quaternion(const VectorMatrixH& v) {
  VectorMatrixC out(v.n(), 2 * v.d());
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) {
      auto src = v.entry(r, c);
      auto dst = out.entry(r, c);
      for (int k = 0; k < v.d(); ++k) {
        dst[2 * k] = Complex(src[k].w, src[k].x);
        dst[2 * k + 1] = Complex(src[k].y, -src[k].z);
      }
    }
  return out;
}

template <ScalarType T>
VectorMatrix<T> pad_dimension(const VectorMatrix<T>& v, int new_d) {
  if (new_d < v.d()) throw InvalidInputError("pad_dimension cannot shrink d");
  VectorMatrix<T> out(v.n(), new_d);
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) {
      auto src = v.entry(r, c);
      auto dst = out.entry(r, c);
      std::copy(src.begin(), src.end(), dst.begin());
    }
  return out;
}

AnyVectorMatrix pad_dimension(const AnyVectorMatrix& v, int new_d) {
  return std::visit(
      [&](const auto& m) { return AnyVectorMatrix(pad_dimension(m, new_d)); }, v);
}

DimensionReport dims(Field field, int n, int d) {
  if (n < 1 || d < 1) throw InvalidInputError("dims requires n >= 1 and d >= 1");
  const std::int64_t N = n;
  const std::int64_t D = d;
  std::int64_t iso = 0;
  std::int64_t doc = 0;
  switch (field) {
    case Field::R:
      iso = ((2 * D - 1) * N * N - N) / 2;
      doc = ((2 * D - 1) * N * N - (D * D - D + 1) * N) / 2;
      break;
    case Field::C:
      iso = (2 * D - 1) * N * N;
      doc = (2 * D - 1) * N * N - (D * D + 1) * N + 1;
      break;
    case Field::H:
      iso = (4 * D - 2) * N * N + N;
      doc = (4 * D - 2) * N * N - (D * D + D + 2) * N;
      break;
  }
  return {field, n, d, iso, doc};
}

template IsometryReport check_isometry<double>(const VectorMatrix<double>&, double);
template IsometryReport check_isometry<Complex>(const VectorMatrix<Complex>&, double);
template IsometryReport check_isometry<Quaternion>(const VectorMatrix<Quaternion>&, double);

template Bistochastic nu<double>(const VectorMatrix<double>&, double);
template Bistochastic nu<Complex>(const VectorMatrix<Complex>&, double);
template Bistochastic nu<Quaternion>(const VectorMatrix<Quaternion>&, double);

template VectorMatrix<double> act_perm<double>(const VectorMatrix<double>&,
                                               std::span<const int>, std::span<const int>);
template VectorMatrix<Complex> act_perm<Complex>(const VectorMatrix<Complex>&,
                                                 std::span<const int>, std::span<const int>);
template VectorMatrix<Quaternion> act_perm<Quaternion>(const VectorMatrix<Quaternion>&,
                                                       std::span<const int>,
                                                       std::span<const int>);

template VectorMatrix<double> act_diag<double>(const VectorMatrix<double>&,
                                               std::span<const VectorMatrix<double>>,
                                               std::span<const double>, double);
template VectorMatrix<Complex> act_diag<Complex>(const VectorMatrix<Complex>&,
                                                 std::span<const VectorMatrix<Complex>>,
                                                 std::span<const Complex>, double);
template VectorMatrix<Quaternion> act_diag<Quaternion>(
    const VectorMatrix<Quaternion>&, std::span<const VectorMatrix<Quaternion>>,
    std::span<const Quaternion>, double);

template VectorMatrix<double> pad_dimension<double>(const VectorMatrix<double>&, int);
template VectorMatrix<Complex> pad_dimension<Complex>(const VectorMatrix<Complex>&, int);
template VectorMatrix<Quaternion> pad_dimension<Quaternion>(const VectorMatrix<Quaternion>&,
                                                            int);

}  // namespace vstoch
