#include "vstoch/sample.hpp"

#include <cmath>

#include "vstoch/errors.hpp"

namespace vstoch {

namespace {

constexpr int kMaxSweeps = 10000;
constexpr double kSumTol = 1e-12;

}  // namespace

Bistochastic sample_sinkhorn(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInputError("sample_sinkhorn requires n >= 1");
  Rng rng(seed);
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = rng.uniform(0.1, 1.1);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (int r = 0; r < n; ++r) m.row(r) /= m.row(r).sum();
    for (int c = 0; c < n; ++c) m.col(c) /= m.col(c).sum();
    double worst = 0.0;
    for (int r = 0; r < n; ++r) worst = std::max(worst, std::abs(m.row(r).sum() - 1.0));
    for (int c = 0; c < n; ++c) worst = std::max(worst, std::abs(m.col(c).sum() - 1.0));
    if (worst <= kSumTol) return Bistochastic(std::move(m));
  }
  throw NonConvergenceError("sinkhorn balancing did not converge in " +
                            std::to_string(kMaxSweeps) + " sweeps");
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

Bistochastic sample_birkhoff(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw InvalidInputError("sample_birkhoff requires n >= 1 and k >= 1");
  Rng rng(seed);
  // Interior simplex weights via normalized exponentials; zero draws are
  // regenerated so no weight can collapse to the boundary.
  std::vector<double> w(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    double e = 0.0;
    while (e <= 0.0) e = -std::log1p(-rng.uniform());
    w[i] = e;
    total += e;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  if (k == 1) {
    std::vector<int> perm = random_permutation(n, rng);
    for (int c = 0; c < n; ++c) m(perm[c], c) = 1.0;
    return Bistochastic(std::move(m));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<int> perm = random_permutation(n, rng);
    const double weight = w[i] / total;
    for (int c = 0; c < n; ++c) m(perm[c], c) += weight;
  }
  return Bistochastic(std::move(m));
}

namespace {

template <ScalarType T>
T random_scalar(Rng& rng) {
  if constexpr (std::same_as<T, double>) {
    return rng.normal();
  } else if constexpr (std::same_as<T, Complex>) {
    const double re = rng.normal();
    const double im = rng.normal();
    return Complex(re, im);
  } else {
    const double w = rng.normal();
    const double x = rng.normal();
    const double y = rng.normal();
    const double z = rng.normal();
    return Quaternion(w, x, y, z);
  }
}

template <ScalarType T>
VectorMatrix<T> sample_isometry_t(int n, int d, Rng& rng) {
  VectorMatrix<T> v(n, d);
  for (T& s : v.data()) s = random_scalar<T>(rng);
  orthonormalize_columns(v);
  return v;
}

}  // namespace

AnyVectorMatrix sample_isometry(Field field, int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw InvalidInputError("sample_isometry requires n >= 1 and d >= 1");
  Rng rng(seed);
  switch (field) {
    case Field::R: return sample_isometry_t<double>(n, d, rng);
    case Field::C: return sample_isometry_t<Complex>(n, d, rng);
    case Field::H: return sample_isometry_t<Quaternion>(n, d, rng);
  }
  throw InvalidInputError("unknown field");
}

template <ScalarType T>
std::vector<T> random_unit_scalars(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<T> out(count);
  for (T& s : out) {
    T v = from_real<T>(0.0);
    double nrm = 0.0;
    while (nrm < 1e-6) {
      v = random_scalar<T>(rng);
      nrm = abs_of(v);
    }
    if constexpr (std::same_as<T, double>) {
      s = v > 0.0 ? 1.0 : -1.0;
    } else {
      s = v * (1.0 / nrm);
    }
  }
  return out;
}

template std::vector<double> random_unit_scalars<double>(int, std::uint64_t);
template std::vector<Complex> random_unit_scalars<Complex>(int, std::uint64_t);
template std::vector<Quaternion> random_unit_scalars<Quaternion>(int, std::uint64_t);

}  // namespace vstoch
