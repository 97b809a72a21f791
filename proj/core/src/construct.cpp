#include "vstoch/construct.hpp"

#include <algorithm>
#include <cmath>

#include "vstoch/errors.hpp"

namespace vstoch {

std::vector<double> solve_cyclic(std::span<const double> xi) {
  const int n = static_cast<int>(xi.size());
  if (n < 1 || n % 2 == 0) throw EvenNError(n);
  if (n == 1) return {xi[0] / 2.0};  // x + x = xi
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    // 2 x_i = -xi_i + xi_{i+1} + xi_{i+2} - xi_{i+3} + xi_{i+4} - ... + xi_{i+n-1}
    double acc = -xi[i] + xi[(i + 1) % n];
    for (int m = 2; m < n; ++m) {
      const double term = xi[(i + m) % n];
      acc += (m % 2 == 0) ? term : -term;
    }
    x[i] = acc / 2.0;
  }
  return x;
}

namespace {

// Edge m joins columns m and m+1 (mod n); its squared coefficient is
// x[(m-1) mod n] of the cyclic solve, so that column j collects edges j-1
// and j and their squares sum to xi_j.
std::vector<double> edge_squares(std::span<const double> xi) {
  std::vector<double> x = solve_cyclic(xi);
  const int n = static_cast<int>(x.size());
  std::vector<double> e(n);
  for (int m = 0; m < n; ++m) e[m] = x[(m - 1 + n) % n];
  return e;
}

// Fills a skew matrix from per-edge squares: entries above the diagonal are
// +sqrt, below are -sqrt. Squares within kFeasibilityTol of zero are clamped.
Eigen::MatrixXd skew_from_edges(std::vector<double> edges) {
  const int n = static_cast<int>(edges.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    const double val = std::sqrt(std::max(edges[m], 0.0));
    const int i = m;
    const int j = (m + 1) % n;
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    a(lo, hi) = val;
    a(hi, lo) = -val;
  }
  return a;
}

}  // namespace

Eigen::MatrixXd build_skew(std::span<const double> xi) {
  std::vector<double> e = edge_squares(xi);
  for (int m = 0; m < static_cast<int>(e.size()); ++m)
    if (e[m] < -kFeasibilityTol) throw InfeasibleXiError(m, e[m]);
  return skew_from_edges(std::move(e));
}

double FeasibilityReport::min_slack() const {
  double m = slacks.empty() ? 0.0 : slacks[0];
  for (double s : slacks) m = std::min(m, s);
  return m;
}

const char* to_string(FeasibilityReport::Verdict v) {
  switch (v) {
    case FeasibilityReport::Verdict::strict_interior: return "strict_interior";
    case FeasibilityReport::Verdict::boundary: return "boundary";
    case FeasibilityReport::Verdict::infeasible: return "infeasible";
  }
  return "?";
}

const char* to_string(ConstructMode m) {
  return m == ConstructMode::paper_literal ? "paper_literal" : "weighted";
}

FeasibilityReport check_feasibility(const Bistochastic& p) {
  const int n = p.n();
  if (n % 2 == 0) throw EvenNError(n);
  FeasibilityReport rep;
  rep.n = n;
  rep.slacks.resize(n);
  const Eigen::VectorXd diag = p.diagonal();
  for (int i = 0; i < n; ++i) {
    // slack_i = (offsets 1, 2, 4, 6, ...) - (offsets 0, 3, 5, 7, ...)
    double slack = -diag[i];
    if (n > 1) slack += diag[(i + 1) % n] + diag[(i + 2) % n];
    for (int m = 3; m < n; ++m) {
      const double term = diag[(i + m) % n];
      slack += (m % 2 == 0) ? term : -term;
    }
    rep.slacks[i] = slack;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c && p(r, c) <= 0.0) rep.offdiag_zero_pairs.emplace_back(r, c);

  const double min_slack = rep.min_slack();
  if (min_slack < -kFeasibilityTol)
    rep.verdict = FeasibilityReport::Verdict::infeasible;
  else if (min_slack > kFeasibilityTol && rep.offdiag_zero_pairs.empty())
    rep.verdict = FeasibilityReport::Verdict::strict_interior;
  else
    rep.verdict = FeasibilityReport::Verdict::boundary;
  return rep;
}

namespace {

// Basis direction used by entry (row, col), col != row: the off-diagonal
// entries of each row occupy the n-1 basis directions injectively.
int offdiag_basis(int row, int col) { return col < row ? col : col - 1; }

struct NeighborCoeffs {
  // a(row, col) on the cyclic-neighbor support, zero elsewhere.
  Eigen::MatrixXd a;
};

// paper-literal coefficients: skew A with column square sums equal to the
// diagonal of P.
NeighborCoeffs coeffs_paper(const Bistochastic& p) {
  const Eigen::VectorXd diag = p.diagonal();
  std::vector<double> xi(diag.data(), diag.data() + p.n());
  return {build_skew(xi)};
}

// weighted coefficients: c(row, col) = a(row, col) sqrt(p(row, col)) skew on
// the cyclic-neighbor support. The squared edge values y_m solve
// y_{j-1}/p(j, j-1) + y_j/p(j, j+1) = p(j, j).
NeighborCoeffs coeffs_weighted(const Bistochastic& p) {
  const int n = p.n();
  for (int j = 0; j < n; ++j) {
    const int prev = (j - 1 + n) % n;
    const int next = (j + 1) % n;
    if (p(j, prev) <= 0.0) throw ZeroDivisorError(j, prev);
    if (p(j, next) <= 0.0) throw ZeroDivisorError(j, next);
  }
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs(n);
  for (int j = 0; j < n; ++j) {
    const int prev_edge = (j - 1 + n) % n;  // edge {j-1, j}
    const int next_edge = j;                // edge {j, j+1}
    sys(j, prev_edge) += 1.0 / p(j, (j - 1 + n) % n);
    sys(j, next_edge) += 1.0 / p(j, (j + 1) % n);
    rhs[j] = p(j, j);
  }
  Eigen::VectorXd y = Eigen::PartialPivLU<Eigen::MatrixXd>(sys).solve(rhs);
  for (int m = 0; m < n; ++m)
    if (y[m] < -kFeasibilityTol) throw WeightedInfeasibleError(m, y[m]);

  std::vector<double> edges(n);
  for (int m = 0; m < n; ++m) edges[m] = y[m];
  Eigen::MatrixXd c = skew_from_edges(std::move(edges));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const int prev = (j - 1 + n) % n;
    const int next = (j + 1) % n;
    a(j, prev) = c(j, prev) / std::sqrt(p(j, prev));
    a(j, next) = c(j, next) / std::sqrt(p(j, next));
  }
  return {std::move(a)};
}

}  // namespace

ConstructionResult construct_nminus1(const Bistochastic& p, ConstructMode mode) {
  const int n = p.n();
  if (n % 2 == 0) throw EvenNError(n);
  if (n == 1) throw InvalidInputError("construction requires odd n > 1");

  NeighborCoeffs coeffs =
      mode == ConstructMode::paper_literal ? coeffs_paper(p) : coeffs_weighted(p);

  const int d = n - 1;
  VectorMatrixR v(n, d);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      if (col == row) continue;
      v.entry(row, col)[offdiag_basis(row, col)] = std::sqrt(std::max(p(row, col), 0.0));
    }
  for (int j = 0; j < n; ++j) {
    auto diag = v.entry(j, j);
    for (const int k : {(j - 1 + n) % n, (j + 1) % n}) {
      const double a = coeffs.a(j, k);
      if (a == 0.0) continue;
      if (p(j, k) <= 0.0) throw ZeroDivisorError(j, k);
      diag[offdiag_basis(j, k)] += a;
    }
  }

  ConstructionResult result{std::move(v), std::move(coeffs.a), mode, 0.0, 0.0};
  result.residual_nu = (squared_norms(result.V) - p.matrix()).cwiseAbs().maxCoeff();
  result.residual_isometry = check_isometry(result.V).max_residual_cols;
  return result;
}

AnyVectorMatrix construct_full(const Bistochastic& p, Field field, int d) {
  const int n = p.n();
  if (d < n) throw InvalidInputError("construct_full requires d >= n");
  auto build = [&]<ScalarType T>() -> AnyVectorMatrix {
    VectorMatrix<T> v(n, d);
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col)
        v.entry(row, col)[col] = from_real<T>(std::sqrt(std::max(p(row, col), 0.0)));
    return v;
  };
  switch (field) {
    case Field::R: return build.operator()<double>();
    case Field::C: return build.operator()<Complex>();
    case Field::H: return build.operator()<Quaternion>();
  }
  throw InvalidInputError("unknown field");
}

DminUpperBound dmin_upper_bound(const Bistochastic& p, Field field) {
  const int n = p.n();
  if (field == Field::R && n % 2 == 1 && n > 1) {
    try {
      ConstructionResult r = construct_nminus1(p, ConstructMode::weighted);
      if (r.success()) return {n - 1, AnyVectorMatrix(std::move(r.V))};
    } catch (const Error&) {
      // fall through to the always-successful d = n construction
    }
  }
  return {n, construct_full(p, field, n)};
}

}  // namespace vstoch
