#include "vstoch/search.hpp"

#include <cmath>
#include <optional>

#include "vstoch/construct.hpp"
#include "vstoch/core_ops.hpp"
#include "vstoch/errors.hpp"
#include "vstoch/rng.hpp"

namespace vstoch {

namespace {

constexpr double kStepUnderflow = 1e-14;
constexpr double kStepMax = 1e100;
constexpr double kCertTol = 1e-9;

template <ScalarType T>
double loss(const VectorMatrix<T>& v, const Eigen::MatrixXd& p) {
  double acc = 0.0;
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) {
      const double diff = norm_sq(v.entry(r, c)) - p(r, c);
      acc += diff * diff;
    }
  return acc;
}

template <ScalarType T>
double max_residual(const VectorMatrix<T>& v, const Eigen::MatrixXd& p) {
  double worst = 0.0;
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c)
      worst = std::max(worst, std::abs(norm_sq(v.entry(r, c)) - p(r, c)));
  return worst;
}

// Ambient gradient block of the squared-residual loss at entry (r, c):
// 4 (|v|^2 - p) v.
template <ScalarType T>
void gradient(const VectorMatrix<T>& v, const Eigen::MatrixXd& p, VectorMatrix<T>& g) {
  for (int r = 0; r < v.n(); ++r)
    for (int c = 0; c < v.n(); ++c) {
      const double coeff = 4.0 * (norm_sq(v.entry(r, c)) - p(r, c));
      auto src = v.entry(r, c);
      auto dst = g.entry(r, c);
      for (int s = 0; s < v.d(); ++s) dst[s] = src[s] * coeff;
    }
}

// Projects an ambient direction onto the tangent space of the column-frame
// isometries at v: g <- g - v sym(v^* g). Without this the retraction of a
// raw ambient step can fail to be a descent direction (its first-order
// motion differs from the tangent projection), which strands the line search
// at points that are not critical.
template <ScalarType T>
void project_tangent(const VectorMatrix<T>& v, VectorMatrix<T>& g) {
  const int n = v.n();
  std::vector<T> gram(static_cast<std::size_t>(n) * n);  // m_ab = <w_a(v), w_b(g)>
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      T acc = from_real<T>(0.0);
      for (int row = 0; row < n; ++row)
        acc += inner(v.entry(row, a), std::span<const T>(g.entry(row, b)));
      gram[static_cast<std::size_t>(a) * n + b] = acc;
    }
  std::vector<T> sym(static_cast<std::size_t>(n) * n);  // (m + m^*)/2
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sym[static_cast<std::size_t>(a) * n + b] =
          (gram[static_cast<std::size_t>(a) * n + b] +
           conj_of(gram[static_cast<std::size_t>(b) * n + a])) *
          0.5;
  for (int b = 0; b < n; ++b)
    for (int row = 0; row < n; ++row) {
      auto dst = g.entry(row, b);
      for (int a = 0; a < n; ++a) {
        const T s = sym[static_cast<std::size_t>(a) * n + b];
        auto va = v.entry(row, a);
        for (int k = 0; k < v.d(); ++k) dst[k] -= va[k] * s;
      }
    }
}

template <ScalarType T>
void step_and_retract(const VectorMatrix<T>& v, const VectorMatrix<T>& g, double step,
                      VectorMatrix<T>& out) {
  auto vs = v.data();
  auto gs = g.data();
  auto os = out.data();
  for (std::size_t i = 0; i < vs.size(); ++i) os[i] = vs[i] - gs[i] * step;
  orthonormalize_columns(out);
}

// Euclidean inner product of the underlying real coefficients.
template <ScalarType T>
double real_dot(const VectorMatrix<T>& a, const VectorMatrix<T>& b) {
  double acc = 0.0;
  auto as = a.data();
  auto bs = b.data();
  for (std::size_t i = 0; i < as.size(); ++i) {
    const auto ca = to_coeffs(as[i]);
    const auto cb = to_coeffs(bs[i]);
    for (int k = 0; k < coeff_count_v<T>; ++k) acc += ca[k] * cb[k];
  }
  return acc;
}

template <ScalarType T>
T normal_scalar(Rng& rng) {
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

// Random orthonormalized starts. Even restarts draw i.i.d. Gaussian
// coefficients; odd restarts take the target moduli with random unit
// directions, which begins inside the right modulus pattern and shortens
// the slow phase-alignment tail of hard instances.
template <ScalarType T>
VectorMatrix<T> random_start(int n, int d, const Eigen::MatrixXd& target, int restart,
                             Rng& rng) {
  VectorMatrix<T> v(n, d);
  if (restart % 2 == 0) {
    for (T& s : v.data()) s = normal_scalar<T>(rng);
  } else {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        auto e = v.entry(r, c);
        double nrm = 0.0;
        while (nrm < 1e-12) {
          for (int k = 0; k < d; ++k) e[k] = normal_scalar<T>(rng);
          nrm = std::sqrt(norm_sq(std::span<const T>(e)));
        }
        const double scale = std::sqrt(std::max(target(r, c), 0.0)) / nrm;
        for (int k = 0; k < d; ++k) e[k] = e[k] * scale;
      }
  }
  orthonormalize_columns(v);
  return v;
}

template <ScalarType T>
SearchResult search_impl(const Bistochastic& p, const SearchConfig& cfg) {
  const Eigen::MatrixXd& target = p.matrix();
  const int n = p.n();
  const Rng base(cfg.seed);

  std::optional<VectorMatrix<T>> best;
  double best_resid = 0.0;
  long total_iters = 0;
  int restarts_used = 0;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    ++restarts_used;
    Rng rng = base.fork(static_cast<std::uint64_t>(restart));
    VectorMatrix<T> v = random_start<T>(n, cfg.d, target, restart, rng);
    VectorMatrix<T> grad(n, cfg.d);
    VectorMatrix<T> cand(n, cfg.d);
    VectorMatrix<T> prev_v(n, cfg.d);
    VectorMatrix<T> prev_grad(n, cfg.d);
    VectorMatrix<T> diff(n, cfg.d);
    double f = loss(v, target);
    double step = cfg.step_init;
    bool have_prev = false;
    bool reached = false;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      ++total_iters;
      gradient(v, target, grad);
      project_tangent(v, grad);

      // Trial step: spectral (Barzilai-Borwein) estimate <s,s>/<s,y> from the
      // last accepted move, clamped; it adapts both to ill-conditioned basins
      // and to the quartic minima of targets with zero entries. Plain growth
      // covers the first iteration.
      double trial = std::min(step * 2.0, kStepMax);
      if (have_prev) {
        auto ds = diff.data();
        auto vs = v.data();
        auto ps = prev_v.data();
        for (std::size_t i = 0; i < ds.size(); ++i) ds[i] = vs[i] - ps[i];
        const double ss = real_dot(diff, diff);
        double sy = 0.0;
        {
          auto gs = grad.data();
          auto pg = prev_grad.data();
          auto dd = diff.data();
          for (std::size_t i = 0; i < dd.size(); ++i) {
            const auto cg = to_coeffs(gs[i]);
            const auto cp = to_coeffs(pg[i]);
            const auto cd = to_coeffs(dd[i]);
            for (int k = 0; k < coeff_count_v<T>; ++k) sy += cd[k] * (cg[k] - cp[k]);
          }
        }
        if (sy > 1e-300) trial = std::min(std::max(ss / sy, kStepUnderflow), kStepMax);
      }

      bool accepted = false;
      while (trial >= kStepUnderflow) {
        step_and_retract(v, grad, trial, cand);
        const double fc = loss(cand, target);
        if (fc < f) {
          accepted = true;
          f = fc;
          break;
        }
        trial /= 2.0;
      }
      if (!accepted) break;  // step underflow: stationary for this restart
      prev_v = v;
      prev_grad = grad;
      have_prev = true;
      std::swap(v, cand);
      step = trial;
      if (max_residual(v, target) <= cfg.success_tol) {
        reached = true;
        break;
      }
    }

    const double resid = max_residual(v, target);
    if (!best || resid < best_resid) {
      best = std::move(v);
      best_resid = resid;
    }
    if (reached && best_resid <= cfg.success_tol) break;
  }

  SearchResult result{AnyVectorMatrix(std::move(*best)), 0.0, total_iters, restarts_used,
                      false};
  const VectorMatrix<T>& bv = std::get<VectorMatrix<T>>(result.best_v);
  result.best_residual = max_residual(bv, target);
  result.success = result.best_residual <= cfg.success_tol &&
                   check_isometry(bv, kCertTol).ok;
  return result;
}

}  // namespace

SearchResult search_fixed_d(const Bistochastic& p, const SearchConfig& cfg) {
  if (cfg.n != p.n()) throw InvalidInputError("config n does not match matrix size");
  if (cfg.d < 1 || cfg.restarts < 1 || cfg.max_iters < 1)
    throw InvalidInputError("invalid search configuration");
  if (cfg.step_init <= 0.0 || cfg.success_tol <= 0.0)
    throw InvalidInputError("search tolerances must be positive");
  switch (cfg.field) {
    case Field::R: return search_impl<double>(p, cfg);
    case Field::C: return search_impl<Complex>(p, cfg);
    case Field::H: return search_impl<Quaternion>(p, cfg);
  }
  throw InvalidInputError("unknown field");
}

DminEstimate estimate_dmin(const Bistochastic& p, Field field, const SearchConfig& base) {
  const int n = p.n();
  DminEstimate est;

  int cap = n;
  std::optional<AnyVectorMatrix> cap_certificate;
  if (field == Field::R && n % 2 == 1 && n > 1) {
    try {
      ConstructionResult r = construct_nminus1(p, ConstructMode::weighted);
      if (r.success()) {
        cap = n - 1;
        cap_certificate = AnyVectorMatrix(std::move(r.V));
      }
    } catch (const Error&) {
      // the d = n construction below always applies
    }
  }

  for (int d = 1; d < cap; ++d) {
    SearchConfig cfg = base;
    cfg.field = field;
    cfg.n = n;
    cfg.d = d;
    SearchResult r = search_fixed_d(p, cfg);
    const bool done = r.success;
    est.per_d.push_back(std::move(r));
    if (done) {
      est.d_est = d;
      return est;
    }
  }

  AnyVectorMatrix cert =
      cap_certificate ? std::move(*cap_certificate) : construct_full(p, field, n);
  const double resid = (squared_norms(cert) - p.matrix()).cwiseAbs().maxCoeff();
  est.per_d.push_back(SearchResult{std::move(cert), resid, 0, 0, true});
  est.d_est = cap;
  return est;
}

}  // namespace vstoch
