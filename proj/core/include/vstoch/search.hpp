#pragma once

#include <cstdint>
#include <vector>

#include "vstoch/bistochastic.hpp"
#include "vstoch/vector_matrix.hpp"

namespace vstoch {

struct SearchConfig {
  Field field = Field::R;
  int n = 1;
  int d = 1;
  int restarts = 32;
  int max_iters = 5000;
  double step_init = 0.1;
  double success_tol = 1e-6;
  std::uint64_t seed = 0;
};

struct SearchResult {
  AnyVectorMatrix best_v;
  double best_residual = 0.0;  // max-norm of squared_norms(best_v) - P, recomputed
  long iters_used = 0;         // summed over executed restarts
  int restarts_used = 0;
  bool success = false;
};

/// Minimizes sum_{i,j} (|v_i^j|^2 - p_i^j)^2 over the isometry set by
/// projected gradient descent: ambient gradient step, then
/// reorthonormalization of the column frames. Backtracking halves the step
/// when the loss increases; a restart stops when the step underflows 1e-14
/// or the iteration budget is hit. Restarts draw independent orthonormalized
/// random starts from cfg.seed; the run is deterministic and stops at the
/// first restart that reaches success_tol. The returned residual is
/// recomputed from the certificate, and success additionally requires the
/// certificate to pass the isometry check at 1e-9.
SearchResult search_fixed_d(const Bistochastic& p, const SearchConfig& cfg);

struct DminEstimate {
  int d_est = 0;
  std::vector<SearchResult> per_d;
};

/// Runs search_fixed_d for d = 1, 2, ... and stops at the first success.
/// For odd n over the reals the weighted d = n-1 construction is consulted
/// first; when it succeeds it caps the estimate and provides the fallback
/// certificate. Otherwise the d = n construction is the fallback. d_est is
/// an upper bound on the minimal certifiable dimension; failures below it
/// are evidence, not proof.
DminEstimate estimate_dmin(const Bistochastic& p, Field field, const SearchConfig& base);

}  // namespace vstoch
