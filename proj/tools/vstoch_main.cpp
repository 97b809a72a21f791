// Command line front end: every subcommand reads JSON files, writes one JSON
// document to stdout and uses the exit code contract
//   0  result is certified / ok
//   1  honest failure (infeasible input, uncertified result, failed check)
//   2  malformed input or usage error
#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vstoch/construct.hpp"
#include "vstoch/core_ops.hpp"
#include "vstoch/errors.hpp"
#include "vstoch/rng.hpp"
#include "vstoch/sample.hpp"
#include "vstoch/search.hpp"
#include "vstoch/serialize.hpp"

namespace {

using vstoch::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vstoch::ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw vstoch::ParseError("cannot parse '" + path + "': " + e.what());
  }
}

struct ScanSample {
  std::uint64_t seed = 0;
  int d_est = 0;
  std::string verdict;  // empty when n is even
};

Json run_scan(int n, vstoch::Field field, int samples, std::uint64_t seed, int restarts,
              int threads) {
  const vstoch::Rng master(seed);
  std::vector<ScanSample> results(samples);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= samples) return;
      ScanSample& slot = results[i];
      slot.seed = master.fork(static_cast<std::uint64_t>(i)).seed();
      const vstoch::Bistochastic p = vstoch::sample_sinkhorn(n, slot.seed);
      if (n % 2 == 1)
        slot.verdict = vstoch::to_string(vstoch::check_feasibility(p).verdict);
      vstoch::SearchConfig cfg;
      cfg.field = field;
      cfg.n = n;
      cfg.restarts = restarts;
      cfg.seed = vstoch::Rng::mix(slot.seed, 0x5ca4);
      slot.d_est = vstoch::estimate_dmin(p, field, cfg).d_est;
    }
  };

  const int nthreads = std::max(1, std::min(threads, samples));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<int, int> histogram;
  Json per_sample = Json::array();
  for (int i = 0; i < samples; ++i) {
    ++histogram[results[i].d_est];
    Json rec{{"index", i}, {"seed", results[i].seed}, {"d_est", results[i].d_est}};
    if (!results[i].verdict.empty()) rec["verdict"] = results[i].verdict;
    per_sample.push_back(std::move(rec));
  }
  Json hist = Json::object();
  for (const auto& [d, count] : histogram) hist[std::to_string(d)] = count;
  return Json{{"n", n},
              {"field", std::string(vstoch::field_name(field))},
              {"samples", samples},
              {"seed", seed},
              {"histogram", std::move(hist)},
              {"results", std::move(per_sample)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vector-entry bistochastic matrix toolkit"};
  app.require_subcommand(1);

  std::string in_path;
  std::string p_path;
  std::string field_str = "R";
  std::string mode_str = "weighted";
  std::string kind_str;
  double tol = vstoch::kDefaultTol;
  int n = 0;
  int d = 0;
  int k = 2;
  int samples = 0;
  int restarts = 32;
  std::uint64_t seed = 0;

  auto* nu_cmd = app.add_subcommand("nu", "squared norms of an isometry, as a bistochastic matrix");
  nu_cmd->add_option("--in", in_path, "vector-entry matrix JSON")->required();

  auto* verify_cmd = app.add_subcommand("verify", "isometry and residual report for a matrix or result");
  verify_cmd->add_option("--in", in_path, "vector-entry matrix or result JSON")->required();
  verify_cmd->add_option("--p", p_path, "bistochastic matrix to compare squared norms against");
  verify_cmd->add_option("--tol", tol, "tolerance for both checks");

  auto* feasible_cmd = app.add_subcommand("feasible", "diagonal-sum feasibility report (odd n)");
  feasible_cmd->add_option("--in", in_path, "bistochastic matrix JSON")->required();

  auto* construct_cmd = app.add_subcommand("construct", "d = n-1 certificate for odd n");
  construct_cmd->add_option("--in", in_path, "bistochastic matrix JSON")->required();
  construct_cmd->add_option("--mode", mode_str, "paper or weighted")
      ->required()
      ->check(CLI::IsMember({"paper", "paper_literal", "weighted"}));

  auto* full_cmd = app.add_subcommand("construct-full", "d >= n certificate over any field");
  full_cmd->add_option("--in", in_path, "bistochastic matrix JSON")->required();
  full_cmd->add_option("--field", field_str, "R, C or H")->required();
  full_cmd->add_option("--d", d, "internal dimension (>= n)")->required();

  auto* dims_cmd = app.add_subcommand("dims", "dimension formulas for the isometry set and its quotient");
  dims_cmd->add_option("--field", field_str, "R, C or H")->required();
  dims_cmd->add_option("--n", n, "matrix size")->required();
  dims_cmd->add_option("--d", d, "internal dimension")->required();

  auto* sample_cmd = app.add_subcommand("sample", "random bistochastic matrices and isometries");
  sample_cmd->add_option("--kind", kind_str, "sinkhorn, birkhoff or isometry")
      ->required()
      ->check(CLI::IsMember({"sinkhorn", "birkhoff", "isometry"}));
  sample_cmd->add_option("--n", n, "matrix size")->required();
  sample_cmd->add_option("--d", d, "internal dimension (isometry)");
  sample_cmd->add_option("--k", k, "number of permutations (birkhoff)");
  sample_cmd->add_option("--field", field_str, "R, C or H (isometry)");
  sample_cmd->add_option("--seed", seed, "random seed")->required();

  auto* search_cmd = app.add_subcommand("search", "numerical membership search at fixed d");
  search_cmd->add_option("--in", in_path, "bistochastic matrix JSON")->required();
  search_cmd->add_option("--field", field_str, "R, C or H")->required();
  search_cmd->add_option("--d", d, "internal dimension")->required();
  search_cmd->add_option("--restarts", restarts, "number of restarts");
  search_cmd->add_option("--seed", seed, "random seed");
  search_cmd->add_option("--tol", tol, "success tolerance on the max residual");

  auto* scan_cmd = app.add_subcommand("scan", "histogram of estimated minimal d over random samples");
  scan_cmd->add_option("--n", n, "matrix size")->required();
  scan_cmd->add_option("--field", field_str, "R, C or H");
  scan_cmd->add_option("--samples", samples, "number of sampled matrices")->required();
  scan_cmd->add_option("--seed", seed, "master seed");
  scan_cmd->add_option("--restarts", restarts, "restarts per search");
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  scan_cmd->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(vstoch::error_json("USAGE", e.what()));
    return 2;
  }

  try {
    if (nu_cmd->parsed()) {
      const auto v = vstoch::vector_matrix_from_any_json(load_json(in_path));
      emit(vstoch::to_json(vstoch::nu(v)));
      return 0;
    }

    if (verify_cmd->parsed()) {
      const Json input = load_json(in_path);
      const auto v = vstoch::vector_matrix_from_any_json(input);
      const auto rep = vstoch::check_isometry(v, tol);
      bool ok = rep.ok;
      Json out{{"isometry", vstoch::to_json(rep)}};
      if (!p_path.empty()) {
        const auto p = vstoch::bistochastic_from_json(load_json(p_path));
        if (p.n() != vstoch::n_of(v))
          throw vstoch::InvalidInputError("matrix sizes do not match");
        // A wrapped search result certifies at its own success tolerance;
        // an explicit --tol always wins.
        double nu_tol = tol;
        if (!verify_cmd->count("--tol") && input.is_object() && input.contains("best_V") &&
            input.contains("config") && input.at("config").contains("success_tol"))
          nu_tol = std::max(nu_tol, input.at("config").at("success_tol").get<double>());
        const double resid =
            (vstoch::squared_norms(v) - p.matrix()).cwiseAbs().maxCoeff();
        out["nu_residual"] = resid;
        out["nu_tol"] = nu_tol;
        ok = ok && resid <= nu_tol;
      }
      out["ok"] = ok;
      out["tol"] = tol;
      emit(out);
      return ok ? 0 : 1;
    }

    if (feasible_cmd->parsed()) {
      const auto p = vstoch::bistochastic_from_json(load_json(in_path));
      const auto rep = vstoch::check_feasibility(p);
      emit(vstoch::to_json(rep));
      return rep.verdict == vstoch::FeasibilityReport::Verdict::infeasible ? 1 : 0;
    }

    if (construct_cmd->parsed()) {
      const auto p = vstoch::bistochastic_from_json(load_json(in_path));
      const auto mode = mode_str == "weighted" ? vstoch::ConstructMode::weighted
                                               : vstoch::ConstructMode::paper_literal;
      const auto result = vstoch::construct_nminus1(p, mode);
      emit(vstoch::to_json(result));
      return result.success() ? 0 : 1;
    }

    if (full_cmd->parsed()) {
      const auto p = vstoch::bistochastic_from_json(load_json(in_path));
      const auto v = vstoch::construct_full(p, vstoch::parse_field(field_str), d);
      emit(vstoch::to_json(v));
      return 0;
    }

    if (dims_cmd->parsed()) {
      emit(vstoch::to_json(vstoch::dims(vstoch::parse_field(field_str), n, d)));
      return 0;
    }

    if (sample_cmd->parsed()) {
      Json out;
      if (kind_str == "sinkhorn") {
        out = vstoch::to_json(vstoch::sample_sinkhorn(n, seed));
      } else if (kind_str == "birkhoff") {
        out = vstoch::to_json(vstoch::sample_birkhoff(n, k, seed));
      } else {
        if (d < 1) throw vstoch::InvalidInputError("isometry sampling requires --d");
        out = vstoch::to_json(
            vstoch::sample_isometry(vstoch::parse_field(field_str), n, d, seed));
      }
      out["seed"] = seed;  // every sampled record carries its seed
      emit(out);
      return 0;
    }

    if (search_cmd->parsed()) {
      const auto p = vstoch::bistochastic_from_json(load_json(in_path));
      vstoch::SearchConfig cfg;
      cfg.field = vstoch::parse_field(field_str);
      cfg.n = p.n();
      cfg.d = d;
      cfg.restarts = restarts;
      cfg.success_tol = search_cmd->count("--tol") ? tol : cfg.success_tol;
      cfg.seed = seed;
      const auto result = vstoch::search_fixed_d(p, cfg);
      Json out = vstoch::to_json(result);
      out["config"] = vstoch::to_json(cfg);
      emit(out);
      return result.success ? 0 : 1;
    }

    if (scan_cmd->parsed()) {
      emit(run_scan(n, vstoch::parse_field(field_str), samples, seed, restarts, threads));
      return 0;
    }
  } catch (const vstoch::ParseError& e) {
    emit(vstoch::error_json(e.code(), e.what()));
    return 2;
  } catch (const vstoch::InvalidInputError& e) {
    emit(vstoch::error_json(e.code(), e.what()));
    return 2;
  } catch (const vstoch::Error& e) {
    emit(vstoch::error_json(e.code(), e.what()));
    return 1;
  }
  return 2;
}
