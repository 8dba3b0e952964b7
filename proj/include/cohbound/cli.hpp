#pragma once

// Command-line front door. Exit codes: 0 = success and no violations,
// 1 = at least one audited inequality was violated (including the
// paper-discrepancy findings), 2 = invalid input (bad file, bad flags, or
// infeasible parameters on a single-shot bound command).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohbound/bounds.hpp"
#include "cohbound/coherence.hpp"
#include "cohbound/ensembles.hpp"
#include "cohbound/harness.hpp"
#include "cohbound/qmatrix.hpp"
#include "cohbound/statefile.hpp"

namespace cohbound::cli {

namespace detail {

inline int max_qubits_from_env() {
  const char* env = std::getenv("COHBOUND_MAX_QUBITS");
  if (!env) return kMaxQubits;
  try {
    const int v = std::stoi(env);
    return std::clamp(v, 1, kMaxQubits);
  } catch (...) {
    return kMaxQubits;
  }
}

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// JSON has no literal for non-finite numbers.
inline std::string fmt_json(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt17(v);
}

inline std::string join_doubles(const std::vector<double>& vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += fmt(vs[i]);
  }
  return out + ")";
}

inline std::string ordering_string(const std::vector<int>& ordering) {
  std::string out;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(ordering[i]);
  }
  return out;
}

inline std::vector<double> parse_grid(const std::string& csv,
                                      const char* flag) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (...) {
      throw input_error(std::string(flag) + ": cannot parse '" + item + "'");
    }
  }
  if (values.empty())
    throw input_error(std::string(flag) + ": empty list");
  return values;
}

struct ParamFlags {
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<double> k;
  std::optional<double> delta;
  std::optional<double> x;

  // x and k/delta are redundant parametrizations; both at once is an error.
  BoundParams resolve(int m) const {
    if (x && (k || delta))
      throw input_error("--x and --k/--delta are mutually exclusive");
    if (x) return BoundParams::from_x(alpha, *x, m, beta);
    if (k) return BoundParams::from_k_delta(alpha, *k, delta.value_or(1.0), m,
                                            beta);
    if (delta) throw input_error("--delta requires --k");
    return BoundParams::from_x(alpha, 1.0, m, beta);
  }
};

inline bool parse_optional_double(const CLI::results_t& r,
                                  std::optional<double>& slot) {
  try {
    std::size_t used = 0;
    const double v = std::stod(r.at(0), &used);
    if (used != r.at(0).size()) return false;
    slot = v;
    return true;
  } catch (...) {
    return false;
  }
}

inline void add_param_flags(CLI::App* cmd, ParamFlags& flags,
                            bool alpha_required = true) {
  auto* alpha = cmd->add_option("--alpha", flags.alpha, "Power alpha >= 1");
  if (alpha_required) alpha->required();
  cmd->add_option("--beta", flags.beta, "Power beta >= 1 (default 1)");
  cmd->add_option(
      "--k",
      [&flags](const CLI::results_t& r) {
        return parse_optional_double(r, flags.k);
      },
      "Condition parameter k in (0,1]");
  cmd->add_option(
      "--delta",
      [&flags](const CLI::results_t& r) {
        return parse_optional_double(r, flags.delta);
      },
      "Exponent delta >= 1 (with --k)");
  cmd->add_option(
      "--x",
      [&flags](const CLI::results_t& r) {
        return parse_optional_double(r, flags.x);
      },
      "Direct x = k^delta in (0,1] (exclusive with --k/--delta)");
}

struct VariantRow {
  std::string variant;
  double claimed = 0.0;
  double actual = 0.0;
  double residual = 0.0;
  Verdict verdict = Verdict::holds;
  bool feasible = true;
  std::string note;
  FeasibleInterval interval;  // populated when infeasible
  int fail_m = 0;
};

inline VariantRow evaluate_row(const CoherenceProfile& profile,
                               BoundVariant variant, const BoundParams& params,
                               std::optional<double> eq5_k = std::nullopt) {
  VariantRow row;
  row.variant = to_string(variant);
  const double target = std::pow(profile.full, params.alpha * params.beta);
  row.actual = target;
  try {
    BoundValue bv;
    switch (variant) {
      case BoundVariant::thm1: bv = thm1_bound(profile, params); break;
      case BoundVariant::thm3: bv = thm3_bound(profile, params); break;
      case BoundVariant::thm2_as_printed:
      case BoundVariant::thm2_proof_consistent:
        bv = thm2_bound(profile, params, variant);
        break;
      case BoundVariant::thm4_as_printed:
      case BoundVariant::thm4_proof_consistent:
        bv = thm4_bound(profile, params, variant);
        break;
      case BoundVariant::eq4:
        bv = prior_bound_eq4(profile, params.alpha, params.m);
        break;
      case BoundVariant::eq5:
        bv = prior_bound_eq5(profile, params.alpha,
                             eq5_k.value_or(std::sqrt(params.x)), params.m);
        break;
      case BoundVariant::plain_superadditivity: {
        double sum = 0.0;
        for (int i = 1; i <= profile.n; ++i) sum += profile.marginal(i);
        row.claimed = sum;
        row.actual = profile.full;
        row.residual = row.actual - row.claimed;
        row.verdict =
            row.residual < kViolationThreshold ? Verdict::violated
                                               : Verdict::holds;
        return row;
      }
    }
    row.claimed = bv.value;
    row.residual = target - bv.value;
    row.verdict = row.residual < kViolationThreshold ? Verdict::violated
                                                     : Verdict::holds;
  } catch (const infeasible_error& e) {
    row.feasible = false;
    row.verdict = Verdict::infeasible;
    row.note = e.what();
    row.interval = e.interval;
    row.fail_m = e.m;
  }
  return row;
}

inline void print_row(std::ostream& out, const VariantRow& row) {
  out << row.variant;
  if (row.feasible) {
    out << " claimed = " << fmt(row.claimed) << " actual = "
        << fmt(row.actual) << " residual = " << fmt(row.residual);
  }
  out << " verdict = " << to_string(row.verdict);
  if (!row.note.empty()) out << " (" << row.note << ")";
  out << "\n";
}

inline std::string report_json_fields(const CampaignReport& r,
                                      bool with_discrepancy) {
  std::string s;
  s += "\"total\": " + std::to_string(r.total);
  s += ", \"holds\": " + std::to_string(r.holds);
  s += ", \"violated\": " + std::to_string(r.violated);
  s += ", \"infeasible\": " + std::to_string(r.infeasible);
  s += ", \"min_residual\": " + fmt_json(r.min_residual);
  s += ", \"tightness\": {\"count\": " + std::to_string(r.tightness.count) +
       ", \"p0\": " + fmt_json(r.tightness.p0) +
       ", \"p25\": " + fmt_json(r.tightness.p25) +
       ", \"p50\": " + fmt_json(r.tightness.p50) +
       ", \"p75\": " + fmt_json(r.tightness.p75) +
       ", \"p100\": " + fmt_json(r.tightness.p100) + "}";
  if (with_discrepancy) {
    s += ", \"paper_discrepancy\": {\"total\": " +
         std::to_string(r.discrepancy_total) +
         ", \"holds\": " + std::to_string(r.discrepancy_holds) +
         ", \"violated\": " + std::to_string(r.discrepancy_violated) + "}";
  }
  return s;
}

inline void write_records_csv(std::ostream& out,
                              const std::vector<AuditRecord>& records) {
  out << "state_id,ordering,variant,alpha,beta,x,m,claimed,actual,residual,"
         "verdict\n";
  for (const AuditRecord& r : records) {
    out << r.state_id << ',' << ordering_string(r.ordering) << ',' << r.variant
        << ',' << fmt17(r.alpha) << ',' << fmt17(r.beta) << ',' << fmt17(r.x)
        << ',' << r.m << ',' << fmt17(r.claimed) << ',' << fmt17(r.actual)
        << ',' << fmt17(r.residual) << ',' << to_string(r.verdict) << "\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"l1-norm coherence superadditivity bounds and audits"};
  app.require_subcommand(1);
  const int max_qubits = detail::max_qubits_from_env();

  // ---- coherence ----
  std::string coherence_file;
  auto* coherence_cmd =
      app.add_subcommand("coherence", "Print C_l1 and the coherence profile");
  coherence_cmd->add_option("state-file", coherence_file, "State file (JSON)")
      ->required();

  // ---- bound ----
  std::string bound_file;
  detail::ParamFlags bound_flags;
  int bound_m = 1;
  std::string bound_variant = "thm1";
  auto* bound_cmd =
      app.add_subcommand("bound", "Evaluate one bound variant at parameters");
  bound_cmd->add_option("state-file", bound_file, "State file (JSON)")
      ->required();
  detail::add_param_flags(bound_cmd, bound_flags);
  bound_cmd->add_option("--m", bound_m, "Partition index (default 1)");
  bound_cmd->add_option("--variant", bound_variant,
                        "thm1|thm2_as_printed|thm2_proof_consistent|thm3|"
                        "thm4_as_printed|thm4_proof_consistent|eq4|eq5|plain");

  // ---- optimize ----
  std::string optimize_file;
  double optimize_alpha = 1.0;
  double optimize_beta = 1.0;
  auto* optimize_cmd = app.add_subcommand(
      "optimize", "Maximize the bound over feasible (m, x)");
  optimize_cmd->add_option("state-file", optimize_file, "State file (JSON)")
      ->required();
  optimize_cmd->add_option("--alpha", optimize_alpha, "Power alpha >= 1")
      ->required();
  optimize_cmd->add_option("--beta", optimize_beta, "Power beta >= 1");

  // ---- audit ----
  std::string audit_file;
  detail::ParamFlags audit_flags;
  std::optional<int> audit_m;
  auto* audit_cmd = app.add_subcommand(
      "audit", "Chain residuals and all bound variants with verdicts");
  audit_cmd->add_option("state-file", audit_file, "State file (JSON)")
      ->required();
  detail::add_param_flags(audit_cmd, audit_flags);
  audit_cmd->add_option(
      "--m",
      [&audit_m](const CLI::results_t& r) {
        try {
          audit_m = std::stoi(r.at(0));
          return true;
        } catch (...) {
          return false;
        }
      },
      "Partition index (default: smallest feasible)");

  // ---- fig1 ----
  double fig1_min = 1.0, fig1_max = 3.0, fig1_step = 0.1;
  auto* fig1_cmd =
      app.add_subcommand("fig1", "Emit the alpha sweep of y1/y2 as CSV");
  fig1_cmd->add_option("--alpha-min", fig1_min, "Smallest alpha (default 1)");
  fig1_cmd->add_option("--alpha-max", fig1_max, "Largest alpha (default 3)");
  fig1_cmd->add_option("--step", fig1_step, "Grid step (default 0.1)");

  // ---- verify ----
  std::string verify_ensemble = "pure";
  int verify_n = 3;
  std::size_t verify_samples = 100;
  std::uint64_t verify_seed = 0;
  std::string verify_alphas = "1,2";
  std::string verify_betas = "1";
  bool verify_all_orderings = false;
  std::string verify_csv;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run randomized verification campaigns, emit JSON + CSV");
  verify_cmd->add_option("--ensemble", verify_ensemble, "pure|ginibre|product")
      ->check(CLI::IsMember({"pure", "ginibre", "product"}));
  verify_cmd->add_option("--n", verify_n, "Qubit count")->required();
  verify_cmd->add_option("--samples", verify_samples, "States per campaign")
      ->required();
  verify_cmd->add_option("--seed", verify_seed, "Campaign seed");
  verify_cmd->add_option("--alphas", verify_alphas, "Comma list of alphas");
  verify_cmd->add_option("--betas", verify_betas, "Comma list of betas");
  verify_cmd->add_flag("--all-orderings", verify_all_orderings,
                       "Search all party orderings (n <= 5)");
  verify_cmd->add_option("--out-csv", verify_csv,
                         "Write AuditRecord CSV to this path");

  // ---- example ----
  std::string example_out = "example.state";
  auto* example_cmd =
      app.add_subcommand("example", "Write the worked example state file");
  example_cmd->add_option("--out", example_out,
                          "Output path (default example.state)");

  try {
    std::vector<std::string> parse_args(args.rbegin(), args.rend());
    app.parse(parse_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (coherence_cmd->parsed()) {
      const LoadedState state = load_state_file(coherence_file, max_qubits);
      const DensityMatrix rho = state.to_density();
      if (rho.n_qubits() < 2) {
        out << "full = " << detail::fmt(c_l1(rho)) << "\n";
        return 0;
      }
      const CoherenceProfile profile = coherence_profile(rho);
      out << "full = " << detail::fmt(profile.full) << "\n";
      out << "C = " << detail::join_doubles(profile.C) << "\n";
      out << "T = " << detail::join_doubles(profile.T) << "\n";
      return 0;
    }

    if (bound_cmd->parsed()) {
      const LoadedState state = load_state_file(bound_file, max_qubits);
      const CoherenceProfile profile = coherence_profile(state.to_density());
      const BoundParams params = bound_flags.resolve(bound_m);

      static const std::vector<std::pair<std::string, BoundVariant>> kNames = {
          {"thm1", BoundVariant::thm1},
          {"thm2_as_printed", BoundVariant::thm2_as_printed},
          {"thm2_proof_consistent", BoundVariant::thm2_proof_consistent},
          {"thm3", BoundVariant::thm3},
          {"thm4_as_printed", BoundVariant::thm4_as_printed},
          {"thm4_proof_consistent", BoundVariant::thm4_proof_consistent},
          {"eq4", BoundVariant::eq4},
          {"eq5", BoundVariant::eq5},
          {"plain", BoundVariant::plain_superadditivity},
      };
      const auto it =
          std::find_if(kNames.begin(), kNames.end(),
                       [&](const auto& p) { return p.first == bound_variant; });
      if (it == kNames.end())
        throw input_error("unknown variant: " + bound_variant);

      try {
        const detail::VariantRow row = detail::evaluate_row(
            profile, it->second, params,
            bound_flags.k ? std::optional<double>(*bound_flags.k)
                          : std::nullopt);
        if (!row.feasible)
          throw infeasible_error(row.note, row.interval, row.fail_m);
        out << "variant = " << row.variant << "\n";
        out << "alpha = " << detail::fmt(params.alpha) << "\n";
        out << "beta = " << detail::fmt(params.beta) << "\n";
        out << "x = " << detail::fmt(params.x) << "\n";
        out << "m = " << params.m << "\n";
        out << "value = " << detail::fmt17(row.claimed) << "\n";
        return 0;
      } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << "\n";
        err << "m = " << e.m << "\n";
        err << "feasible_lo = " << detail::fmt(e.interval.lo) << "\n";
        err << "feasible_hi = " << detail::fmt(e.interval.hi_clamped())
            << "\n";
        return 2;
      }
    }

    if (optimize_cmd->parsed()) {
      const LoadedState state = load_state_file(optimize_file, max_qubits);
      const CoherenceProfile profile = coherence_profile(state.to_density());
      const OptimizeResult result =
          optimize_bound(profile, optimize_alpha, optimize_beta);
      out << "feasible = " << (result.feasible ? "true" : "false") << "\n";
      if (result.feasible) {
        out << "variant = " << to_string(result.best.variant) << "\n";
        out << "alpha = " << detail::fmt(optimize_alpha) << "\n";
        out << "beta = " << detail::fmt(optimize_beta) << "\n";
        out << "m = " << result.best.params.m << "\n";
        out << "x = " << detail::fmt17(result.best.params.x) << "\n";
        out << "value = " << detail::fmt17(result.best.value) << "\n";
      }
      return 0;
    }

    if (audit_cmd->parsed()) {
      const LoadedState state = load_state_file(audit_file, max_qubits);
      const DensityMatrix rho = state.to_density();
      if (rho.n_qubits() < 3)
        throw input_error("audit: need at least 3 qubits");
      const CoherenceProfile profile = coherence_profile(rho);
      const double beta = audit_flags.beta;

      // Partition choice: the flag if given, else the smallest feasible m.
      const auto intervals = partition_and_feasibility(profile, beta);
      int m = 0;
      if (audit_m) {
        m = *audit_m;
        if (m < 1 || m > profile.n - 2)
          throw input_error("audit: m must be in [1, n-2]");
      } else {
        for (int cand = 1; cand <= profile.n - 2 && m == 0; ++cand)
          if (intervals[cand - 1].feasible) m = cand;
      }

      std::optional<BoundParams> params;
      if (m != 0) {
        BoundParams p = audit_flags.resolve(m);
        // No explicit x requested: use the optimizer's endpoint.
        if (!audit_flags.x && !audit_flags.k) {
          const auto& iv = intervals[m - 1];
          p = BoundParams::from_x(
              p.alpha, std::min(std::max(iv.lo, kOptimizeXFloor), 1.0), m,
              beta);
        }
        params = p;
      }

      out << "state = " << audit_file << "\n";
      out << "n = " << profile.n << "\n";
      out << "full = " << detail::fmt(profile.full) << "\n";
      out << "alpha = " << detail::fmt(audit_flags.alpha) << "\n";
      out << "beta = " << detail::fmt(beta) << "\n";

      bool any_violated = false;
      std::vector<detail::VariantRow> rows;
      if (params) {
        out << "x = " << detail::fmt(params->x) << "\n";
        out << "m = " << params->m << "\n";
        out << "chain:\n";
        for (const ChainLink& link : chain_audit(profile, *params)) {
          out << "  link " << (link.lower_family ? "lower i=" : "upper j=")
              << link.index << ": lhs = " << detail::fmt(link.lhs)
              << " rhs = " << detail::fmt(link.rhs)
              << " residual = " << detail::fmt(link.residual) << "\n";
        }
        if (beta == 1.0) {
          rows.push_back(
              detail::evaluate_row(profile, BoundVariant::thm1, *params));
          rows.push_back(detail::evaluate_row(
              profile, BoundVariant::thm2_as_printed, *params));
          rows.push_back(detail::evaluate_row(
              profile, BoundVariant::thm2_proof_consistent, *params));
          rows.push_back(
              detail::evaluate_row(profile, BoundVariant::eq4, *params));
          rows.push_back(detail::evaluate_row(
              profile, BoundVariant::eq5, *params,
              audit_flags.k ? std::optional<double>(*audit_flags.k)
                            : std::nullopt));
        } else {
          rows.push_back(
              detail::evaluate_row(profile, BoundVariant::thm3, *params));
          rows.push_back(detail::evaluate_row(
              profile, BoundVariant::thm4_as_printed, *params));
          rows.push_back(detail::evaluate_row(
              profile, BoundVariant::thm4_proof_consistent, *params));
        }
        rows.push_back(detail::evaluate_row(
            profile, BoundVariant::plain_superadditivity, *params));
      } else {
        out << "no feasible partition for beta = " << detail::fmt(beta)
            << "\n";
        BoundParams p = audit_flags.resolve(1);
        rows.push_back(detail::evaluate_row(
            profile,
            beta == 1.0 ? BoundVariant::thm2_as_printed
                        : BoundVariant::thm4_as_printed,
            p));
        rows.push_back(detail::evaluate_row(
            profile,
            beta == 1.0 ? BoundVariant::thm2_proof_consistent
                        : BoundVariant::thm4_proof_consistent,
            p));
        rows.push_back(detail::evaluate_row(
            profile, BoundVariant::plain_superadditivity, p));
      }

      out << "bounds:\n";
      for (const auto& row : rows) {
        out << "  ";
        detail::print_row(out, row);
        if (row.verdict == Verdict::violated) any_violated = true;
      }
      out << "verdict = " << (any_violated ? "violated" : "holds") << "\n";
      return any_violated ? 1 : 0;
    }

    if (fig1_cmd->parsed()) {
      const auto rows = fig1_sweep(fig1_min, fig1_max, fig1_step);
      out << "alpha,y1,y2,actual_pow,thm1_proof_consistent\n";
      for (const SweepRow& row : rows) {
        out << detail::fmt17(row.alpha) << ',' << detail::fmt17(row.y1) << ','
            << detail::fmt17(row.y2) << ',' << detail::fmt17(row.actual_pow)
            << ',' << detail::fmt17(row.thm1_proof_consistent) << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (verify_n < 2 || verify_n > max_qubits)
        throw input_error("verify: n must be in [2, " +
                          std::to_string(max_qubits) + "]");
      EnsembleKind kind = EnsembleKind::pure;
      if (verify_ensemble == "ginibre") kind = EnsembleKind::ginibre;
      if (verify_ensemble == "product") kind = EnsembleKind::product;
      const auto alphas = detail::parse_grid(verify_alphas, "--alphas");
      const auto betas = detail::parse_grid(verify_betas, "--betas");

      CampaignResult super =
          verify_superadditivity(kind, verify_n, verify_samples, verify_seed);

      std::optional<CampaignResult> theorems;
      std::optional<TightnessReport> tightness;
      if (verify_n >= 3) {
        theorems =
            verify_theorems(kind, verify_n, verify_samples, verify_seed,
                            alphas, betas, verify_all_orderings);
        tightness = tightness_compare(kind, verify_n, verify_samples,
                                      verify_seed, alphas);
      }

      out << "{\n";
      out << "  \"ensemble\": \"" << verify_ensemble << "\",\n";
      out << "  \"n\": " << verify_n << ",\n";
      out << "  \"samples\": " << verify_samples << ",\n";
      out << "  \"seed\": " << verify_seed << ",\n";
      out << "  \"superadditivity\": {"
          << detail::report_json_fields(super.report, false) << "},\n";
      if (theorems) {
        out << "  \"theorems\": {"
            << detail::report_json_fields(theorems->report, true) << "},\n";
        out << "  \"tightness_compare\": {\"pairs\": " << tightness->pairs
            << ", \"min_ratio\": " << detail::fmt_json(tightness->min_ratio)
            << ", \"p0\": " << detail::fmt_json(tightness->ratios.p0)
            << ", \"p50\": " << detail::fmt_json(tightness->ratios.p50)
            << ", \"p100\": " << detail::fmt_json(tightness->ratios.p100)
            << "},\n";
      }
      const std::size_t violated =
          super.report.violated +
          (theorems ? theorems->report.violated +
                          theorems->report.discrepancy_violated
                    : 0);
      out << "  \"violated_total\": " << violated << "\n";
      out << "}\n";

      if (!verify_csv.empty()) {
        std::ofstream csv(verify_csv, std::ios::binary);
        if (!csv) throw input_error("cannot open for writing: " + verify_csv);
        std::vector<AuditRecord> all = super.records;
        if (theorems)
          all.insert(all.end(), theorems->records.begin(),
                     theorems->records.end());
        detail::write_records_csv(csv, all);
      }
      return violated > 0 ? 1 : 0;
    }

    if (example_cmd->parsed()) {
      write_state_file(example_out, paper_example_state());
      out << "wrote " << example_out << "\n";
      return 0;
    }
  } catch (const infeasible_error& e) {
    err << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cohbound::cli
