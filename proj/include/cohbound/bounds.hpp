#pragma once

// Superadditivity bound evaluators for the alpha-th power of the l1-norm of
// coherence. The coefficient q = ((1+x)^alpha - 1)/x^alpha with x = k^delta
// in (0,1] multiplies the marginal terms; the partition index m splits the
// ratio conditions into a lower family (single-party coherence dominates the
// tail) and an upper family (tail dominates). The all-lower-condition bound
// has two candidate coefficient layouts; both are evaluated, never guessed
// between (see thm2_bound).

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cohbound/coherence.hpp"
#include "cohbound/errors.hpp"

namespace cohbound {

// Slack applied when checking ratio conditions at a concrete x; marginal
// coherences are computed in floating point.
inline constexpr double kFeasibilitySlack = 1e-9;

// Smallest x the optimizer will evaluate when an interval touches zero.
inline constexpr double kOptimizeXFloor = 1e-6;

enum class BoundVariant {
  eq4,
  eq5,
  thm1,
  thm2_as_printed,
  thm2_proof_consistent,
  thm3,
  thm4_as_printed,
  thm4_proof_consistent,
  plain_superadditivity,
};

inline const char* to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::eq4: return "eq4";
    case BoundVariant::eq5: return "eq5";
    case BoundVariant::thm1: return "thm1";
    case BoundVariant::thm2_as_printed: return "thm2_as_printed";
    case BoundVariant::thm2_proof_consistent: return "thm2_proof_consistent";
    case BoundVariant::thm3: return "thm3";
    case BoundVariant::thm4_as_printed: return "thm4_as_printed";
    case BoundVariant::thm4_proof_consistent: return "thm4_proof_consistent";
    case BoundVariant::plain_superadditivity: return "plain_superadditivity";
  }
  return "unknown";
}

// Parameter tuple (alpha, beta, k, delta) with the derived x = k^delta and
// the partition index m. The bounds depend on (k, delta) only through x, so
// the canonical form is (k, delta) = (x, 1).
struct BoundParams {
  double alpha = 1.0;
  double beta = 1.0;
  double k = 1.0;
  double delta = 1.0;
  double x = 1.0;
  int m = 1;

  static BoundParams from_x(double alpha, double x, int m, double beta = 1.0) {
    BoundParams p{alpha, beta, x, 1.0, x, m};
    p.validate();
    return p;
  }

  static BoundParams from_k_delta(double alpha, double k, double delta, int m,
                                  double beta = 1.0) {
    BoundParams p{alpha, beta, k, delta, std::pow(k, delta), m};
    p.validate();
    return p;
  }

  void validate() const {
    if (!(alpha >= 1.0)) throw domain_error("BoundParams: alpha must be >= 1");
    if (!(beta >= 1.0)) throw domain_error("BoundParams: beta must be >= 1");
    if (!(delta >= 1.0)) throw domain_error("BoundParams: delta must be >= 1");
    if (!(k > 0.0 && k <= 1.0))
      throw domain_error("BoundParams: k must be in (0,1]");
    if (!(x > 0.0 && x <= 1.0))
      throw domain_error("BoundParams: x must be in (0,1]");
    if (std::abs(x - std::pow(k, delta)) > 1e-12)
      throw domain_error("BoundParams: x must equal k^delta");
    if (m < 1) throw domain_error("BoundParams: m must be >= 1");
  }
};

// Range of x satisfying the ratio conditions for one partition index m.
// hi may be +infinity before clamping to the admissible (0,1].
struct FeasibleInterval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool feasible = false;

  double hi_clamped() const { return std::min(hi, 1.0); }
  bool contains(double x) const {
    return x >= lo - kFeasibilitySlack && x <= hi + kFeasibilitySlack;
  }
};

// Raised when a bound is requested at parameters outside the feasible set;
// carries the interval so callers can report what would have been allowed.
struct infeasible_error : std::runtime_error {
  infeasible_error(const std::string& msg, FeasibleInterval interval, int m)
      : std::runtime_error(msg), interval(interval), m(m) {}
  FeasibleInterval interval;
  int m = 0;
};

// q(alpha, x) = ((1+x)^alpha - 1) / x^alpha, nonincreasing in x on (0,1],
// equal to 2^alpha - 1 at x = 1 and exactly 1 at alpha = 1.
inline double q_coeff(double alpha, double x) {
  if (!(alpha >= 1.0)) throw domain_error("q_coeff: alpha must be >= 1");
  if (!(x > 0.0 && x <= 1.0)) throw domain_error("q_coeff: x must be in (0,1]");
  if (alpha == 1.0) return 1.0;
  return std::expm1(alpha * std::log1p(x)) / std::pow(x, alpha);
}

// (1+t)^alpha - 1 - q(alpha, x) * t^alpha for 0 <= t <= x; nonnegative on
// the lemma's domain with equality at both endpoints.
inline double scalar_lemma_gap(double alpha, double x, double t) {
  if (t < 0.0) throw domain_error("scalar_lemma_gap: t must be >= 0");
  if (t > x) throw domain_error("scalar_lemma_gap: t must be <= x");
  const double q = q_coeff(alpha, x);  // validates alpha and x
  return std::expm1(alpha * std::log1p(t)) - q * std::pow(t, alpha);
}

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest admissible x for the condition C^beta >= (1/x) T^beta.
// C = 0 with T > 0 is unsatisfiable for any x; C = T = 0 holds for every x.
inline double lower_ratio(double c, double t, double beta) {
  if (c == 0.0) return t == 0.0 ? 0.0 : kInf;
  if (t == 0.0) return 0.0;
  return std::pow(t / c, beta);
}

// Largest admissible x for the condition C^beta <= (1/x) T^beta.
// C = 0 holds for every x; C > 0 with T = 0 is unsatisfiable.
inline double upper_ratio(double c, double t, double beta) {
  if (c == 0.0) return kInf;
  if (t == 0.0) return 0.0;
  return std::pow(t / c, beta);
}

}  // namespace detail

// For each m in [1, n-2], the interval of x = k^delta satisfying the
// condition families C[i]^beta >= (1/x) T[i]^beta (i <= m) and
// C[j]^beta <= (1/x) T[j]^beta (m < j <= n-1). Index m-1 holds partition m.
inline std::vector<FeasibleInterval> partition_and_feasibility(
    const CoherenceProfile& profile, double beta = 1.0) {
  const int n = profile.n;
  if (n < 3) throw input_error("partition_and_feasibility: need n >= 3");
  if (!(beta >= 1.0))
    throw domain_error("partition_and_feasibility: beta must be >= 1");

  std::vector<FeasibleInterval> intervals(n - 2);
  for (int m = 1; m <= n - 2; ++m) {
    FeasibleInterval interval;
    interval.lo = 0.0;
    interval.hi = detail::kInf;
    for (int i = 1; i <= m; ++i)
      interval.lo = std::max(
          interval.lo,
          detail::lower_ratio(profile.marginal(i), profile.tail(i), beta));
    for (int j = m + 1; j <= n - 1; ++j)
      interval.hi = std::min(
          interval.hi,
          detail::upper_ratio(profile.marginal(j), profile.tail(j), beta));
    // x must exist in (0, 1]: lo within the clamped range and hi positive.
    interval.feasible =
        interval.lo <= interval.hi_clamped() + kFeasibilitySlack &&
        interval.hi_clamped() > 0.0;
    intervals[m - 1] = interval;
  }
  return intervals;
}

struct BoundValue {
  double value = 0.0;
  BoundVariant variant = BoundVariant::thm1;
  BoundParams params;
};

namespace detail {

// Staircase layout shared by thm1/thm3/eq4/eq5: q^{i-1} on parties up to
// m, q^{m+1} on the middle block, q^m on the last party. Terms are summed
// in ascending party order so that the alpha = 1 case reduces bit-for-bit
// to the plain sum of C[i]^expo.
inline double staircase_pattern(const CoherenceProfile& profile, double q,
                                double expo, int m) {
  const int n = profile.n;
  double value = 0.0;
  double coeff = 1.0;
  for (int i = 1; i <= m; ++i) {
    value += coeff * std::pow(profile.marginal(i), expo);
    coeff *= q;
  }
  const double mid_coeff = coeff * q;  // q^{m+1}
  for (int j = m + 1; j <= n - 1; ++j)
    value += mid_coeff * std::pow(profile.marginal(j), expo);
  value += coeff * std::pow(profile.marginal(n), expo);  // q^m
  return value;
}

// As-printed layout of thm2/thm4: q^{i-1} up the whole chain with q^{n-1}
// on the last party.
inline double printed_tail_pattern(const CoherenceProfile& profile, double q,
                                   double expo) {
  const int n = profile.n;
  double value = 0.0;
  double coeff = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    value += coeff * std::pow(profile.marginal(i), expo);
    coeff *= q;
  }
  value += coeff * std::pow(profile.marginal(n), expo);  // q^{n-1}
  return value;
}

// Layout implied by the proof chain: the last pair is split by plain
// superadditivity, so both final parties carry q^{n-2}.
inline double proof_tail_pattern(const CoherenceProfile& profile, double q,
                                 double expo) {
  const int n = profile.n;
  double value = 0.0;
  double coeff = 1.0;
  for (int i = 1; i <= n - 2; ++i) {
    value += coeff * std::pow(profile.marginal(i), expo);
    coeff *= q;
  }
  value += coeff * std::pow(profile.marginal(n - 1), expo);
  value += coeff * std::pow(profile.marginal(n), expo);
  return value;
}

inline void require_partition_feasible(const CoherenceProfile& profile,
                                       const BoundParams& params, double beta,
                                       const char* who) {
  const int n = profile.n;
  if (params.m > n - 2)
    throw infeasible_error(std::string(who) + ": m must be <= n-2",
                           FeasibleInterval{}, params.m);
  const auto intervals = partition_and_feasibility(profile, beta);
  const FeasibleInterval& interval = intervals[params.m - 1];
  if (!interval.contains(params.x))
    throw infeasible_error(
        std::string(who) + ": x outside the feasible interval", interval,
        params.m);
}

// Lower-family conditions for all i = 1..n-2 (the m = n-2 hypothesis of
// thm2/thm4); no upper-family condition is imposed.
inline void require_all_lower(const CoherenceProfile& profile,
                              const BoundParams& params, double beta,
                              const char* who) {
  const int n = profile.n;
  if (n < 3) throw input_error(std::string(who) + ": need n >= 3");
  FeasibleInterval interval;
  for (int i = 1; i <= n - 2; ++i)
    interval.lo = std::max(
        interval.lo,
        lower_ratio(profile.marginal(i), profile.tail(i), beta));
  interval.feasible = interval.lo <= 1.0 + kFeasibilitySlack;
  if (!interval.contains(params.x))
    throw infeasible_error(
        std::string(who) + ": lower-family condition fails at this x",
        interval, n - 2);
}

}  // namespace detail

inline BoundValue thm1_bound(const CoherenceProfile& profile,
                             const BoundParams& params) {
  params.validate();
  detail::require_partition_feasible(profile, params, 1.0, "thm1_bound");
  const double q = q_coeff(params.alpha, params.x);
  return {detail::staircase_pattern(profile, q, params.alpha, params.m),
          BoundVariant::thm1, params};
}

// The thm2 bound ships in two coefficient layouts. as_printed follows the
// displayed inequality (q^{n-1} on the last party); proof_consistent follows
// the proof chain, which only supports q^{n-2} on the final pair. The two
// genuinely differ and the audit reports both.
inline BoundValue thm2_bound(const CoherenceProfile& profile,
                             const BoundParams& params, BoundVariant variant) {
  if (variant != BoundVariant::thm2_as_printed &&
      variant != BoundVariant::thm2_proof_consistent)
    throw input_error("thm2_bound: variant must be a thm2 tag");
  params.validate();
  detail::require_all_lower(profile, params, 1.0, "thm2_bound");
  const double q = q_coeff(params.alpha, params.x);
  const double value =
      variant == BoundVariant::thm2_as_printed
          ? detail::printed_tail_pattern(profile, q, params.alpha)
          : detail::proof_tail_pattern(profile, q, params.alpha);
  return {value, variant, params};
}

// thm3: the staircase bound with ratio conditions on beta-th powers and
// the exponent alpha*beta on every coherence. Lower-bounds full^{alpha*beta}.
inline BoundValue thm3_bound(const CoherenceProfile& profile,
                             const BoundParams& params) {
  params.validate();
  detail::require_partition_feasible(profile, params, params.beta,
                                     "thm3_bound");
  const double q = q_coeff(params.alpha, params.x);
  return {detail::staircase_pattern(profile, q, params.alpha * params.beta,
                                    params.m),
          BoundVariant::thm3, params};
}

inline BoundValue thm4_bound(const CoherenceProfile& profile,
                             const BoundParams& params, BoundVariant variant) {
  if (variant != BoundVariant::thm4_as_printed &&
      variant != BoundVariant::thm4_proof_consistent)
    throw input_error("thm4_bound: variant must be a thm4 tag");
  params.validate();
  detail::require_all_lower(profile, params, params.beta, "thm4_bound");
  const double q = q_coeff(params.alpha, params.x);
  const double expo = params.alpha * params.beta;
  const double value = variant == BoundVariant::thm4_as_printed
                           ? detail::printed_tail_pattern(profile, q, expo)
                           : detail::proof_tail_pattern(profile, q, expo);
  return {value, variant, params};
}

// eq4 predecessor bound: coefficient 2^alpha - 1, conditioned only on
// the upper family C[j] <= T[j] for j = m+1..n-1.
inline BoundValue prior_bound_eq4(const CoherenceProfile& profile,
                                  double alpha, int m) {
  if (!(alpha >= 1.0)) throw domain_error("prior_bound_eq4: alpha must be >= 1");
  const int n = profile.n;
  if (n < 3) throw input_error("prior_bound_eq4: need n >= 3");
  if (m < 1 || m > n - 2)
    throw infeasible_error("prior_bound_eq4: m must be in [1, n-2]",
                           FeasibleInterval{}, m);
  FeasibleInterval interval;
  interval.lo = 0.0;
  for (int j = m + 1; j <= n - 1; ++j)
    interval.hi = std::min(
        interval.hi,
        detail::upper_ratio(profile.marginal(j), profile.tail(j), 1.0));
  interval.feasible = interval.hi >= 1.0 - kFeasibilitySlack;
  if (!interval.feasible)
    throw infeasible_error("prior_bound_eq4: condition C[j] <= T[j] fails",
                           interval, m);
  const double q = q_coeff(alpha, 1.0);  // 2^alpha - 1
  BoundParams params = BoundParams::from_x(alpha, 1.0, m);
  return {detail::staircase_pattern(profile, q, alpha, m), BoundVariant::eq4,
          params};
}

// eq5 predecessor bound: the staircase layout with x replaced by k
// (i.e. delta = 1) in both condition families and in the coefficient.
inline BoundValue prior_bound_eq5(const CoherenceProfile& profile,
                                  double alpha, double k, int m) {
  if (!(alpha >= 1.0)) throw domain_error("prior_bound_eq5: alpha must be >= 1");
  if (!(k > 0.0 && k <= 1.0))
    throw domain_error("prior_bound_eq5: k must be in (0,1]");
  BoundParams params = BoundParams::from_k_delta(alpha, k, 1.0, m);
  detail::require_partition_feasible(profile, params, 1.0, "prior_bound_eq5");
  const double q = q_coeff(alpha, k);
  return {detail::staircase_pattern(profile, q, alpha, m), BoundVariant::eq5,
          params};
}

struct OptimizeResult {
  bool feasible = false;
  BoundValue best;  // best.params carries the chosen m and x
};

namespace detail {

// Candidate x values for one feasible interval: the lo endpoint (floored at
// kOptimizeXFloor) plus a 16-point log grid toward 1. q is nonincreasing in
// x so the endpoint is optimal; the grid is a safety net against clamping.
inline std::vector<double> optimize_candidates(const FeasibleInterval& iv) {
  std::vector<double> xs;
  const double x0 = std::min(std::max(iv.lo, kOptimizeXFloor), 1.0);
  if (!iv.contains(x0)) return xs;
  xs.push_back(x0);
  for (int g = 1; g <= 16; ++g) {
    const double x = std::pow(x0, 1.0 - static_cast<double>(g) / 16.0);
    if (x <= iv.hi_clamped() + kFeasibilitySlack && x != xs.back())
      xs.push_back(std::min(x, 1.0));
  }
  return xs;
}

}  // namespace detail

// Maximizes the staircase bound (thm1/thm3) over feasible partitions and x.
// Ties between partitions resolve toward smaller m.
inline OptimizeResult optimize_bound(const CoherenceProfile& profile,
                                     double alpha, double beta = 1.0) {
  if (profile.n < 3) throw input_error("optimize_bound: need n >= 3");
  const auto intervals = partition_and_feasibility(profile, beta);

  OptimizeResult result;
  for (int m = 1; m <= profile.n - 2; ++m) {
    const FeasibleInterval& iv = intervals[m - 1];
    if (!iv.feasible) continue;
    for (double x : detail::optimize_candidates(iv)) {
      const double q = q_coeff(alpha, x);
      const double value =
          detail::staircase_pattern(profile, q, alpha * beta, m);
      if (!result.feasible || value > result.best.value) {
        result.feasible = true;
        result.best.value = value;
        result.best.variant =
            beta == 1.0 ? BoundVariant::thm1 : BoundVariant::thm3;
        result.best.params = BoundParams::from_x(alpha, x, m, beta);
      }
    }
  }
  return result;
}

// One inequality link of the proof chain, evaluated on actual coherences.
// Lower-family links peel single parties off the front; upper-family links
// extract the q-weighted marginal from the tail. residual = lhs - rhs must
// be >= -1e-9 for a sound link.
struct ChainLink {
  bool lower_family = true;
  int index = 0;  // position in the ordering
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

inline std::vector<ChainLink> chain_audit(const CoherenceProfile& profile,
                                          const BoundParams& params) {
  params.validate();
  detail::require_partition_feasible(profile, params, params.beta,
                                     "chain_audit");
  const int n = profile.n;
  const double q = q_coeff(params.alpha, params.x);
  const double expo = params.alpha * params.beta;

  // Suffix coherences S[i] = C_l1 of parties ordering(i..n): S[1] is the
  // full state, S[i] = T[i-1] for i >= 2.
  auto suffix = [&](int i) { return i == 1 ? profile.full : profile.tail(i - 1); };

  std::vector<ChainLink> links;
  for (int i = 1; i <= params.m; ++i) {
    ChainLink link;
    link.lower_family = true;
    link.index = i;
    link.lhs = std::pow(suffix(i), expo);
    link.rhs = std::pow(profile.marginal(i), expo) +
               q * std::pow(suffix(i + 1), expo);
    link.residual = link.lhs - link.rhs;
    links.push_back(link);
  }
  for (int j = params.m + 1; j <= n - 1; ++j) {
    ChainLink link;
    link.lower_family = false;
    link.index = j;
    link.lhs = std::pow(suffix(j), expo);
    link.rhs = q * std::pow(profile.marginal(j), expo) +
               std::pow(suffix(j + 1), expo);
    link.residual = link.lhs - link.rhs;
    links.push_back(link);
  }
  return links;
}

inline std::vector<ChainLink> chain_audit(const DensityMatrix& state,
                                          const std::vector<int>& ordering,
                                          const BoundParams& params) {
  return chain_audit(coherence_profile(state, ordering), params);
}

}  // namespace cohbound
