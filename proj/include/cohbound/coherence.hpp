#pragma once

// The l1-norm of coherence: sum of the absolute values of the off-diagonal
// entries in the computational basis, plus the per-ordering coherence
// profiles every bound evaluator consumes.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "cohbound/errors.hpp"
#include "cohbound/qmatrix.hpp"

namespace cohbound {

// Profile entries below this are reported as exact zero; keeps the ratio
// conditions T[i]/C[i] stable against floating-point dust.
inline constexpr double kCoherenceZeroThreshold = 1e-13;

inline double c_l1(const DenseMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) sum += std::abs(m(i, j));
  return sum;
}

// The caller validates the state once; sweeps must not pay the O(dim^3)
// validation on every evaluation.
inline double c_l1(const DensityMatrix& rho) { return c_l1(rho.matrix()); }

// For a pure state the off-diagonal sum collapses to (sum_i |psi_i|)^2 - 1.
inline double c_l1_pure(const StateVector& psi) {
  double abs_sum = 0.0;
  for (const Complex& z : psi.amplitudes()) abs_sum += std::abs(z);
  return std::max(0.0, abs_sum * abs_sum - 1.0);
}

// Marginal and tail coherences of an n-party state under a fixed ordering:
// C[i] is the coherence of the single party ordering(i), T[i] the coherence
// of the joint marginal of parties ordering(i+1..n), full the whole state.
struct CoherenceProfile {
  int n = 0;
  std::vector<int> ordering;  // 1-based party labels
  std::vector<double> C;      // size n
  std::vector<double> T;      // size n-1; T[n-2] equals C[n-1]
  double full = 0.0;

  double marginal(int i) const { return C[i - 1]; }  // 1-based accessors
  double tail(int i) const { return T[i - 1]; }
};

inline std::vector<int> identity_ordering(int n) {
  std::vector<int> ordering(n);
  std::iota(ordering.begin(), ordering.end(), 1);
  return ordering;
}

namespace detail {

inline double snap_zero(double v) {
  return v < kCoherenceZeroThreshold ? 0.0 : v;
}

}  // namespace detail

inline CoherenceProfile coherence_profile(const DensityMatrix& rho,
                                          const std::vector<int>& ordering) {
  const int n = rho.n_qubits();
  if (n < 2) throw input_error("coherence_profile: need at least 2 parties");
  if (static_cast<int>(ordering.size()) != n)
    throw input_error("coherence_profile: ordering size must equal n");
  std::vector<bool> seen(n, false);
  for (int p : ordering) {
    if (p < 1 || p > n || seen[p - 1])
      throw input_error("coherence_profile: ordering is not a permutation");
    seen[p - 1] = true;
  }

  CoherenceProfile profile;
  profile.n = n;
  profile.ordering = ordering;
  profile.C.resize(n);
  profile.T.resize(n - 1);
  profile.full = detail::snap_zero(c_l1(rho));

  for (int i = 1; i <= n; ++i)
    profile.C[i - 1] =
        detail::snap_zero(c_l1(partial_trace(rho, {ordering[i - 1]})));
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> keep(ordering.begin() + i, ordering.end());
    profile.T[i - 1] = detail::snap_zero(c_l1(partial_trace(rho, keep)));
  }
  return profile;
}

inline CoherenceProfile coherence_profile(const DensityMatrix& rho) {
  return coherence_profile(rho, identity_ordering(rho.n_qubits()));
}

}  // namespace cohbound
