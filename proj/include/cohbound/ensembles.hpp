#pragma once

// Seeded generation of test states: Haar-like random pure states, Ginibre
// random density matrices, product states, and the named worked example.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cohbound/errors.hpp"
#include "cohbound/qmatrix.hpp"
#include "cohbound/rng.hpp"

namespace cohbound {

namespace detail {

inline void check_qubit_range(int n, const char* who) {
  if (n < 1 || n > kMaxQubits)
    throw input_error(std::string(who) + ": n must be in [1, " +
                      std::to_string(kMaxQubits) + "]");
}

inline Complex next_complex_gaussian(Xoshiro256pp& rng) {
  const auto [re, im] = rng.next_gaussian_pair();
  return {re, im};
}

// Draws amplitudes until the norm is usable, then normalizes in place.
inline void fill_normalized(std::vector<Complex>& amps, Xoshiro256pp& rng) {
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (auto& a : amps) {
      a = next_complex_gaussian(rng);
      norm_sq += std::norm(a);
    }
  } while (norm_sq < 1e-300);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= inv;
}

}  // namespace detail

// Pure state with amplitudes drawn as independent standard complex
// Gaussians, then normalized (Haar distributed).
inline StateVector random_pure(int n, const SeedSpec& s) {
  detail::check_qubit_range(n, "random_pure");
  Xoshiro256pp rng(s);
  std::vector<Complex> amps(std::size_t{1} << n);
  detail::fill_normalized(amps, rng);
  return StateVector(n, std::move(amps));
}

// Ginibre density matrix rho = G G^dagger / tr(G G^dagger) with G a
// 2^n x rank matrix of independent standard complex Gaussians.
inline DensityMatrix random_density(int n, int rank, const SeedSpec& s) {
  detail::check_qubit_range(n, "random_density");
  const std::size_t dim = std::size_t{1} << n;
  if (rank < 1 || static_cast<std::size_t>(rank) > dim)
    throw input_error("random_density: rank must be in [1, 2^n]");

  Xoshiro256pp rng(s);
  std::vector<Complex> g(dim * static_cast<std::size_t>(rank));
  for (auto& z : g) z = detail::next_complex_gaussian(rng);

  // G G^dagger is exactly Hermitian under this summation order.
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum = 0.0;
      for (int r = 0; r < rank; ++r)
        sum += g[i * rank + r] * std::conj(g[j * rank + r]);
      m(i, j) = sum;
    }
  const double tr = m.trace().real();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) /= tr;
  return DensityMatrix(std::move(m));
}

// Kronecker product of n independent single-qubit random pure states.
inline StateVector random_product_pure(int n, const SeedSpec& s) {
  detail::check_qubit_range(n, "random_product_pure");
  Xoshiro256pp rng(s);
  std::vector<Complex> amps{1.0};
  for (int q = 0; q < n; ++q) {
    std::vector<Complex> factor(2);
    detail::fill_normalized(factor, rng);
    std::vector<Complex> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * factor[0];
      next[2 * i + 1] = amps[i] * factor[1];
    }
    amps = std::move(next);
  }
  return StateVector(n, std::move(amps));
}

// The worked three-qubit example: (|0> + |1>)/sqrt(2) (x) |0> (x)
// (|0> + 3|1>)/sqrt(10). Marginal coherences (1, 0, 3/5), full 11/5.
inline StateVector paper_example_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double inv_sqrt10 = 1.0 / std::sqrt(10.0);
  const std::vector<Complex> f1{inv_sqrt2, inv_sqrt2};
  const std::vector<Complex> f2{1.0, 0.0};
  const std::vector<Complex> f3{inv_sqrt10, 3.0 * inv_sqrt10};

  std::vector<Complex> amps(8);
  for (std::size_t b1 = 0; b1 < 2; ++b1)
    for (std::size_t b2 = 0; b2 < 2; ++b2)
      for (std::size_t b3 = 0; b3 < 2; ++b3)
        amps[(b1 << 2) | (b2 << 1) | b3] = f1[b1] * f2[b2] * f3[b3];
  return StateVector(3, std::move(amps));
}

}  // namespace cohbound
