#pragma once

#include <cmath>
#include <vector>

#include "cohbound/coherence.hpp"
#include "cohbound/ensembles.hpp"
#include "cohbound/qmatrix.hpp"
#include "cohbound/rng.hpp"

namespace testutil {

using cohbound::Complex;
using cohbound::DenseMatrix;
using cohbound::DensityMatrix;
using cohbound::StateVector;

inline DenseMatrix diag2(double a, double b) {
  DenseMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline bool approx_equal(const DenseMatrix& a, const DenseMatrix& b,
                         double tol = 1e-12) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (std::abs(a(i, j) - b(i, j)) > tol) return false;
  return true;
}

// Single-qubit pure state with l1-coherence exactly c (real amplitudes).
inline StateVector qubit_with_coherence(double c) {
  const double theta = 0.5 * std::asin(c);
  return StateVector(1, {std::cos(theta), std::sin(theta)});
}

// Product of single-qubit pure states with the given coherences.
inline StateVector product_state(const std::vector<double>& coherences) {
  std::vector<Complex> amps{1.0};
  for (double c : coherences) {
    const StateVector factor = qubit_with_coherence(c);
    std::vector<Complex> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * factor.amplitudes()[0];
      next[2 * i + 1] = amps[i] * factor.amplitudes()[1];
    }
    amps = std::move(next);
  }
  return StateVector(static_cast<int>(coherences.size()), std::move(amps));
}

// Random Hermitian matrix with entries of order 1.
inline DenseMatrix random_hermitian(std::size_t dim, cohbound::Xoshiro256pp& rng) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 2.0 * rng.next_unit() - 1.0;
    for (std::size_t j = i + 1; j < dim; ++j) {
      const auto [re, im] = rng.next_gaussian_pair();
      m(i, j) = Complex{re, im};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace testutil
