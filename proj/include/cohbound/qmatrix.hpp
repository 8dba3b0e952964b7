#pragma once

// Dense complex matrix algebra for multiqubit states: Kronecker products,
// qubit permutation, partial trace, Jacobi eigenvalues, density-matrix
// validation. Qubit 1 is the most significant bit of the basis index, so
// kron(party1, party2, ...) matches index order with no reversal.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cohbound/errors.hpp"

namespace cohbound {

using Complex = std::complex<double>;

// Kronecker products refuse to build matrices past this dimension.
inline constexpr std::size_t kMaxKronDim = std::size_t{1} << 12;

// Desk-scale ceiling for generated states; dense 1024 x 1024 is the limit.
inline constexpr int kMaxQubits = 10;

// Tolerances shared by the DensityMatrix invariants.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kNormTol = 1e-12;

// Square complex matrix stored dense, row-major. Values are treated as
// immutable once built and are safe to share across threads for reads.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim < 1) throw input_error("DenseMatrix: dim must be >= 1");
  }

  DenseMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) throw input_error("DenseMatrix: dim must be >= 1");
    if (entries_.size() != dim * dim)
      throw input_error("DenseMatrix: entry count must equal dim^2");
  }

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  bool all_finite() const {
    for (const Complex& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  // Largest entrywise deviation from M = M^dagger.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i; j < dim_; ++j) {
        worst = std::max(worst,
                         std::abs((*this)(i, j) - std::conj((*this)(j, i))));
      }
    }
    return worst;
  }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b,
                        std::size_t max_dim = kMaxKronDim) {
  if (a.dim() > max_dim / b.dim())
    throw size_error("kron: result dimension " + std::to_string(a.dim()) +
                     "*" + std::to_string(b.dim()) + " exceeds maximum " +
                     std::to_string(max_dim));
  const std::size_t da = a.dim(), db = b.dim();
  DenseMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

inline DenseMatrix dagger(const DenseMatrix& a) {
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(i, j) = std::conj(a(j, i));
  return out;
}

namespace detail {

inline bool is_power_of_two(std::size_t v) { return v && (v & (v - 1)) == 0; }

inline int log2_exact(std::size_t v) {
  int n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

}  // namespace detail

// Normalized pure n-qubit state in the computational basis.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1) throw input_error("StateVector: need at least 1 qubit");
    if (amplitudes_.size() != (std::size_t{1} << n_qubits))
      throw input_error("StateVector: amplitude count must equal 2^n");
    double norm_sq = 0.0;
    for (const Complex& z : amplitudes_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw input_error("StateVector: non-finite amplitude");
      norm_sq += std::norm(z);
    }
    if (std::abs(norm_sq - 1.0) > kNormTol)
      throw input_error("StateVector: not normalized, |norm^2 - 1| = " +
                        std::to_string(std::abs(norm_sq - 1.0)));
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

// n-qubit density matrix. The wrapper checks structure (dim = 2^n) on
// construction; the physics invariants (Hermitian, unit trace, PSD) are
// checked once at trust boundaries via validate_density.
class DensityMatrix {
 public:
  explicit DensityMatrix(DenseMatrix matrix) : matrix_(std::move(matrix)) {
    if (!detail::is_power_of_two(matrix_.dim()) || matrix_.dim() < 2)
      throw input_error("DensityMatrix: dim must be 2^n with n >= 1");
    n_qubits_ = detail::log2_exact(matrix_.dim());
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.dim(); }
  const DenseMatrix& matrix() const { return matrix_; }

 private:
  int n_qubits_;
  DenseMatrix matrix_;
};

struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = false;
};

inline DensityMatrix pure_to_density(const StateVector& psi) {
  const auto& a = psi.amplitudes();
  DenseMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      m(i, j) = a[i] * std::conj(a[j]);
  return DensityMatrix(std::move(m));
}

// Relabels the parties of rho: party i of the result is party perm[i-1] of
// the input (party labels are 1-based). Trace, spectrum and the l1-norm of
// coherence of the full state are unchanged.
inline DensityMatrix permute_qubits(const DensityMatrix& rho,
                                    const std::vector<int>& perm) {
  const int n = rho.n_qubits();
  if (static_cast<int>(perm.size()) != n)
    throw input_error("permute_qubits: permutation size must equal n");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p - 1])
      throw input_error("permute_qubits: not a bijection on {1..n}");
    seen[p - 1] = true;
  }

  const std::size_t dim = rho.dim();
  // Party p occupies bit (n - p): party 1 is the most significant bit.
  auto source_index = [&](std::size_t out) {
    std::size_t in = 0;
    for (int party = 1; party <= n; ++party) {
      const std::size_t bit = (out >> (n - party)) & 1u;
      in |= bit << (n - perm[party - 1]);
    }
    return in;
  };

  DenseMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t si = source_index(i);
    for (std::size_t j = 0; j < dim; ++j)
      out(i, j) = rho.matrix()(si, source_index(j));
  }
  return DensityMatrix(std::move(out));
}

// Traces out every party not in keep. Kept parties stay in ascending label
// order; the result is a density matrix on |keep| qubits with the same trace.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) throw input_error("partial_trace: keep must be nonempty");
  std::vector<int> kept(keep);
  std::sort(kept.begin(), kept.end());
  if (kept.front() < 1 || kept.back() > n)
    throw input_error("partial_trace: keep must be a subset of {1..n}");
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw input_error("partial_trace: duplicate party in keep");

  std::vector<int> traced;
  for (int p = 1; p <= n; ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const std::size_t dim_out = std::size_t{1} << nk;
  const std::size_t dim_traced = std::size_t{1} << nt;

  // Bit position (from the LSB) of party p in an n-party index.
  auto bit_of = [n](int party) { return n - party; };

  DenseMatrix out(dim_out);
  for (std::size_t r = 0; r < dim_out; ++r) {
    for (std::size_t c = 0; c < dim_out; ++c) {
      std::size_t base_i = 0, base_j = 0;
      for (int q = 0; q < nk; ++q) {
        base_i |= ((r >> (nk - 1 - q)) & 1u) << bit_of(kept[q]);
        base_j |= ((c >> (nk - 1 - q)) & 1u) << bit_of(kept[q]);
      }
      Complex sum = 0.0;
      for (std::size_t t = 0; t < dim_traced; ++t) {
        std::size_t mask = 0;
        for (int q = 0; q < nt; ++q)
          mask |= ((t >> (nt - 1 - q)) & 1u) << bit_of(traced[q]);
        sum += rho.matrix()(base_i | mask, base_j | mask);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, in
// nondecreasing order. Iterates sweeps until the off-diagonal Frobenius
// norm drops below 1e-12, capped at 100 sweeps.
inline std::vector<double> hermitian_eigenvalues(const DenseMatrix& a) {
  constexpr double kHermitianInputTol = 1e-8;
  constexpr double kOffNormTarget = 1e-12;
  constexpr int kMaxSweeps = 100;

  if (!a.all_finite())
    throw input_error("hermitian_eigenvalues: non-finite entries");
  if (a.hermiticity_defect() > kHermitianInputTol)
    throw input_error("hermitian_eigenvalues: matrix is not Hermitian");

  const std::size_t d = a.dim();
  std::vector<double> diag(d);
  // Strict upper triangle of the hermitized matrix (diagonal kept real).
  std::vector<Complex> upper(d * d, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    diag[i] = a(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j)
      upper[i * d + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return upper[i * d + j];
  };
  // Off-diagonal entry (i, j) for any i != j, reading the stored triangle.
  auto off_entry = [&](std::size_t i, std::size_t j) -> Complex {
    return i < j ? at(i, j) : std::conj(at(j, i));
  };

  auto off_norm_sq = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) s += std::norm(at(i, j));
    return 2.0 * s;
  };

  int sweep = 0;
  while (off_norm_sq() > kOffNormTarget * kOffNormTarget) {
    if (++sweep > kMaxSweeps)
      throw numeric_error("hermitian_eigenvalues: Jacobi did not converge");
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;

        const double tau = (diag[q] - diag[p]) / (2.0 * mag);
        const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        diag[p] -= t * mag;
        diag[q] += t * mag;
        at(p, q) = 0.0;

        for (std::size_t i = 0; i < d; ++i) {
          if (i == p || i == q) continue;
          const Complex bip = off_entry(i, p);
          const Complex biq = off_entry(i, q);
          const Complex nip = c * bip - s * std::conj(phase) * biq;
          const Complex niq = s * phase * bip + c * biq;
          if (i < p)
            at(i, p) = nip;
          else
            at(p, i) = std::conj(nip);
          if (i < q)
            at(i, q) = niq;
          else
            at(q, i) = std::conj(niq);
        }
      }
    }
  }

  std::sort(diag.begin(), diag.end());
  return diag;
}

// Computes the three invariant defects of a density matrix. Never throws;
// the verdict is carried in the report.
inline ValidationReport validate_density(const DensityMatrix& rho) {
  ValidationReport report;
  const DenseMatrix& m = rho.matrix();
  if (!m.all_finite()) {
    report.hermiticity_defect = std::numeric_limits<double>::infinity();
    report.trace_defect = std::numeric_limits<double>::infinity();
    report.min_eigenvalue = -std::numeric_limits<double>::infinity();
    report.ok = false;
    return report;
  }
  report.hermiticity_defect = m.hermiticity_defect();
  report.trace_defect = std::abs(m.trace() - Complex{1.0, 0.0});

  // Eigenvalues of the hermitized part; meaningful whenever the defect is
  // small, and still a useful diagnostic when it is not.
  DenseMatrix h(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  report.min_eigenvalue = hermitian_eigenvalues(h).front();

  report.ok = report.hermiticity_defect <= kHermitianTol &&
              report.trace_defect <= kTraceTol &&
              report.min_eigenvalue >= kEigenvalueFloor;
  return report;
}

}  // namespace cohbound
