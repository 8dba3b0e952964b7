#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "cohbound/coherence.hpp"
#include "cohbound/ensembles.hpp"
#include "cohbound/qmatrix.hpp"
#include "test_helpers.hpp"

using namespace cohbound;
using testutil::approx_equal;
using testutil::diag2;

TEST_CASE("kron identity and diagonal cases") {
  const auto i2 = DenseMatrix::identity(2);
  CHECK(kron(i2, i2) == DenseMatrix::identity(4));

  const auto d = kron(diag2(1, 0), diag2(0, 1));
  DenseMatrix expected(4);
  expected(1, 1) = 1.0;
  CHECK(d == expected);
}

TEST_CASE("kron of the example factors reproduces the 8x8 state") {
  const StateVector psi = paper_example_state();
  const DensityMatrix rho = pure_to_density(psi);

  const auto f1 = pure_to_density(testutil::qubit_with_coherence(1.0));
  const auto f2 = pure_to_density(StateVector(1, {1.0, 0.0}));
  const double s10 = 1.0 / std::sqrt(10.0);
  const auto f3 = pure_to_density(StateVector(1, {s10, 3.0 * s10}));

  const auto product = kron(kron(f1.matrix(), f2.matrix()), f3.matrix());
  CHECK(approx_equal(product, rho.matrix(), 1e-14));

  // Direct off-diagonal sum on the 8x8 matrix.
  double sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i != j) sum += std::abs(product(i, j));
  CHECK_THAT(sum, Catch::Matchers::WithinAbs(11.0 / 5.0, 1e-12));
}

TEST_CASE("kron rejects oversized results") {
  const auto big = DenseMatrix::identity(1 << 7);
  const auto small = DenseMatrix::identity(1 << 6);
  CHECK_THROWS_AS(kron(big, small), size_error);  // 2^13 > 2^12
  CHECK_NOTHROW(kron(small, small));              // 2^12 is allowed
  CHECK_THROWS_AS(kron(small, small, 1 << 11), size_error);
}

TEST_CASE("kron is associative entry for entry") {
  // Dyadic entries keep every product exact, so the two association orders
  // agree bit for bit.
  Xoshiro256pp rng(SeedSpec{31, 0});
  auto random_dyadic = [&rng](std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m(i, j) = Complex{0.25 * (static_cast<double>(rng.next() % 17) - 8.0),
                          0.25 * (static_cast<double>(rng.next() % 17) - 8.0)};
    return m;
  };
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_dyadic(2);
    const auto b = random_dyadic(3);
    const auto c = random_dyadic(2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("dagger basics") {
  const auto i4 = DenseMatrix::identity(4);
  CHECK(dagger(i4) == i4);

  DenseMatrix upper(2);
  upper(0, 1) = 1.0;
  DenseMatrix lower(2);
  lower(1, 0) = 1.0;
  CHECK(dagger(upper) == lower);

  Xoshiro256pp rng(SeedSpec{32, 0});
  const auto a = testutil::random_hermitian(4, rng);
  CHECK(dagger(dagger(a)) == a);
}

TEST_CASE("permute_qubits identity and involution") {
  const DensityMatrix rho = pure_to_density(paper_example_state());
  CHECK(permute_qubits(rho, {1, 2, 3}).matrix() == rho.matrix());

  const auto swapped = permute_qubits(rho, {2, 1, 3});
  CHECK(permute_qubits(swapped, {2, 1, 3}).matrix() == rho.matrix());

  CHECK_THROWS_AS(permute_qubits(rho, {1, 1, 3}), input_error);
  CHECK_THROWS_AS(permute_qubits(rho, {1, 2}), input_error);
}

TEST_CASE("swapping parties of a product state gives the swapped product") {
  const auto sigma = pure_to_density(testutil::qubit_with_coherence(0.8));
  const auto tau = pure_to_density(testutil::qubit_with_coherence(0.3));
  const DensityMatrix st(kron(sigma.matrix(), tau.matrix()));
  const DensityMatrix ts(kron(tau.matrix(), sigma.matrix()));
  CHECK(approx_equal(permute_qubits(st, {2, 1}).matrix(), ts.matrix(), 0.0));

  // Brute-force index relabeling oracle on the 2-qubit case.
  const auto perm = permute_qubits(st, {2, 1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto relabel = [](std::size_t v) {
        return ((v & 1u) << 1) | ((v >> 1) & 1u);
      };
      CHECK(perm.matrix()(i, j) == st.matrix()(relabel(i), relabel(j)));
    }
}

TEST_CASE("permute_qubits preserves the spectrum") {
  for (unsigned rep = 0; rep < 10; ++rep) {
    const auto rho = random_density(3, 8, SeedSpec{33, 100 + rep});
    const auto before = hermitian_eigenvalues(rho.matrix());
    const auto after =
        hermitian_eigenvalues(permute_qubits(rho, {3, 1, 2}).matrix());
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i)
      CHECK_THAT(after[i], Catch::Matchers::WithinAbs(before[i], 1e-10));
  }
}

TEST_CASE("partial_trace of the Bell state is maximally mixed") {
  const double s = 1.0 / std::sqrt(2.0);
  const StateVector bell(2, {s, 0.0, 0.0, s});
  const auto marginal = partial_trace(pure_to_density(bell), {1});
  CHECK(approx_equal(marginal.matrix(), diag2(0.5, 0.5), 1e-15));
}

TEST_CASE("partial_trace of a product factorizes") {
  const auto sigma = pure_to_density(testutil::qubit_with_coherence(0.6));
  const auto tau = pure_to_density(testutil::qubit_with_coherence(0.2));
  const DensityMatrix joint(kron(sigma.matrix(), tau.matrix()));
  CHECK(approx_equal(partial_trace(joint, {1}).matrix(), sigma.matrix(), 1e-15));
  CHECK(approx_equal(partial_trace(joint, {2}).matrix(), tau.matrix(), 1e-15));
}

TEST_CASE("partial_trace of the example state matches the quoted marginal") {
  const DensityMatrix rho = pure_to_density(paper_example_state());
  const auto tail = partial_trace(rho, {2, 3});
  CHECK_THAT(c_l1(tail), Catch::Matchers::WithinAbs(3.0 / 5.0, 1e-12));
  CHECK_THROWS_AS(partial_trace(rho, {}), input_error);
  CHECK_THROWS_AS(partial_trace(rho, {4}), input_error);
  CHECK_THROWS_AS(partial_trace(rho, {1, 1}), input_error);
}

TEST_CASE("partial_trace maps valid states to valid states") {
  // 1000 random inputs across n in {2..6}, random keep subsets.
  std::size_t count = 0;
  for (std::uint64_t stream = 0; count < 1000; ++stream) {
    const int n = 2 + static_cast<int>(stream % 5);
    const int rank = 1 + static_cast<int>(stream % (1u << n));
    const auto rho = random_density(n, rank, SeedSpec{77, stream});

    Xoshiro256pp picker(SeedSpec{78, stream});
    std::vector<int> keep;
    for (int p = 1; p <= n; ++p)
      if (picker.next() & 1u) keep.push_back(p);
    if (keep.empty() || keep.size() == static_cast<std::size_t>(n)) continue;

    const auto reduced = partial_trace(rho, keep);
    CHECK_THAT(reduced.matrix().trace().real(),
               Catch::Matchers::WithinAbs(rho.matrix().trace().real(), 1e-12));
    const auto report = validate_density(reduced);
    REQUIRE(report.ok);
    ++count;
  }
}

TEST_CASE("partial_trace composes") {
  for (std::uint64_t stream = 0; stream < 20; ++stream) {
    const auto rho = random_density(4, 4, SeedSpec{79, stream});
    const auto once = partial_trace(rho, {2});
    const auto via = partial_trace(partial_trace(rho, {2, 3}), {1});
    CHECK(approx_equal(once.matrix(), via.matrix(), 1e-13));
  }
}

TEST_CASE("pure_to_density basics") {
  CHECK(approx_equal(pure_to_density(StateVector(1, {1.0, 0.0})).matrix(),
                     diag2(1, 0), 0.0));

  const double s = 1.0 / std::sqrt(2.0);
  const auto plus = pure_to_density(StateVector(1, {s, s}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK_THAT(plus.matrix()(i, j).real(),
                 Catch::Matchers::WithinAbs(0.5, 1e-15));

  CHECK_THROWS_AS(StateVector(1, std::vector<Complex>{1.0, 1.0}), input_error);

  // Rank-1 projector spectrum.
  const auto rho = pure_to_density(random_pure(2, SeedSpec{5, 0}));
  const auto eig = hermitian_eigenvalues(rho.matrix());
  REQUIRE(eig.size() == 4);
  CHECK_THAT(eig[3], Catch::Matchers::WithinAbs(1.0, 1e-12));
  for (int i = 0; i < 3; ++i)
    CHECK_THAT(eig[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("hermitian_eigenvalues on closed-form cases") {
  const auto id = hermitian_eigenvalues(DenseMatrix::identity(4));
  for (double v : id) CHECK_THAT(v, Catch::Matchers::WithinAbs(1.0, 1e-14));

  DenseMatrix pauli_x(2);
  pauli_x(0, 1) = 1.0;
  pauli_x(1, 0) = 1.0;
  const auto xe = hermitian_eigenvalues(pauli_x);
  CHECK_THAT(xe[0], Catch::Matchers::WithinAbs(-1.0, 1e-14));
  CHECK_THAT(xe[1], Catch::Matchers::WithinAbs(1.0, 1e-14));

  DenseMatrix nonherm(2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(nonherm), input_error);
}

TEST_CASE("hermitian_eigenvalues matches the 2x2 quadratic roots") {
  Xoshiro256pp rng(SeedSpec{34, 0});
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = testutil::random_hermitian(2, rng);
    const double tr = (a(0, 0) + a(1, 1)).real();
    const double det = (a(0, 0) * a(1, 1)).real() - std::norm(a(0, 1));
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    const auto eig = hermitian_eigenvalues(a);
    CHECK_THAT(eig[0], Catch::Matchers::WithinAbs(tr / 2.0 - disc, 1e-10));
    CHECK_THAT(eig[1], Catch::Matchers::WithinAbs(tr / 2.0 + disc, 1e-10));
  }
}

TEST_CASE("eigenvalue sum matches the trace") {
  Xoshiro256pp rng(SeedSpec{35, 0});
  for (std::size_t dim : {3u, 5u, 8u}) {
    const auto a = testutil::random_hermitian(dim, rng);
    const auto eig = hermitian_eigenvalues(a);
    double sum = 0.0;
    for (double v : eig) sum += v;
    CHECK_THAT(sum, Catch::Matchers::WithinAbs(a.trace().real(), 1e-9));
  }
}

TEST_CASE("validate_density verdicts") {
  const auto ok = validate_density(DensityMatrix(diag2(0.5, 0.5)));
  CHECK(ok.ok);
  CHECK(ok.min_eigenvalue >= 0.0);

  const auto bad_trace = validate_density(DensityMatrix(diag2(0.6, 0.6)));
  CHECK_FALSE(bad_trace.ok);
  CHECK_THAT(bad_trace.trace_defect, Catch::Matchers::WithinAbs(0.2, 1e-12));

  DenseMatrix indefinite(2);
  indefinite(0, 0) = 0.5;
  indefinite(0, 1) = 0.7;
  indefinite(1, 0) = 0.7;
  indefinite(1, 1) = 0.5;
  const auto report = validate_density(DensityMatrix(std::move(indefinite)));
  CHECK_FALSE(report.ok);
  CHECK_THAT(report.min_eigenvalue, Catch::Matchers::WithinAbs(-0.2, 1e-12));
}
