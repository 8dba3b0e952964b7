#pragma once

// JSON state files: {"n_qubits": n, "kind": "pure"|"density", "data": ...}.
// Pure data is a list of 2^n [re, im] pairs; density data is a 2^n x 2^n
// matrix of pairs. Numbers are written with 17 significant digits so a
// write/read round trip is lossless.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohbound/errors.hpp"
#include "cohbound/qmatrix.hpp"

namespace cohbound {

namespace detail {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt_pair(const Complex& z) {
  return "[" + fmt_double(z.real()) + ", " + fmt_double(z.imag()) + "]";
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw input_error("write failed: " + path);
}

}  // namespace detail

inline std::string to_state_json(const StateVector& psi) {
  std::ostringstream out;
  out << "{\n  \"n_qubits\": " << psi.n_qubits() << ",\n"
      << "  \"kind\": \"pure\",\n  \"data\": [\n";
  const auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out << "    " << detail::fmt_pair(amps[i])
        << (i + 1 < amps.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

inline std::string to_state_json(const DensityMatrix& rho) {
  std::ostringstream out;
  out << "{\n  \"n_qubits\": " << rho.n_qubits() << ",\n"
      << "  \"kind\": \"density\",\n  \"data\": [\n";
  const std::size_t dim = rho.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < dim; ++j) {
      out << detail::fmt_pair(rho.matrix()(i, j)) << (j + 1 < dim ? ", " : "");
    }
    out << "]" << (i + 1 < dim ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

inline void write_state_file(const std::string& path, const StateVector& psi) {
  detail::write_text(path, to_state_json(psi));
}

inline void write_state_file(const std::string& path,
                             const DensityMatrix& rho) {
  detail::write_text(path, to_state_json(rho));
}

// A parsed state file: exactly one of pure/density is set.
struct LoadedState {
  std::optional<StateVector> pure;
  std::optional<DensityMatrix> density;

  bool is_pure() const { return pure.has_value(); }
  int n_qubits() const {
    return is_pure() ? pure->n_qubits() : density->n_qubits();
  }
  DensityMatrix to_density() const {
    return is_pure() ? pure_to_density(*pure) : *density;
  }
};

namespace detail {

inline Complex parse_pair(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw input_error(std::string("state file: ") + where +
                      " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

inline LoadedState load_state_file(const std::string& path,
                                   int max_qubits = kMaxQubits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open state file: " + path);

  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("state file " + path + ": " + e.what());
  }

  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("kind") ||
      !j.contains("data"))
    throw input_error("state file: need n_qubits, kind and data fields");
  if (!j["n_qubits"].is_number_integer())
    throw input_error("state file: n_qubits must be an integer");
  const int n = j["n_qubits"].get<int>();
  if (n < 1 || n > max_qubits)
    throw input_error("state file: n_qubits must be in [1, " +
                      std::to_string(max_qubits) + "]");
  const std::size_t dim = std::size_t{1} << n;
  const std::string kind = j["kind"].get<std::string>();
  const auto& data = j["data"];

  if (kind == "pure") {
    if (!data.is_array() || data.size() != dim)
      throw input_error("state file: pure data must hold 2^n pairs");
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i)
      amps[i] = detail::parse_pair(data[i], "amplitude");
    return LoadedState{StateVector(n, std::move(amps)), std::nullopt};
  }

  if (kind == "density") {
    if (!data.is_array() || data.size() != dim)
      throw input_error("state file: density data must hold 2^n rows");
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& row = data[i];
      if (!row.is_array() || row.size() != dim)
        throw input_error("state file: density rows must hold 2^n pairs");
      for (std::size_t jc = 0; jc < dim; ++jc)
        m(i, jc) = detail::parse_pair(row[jc], "matrix entry");
    }
    DensityMatrix rho(std::move(m));
    const ValidationReport report = validate_density(rho);
    if (!report.ok)
      throw input_error(
          "state file: not a valid density matrix (hermiticity defect " +
          detail::fmt_double(report.hermiticity_defect) + ", trace defect " +
          detail::fmt_double(report.trace_defect) + ", min eigenvalue " +
          detail::fmt_double(report.min_eigenvalue) + ")");
    return LoadedState{std::nullopt, std::move(rho)};
  }

  throw input_error("state file: kind must be \"pure\" or \"density\"");
}

}  // namespace cohbound
