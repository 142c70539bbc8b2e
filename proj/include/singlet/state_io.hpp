#pragma once

// JSON state files:
//   { "basis": "computational" | "coupled",
//     "matrix": [[[re, im], [re, im], [re, im], [re, im]], ... 4 rows] }
// The loader validates the operator and converts it to the computational basis.

#include <fstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "singlet/error.hpp"
#include "singlet/qstate.hpp"

namespace singlet {

enum class Basis { Computational, Coupled };

inline std::string_view to_string(Basis b) { return b == Basis::Computational ? "computational" : "coupled"; }

inline Basis parse_basis(std::string_view name) {
  if (name == "computational") return Basis::Computational;
  if (name == "coupled") return Basis::Coupled;
  throw Error(ErrorKind::Parse, "unknown basis '" + std::string(name) + "'");
}

inline ComplexMatrix4 matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::Parse, "\"matrix\" must be an array of 4 rows");
  ComplexMatrix4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 4) throw Error(ErrorKind::Parse, "each matrix row must hold 4 entries");
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw Error(ErrorKind::Parse, "matrix entries must be [re, im] number pairs");
      m(r, c) = complex{z[0].get<double>(), z[1].get<double>()};
    }
  }
  return m;
}

inline nlohmann::json matrix_to_json(const ComplexMatrix4& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

inline DensityOperator state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "state must be a JSON object");
  if (!j.contains("basis") || !j["basis"].is_string()) throw Error(ErrorKind::Parse, "missing string field \"basis\"");
  if (!j.contains("matrix")) throw Error(ErrorKind::Parse, "missing field \"matrix\"");
  const Basis basis = parse_basis(j["basis"].get<std::string>());
  const ComplexMatrix4 m = matrix_from_json(j["matrix"]);
  return validate(basis == Basis::Computational ? m : from_coupled_basis(m));
}

inline nlohmann::json state_to_json(const DensityOperator& rho, Basis basis = Basis::Computational) {
  const ComplexMatrix4 m = basis == Basis::Computational ? rho.matrix() : to_coupled_basis(rho);
  return {{"basis", std::string(to_string(basis))}, {"matrix", matrix_to_json(m)}};
}

inline DensityOperator load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open state file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return state_from_json(j);
}

inline void save_state(const std::string& path, const DensityOperator& rho, Basis basis = Basis::Computational) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write state file " + path);
  out << state_to_json(rho, basis).dump(2) << '\n';
}

}  // namespace singlet
