// Copyright 2026 The swapsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encodings for matrices, circuits and hardware profiles.
//
//   matrix:  {"dim": 4, "rows": [[[re, im] x4] x4]}   or   {"gate": "cnot"}
//   circuit: {"global_phase": x, "ops": [
//              {"kind": "local", "qubit": 1, "label": "u1", "matrix": [[[re,im],..],..]},
//              {"kind": "swap_pow", "alpha": a},
//              {"kind": "cnot", "control": 1}]}
//   profile: {"name": s, "rabi_frequency_hz": f, "pi_rotation_time_s": t,
//             "swap_full_time_s": t, "local_rotation_policy": "fixed_pi"|"proportional"}

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "swapsynth/circuit.hpp"
#include "swapsynth/costmodel.hpp"
#include "swapsynth/errors.hpp"
#include "swapsynth/gates.hpp"
#include "swapsynth/linalg.hpp"

namespace swapsynth {

using Json = nlohmann::ordered_json;

template <std::size_t N>
Json matrix_rows_to_json(const Matrix<N>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < N; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

template <std::size_t N>
Matrix<N> matrix_rows_from_json(const Json& rows) {
  if (!rows.is_array() || rows.size() != N)
    throw ParseError("matrix must have " + std::to_string(N) + " rows");
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != N)
      throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(N) +
                       " entries");
    for (std::size_t c = 0; c < N; ++c) {
      const Json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("matrix entries must be [re, im] number pairs");
      m(r, c) = {e[0].get<double>(), e[1].get<double>()};
    }
  }
  if (!is_finite(m)) throw ParseError("matrix has non-finite entries");
  return m;
}

inline Json matrix_to_json(const Matrix4& m) {
  Json j;
  j["dim"] = 4;
  j["rows"] = matrix_rows_to_json(m);
  return j;
}

// Parses a matrix document and enforces unitarity.
inline Matrix4 matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix document must be a JSON object");
  Matrix4 m;
  if (j.contains("gate")) {
    if (!j["gate"].is_string()) throw ParseError("\"gate\" must be a string");
    m = named_gate4(j["gate"].get<std::string>());
  } else {
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() != 4)
      throw ParseError("matrix document needs \"dim\": 4");
    if (!j.contains("rows")) throw ParseError("matrix document needs \"rows\"");
    m = matrix_rows_from_json<4>(j["rows"]);
  }
  require_unitary(m, "matrix file");
  return m;
}

inline Json op_to_json(const GateOp& op) {
  Json j;
  if (const auto* l = std::get_if<LocalOp>(&op)) {
    j["kind"] = "local";
    j["qubit"] = l->qubit;
    j["label"] = l->label;
    j["matrix"] = matrix_rows_to_json(l->matrix);
  } else if (const auto* s = std::get_if<SwapPowOp>(&op)) {
    j["kind"] = "swap_pow";
    j["alpha"] = s->alpha;
  } else {
    j["kind"] = "cnot";
    j["control"] = std::get<CnotOp>(op).control;
  }
  return j;
}

inline GateOp op_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("op needs a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  auto int_field = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ParseError(kind + " op needs integer \"" + key + "\"");
    return j[key].get<int>();
  };
  if (kind == "local") {
    LocalOp l;
    l.qubit = int_field("qubit");
    if (j.contains("label")) {
      if (!j["label"].is_string()) throw ParseError("local op \"label\" must be a string");
      l.label = j["label"].get<std::string>();
    }
    if (!j.contains("matrix")) throw ParseError("local op needs \"matrix\"");
    l.matrix = matrix_rows_from_json<2>(j["matrix"]);
    return l;
  }
  if (kind == "swap_pow") {
    if (!j.contains("alpha") || !j["alpha"].is_number())
      throw ParseError("swap_pow op needs numeric \"alpha\"");
    return SwapPowOp{j["alpha"].get<double>()};
  }
  if (kind == "cnot") return CnotOp{int_field("control")};
  throw ParseError("unknown op kind '" + kind + "'");
}

inline Json circuit_to_json(const Circuit& c) {
  Json j;
  j["global_phase"] = c.global_phase;
  Json ops = Json::array();
  for (const auto& op : c.ops) ops.push_back(op_to_json(op));
  j["ops"] = std::move(ops);
  return j;
}

inline Circuit circuit_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("circuit document must be a JSON object");
  if (!j.contains("global_phase") || !j["global_phase"].is_number())
    throw ParseError("circuit needs numeric \"global_phase\"");
  if (!j.contains("ops") || !j["ops"].is_array()) throw ParseError("circuit needs an \"ops\" array");
  Circuit c;
  c.global_phase = j["global_phase"].get<double>();
  for (const auto& op : j["ops"]) c.ops.push_back(op_from_json(op));
  validate_circuit(c);
  return c;
}

inline const char* policy_name(LocalRotationPolicy p) {
  return p == LocalRotationPolicy::fixed_pi ? "fixed_pi" : "proportional";
}

inline Json profile_to_json(const HardwareProfile& p) {
  Json j;
  j["name"] = p.name;
  j["rabi_frequency_hz"] = p.rabi_frequency_hz;
  j["pi_rotation_time_s"] = p.pi_rotation_time_s;
  j["swap_full_time_s"] = p.swap_full_time_s;
  j["local_rotation_policy"] = policy_name(p.local_rotation_policy);
  return j;
}

inline HardwareProfile profile_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("profile document must be a JSON object");
  auto number = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number())
      throw ParseError(std::string("profile needs numeric \"") + key + "\"");
    return j[key].get<double>();
  };
  HardwareProfile p;
  if (!j.contains("name") || !j["name"].is_string()) throw ParseError("profile needs \"name\"");
  p.name = j["name"].get<std::string>();
  p.rabi_frequency_hz = number("rabi_frequency_hz");
  p.pi_rotation_time_s = number("pi_rotation_time_s");
  p.swap_full_time_s = number("swap_full_time_s");
  const std::string policy =
      j.contains("local_rotation_policy") && j["local_rotation_policy"].is_string()
          ? j["local_rotation_policy"].get<std::string>()
          : "fixed_pi";
  if (policy == "fixed_pi") p.local_rotation_policy = LocalRotationPolicy::fixed_pi;
  else if (policy == "proportional") p.local_rotation_policy = LocalRotationPolicy::proportional;
  else throw ParseError("unknown local_rotation_policy '" + policy + "'");
  p.validate();
  return p;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("failed writing '" + path + "'");
}

}  // namespace swapsynth
