#pragma once

// JSON records for orbits and bound results.
//
// Orbit:       {label, rep_name, initial_vector: [x,y,z], stabilizer_order,
//               vertices: [[x,y,z], ...]}
// BoundResult: {alice, bob, n_a, n_b, classical_bound, quantum_value, ratio,
//               alice_strategy: "+-+...", bob_strategy: "..."}
//
// Orbit coordinates are written as the shortest decimal that round-trips
// the double exactly (at most 17 significant digits). Bound values are
// rounded to 10 significant digits first.

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <string>

#include "json.hpp"
#include "orbit_bell/bell_bounds.hpp"
#include "orbit_bell/errors.hpp"
#include "orbit_bell/orbits.hpp"

namespace orbit_bell {

using Json = nlohmann::ordered_json;

/// x rounded to `digits` significant decimal digits.
inline double round_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

inline Json to_json(Vec3 v) { return Json::array({v.x, v.y, v.z}); }

inline Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::Parse, "expected [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline Json to_json(const Orbit& o) {
  Json vertices = Json::array();
  for (const auto& v : o.vertices) vertices.push_back(to_json(v));
  return Json{{"label", o.label},
              {"rep_name", o.rep_name},
              {"initial_vector", to_json(o.initial_vector)},
              {"stabilizer_order", o.stabilizer_order},
              {"vertices", std::move(vertices)}};
}

/// Parses an orbit record and checks the vertex invariants (unit norm,
/// pairwise distinct). Closure under a group is not checked here.
inline Orbit orbit_from_json(const Json& j) {
  try {
    Orbit o;
    o.label = j.at("label").get<std::string>();
    o.rep_name = j.at("rep_name").get<std::string>();
    o.initial_vector = vec3_from_json(j.at("initial_vector"));
    o.stabilizer_order = j.at("stabilizer_order").get<std::size_t>();
    for (const auto& v : j.at("vertices")) {
      const Vec3 u = vec3_from_json(v);
      if (!is_unit(u)) throw Error(ErrorKind::NonUnitInitialVector, o.label + ": non-unit vertex");
      if (find_vertex(o.vertices, u)) throw Error(ErrorKind::Parse, o.label + ": duplicate vertex");
      o.vertices.push_back(u);
    }
    if (o.vertices.empty()) throw Error(ErrorKind::Parse, o.label + ": no vertices");
    return o;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline Orbit read_orbit(std::istream& in) {
  try {
    return orbit_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline Json to_json(const BoundResult& r) {
  return Json{{"alice", r.alice_label},
              {"bob", r.bob_label},
              {"n_a", r.n_a},
              {"n_b", r.n_b},
              {"classical_bound", round_significant(r.classical_bound, 10)},
              {"quantum_value", round_significant(r.quantum_value, 10)},
              {"ratio", round_significant(r.ratio, 10)},
              {"alice_strategy", r.alice_strategy.to_string()},
              {"bob_strategy", r.bob_strategy.to_string()}};
}

}  // namespace orbit_bell
