#pragma once

// JSON (de)serialization for the CLI and tests:
//   complex  {"n": 5, "facets": [[1,2],[3,4]]}
//   tuple    {"n": 5, "complexes": [<facet list>, ...]}
//   cell     {"parts": [[1],[2,4]], "rest": [3,5]}
//   spec     {"n": 5, "r": 3, "m": [1,1,1]}

#include <nlohmann/json.hpp>

#include "bier/chessboard.hpp"
#include "bier/deleted_join.hpp"
#include "bier/tuples.hpp"

namespace bier {

using json = nlohmann::json;

inline json simplex_to_json(Simplex s) { return json(s.vertices()); }

inline Simplex simplex_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("simplex: expected an array of vertices");
  Simplex s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("simplex: vertices must be integers");
    int x = v.get<int>();
    if (x < 1 || x > kMaxGroundSet) throw std::invalid_argument("simplex: vertex out of range");
    s = s.with(x);
  }
  return s;
}

inline json complex_to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (Simplex f : k.facets()) facets.push_back(simplex_to_json(f));
  return json{{"n", k.n()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw std::invalid_argument("complex: expected {\"n\":..., \"facets\":[...]}");
  int n = j.at("n").get<int>();
  std::vector<Simplex> facets;
  for (const auto& f : j.at("facets")) facets.push_back(simplex_from_json(f));
  return SimplicialComplex::from_facets(n, facets);
}

inline json tuple_to_json(const ComplexTuple& t) {
  json ks = json::array();
  for (int i = 0; i < t.r(); ++i) {
    json facets = json::array();
    for (Simplex f : t[i].facets()) facets.push_back(simplex_to_json(f));
    ks.push_back(facets);
  }
  return json{{"n", t.n()}, {"complexes", ks}};
}

// A tuple-shaped document, without requiring r >= 2 members (the residual
// command takes r-1 of them).
inline std::pair<int, std::vector<SimplicialComplex>> members_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("complexes"))
    throw std::invalid_argument("tuple: expected {\"n\":..., \"complexes\":[[...],...]}");
  int n = j.at("n").get<int>();
  std::vector<SimplicialComplex> ks;
  for (const auto& c : j.at("complexes")) {
    std::vector<Simplex> facets;
    for (const auto& f : c) facets.push_back(simplex_from_json(f));
    ks.push_back(SimplicialComplex::from_facets(n, facets));
  }
  return {n, ks};
}

inline ComplexTuple tuple_from_json(const json& j) {
  auto [n, ks] = members_from_json(j);
  return ComplexTuple(n, ks);
}

inline json cell_to_json(const PartitionSimplex& c) {
  json parts = json::array();
  for (Simplex p : c.parts) parts.push_back(simplex_to_json(p));
  return json{{"parts", parts}, {"rest", simplex_to_json(c.rest)}};
}

inline PartitionSimplex cell_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parts") || !j.contains("rest"))
    throw std::invalid_argument("cell: expected {\"parts\":[[...],...], \"rest\":[...]}");
  PartitionSimplex c;
  for (const auto& p : j.at("parts")) c.parts.push_back(simplex_from_json(p));
  c.rest = simplex_from_json(j.at("rest"));
  return c;
}

inline ChessboardSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("m"))
    throw std::invalid_argument("spec: expected {\"n\":..., \"r\":..., \"m\":[...]}");
  ChessboardSpec s;
  s.n = j.at("n").get<int>();
  s.r = j.at("r").get<int>();
  s.m = j.at("m").get<std::vector<int>>();
  s.validate();
  return s;
}

}  // namespace bier
