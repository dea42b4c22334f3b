#pragma once

// JSON forms of matrices, component reports, catalog entries and family
// instances. Keys keep insertion order so output is stable.

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "altknot/conway.hpp"
#include "altknot/families.hpp"
#include "altknot/knot_matrix.hpp"
#include "altknot/polynomial.hpp"

namespace altknot {

using Json = nlohmann::ordered_json;

inline std::string toDecimal(const Integer& n) {
  std::ostringstream out;
  out << n;
  return out.str();
}

/// Small integers as numbers, huge ones as decimal strings.
inline Json integerJson(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return Json(n.convert_to<long long>());
  return Json(toDecimal(n));
}

inline Json matrixJson(const KnotMatrix& m) {
  return Json{{"v", m.size()}, {"entries", m.rows()}};
}

inline KnotMatrix matrixFromJson(const Json& j) {
  const auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
  if (j.contains("v") && j.at("v").get<std::size_t>() != rows.size())
    throw MalformedMatrix("matrix JSON: v does not match the number of rows");
  return KnotMatrix::fromRows(rows);
}

/// Cycles as (row, col, copy) triples, rows and columns 1-based.
inline Json componentsJson(const ComponentPartition& p) {
  Json cycles = Json::array();
  for (const auto& cycle : p.cycles) {
    Json c = Json::array();
    for (const Edge& e : cycle) c.push_back(Json::array({e.row + 1, e.col + 1, e.copy}));
    cycles.push_back(std::move(c));
  }
  return Json{{"components", p.count()}, {"cycles", std::move(cycles)}};
}

inline Json decompositionJson(const PermutationDecomposition& d) {
  return Json{{"P", d.matrixP().rows()}, {"Q", d.matrixQ().rows()}};
}

inline Json catalogEntryJson(const CatalogEntry& e) {
  Json terms = Json::array();
  for (const auto& t : e.function.terms()) terms.push_back(t);
  Json j{{"ribbons", e.ribbons},
         {"terms", std::move(terms)},
         {"representative", e.representative},
         {"rational", e.rational}};
  j["index"] = e.index;
  j["printed"] = e.printed;
  j["realization"] = e.rational ? Json("rational") : (e.realization ? Json(*e.realization) : Json(nullptr));
  return j;
}

inline Json catalogJson(const std::vector<CatalogEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(catalogEntryJson(e));
  return out;
}

inline Json familyInstanceJson(const FamilyId& id, const IntPolynomial& p, const Integer& conway) {
  return Json{{"family", std::string(familyNameString(id.name))},
              {"params", id.params},
              {"polynomial", p.toString()},
              {"conway", integerJson(conway)},
              {"crossings", id.crossings()}};
}

}  // namespace altknot
