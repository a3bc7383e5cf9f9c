// JSON views of library values for --json output. Kept out of the library so
// it does not depend on the JSON header.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "multindex/io.hpp"
#include "multindex/laws.hpp"

namespace multindex::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.get_str(); }

/// {"3": "1/6", ...}, highest exponent first.
inline Json to_json(const Poly& p) {
  Json out = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out[std::to_string(it->first)] = it->second.get_str();
  return out;
}

inline Json to_json(const Word& w) { return w.letters(); }

inline Json to_json(const NCPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(Json::array({it->second.get_str(), to_json(it->first)}));
  return out;
}

inline Json to_json(const ForestMono& f) {
  Json out = Json::array();
  for (auto it = f.blocks().rbegin(); it != f.blocks().rend(); ++it) out.push_back(to_string(*it));
  return out;
}

inline Json to_json(const Forest& f) {
  Json out = Json::array();
  for (const auto& t : f.trees()) out.push_back(to_string(t));
  return out;
}

/// [[coef, forest], ...]
template <class Key, class Compare>
Json to_json(const LinComb<Key, Compare>& e) {
  Json out = Json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    out.push_back(Json::array({it->second.get_str(), to_json(it->first)}));
  return out;
}

/// [[coef, left, right], ...]
template <class Leg>
Json to_json(const LinComb<std::pair<Leg, Leg>>& t) {
  Json out = Json::array();
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
    out.push_back(Json::array({it->second.get_str(), to_json(it->first.first), to_json(it->first.second)}));
  return out;
}

inline Json to_json(const DSSolution& s) {
  Json out = Json::object();
  for (const auto& [a, e] : s.entries) {
    Json rows = Json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
      for (const auto& t : it->first.trees()) rows.push_back(Json::array({it->second.get_str(), to_string(t)}));
    out[to_string(a)] = rows;
  }
  return out;
}

inline Json to_json(const LawResult& r) {
  Json out = {{"law", r.name}, {"passed", r.passed}, {"cases", r.cases}};
  if (!r.passed) out["failure"] = r.failure;
  return out;
}

}  // namespace multindex::cli
