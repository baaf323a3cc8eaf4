#include "hypercore/json_io.hpp"

#include <stdexcept>

namespace hypercore {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer");
}

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(c.str());
  return json{{"coeffs", coeffs}};
}

Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("expected {\"coeffs\": [...]}");
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

json to_json(const TruncSeries& s) {
  json coeffs = json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(c.str());
  return json{{"coeffs", coeffs}, {"order", s.order()}};
}

TruncSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("order"))
    throw std::invalid_argument("expected {\"coeffs\": [...], \"order\": N}");
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) c.push_back(rational_from_json(e));
  TruncSeries s{std::move(c)};
  if (s.order() != j["order"].get<int>())
    throw std::invalid_argument("series order does not match coefficients");
  return s;
}

json to_json(const DiffOp& t) {
  json terms = json::object();
  for (const auto& [k, q] : t.terms()) terms[std::to_string(k)] = to_json(q);
  return json{{"order", t.order()}, {"terms", terms}};
}

DiffOp diffop_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
    throw std::invalid_argument("expected {\"order\": K, \"terms\": {...}}");
  std::map<int, Poly> terms;
  for (const auto& [key, val] : j["terms"].items())
    terms.emplace(std::stoi(key), poly_from_json(val));
  return DiffOp(std::move(terms), j["order"].get<int>());
}

json to_json(const TnDecomposition& d) {
  json entries = json::object();
  for (const auto& [n, row] : d.rows()) {
    json r = json::array();
    for (const Rational& b : row) r.push_back(b.str());
    entries[std::to_string(n)] = r;
  }
  return json{{"entries", entries},
              {"op_order", d.op_order()},
              {"order", d.order()}};
}

TnDecomposition decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.contains("order") ||
      !j.contains("op_order"))
    throw std::invalid_argument(
        "expected {\"entries\": {...}, \"order\": K, \"op_order\": K}");
  std::map<int, std::vector<Rational>> rows;
  for (const auto& [key, val] : j["entries"].items()) {
    std::vector<Rational> row;
    for (const auto& e : val) row.push_back(rational_from_json(e));
    rows.emplace(std::stoi(key), std::move(row));
  }
  return TnDecomposition(std::move(rows), j["order"].get<int>(),
                         j["op_order"].get<int>());
}

json to_json(const Verdict& v) {
  json j{{"status", to_string(v.status)}};
  if (v.order >= 0) j["order"] = v.order;
  if (!v.check.empty()) j["check"] = v.check;
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.witness_poly) j["witness"] = to_json(*v.witness_poly);
  if (v.witness_index) j["witness_index"] = *v.witness_index;
  if (v.value) j["value"] = v.value->str();
  if (v.approximate) j["approximate"] = true;
  return j;
}

}  // namespace hypercore
