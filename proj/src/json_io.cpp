#include "bcomb/json_io.hpp"

#include <sstream>

namespace bcomb {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

nlohmann::json rows_json(const std::vector<std::vector<int>>& rows) {
  nlohmann::json shape = nlohmann::json::array();
  for (const auto& row : rows) shape.push_back(row.size());
  return nlohmann::json{{"shape", shape}, {"rows", rows}};
}

}  // namespace

void to_json(nlohmann::json& j, const BumpStart& s) {
  j = nlohmann::json{{"i", s.i}, {"j", s.j}, {"delta", s.delta}};
}

void to_json(nlohmann::json& j, const BumpTrace& t) {
  j = nlohmann::json{
      {"start", t.start}, {"pushes", t.pushes}, {"result", t.result}};
}

void to_json(nlohmann::json& j, const ShiftedTableau& t) {
  j = nlohmann::json{{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

void to_json(nlohmann::json& j, const InsertionPair& pq) {
  j = nlohmann::json{{"p", rows_json(pq.p)}, {"q", rows_json(pq.q)}};
}

void to_json(nlohmann::json& j, const FinitePolynomial& f) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [exponents, coeff] : f.coefficients)
    terms[join_ints(exponents)] = coeff;
  j = nlohmann::json{
      {"num_vars", f.num_vars}, {"degree", f.degree}, {"terms", terms}};
}

void to_json(nlohmann::json& j, const QExpansion& g) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [mu, coeff] : g.terms) terms[partition_key(mu)] = coeff;
  j = nlohmann::json{{"terms", terms}};
}

void to_json(nlohmann::json& j, const SignedColoredGraph& g) {
  nlohmann::json edges = nlohmann::json::object();
  for (const auto& [color, pairs] : g.edges) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [u, v] : pairs) list.push_back({u, v});
    edges[std::to_string(color)] = list;
  }
  j = nlohmann::json{
      {"scheme", g.scheme == SignatureScheme::peak ? "peak" : "ascent"},
      {"degree", g.degree},
      {"vertices", g.vertices},
      {"sigma", g.sigma},
      {"edges", edges}};
}

nlohmann::json expansion_json(const std::map<SignedPermutation, long long>& m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [w, mult] : m) out[format_signed_permutation(w)] = mult;
  return out;
}

std::string partition_key(const StrictPartition& lambda) {
  return join_ints(lambda.parts());
}

}  // namespace bcomb
