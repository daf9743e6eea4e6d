#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "bcomb/graphs.hpp"
#include "bcomb/insertion.hpp"
#include "bcomb/little.hpp"
#include "bcomb/permutations.hpp"
#include "bcomb/symmetric.hpp"
#include "bcomb/tableaux.hpp"

namespace bcomb {

// ADL hooks for nlohmann::json, so `nlohmann::json j = value;` works for the
// types below. The layouts are part of the CLI output contract and must stay
// stable:
//
//   BumpTrace    {"start":{"i":..,"j":..,"delta":..},
//                 "pushes":[[pos,delta],..],"result":[..]}
//   tableau      {"shape":[..],"rows":[[..],..]}      rows bottom row first
//   InsertionPair{"p":tableau,"q":tableau}
//   polynomial   {"num_vars":m,"degree":d,"terms":{"e1,e2,..":coeff}}
//   QExpansion   {"terms":{"5,3,1":coeff}}            key "" for the empty shape
//   graph        {"scheme":..,"degree":..,"vertices":[..],"sigma":[..],
//                 "edges":{"color":[[u,v],..]}}       u,v index into vertices

void to_json(nlohmann::json& j, const BumpStart& s);
void to_json(nlohmann::json& j, const BumpTrace& t);
void to_json(nlohmann::json& j, const ShiftedTableau& t);
void to_json(nlohmann::json& j, const InsertionPair& pq);
void to_json(nlohmann::json& j, const FinitePolynomial& f);
void to_json(nlohmann::json& j, const QExpansion& g);
void to_json(nlohmann::json& j, const SignedColoredGraph& g);

// {"[-3,1,2]": multiplicity, ...} with window notation keys.
nlohmann::json expansion_json(const std::map<SignedPermutation, long long>& m);

std::string partition_key(const StrictPartition& lambda);

}  // namespace bcomb
