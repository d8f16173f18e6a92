#pragma once

// JSON descriptors used by the command-line front end.
//
//   set:  {"type":"interval","a":..,"b":..}
//         {"type":"circle","center":[re,im],"radius":..}
//         {"type":"preimage","numerator":[c0..cn],"pole_order":j,"base":{...}}
//   map:  {"d":d,"h1":[..],"h2":[..],"a1":..,"a2":..}
//   spec: {"numerator":[..],"pole_order":j,"base":"circle"|"interval4","center":c}
//
// Integer coefficients may be JSON integers or decimal strings.

#include <string>

#include "json.hpp"

#include "equicap/experiments.hpp"
#include "equicap/homspace.hpp"
#include "equicap/planar.hpp"

namespace equicap {

using json = nlohmann::json;

PlanarSet planar_set_from_json(const json& j);
json to_json(const PlanarSet& K);

HomMap hommap_from_json(const json& j);
json to_json(const HomMap& F);

UnitSequenceSpec unit_spec_from_json(const json& j);

IntPoly intpoly_from_json(const json& j);
BigInt bigint_from_json(const json& j);
json to_json(const BigInt& x);

}  // namespace equicap
