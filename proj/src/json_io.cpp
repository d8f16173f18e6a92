#include "equicap/json_io.hpp"

#include <limits>

#include "equicap/errors.hpp"

namespace equicap {
namespace {

double num(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) throw MathDomainError(std::string("missing number '") + key + "'");
  return j.at(key).get<double>();
}

BaseSet base_from_json(const json& j) {
  const PlanarSet K = planar_set_from_json(j);
  if (const auto* I = std::get_if<Interval>(&K)) return *I;
  if (const auto* C = std::get_if<Circle>(&K)) return *C;
  throw MathDomainError("preimage base must be an interval or a circle");
}

}  // namespace

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw MathDomainError("bad integer string '" + j.get<std::string>() + "'");
    }
  }
  throw MathDomainError("expected an integer (number or decimal string)");
}

json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

IntPoly intpoly_from_json(const json& j) {
  if (!j.is_array()) throw MathDomainError("polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c));
}

PlanarSet planar_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw MathDomainError("set descriptor needs a 'type'");
  const std::string t = j.at("type").get<std::string>();
  if (t == "interval") return make_interval(num(j, "a"), num(j, "b"));
  if (t == "circle") {
    const json& c = j.at("center");
    cplx center = c.is_array() ? cplx(c.at(0).get<double>(), c.at(1).get<double>()) : cplx(c.get<double>(), 0.0);
    return make_circle(center, num(j, "radius"));
  }
  if (t == "preimage") {
    auto map = make_map(intpoly_from_json(j.at("numerator")), j.at("pole_order").get<int>());
    return make_preimage(std::move(map), base_from_json(j.at("base")));
  }
  throw MathDomainError("unknown set type '" + t + "'");
}

json to_json(const PlanarSet& K) {
  if (const auto* I = std::get_if<Interval>(&K)) return {{"type", "interval"}, {"a", I->a}, {"b", I->b}};
  if (const auto* C = std::get_if<Circle>(&K))
    return {{"type", "circle"}, {"center", {C->center.real(), C->center.imag()}}, {"radius", C->radius}};
  const auto& P = std::get<RationalPreimage>(K);
  json num = json::array();
  for (const BigInt& c : P.map.numerator.coeffs()) num.push_back(to_json(c));
  return {{"type", "preimage"}, {"numerator", num}, {"pole_order", P.map.pole_order}, {"base", to_json(as_planar(P.base))}};
}

HomMap hommap_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  std::vector<BigInt> h1, h2;
  for (const auto& x : j.at("h1")) h1.push_back(bigint_from_json(x));
  for (const auto& x : j.at("h2")) h2.push_back(bigint_from_json(x));
  return make_hommap(d, std::move(h1), std::move(h2), bigint_from_json(j.value("a1", json(0))),
                     bigint_from_json(j.value("a2", json(0))));
}

json to_json(const HomMap& F) {
  json h1 = json::array(), h2 = json::array();
  for (const BigInt& c : F.h1) h1.push_back(to_json(c));
  for (const BigInt& c : F.h2) h2.push_back(to_json(c));
  return {{"d", F.d}, {"h1", h1}, {"h2", h2}, {"a1", to_json(F.a1)}, {"a2", to_json(F.a2)}};
}

UnitSequenceSpec unit_spec_from_json(const json& j) {
  UnitSequenceSpec s;
  s.map = make_map(intpoly_from_json(j.at("numerator")), j.at("pole_order").get<int>());
  const std::string b = j.value("base", std::string("circle"));
  if (b == "circle")
    s.base = BaseKind::circle;
  else if (b == "interval4")
    s.base = BaseKind::interval4;
  else
    throw MathDomainError("unknown base '" + b + "' (circle or interval4)");
  s.center = j.value("center", 0LL);
  s.m = j.value("m", 1);
  return s;
}

}  // namespace equicap
