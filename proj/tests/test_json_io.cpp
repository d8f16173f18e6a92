#include "doctest.h"
#include "equicap/errors.hpp"
#include "equicap/json_io.hpp"

using namespace equicap;

TEST_SUITE("json_io") {

TEST_CASE("set descriptors round trip") {
  for (const char* s : {R"({"type":"interval","a":0.5,"b":2})", R"({"type":"circle","center":[1,2],"radius":0.5})",
                        R"({"type":"preimage","numerator":[-1,1,1],"pole_order":1,"base":{"type":"circle","center":[0,0],"radius":1}})"}) {
    const PlanarSet K = planar_set_from_json(json::parse(s));
    CHECK(to_json(planar_set_from_json(to_json(K))) == to_json(K));
  }
  CHECK_THROWS_AS(planar_set_from_json(json::parse(R"({"type":"square"})")), MathDomainError);
  CHECK_THROWS_AS(planar_set_from_json(json::parse(R"({"type":"interval","a":2,"b":1})")), MathDomainError);
}

TEST_CASE("maps and big integers") {
  const HomMap F = hommap_from_json(json::parse(R"({"d":2,"h1":[-1,0,1],"h2":[0,"1",0],"a1":0,"a2":-1})"));
  CHECK(res_hommap(F) == -1);
  CHECK(hommap_from_json(to_json(F)).h2 == F.h2);
  const BigInt big("123456789012345678901234567890");
  CHECK(bigint_from_json(to_json(big)) == big);
  CHECK(to_json(BigInt(5)).is_number_integer());
  CHECK_THROWS_AS(bigint_from_json(json::parse(R"("12x")")), MathDomainError);
  CHECK_THROWS_AS(hommap_from_json(json::parse(R"({"d":2,"h1":[1,0],"h2":[0,1,0],"a1":0,"a2":-1})")), MathDomainError);
}

TEST_CASE("unit spec") {
  const auto s = unit_spec_from_json(json::parse(R"({"numerator":[-1,1,1],"pole_order":1,"base":"interval4","center":1})"));
  CHECK(s.base == BaseKind::interval4);
  CHECK(s.center == 1);
  CHECK_THROWS_AS(unit_spec_from_json(json::parse(R"({"numerator":[-1,1,1],"pole_order":1,"base":"disk"})")),
                  MathDomainError);
}

}  // TEST_SUITE
