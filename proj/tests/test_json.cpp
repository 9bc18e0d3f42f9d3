#include <catch2/catch_amalgamated.hpp>

#include "relcalc/json_io.hpp"
#include "relcalc/random.hpp"

using namespace relcalc;

TEST_CASE("wiring JSON uses boundary labels", "[json]") {
  const WMor id1 = w_identity(1);
  CHECK(to_json(id1).dump() == R"({"m":1,"n":1,"blocks":[["i0","o0"]]})");
  CHECK(to_json(WMor::zero(ZeroApex::point)).dump() == R"({"m":0,"n":0,"apex":"point"})");
  CHECK(wmor_from_json(Json::parse(R"({"m":1,"n":2,"blocks":[["i0","o0","o1"]]})")) ==
        w_generator(Gen::delta));
  // Raw boundary indices are accepted too.
  CHECK(wmor_from_json(Json::parse(R"({"m":1,"n":1,"blocks":[[0],[1]]})")) ==
        WMor::from_labels(1, 1, {0, 1}));
}

TEST_CASE("malformed wiring JSON is a type error", "[json]") {
  auto bad = [](const char* text) { return wmor_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"m":1,"n":1,"blocks":[["i0"]]})"), TypeError);
  CHECK_THROWS_AS(bad(R"({"m":1,"n":1,"blocks":[["i0","o1"]]})"), TypeError);
  CHECK_THROWS_AS(bad(R"({"m":1,"n":1,"blocks":[["x0","o0"]]})"), TypeError);
  CHECK_THROWS_AS(bad(R"({"m":1,"blocks":[]})"), TypeError);
  CHECK_THROWS_AS(bad(R"({"m":0,"n":0})"), TypeError);
  CHECK_THROWS_AS(bad(R"({"m":0,"n":0,"apex":"many"})"), TypeError);
  CHECK_THROWS_AS(bad(R"({"m":1,"n":1,"blocks":[["i0","o0"],["o0"]]})"), TypeError);
}

TEST_CASE("relations and functions round trip", "[json][property]") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Ordinal a{uniform(rng, 0, 4)}, b{uniform(rng, 0, 4)};
    const Relation r = random_relation(rng, a, b);
    REQUIRE(relation_from_json(Json::parse(to_json(r).dump())) == r);
    if (b.size > 0 || a.size == 0) {
      const FinFn f = random_fn(rng, a, b);
      REQUIRE(finfn_from_json(Json::parse(to_json(f).dump())) == f);
    }
  }
  CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"src":1,"dst":1,"pairs":[[0,1]]})")),
                  TypeError);
  CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"src":1,"dst":1,"pairs":[[0]]})")),
                  TypeError);
}

TEST_CASE("wirings and terms round trip", "[json][property]") {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const WMor w = random_wmor(rng, uniform(rng, 0, 4), uniform(rng, 0, 4));
    REQUIRE(wmor_from_json(Json::parse(to_json(w).dump())) == w);
    const WiringTerm t = random_term(rng, 6, 4);
    REQUIRE(term_from_json(Json::parse(to_json(t).dump())) == t);
  }
  CHECK_THROWS_AS(term_from_json(Json::parse(R"({"op":"gen","name":"q"})")), TypeError);
  CHECK_THROWS_AS(term_from_json(Json::parse(R"({"op":"seq","lhs":{"op":"gen","name":"e"},"rhs":{"op":"gen","name":"d"}})")),
                  TypeError);
}
