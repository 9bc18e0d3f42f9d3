#include <catch2/catch_amalgamated.hpp>

#include "relcalc/equiv.hpp"
#include "relcalc/random.hpp"
#include "relcalc/wlang.hpp"
#include "support/cospan_oracle.hpp"

using namespace relcalc;

namespace {

using K = WiringTerm::Kind;

WMor ev(const char* text) { return eval_term(parse_term(text)); }

Comparison cmp(const char* a, const char* b) { return compare_terms(parse_term(a), parse_term(b)); }

// Evaluation by cospans: each generator is its table cospan, seq is a
// finset pushout and par a disjoint union. Reflection happens once at the end.
oracle::Cospan eval_cospan(const WiringTerm& t) {
  if (t.kind() == K::seq) return oracle::compose(eval_cospan(t.lhs()), eval_cospan(t.rhs()));
  if (t.kind() == K::par) return oracle::tensor(eval_cospan(t.lhs()), eval_cospan(t.rhs()));
  const Ordinal one{1}, none{0};
  auto f = [](Ordinal d, std::vector<std::size_t> tab) { return FinFn(d, Ordinal{1}, std::move(tab)); };
  switch (t.kind()) {
    case K::eps: return {f(one, {0}), f(none, {})};
    case K::eta: return {f(none, {}), f(one, {0})};
    case K::delta: return {f(one, {0}), f(Ordinal{2}, {0, 0})};
    case K::mu: return {f(Ordinal{2}, {0, 0}), f(one, {0})};
    case K::swap:
      return {FinFn(Ordinal{2}, Ordinal{2}, {0, 1}), FinFn(Ordinal{2}, Ordinal{2}, {1, 0})};
    default: {
      const Ordinal k{t.id_width()};
      return {FinFn::identity(k), FinFn::identity(k)};
    }
  }
}

}  // namespace

TEST_CASE("parser: precedence, associativity and types", "[wlang]") {
  auto a = parse_term("d ; m");
  CHECK(a.kind() == K::seq);
  CHECK(a.lhs().kind() == K::delta);
  CHECK(a.rhs().kind() == K::mu);
  CHECK(a.m() == 1);
  CHECK(a.n() == 1);

  auto b = parse_term("(d * id1) ; (id1 * m)");
  CHECK(b.m() == 2);
  CHECK(b.n() == 2);

  // "*" binds tighter than ";".
  CHECK(parse_term("d * e ; m * id0") == parse_term("(d * e) ; (m * id0)"));
  // Both are left-associative.
  CHECK(parse_term("id1 ; id1 ; id1").lhs().kind() == K::seq);
  CHECK(parse_term("e * e * e").lhs().kind() == K::par);
  CHECK(parse_term("  sw;sw ") == parse_term("sw ; sw"));
  CHECK(parse_term("id 3").m() == 3);
  CHECK(parse_term("id0").n() == 0);
}

TEST_CASE("parser: errors", "[wlang]") {
  CHECK_THROWS_AS(parse_term("e ; d"), TypeError);
  CHECK_THROWS_WITH(parse_term("e ; d"), Catch::Matchers::ContainsSubstring("1->0") &&
                                              Catch::Matchers::ContainsSubstring("1->2"));
  try {
    parse_term("d ; ; m");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("(d ; m"), ParseError);
  CHECK_THROWS_AS(parse_term("d m"), ParseError);
  CHECK_THROWS_AS(parse_term("x"), ParseError);
  CHECK_THROWS_AS(parse_term("id"), ParseError);
  CHECK_THROWS_AS(parse_term("id65"), ParseError);
  CHECK_NOTHROW(parse_term("id64"));
  CHECK_THROWS_AS(parse_term("id99999999999999999999999"), ParseError);
}

TEST_CASE("evaluation examples", "[wlang]") {
  CHECK(ev("d ; m") == w_identity(1));
  CHECK(ev("n ; e") == WMor::zero(ZeroApex::point));
  CHECK(ev("id0") == WMor::zero(ZeroApex::empty));
  CHECK(ev("(d * id1) ; (id1 * m)") == WMor::from_labels(2, 2, {0, 0, 0, 0}));
  CHECK(ev("(d * id1) ; (id1 * m)") == ev("m ; d"));
  CHECK(ev("e ; n") == WMor::from_labels(1, 1, {0, 1}));
}

TEST_CASE("comparison examples", "[wlang]") {
  CHECK(cmp("d ; m", "id1") == Comparison::equal);
  CHECK(cmp("id1", "e ; n") == Comparison::strictly_less);
  CHECK(cmp("n ; e", "id0") == Comparison::strictly_less);
  CHECK(cmp("e ; n", "id1") == Comparison::strictly_greater);
  // Merging both inputs is coarser than discarding them separately.
  CHECK(cmp("m ; e", "e * e") == Comparison::strictly_less);
  CHECK(cmp("sw", "id2") == Comparison::incomparable);
  CHECK_THROWS_AS(cmp("d", "m"), TypeError);
  CHECK(std::string(to_string(Comparison::strictly_less)) == "strictly_less");
}

TEST_CASE("displayed laws compare as displayed", "[wlang]") {
  for (const WiringLaw& law : presentation_laws()) {
    INFO(law.name);
    const Comparison c = cmp(law.lhs.c_str(), law.rhs.c_str());
    if (law.inequality)
      CHECK((c == Comparison::equal || c == Comparison::strictly_less));
    else
      CHECK(c == Comparison::equal);
  }
  CHECK(presentation_laws().size() == 13);
  // Which inequalities are strict is fixed by the pictures.
  CHECK(cmp("m ; d", "id2") == Comparison::strictly_less);
  CHECK(cmp("d ; m", "id1") == Comparison::equal);
}

TEST_CASE("synthesis examples", "[wlang]") {
  const WMor del = WMor::from_blocks(1, 2, {{0, 1, 2}});
  CHECK(synthesize_term(del).to_string() == "d");
  CHECK(eval_term(synthesize_term(WMor::from_blocks(1, 1, {{0}, {1}}))) == ev("e ; n"));
  CHECK(synthesize_term(WMor::zero(ZeroApex::point)).to_string() == "(n ; e)");
  CHECK(synthesize_term(WMor::zero(ZeroApex::empty)).to_string() == "id0");
  CHECK(synthesize_term(w_identity(2)).to_string() == "id2");
}

TEST_CASE("synthesis is full up to m+n <= 5", "[wlang][property]") {
  std::size_t count = 0;
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; m + n <= 5; ++n)
      for (const WMor& w : all_wirings(m, n)) {
        const WiringTerm t = synthesize_term(w);
        REQUIRE(t.m() == m);
        REQUIRE(t.n() == n);
        REQUIRE(eval_term(t) == w);
        ++count;
      }
  // Bell numbers summed over splits, plus the extra 0 -> 0 element.
  CHECK(count == 2 + 2 * 1 + 3 * 2 + 4 * 5 + 5 * 15 + 6 * 52);
}

TEST_CASE("printing then parsing is the identity", "[wlang][property]") {
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const WiringTerm t = random_term(rng, 6, 4);
    REQUIRE(parse_term(t.to_string()) == t);
  }
}

TEST_CASE("eval is homomorphic", "[wlang][property]") {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const WiringTerm t = random_term(rng, 6, 4);
    if (t.is_atom()) continue;
    const WMor a = eval_term(t.lhs()), b = eval_term(t.rhs());
    REQUIRE(eval_term(t) == (t.kind() == K::seq ? w_compose(a, b) : w_tensor(a, b)));
  }
}

TEST_CASE("eval agrees with cospan evaluation", "[wlang][property]") {
  Rng rng(31);
  for (int i = 0; i < 10000; ++i) {
    const WiringTerm t = random_term(rng, 8, 4);
    REQUIRE(eval_term(t) == oracle::reflect(eval_cospan(t)));
  }
}

TEST_CASE("eval is sound for the relational interpretation", "[wlang][property]") {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const WiringTerm t = random_term(rng, 6, 3);
    const WMor w = eval_term(t);
    for (std::size_t c = 0; c <= 3; ++c) {
      INFO(t.to_string() << " on carrier " << c);
      REQUIRE(interpret_wiring(Ordinal{c}, w) == relational_fold(Ordinal{c}, t));
    }
  }
}
