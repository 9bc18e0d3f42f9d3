#include <catch2/catch_amalgamated.hpp>

#include "relcalc/equiv.hpp"
#include "relcalc/ladj.hpp"

using namespace relcalc;

namespace {

FinFn fn(std::size_t cod, std::vector<std::size_t> t) { return FinFn::from_table(cod, std::move(t)); }

LAdjMor G(std::size_t cod, std::vector<std::size_t> t) { return LAdjMor::graph_of(fn(cod, std::move(t))); }

Relation R(std::size_t s, std::size_t d, std::vector<Pair> p) { return Relation(s, d, std::move(p)); }

std::string first_failure(const SuiteReport& r) {
  if (r.failures.empty()) return "";
  const auto& f = r.failures.front();
  return f.check + ": " + f.input + " | " + f.lhs + " | " + f.rhs;
}

}  // namespace

TEST_CASE("only left adjoints are accepted", "[ladj]") {
  CHECK_THROWS_AS(LAdjMor(R(1, 2, {{0, 0}, {0, 1}})), DomainError);
  CHECK_THROWS_AS(LAdjMor(R(1, 1, {})), DomainError);
  CHECK(G(2, {1, 0}).function() == fn(2, {1, 0}));
  CHECK(G(2, {1, 0}).adjoint() == R(2, 2, {{0, 1}, {1, 0}}));
}

TEST_CASE("products come from the counit", "[ladj]") {
  auto p = ladj_product(Ordinal{2}, Ordinal{3});
  CHECK(p.obj == Ordinal{6});
  CHECK(p.proj1 == LAdjMor::graph_of(product(Ordinal{2}, Ordinal{3}).proj1));
  CHECK(p.proj2 == LAdjMor::graph_of(product(Ordinal{2}, Ordinal{3}).proj2));

  auto q = ladj_product(Ordinal{1}, Ordinal{1});
  CHECK(q.proj1 == LAdjMor::identity(Ordinal{1}));
  CHECK(q.proj2 == LAdjMor::identity(Ordinal{1}));

  CHECK(ladj_diagonal(Ordinal{2}).rel() == R(2, 4, {{0, 0}, {1, 3}}));
  CHECK(ladj_terminal(Ordinal{3}) == G(1, {0, 0, 0}));
}

TEST_CASE("pairing matches the finset pairing", "[ladj][property]") {
  for (std::size_t s = 0; s <= 2; ++s)
    for (std::size_t a = 1; a <= 3; ++a)
      for (std::size_t b = 1; b <= 2; ++b)
        for (const auto& f : all_functions(Ordinal{s}, Ordinal{a}))
          for (const auto& g : all_functions(Ordinal{s}, Ordinal{b})) {
            auto pr = ladj_product(Ordinal{a}, Ordinal{b});
            auto h = ladj_pairing(LAdjMor::graph_of(f), LAdjMor::graph_of(g));
            REQUIRE(h.function() == pairing(f, g));
            REQUIRE(ladj_compose(h, pr.proj1) == LAdjMor::graph_of(f));
            REQUIRE(ladj_compose(h, pr.proj2) == LAdjMor::graph_of(g));
          }
  CHECK_THROWS_AS(ladj_pairing(G(1, {0}), G(1, {0, 0})), TypeError);
}

TEST_CASE("pullbacks are tabulations", "[ladj]") {
  auto p = ladj_pullback(G(1, {0, 0}), G(1, {0, 0}));
  CHECK(p.apex == Ordinal{4});
  CHECK(p.p1 == G(2, {0, 0, 1, 1}));
  CHECK(p.p2 == G(2, {0, 1, 0, 1}));

  auto q = ladj_pullback(LAdjMor::identity(Ordinal{3}), LAdjMor::identity(Ordinal{3}));
  CHECK(q.apex == Ordinal{3});
  CHECK(q.p1 == LAdjMor::identity(Ordinal{3}));
  CHECK(q.p2 == LAdjMor::identity(Ordinal{3}));

  CHECK(ladj_pullback(G(2, {0}), G(2, {1})).apex == Ordinal{0});
  CHECK_THROWS_AS(ladj_pullback(G(2, {0}), G(3, {0})), TypeError);
}

TEST_CASE("restriction of codomain", "[ladj]") {
  const LAdjMor f = G(2, {1, 1, 1});
  const Relation x = R(1, 2, {{0, 1}});
  auto r = ladj_restrict(f, x);
  CHECK(r.restricted == G(1, {0, 0, 0}));
  CHECK(r.inclusion == G(2, {1}));
  CHECK(ladj_compose(r.restricted, r.inclusion) == f);
  CHECK(ladj_classify(r.restricted).extremal_epi);

  // Already onto: the inclusion is an iso.
  auto onto = ladj_restrict(G(2, {1, 0, 1}), R(1, 2, {{0, 0}, {0, 1}}));
  CHECK(ladj_classify(onto.inclusion).mono);
  CHECK(ladj_classify(onto.inclusion).extremal_epi);

  auto full = ladj_restrict(LAdjMor::identity(Ordinal{2}), rel_top(Ordinal{1}, Ordinal{2}));
  CHECK(full.restricted == LAdjMor::identity(Ordinal{2}));
  CHECK(full.inclusion == LAdjMor::identity(Ordinal{2}));

  CHECK_THROWS_AS(ladj_restrict(f, R(1, 2, {{0, 0}})), DomainError);
  CHECK_THROWS_AS(ladj_restrict(f, R(2, 2, {{0, 1}})), TypeError);
}

TEST_CASE("image factorization", "[ladj]") {
  auto a = ladj_image_factorize(G(3, {2, 0, 2}));
  CHECK(a.epi == G(2, {0, 1, 0}));
  CHECK(a.mono == G(3, {2, 0}));

  auto b = ladj_image_factorize(LAdjMor::identity(Ordinal{3}));
  CHECK(b.epi == LAdjMor::identity(Ordinal{3}));
  CHECK(b.mono == LAdjMor::identity(Ordinal{3}));

  auto c = ladj_image_factorize(G(1, {0, 0}));
  CHECK(c.epi == G(1, {0, 0}));
  CHECK(c.mono == LAdjMor::identity(Ordinal{1}));
}

TEST_CASE("classification of monos and extremal epis", "[ladj]") {
  CHECK(ladj_classify(G(1, {0, 0})) == LAdjClass{false, true});
  CHECK(ladj_classify(G(2, {1})) == LAdjClass{true, false});
  CHECK(ladj_classify(LAdjMor::identity(Ordinal{2})) == LAdjClass{true, true});
}

TEST_CASE("left adjoints are closed under composition and tensor", "[ladj][property]") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t c = 0; c <= 2; ++c)
        for (const auto& f : all_left_adjoints(Ordinal{a}, Ordinal{b}))
          for (const auto& g : all_left_adjoints(Ordinal{b}, Ordinal{c})) {
            REQUIRE(is_left_adjoint(rel_compose(f.rel(), g.rel())));
            REQUIRE(is_left_adjoint(rel_tensor(f.rel(), g.rel())));
          }
}

TEST_CASE("left adjoints are discretely ordered", "[ladj][property]") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      const auto fs = all_left_adjoints(Ordinal{a}, Ordinal{b});
      for (const auto& f : fs)
        for (const auto& g : fs)
          if (!(f == g)) REQUIRE_FALSE(rel_leq(f.rel(), g.rel()));
    }
}

TEST_CASE("f ; f-dagger ; f = f for left adjoints", "[ladj][property]") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : all_left_adjoints(Ordinal{a}, Ordinal{b}))
        REQUIRE(rel_compose(rel_compose(f.rel(), f.adjoint()), f.rel()) == f.rel());
}

TEST_CASE("square lemma, exhaustive", "[ladj][property]") {
  Bounds b;
  b.samples = 500;
  auto rep = suite_square_lemma(b);
  INFO(first_failure(rep));
  CHECK(rep.passed());
  CHECK(rep.cases > 1000);
}

TEST_CASE("comonoid uniqueness up to carrier 3", "[ladj][property]") {
  Bounds b;
  b.max_size = 3;
  auto rep = suite_comonoid_uniqueness(b);
  INFO(first_failure(rep));
  CHECK(rep.passed());
  CHECK(rep.cases == 8);
}

TEST_CASE("regularity: factorization, pullbacks, stability", "[ladj][property]") {
  Bounds b;
  b.max_size = 2;
  auto rep = suite_factorization(b);
  INFO(first_failure(rep));
  CHECK(rep.passed());
}

TEST_CASE("mono in relations agrees with mono among left adjoints", "[ladj][property]") {
  // f is mono as a left adjoint iff f;f-dagger = id iff it is co-deterministic.
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : all_left_adjoints(Ordinal{a}, Ordinal{b}))
        REQUIRE(ladj_classify(f).mono == adjointness_profile(f.rel()).a3);
}
