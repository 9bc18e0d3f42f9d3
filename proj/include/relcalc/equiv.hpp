#pragma once

// The verifier for the main theorem at the finite-set instance: the
// isomorphisms iota (graph / function_of) and j (tabulate / converse-leg
// composite), plus a registry of named law suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/finset.hpp"
#include "relcalc/format.hpp"
#include "relcalc/json_io.hpp"
#include "relcalc/ladj.hpp"
#include "relcalc/random.hpp"
#include "relcalc/regular.hpp"
#include "relcalc/rel.hpp"
#include "relcalc/wlang.hpp"
#include "relcalc/wprop.hpp"

namespace relcalc {

inline constexpr std::uint64_t kDefaultSeed = 1234567;
inline constexpr std::size_t kMaxRecordedFailures = 20;

struct Bounds {
  std::size_t max_size = 2;     // exhaustive enumeration bound
  std::size_t random_size = 4;  // bound for randomized samples
  std::size_t samples = 10000;
  std::uint64_t seed = kDefaultSeed;
};

struct Failure {
  std::string check;
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  Bounds bounds;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;  // first kMaxRecordedFailures only

  bool passed() const noexcept { return failed == 0; }
};

inline Json to_json(const Bounds& b) {
  return Json{{"max", b.max_size},
              {"random_size", b.random_size},
              {"samples", b.samples},
              {"seed", b.seed}};
}

inline Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const Failure& f : r.failures)
    failures.push_back(
        Json{{"check", f.check}, {"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return Json{{"suite", r.suite},
              {"bounds", to_json(r.bounds)},
              {"cases", r.cases},
              {"failed", r.failed},
              {"failures", std::move(failures)}};
}

/// Counts cases and records counterexamples into a report.
class Checker {
 public:
  explicit Checker(SuiteReport& report) : report_(report) {}

  template <class Detail>
  bool expect(bool ok, std::string_view check, Detail&& detail) {
    ++report_.cases;
    if (ok) return true;
    ++report_.failed;
    if (report_.failures.size() < kMaxRecordedFailures) {
      Failure f = detail();
      f.check = std::string(check);
      report_.failures.push_back(std::move(f));
    }
    return false;
  }

  bool expect(bool ok, std::string_view check) {
    return expect(ok, check, [] { return Failure{}; });
  }

 private:
  SuiteReport& report_;
};

inline Failure rel_failure(const std::string& input, const Relation& lhs,
                           const Relation& rhs) {
  return {"", input, describe(lhs), describe(rhs)};
}

// ---------------------------------------------------------------------------
// Relational formulas built from the supply, used as independent routes.

namespace detail {

inline Relation cup(Ordinal c) {
  return interpret_wiring(c, w_compose(w_generator(Gen::eta), w_generator(Gen::delta)));
}

inline Relation cap(Ordinal c) {
  return interpret_wiring(c, w_compose(w_generator(Gen::mu), w_generator(Gen::epsilon)));
}

/// f^dagger = (id_d * cup_c) ; (id_d * f * id_c) ; (cap_d * id_c).
inline Relation converse_by_wiring(const Relation& f) {
  const Ordinal c = f.src(), d = f.dst();
  Relation bend_in = rel_tensor(rel_identity(d), cup(c));
  Relation middle = rel_tensor(rel_tensor(rel_identity(d), f), rel_identity(c));
  Relation bend_out = rel_tensor(cap(d), rel_identity(c));
  return rel_compose(rel_compose(bend_in, middle), bend_out);
}

inline Relation meet_by_wiring(const Relation& f, const Relation& g) {
  return rel_compose(rel_compose(supply(f.src(), Gen::delta), rel_tensor(f, g)),
                     supply(f.dst(), Gen::mu));
}

inline Relation top_by_wiring(Ordinal src, Ordinal dst) {
  return rel_compose(supply(src, Gen::epsilon), supply(dst, Gen::eta));
}

inline Gen generator_of(WiringTerm::Kind k) {
  using K = WiringTerm::Kind;
  switch (k) {
    case K::eps: return Gen::epsilon;
    case K::delta: return Gen::delta;
    case K::eta: return Gen::eta;
    case K::mu: return Gen::mu;
    case K::swap: return Gen::swap;
    default: return Gen::identity;
  }
}

}  // namespace detail

/// Interprets a term directly in relations, generator by generator.
inline Relation relational_fold(Ordinal carrier, const WiringTerm& t) {
  using K = WiringTerm::Kind;
  if (t.kind() == K::seq)
    return rel_compose(relational_fold(carrier, t.lhs()), relational_fold(carrier, t.rhs()));
  if (t.kind() == K::par)
    return rel_tensor(relational_fold(carrier, t.lhs()), relational_fold(carrier, t.rhs()));
  if (t.kind() == K::id) return supply(carrier, Gen::identity, t.id_width());
  return supply(carrier, detail::generator_of(t.kind()));
}

// ---------------------------------------------------------------------------
// Wiring laws.

struct WiringLaw {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool inequality = false;  // lhs <= rhs rather than lhs = rhs
};

/// The displayed equations and inequalities of the generators, plus the
/// derived inequality for the special law.
inline const std::vector<WiringLaw>& presentation_laws() {
  static const std::vector<WiringLaw> laws = {
      {"comultiplication-commutative", "d ; sw", "d", false},
      {"counit", "d ; (e * id1)", "id1", false},
      {"coassociative", "d ; (d * id1)", "d ; (id1 * d)", false},
      {"multiplication-commutative", "sw ; m", "m", false},
      {"unit", "(n * id1) ; m", "id1", false},
      {"associative", "(m * id1) ; m", "(id1 * m) ; m", false},
      {"special", "d ; m", "id1", false},
      {"frobenius-left", "(d * id1) ; (id1 * m)", "m ; d", false},
      {"frobenius-right", "(id1 * d) ; (m * id1)", "m ; d", false},
      {"counit-unit", "id1", "e ; n", true},
      {"unit-counit", "n ; e", "id0", true},
      {"multiplication-comultiplication", "m ; d", "id2", true},
      {"special-derived", "d ; m", "id1", true},
  };
  return laws;
}

/// Snake identities for cup = n;d and cap = m;e, and the two adjunctions
/// (counit left adjoint to unit, comultiplication left adjoint to
/// multiplication) written as unit/counit inequalities.
inline const std::vector<WiringLaw>& structural_wiring_laws() {
  static const std::vector<WiringLaw> laws = {
      {"snake-left", "(id1 * (n ; d)) ; ((m ; e) * id1)", "id1", false},
      {"snake-right", "((n ; d) * id1) ; (id1 * (m ; e))", "id1", false},
      {"counit-adjunction-unit", "id1", "e ; n", true},
      {"counit-adjunction-counit", "n ; e", "id0", true},
      {"comultiplication-adjunction-unit", "id1", "d ; m", true},
      {"comultiplication-adjunction-counit", "m ; d", "id2", true},
  };
  return laws;
}

inline bool law_holds(const WiringLaw& law) {
  const Comparison c = compare_terms(parse_term(law.lhs), parse_term(law.rhs));
  if (law.inequality) return c == Comparison::equal || c == Comparison::strictly_less;
  return c == Comparison::equal;
}

inline void check_wiring_laws(Checker& chk, const std::vector<WiringLaw>& laws) {
  for (const WiringLaw& law : laws) {
    chk.expect(law_holds(law), law.name, [&] {
      return Failure{"", law.lhs + (law.inequality ? " <= " : " = ") + law.rhs,
                     describe(eval_term(parse_term(law.lhs))),
                     describe(eval_term(parse_term(law.rhs)))};
    });
  }
}

// ---------------------------------------------------------------------------
// Suites.

namespace detail {

inline void check_profile(Checker& chk, const Relation& f) {
  const AdjointnessProfile p = adjointness_profile(f);
  const Ordinal r = f.src(), s = f.dst();
  const Relation fc = rel_converse(f);
  auto fail = [&] { return Failure{"", describe(f), "", ""}; };

  chk.expect(!p.h1 || p.a1, "h1-implies-deterministic", fail);
  chk.expect(p.h2 == p.a2, "h2-iff-total", fail);
  chk.expect(!p.h3 || p.a3, "h3-implies-codeterministic", fail);
  chk.expect(p.h4 == p.a4, "h4-iff-cototal", fail);
  chk.expect(!(p.a1 && p.a2) || p.h1, "left-adjoint-implies-h1", fail);
  chk.expect(!(p.a3 && p.a4) || p.h3, "right-adjoint-implies-h3", fail);

  // The combinatorial properties agree with their inequality definitions.
  chk.expect(p.a1 == rel_leq(rel_compose(fc, f), rel_identity(s)), "deterministic-inequality", fail);
  chk.expect(p.a2 == rel_leq(rel_identity(r), rel_compose(f, fc)), "total-inequality", fail);
  chk.expect(p.a3 == rel_leq(rel_compose(f, fc), rel_identity(r)), "codeterministic-inequality", fail);
  chk.expect(p.a4 == rel_leq(rel_identity(s), rel_compose(fc, f)), "cototal-inequality", fail);

  // Every relation is a lax comonoid and oplax monoid homomorphism.
  chk.expect(rel_leq(rel_compose(f, supply(s, Gen::delta)),
                     rel_compose(supply(r, Gen::delta), rel_tensor(f, f))),
             "lax-comultiplication", fail);
  chk.expect(rel_leq(rel_compose(f, supply(s, Gen::epsilon)), supply(r, Gen::epsilon)),
             "lax-counit", fail);
  chk.expect(rel_leq(rel_compose(supply(r, Gen::mu), f),
                     rel_compose(rel_tensor(f, f), supply(s, Gen::mu))),
             "oplax-multiplication", fail);
  chk.expect(rel_leq(rel_compose(supply(r, Gen::eta), f), supply(s, Gen::eta)),
             "oplax-unit", fail);

  chk.expect(is_left_adjoint(f) == (p.h1 && p.h2), "left-adjoint-iff-comonoid-homomorphism", fail);
}

inline void check_modular(Checker& chk, const Relation& f, const Relation& g,
                          const Relation& h) {
  const Relation lhs = rel_meet(rel_compose(f, g), h);
  const Relation rhs = rel_compose(f, rel_meet(g, rel_compose(rel_converse(f), h)));
  chk.expect(rel_leq(lhs, rhs), "modular-law", [&] {
    return rel_failure(describe(f) + " " + describe(g) + " " + describe(h), lhs, rhs);
  });
}

inline void check_meet_pair(Checker& chk, const Relation& f, const Relation& g) {
  const Relation m = rel_meet(f, g);
  const std::string in = describe(f) + " " + describe(g);
  std::vector<Pair> both;
  std::set_intersection(f.pairs().begin(), f.pairs().end(), g.pairs().begin(),
                        g.pairs().end(), std::back_inserter(both));
  const Relation inter(f.src(), f.dst(), both);
  const Relation wired = meet_by_wiring(f, g);
  chk.expect(m == inter, "meet-is-intersection", [&] { return rel_failure(in, m, inter); });
  chk.expect(m == wired, "meet-wiring-formula", [&] { return rel_failure(in, m, wired); });
  chk.expect(rel_leq(m, f) && rel_leq(m, g), "meet-is-lower-bound",
             [&] { return rel_failure(in, m, f); });
}

inline void check_single(Checker& chk, const Relation& f) {
  const Relation top = rel_top(f.src(), f.dst());
  const std::string in = describe(f);
  chk.expect(rel_leq(f, top), "top-is-greatest", [&] { return rel_failure(in, f, top); });
  chk.expect(rel_meet(f, top) == f, "top-is-meet-unit", [&] { return rel_failure(in, rel_meet(f, top), f); });
  const Relation wired_top = top_by_wiring(f.src(), f.dst());
  chk.expect(top == wired_top, "top-wiring-formula", [&] { return rel_failure(in, top, wired_top); });
  const Relation c = rel_converse(f), wc = converse_by_wiring(f);
  chk.expect(c == wc, "converse-wiring-formula", [&] { return rel_failure(in, c, wc); });
  chk.expect(rel_converse(c) == f, "converse-involution", [&] { return rel_failure(in, rel_converse(c), f); });
}

inline void check_converse_of_composite(Checker& chk, const Relation& f, const Relation& g) {
  const Relation lhs = rel_converse(rel_compose(f, g));
  const Relation rhs = rel_compose(rel_converse(g), rel_converse(f));
  chk.expect(lhs == rhs, "converse-reverses-composition", [&] {
    return rel_failure(describe(f) + " " + describe(g), lhs, rhs);
  });
}

/// Number of h : cone -> apex (as tables) with h;p1 = x and h;p2 = y,
/// found by trying every function.
inline std::size_t count_mediators(std::size_t apex, const std::vector<std::size_t>& p1,
                                   const std::vector<std::size_t>& p2,
                                   const std::vector<std::size_t>& x,
                                   const std::vector<std::size_t>& y) {
  const std::size_t s = x.size();
  const std::size_t total = ipow(apex, s);
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    bool ok = true;
    for (std::size_t t = 0; t < s && ok; ++t) {
      const std::size_t h = rest % apex;
      rest /= apex;
      ok = p1[h] == x[t] && p2[h] == y[t];
    }
    if (ok) ++count;
  }
  return count;
}

/// All tables of functions s -> n.
inline std::vector<std::vector<std::size_t>> all_tables(std::size_t s, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (const FinFn& f : all_functions(Ordinal{s}, Ordinal{n})) out.push_back(f.table());
  return out;
}

/// Largest cone apex tried in brute-force universal property checks.
inline constexpr std::size_t kConeApexBound = 2;

inline void check_tabulation(Checker& chk, const Relation& f) {
  const Tabulation t = tabulate(f);
  const std::string in = describe(f);
  auto fail = [&] { return Failure{"", in, "", ""}; };
  chk.expect(is_right_adjoint(t.right_leg), "right-leg-is-right-adjoint", fail);
  chk.expect(is_left_adjoint(t.left_leg), "left-leg-is-left-adjoint", fail);
  const Relation back = rel_compose(t.right_leg, t.left_leg);
  chk.expect(back == f, "legs-compose-to-relation", [&] { return rel_failure(in, back, f); });
  const Relation mono = rel_compose(t.span, rel_converse(t.span));
  chk.expect(mono == rel_identity(t.apex), "span-is-monic",
             [&] { return rel_failure(in, mono, rel_identity(t.apex)); });

  // The span is the pairing of the legs, in both coordinate orders.
  const Relation legs_to_apex = rel_converse(t.right_leg);  // apex -> src
  const Relation paired = rel_compose(supply(t.apex, Gen::delta),
                                      rel_tensor(legs_to_apex, t.left_leg));
  chk.expect(paired == t.span, "span-is-pairing", [&] { return rel_failure(in, paired, t.span); });
  const Relation swapped = rel_compose(supply(t.apex, Gen::delta),
                                       rel_tensor(t.left_leg, legs_to_apex));
  const Relation swap_coords = rel_graph(pairing(product(f.src(), f.dst()).proj2,
                                                 product(f.src(), f.dst()).proj1));
  chk.expect(rel_compose(t.span, swap_coords) == swapped, "span-swapped-order", fail);

  // Universal property against every candidate mediating function.
  if (t.apex.size == 0) return;
  const FinFn p1 = function_of(legs_to_apex), p2 = function_of(t.left_leg);
  for (std::size_t s = 0; s <= kConeApexBound; ++s) {
    for (const auto& x : all_tables(s, f.src().size)) {
      for (const auto& y : all_tables(s, f.dst().size)) {
        bool inside = true;
        for (std::size_t k = 0; k < s; ++k) inside = inside && f.contains(x[k], y[k]);
        const std::size_t n = count_mediators(t.apex.size, p1.table(), p2.table(), x, y);
        chk.expect(n == (inside ? 1u : 0u), "tabulation-universal-property", fail);
        if (!inside || s == 0) continue;
        // The mediator is <x, y> ; span^dagger.
        const Relation xr = rel_graph(FinFn(Ordinal{s}, f.src(), x));
        const Relation yr = rel_graph(FinFn(Ordinal{s}, f.dst(), y));
        const Relation h = rel_compose(rel_compose(supply(Ordinal{s}, Gen::delta),
                                                   rel_tensor(xr, yr)),
                                       rel_converse(t.span));
        chk.expect(is_left_adjoint(h) && rel_compose(h, t.span) ==
                                             rel_compose(supply(Ordinal{s}, Gen::delta),
                                                         rel_tensor(xr, yr)),
                   "tabulation-mediator-formula", fail);
      }
    }
  }
}

inline void check_pullback(Checker& chk, const LAdjMor& g1, const LAdjMor& g2) {
  const LAdjPullback pb = ladj_pullback(g1, g2);
  const std::string in = describe(g1.rel()) + " " + describe(g2.rel());
  auto fail = [&] { return Failure{"", in, "", ""}; };
  chk.expect(ladj_compose(pb.p1, g1) == ladj_compose(pb.p2, g2), "pullback-square-commutes", fail);
  const Pullback oracle = pullback(g1.function(), g2.function());
  chk.expect(oracle.apex == pb.apex && pb.p1.function() == oracle.p1 &&
                 pb.p2.function() == oracle.p2,
             "pullback-matches-finset", fail);

  const std::vector<std::size_t> t1 = pb.p1.function().table();
  const std::vector<std::size_t> t2 = pb.p2.function().table();
  const std::vector<std::size_t> f1 = g1.function().table();
  const std::vector<std::size_t> f2 = g2.function().table();
  const std::size_t a = g1.dom().size, b = g2.dom().size;
  for (std::size_t s = 0; s <= kConeApexBound; ++s) {
    if (pb.apex.size == 0 && s > 0) break;
    for (const auto& x : all_tables(s, a)) {
      for (const auto& y : all_tables(s, b)) {
        bool commutes = true;
        for (std::size_t k = 0; k < s; ++k) commutes = commutes && f1[x[k]] == f2[y[k]];
        const std::size_t n =
            pb.apex.size == 0 ? 1 : count_mediators(pb.apex.size, t1, t2, x, y);
        chk.expect(n == (commutes ? 1u : 0u), "pullback-universal-property", fail);
      }
    }
  }

  // Extremal epis are stable under pullback.
  if (ladj_classify(g1).extremal_epi)
    chk.expect(ladj_classify(pb.p2).extremal_epi, "extremal-epi-pullback-stable", fail);
}

inline void check_factorization(Checker& chk, const LAdjMor& f) {
  const std::string in = describe(f.rel());
  auto fail = [&] { return Failure{"", in, "", ""}; };
  const LAdjFactorization fa = ladj_image_factorize(f);
  chk.expect(ladj_compose(fa.epi, fa.mono) == f, "factorization-composes", fail);
  chk.expect(ladj_classify(fa.epi).extremal_epi, "factorization-epi", fail);
  chk.expect(ladj_classify(fa.mono).mono, "factorization-mono", fail);
  const Factorization oracle = image_factorize(f.function());
  chk.expect(fa.epi.function() == oracle.epi && fa.mono.function() == oracle.mono,
             "factorization-matches-finset", [&] {
               return Failure{"", in, describe(fa.epi.function()) + " " + describe(fa.mono.function()),
                              describe(oracle.epi) + " " + describe(oracle.mono)};
             });

  // Epi and mono classes: extremal epi = co-total, mono = injective.
  const FnClass cls = classify(f.function());
  const LAdjClass lc = ladj_classify(f);
  chk.expect(lc.extremal_epi == cls.epi && lc.extremal_epi == adjointness_profile(f.rel()).a4,
             "extremal-epi-is-cototal", fail);
  chk.expect(lc.mono == cls.mono, "mono-agrees-with-finset", fail);

  // Restricting to the full codomain is the identity on f.
  const Restriction whole = ladj_restrict(f, rel_top(Ordinal{1}, f.cod()));
  chk.expect(ladj_compose(whole.restricted, whole.inclusion) == f, "restriction-composes", fail);
}

inline void check_square(Checker& chk, const LAdjMor& x, const LAdjMor& y,
                         const LAdjMor& f, const LAdjMor& g) {
  const bool commutes = ladj_compose(x, f) == ladj_compose(y, g);
  const bool ineq = rel_leq(rel_compose(x.adjoint(), y.rel()),
                            rel_compose(f.rel(), g.adjoint()));
  chk.expect(commutes == ineq, "square-iff-inequality", [&] {
    return Failure{"", describe(x.rel()) + " " + describe(y.rel()) + " " +
                           describe(f.rel()) + " " + describe(g.rel()),
                   commutes ? "commutes" : "does not commute",
                   ineq ? "inequality holds" : "inequality fails"};
  });
}

inline void check_supply_square(Checker& chk, const WMor& w, Ordinal c, Ordinal d) {
  const Relation sc = interpret_wiring(c, w), sd = interpret_wiring(d, w);
  const Relation scd = interpret_wiring(Ordinal{c.size * d.size}, w);
  const Relation in_shuffle = rel_graph(symmetry_shuffle(c, d, w.m()));
  const Relation out_shuffle = rel_graph(symmetry_shuffle(c, d, w.n()));
  const Relation lhs = rel_compose(rel_compose(rel_converse(in_shuffle), rel_tensor(sc, sd)),
                                   out_shuffle);
  chk.expect(lhs == scd, "supply-monoidal-square", [&] {
    return rel_failure(describe(w) + " carriers " + to_string(c) + "," + to_string(d), lhs, scd);
  });
}

}  // namespace detail

inline SuiteReport suite_presentation(const Bounds& b) {
  SuiteReport rep{"presentation", b, 0, 0, {}};
  Checker chk(rep);
  check_wiring_laws(chk, presentation_laws());
  return rep;
}

inline SuiteReport suite_adjointness(const Bounds& b) {
  SuiteReport rep{"adjointness-table", b, 0, 0, {}};
  Checker chk(rep);
  for (std::size_t r = 0; r <= b.max_size; ++r)
    for (std::size_t s = 0; s <= b.max_size; ++s)
      for (const Relation& f : all_relations(Ordinal{r}, Ordinal{s}))
        detail::check_profile(chk, f);
  Rng rng(b.seed);
  for (std::size_t k = 0; k < b.samples; ++k) {
    const Ordinal r{uniform(rng, 0, b.random_size)}, s{uniform(rng, 0, b.random_size)};
    detail::check_profile(chk, random_relation(rng, r, s));
  }
  return rep;
}

inline SuiteReport suite_allegory(const Bounds& b) {
  SuiteReport rep{"allegory", b, 0, 0, {}};
  Checker chk(rep);
  const std::size_t n = b.max_size;
  for (std::size_t x = 0; x <= n; ++x)
    for (std::size_t y = 0; y <= n; ++y) {
      const auto fs = all_relations(Ordinal{x}, Ordinal{y});
      for (const Relation& f : fs) {
        detail::check_single(chk, f);
        for (const Relation& g : fs) {
          detail::check_meet_pair(chk, f, g);
          // Greatest lower bound: every common lower bound is below the meet.
          const Relation m = rel_meet(f, g);
          bool greatest = true;
          for (const Relation& h : fs)
            if (rel_leq(h, f) && rel_leq(h, g) && !rel_leq(h, m)) greatest = false;
          chk.expect(greatest, "meet-is-greatest", [&] {
            return Failure{"", describe(f) + " " + describe(g), describe(m), ""};
          });
        }
      }
      for (std::size_t z = 0; z <= n; ++z) {
        const auto gs = all_relations(Ordinal{y}, Ordinal{z});
        const auto hs = all_relations(Ordinal{x}, Ordinal{z});
        for (const Relation& f : fs)
          for (const Relation& g : gs) {
            detail::check_converse_of_composite(chk, f, g);
            for (const Relation& h : hs) detail::check_modular(chk, f, g, h);
          }
      }
    }
  Rng rng(b.seed);
  for (std::size_t k = 0; k < b.samples; ++k) {
    const Ordinal x{uniform(rng, 0, b.random_size)}, y{uniform(rng, 0, b.random_size)},
        z{uniform(rng, 0, b.random_size)};
    const Relation f = random_relation(rng, x, y), g = random_relation(rng, y, z),
                   h = random_relation(rng, x, z), f2 = random_relation(rng, x, y);
    detail::check_modular(chk, f, g, h);
    detail::check_meet_pair(chk, f, f2);
    detail::check_single(chk, f);
  }
  return rep;
}

inline SuiteReport suite_supply_coherence(const Bounds& b) {
  SuiteReport rep{"supply-coherence", b, 0, 0, {}};
  Checker chk(rep);
  std::vector<WMor> ws = {w_generator(Gen::epsilon), w_generator(Gen::delta),
                          w_generator(Gen::eta),     w_generator(Gen::mu),
                          w_generator(Gen::swap),    w_identity(0),
                          w_identity(1),             w_identity(2),
                          WMor::zero(ZeroApex::point)};
  Rng rng(b.seed);
  for (std::size_t k = 0; k < b.samples; ++k) {
    // m + n <= 3 keeps the interpreted relations small at carrier 9.
    const std::size_t m = uniform(rng, 0, 2);
    ws.push_back(random_wmor(rng, m, uniform(rng, 0, 3 - m)));
  }
  const std::size_t maxc = b.max_size;
  for (const WMor& w : ws) {
    for (std::size_t c = 0; c <= maxc; ++c)
      for (std::size_t d = 0; d <= maxc; ++d)
        detail::check_supply_square(chk, w, Ordinal{c}, Ordinal{d});
    const Relation unit = interpret_wiring(Ordinal{1}, w);
    chk.expect(unit == rel_identity(Ordinal{1}), "supply-unit-square", [&] {
      return rel_failure(describe(w), unit, rel_identity(Ordinal{1}));
    });
  }

  // Functoriality and monotonicity of each supply, and soundness of eval.
  for (std::size_t k = 0; k < b.samples; ++k) {
    const Ordinal c{uniform(rng, 0, maxc)};
    const std::size_t m = uniform(rng, 0, 2), n = uniform(rng, 0, 2), p = uniform(rng, 0, 2);
    const WMor f = random_wmor(rng, m, n), g = random_wmor(rng, n, p), f2 = random_wmor(rng, m, n);
    const std::string in = describe(f) + " " + describe(g) + " carrier " + to_string(c);
    const Relation seq_l = interpret_wiring(c, w_compose(f, g));
    const Relation seq_r = rel_compose(interpret_wiring(c, f), interpret_wiring(c, g));
    chk.expect(seq_l == seq_r, "supply-preserves-composition", [&] { return rel_failure(in, seq_l, seq_r); });
    const Relation par_l = interpret_wiring(c, w_tensor(f, g));
    const Relation par_r = rel_tensor(interpret_wiring(c, f), interpret_wiring(c, g));
    chk.expect(par_l == par_r, "supply-preserves-tensor", [&] { return rel_failure(in, par_l, par_r); });
    if (w_leq(f, f2))
      chk.expect(rel_leq(interpret_wiring(c, f), interpret_wiring(c, f2)), "supply-monotone",
                 [&] { return Failure{"", describe(f) + " <= " + describe(f2), "", ""}; });

    const WiringTerm t = random_term(rng, 8, 3);
    const Relation sem = interpret_wiring(c, eval_term(t));
    const Relation fold = relational_fold(c, t);
    chk.expect(sem == fold, "eval-sound-for-relations",
               [&] { return rel_failure(t.to_string() + " carrier " + to_string(c), sem, fold); });
  }
  return rep;
}

inline SuiteReport suite_comonoid_uniqueness(const Bounds& b) {
  SuiteReport rep{"comonoid-uniqueness", b, 0, 0, {}};
  Checker chk(rep);
  for (std::size_t n = 0; n <= b.max_size; ++n) {
    const Ordinal c{n}, cc{n * n};
    const auto counits = all_left_adjoints(c, Ordinal{1});
    chk.expect(counits.size() == 1 && counits.front().rel() == supply(c, Gen::epsilon),
               "counit-unique", [&] { return Failure{"", "carrier " + to_string(c), "", ""}; });
    const Relation eps = supply(c, Gen::epsilon), id = rel_identity(c);
    std::vector<Relation> found;
    for (const LAdjMor& cand : all_left_adjoints(c, cc)) {
      const Relation& d = cand.rel();
      const bool coassoc = rel_compose(d, rel_tensor(d, id)) == rel_compose(d, rel_tensor(id, d));
      const bool counital = rel_compose(d, rel_tensor(eps, id)) == id &&
                            rel_compose(d, rel_tensor(id, eps)) == id;
      if (coassoc && counital) found.push_back(d);
    }
    chk.expect(found.size() == 1 && found.front() == supply(c, Gen::delta),
               "comultiplication-unique", [&] {
                 return Failure{"", "carrier " + to_string(c),
                                std::to_string(found.size()) + " comonoids", "1"};
               });
  }
  return rep;
}

inline SuiteReport suite_square_lemma(const Bounds& b) {
  SuiteReport rep{"square-lemma", b, 0, 0, {}};
  Checker chk(rep);
  const std::size_t n = b.max_size;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t bb = 0; bb <= n; ++bb)
      for (std::size_t c = 0; c <= n; ++c)
        for (std::size_t d = 0; d <= n; ++d) {
          const auto xs = all_left_adjoints(Ordinal{a}, Ordinal{c});
          const auto ys = all_left_adjoints(Ordinal{a}, Ordinal{bb});
          const auto fs = all_left_adjoints(Ordinal{c}, Ordinal{d});
          const auto gs = all_left_adjoints(Ordinal{bb}, Ordinal{d});
          for (const auto& x : xs)
            for (const auto& y : ys)
              for (const auto& f : fs)
                for (const auto& g : gs) detail::check_square(chk, x, y, f, g);
        }
  Rng rng(b.seed);
  for (std::size_t k = 0; k < b.samples; ++k) {
    const Ordinal a{uniform(rng, 1, b.random_size)}, bb{uniform(rng, 1, b.random_size)},
        c{uniform(rng, 1, b.random_size)}, d{uniform(rng, 1, b.random_size)};
    const FinFn f = random_fn(rng, c, d), g = random_fn(rng, bb, d);
    FinFn x = random_fn(rng, a, c), y = random_fn(rng, a, bb);
    // Half the samples use the pullback cone so commuting squares are common.
    const Pullback pb = pullback(f, g);
    if (pb.apex.size > 0 && coin(rng)) {
      x = pb.p1;
      y = pb.p2;
    }
    detail::check_square(chk, LAdjMor::graph_of(x), LAdjMor::graph_of(y),
                         LAdjMor::graph_of(f), LAdjMor::graph_of(g));
  }
  return rep;
}

inline SuiteReport suite_tabulation(const Bounds& b) {
  SuiteReport rep{"tabulation", b, 0, 0, {}};
  Checker chk(rep);
  for (std::size_t r = 0; r <= b.max_size; ++r)
    for (std::size_t s = 0; s <= b.max_size; ++s)
      for (const Relation& f : all_relations(Ordinal{r}, Ordinal{s}))
        detail::check_tabulation(chk, f);
  return rep;
}

inline SuiteReport suite_factorization(const Bounds& b) {
  SuiteReport rep{"factorization", b, 0, 0, {}};
  Checker chk(rep);
  const std::size_t n = b.max_size;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t c = 0; c <= n; ++c) {
      const auto gs = all_left_adjoints(Ordinal{a}, Ordinal{c});
      for (const auto& g : gs) detail::check_factorization(chk, g);
      for (std::size_t bb = 0; bb <= n; ++bb)
        for (const auto& g1 : gs)
          for (const auto& g2 : all_left_adjoints(Ordinal{bb}, Ordinal{c}))
            detail::check_pullback(chk, g1, g2);
    }
  return rep;
}

/// Left adjoints are exactly graphs, and graph / function_of are inverse
/// functors between FinSet and LAdj(Rel(FinSet)).
inline SuiteReport check_fundamental_lemma(std::size_t max_size) {
  SuiteReport rep{"fundamental-lemma", Bounds{max_size, 0, 0, 0}, 0, 0, {}};
  Checker chk(rep);
  for (std::size_t m = 0; m <= max_size; ++m)
    for (std::size_t n = 0; n <= max_size; ++n) {
      const Ordinal a{m}, b{n};
      std::vector<Relation> graphs;
      for (const FinFn& f : all_functions(a, b)) graphs.push_back(rel_graph(f));
      std::sort(graphs.begin(), graphs.end(),
                [](const Relation& x, const Relation& y) { return x.pairs() < y.pairs(); });
      std::size_t lefts = 0;
      for (const Relation& r : all_relations(a, b)) {
        const bool left = is_left_adjoint(r);
        const bool graph = std::binary_search(
            graphs.begin(), graphs.end(), r,
            [](const Relation& x, const Relation& y) { return x.pairs() < y.pairs(); });
        lefts += left ? 1 : 0;
        chk.expect(left == graph, "left-adjoint-iff-graph",
                   [&] { return Failure{"", describe(r), left ? "left adjoint" : "not", graph ? "graph" : "not"}; });
      }
      chk.expect(lefts == ipow(n, m), "left-adjoint-count", [&] {
        return Failure{"", "hom(" + to_string(a) + "," + to_string(b) + ")",
                       std::to_string(lefts), std::to_string(ipow(n, m))};
      });
      for (const FinFn& f : all_functions(a, b))
        chk.expect(function_of(rel_graph(f)) == f, "function-of-graph", [&] {
          return Failure{"", describe(f), describe(function_of(rel_graph(f))), describe(f)};
        });
      chk.expect(rel_graph(FinFn::identity(a)) == rel_identity(a), "graph-preserves-identity");
      for (std::size_t p = 0; p <= max_size; ++p)
        for (const FinFn& f : all_functions(a, b))
          for (const FinFn& g : all_functions(b, Ordinal{p})) {
            const Relation lhs = rel_graph(compose(f, g));
            const Relation rhs = rel_compose(rel_graph(f), rel_graph(g));
            chk.expect(lhs == rhs, "graph-preserves-composition",
                       [&] { return rel_failure(describe(f) + " " + describe(g), lhs, rhs); });
            const Relation tl = rel_graph(fn_tensor(f, g));
            const Relation tr = rel_tensor(rel_graph(f), rel_graph(g));
            chk.expect(tl == tr, "graph-preserves-tensor",
                       [&] { return rel_failure(describe(f) + " " + describe(g), tl, tr); });
          }
    }
  return rep;
}

/// rel_over over any instance, compared against direct composition of the
/// spans' pair sets. Templated so a faulty instance can be plugged in.
template <RegularOps I, class ToSpan, class ToRel>
void check_rel_over(Checker& chk, const I& inst, std::size_t max_size, ToSpan to_span,
                    ToRel to_rel, std::string_view tag) {
  const std::string name(tag);
  for (std::size_t r = 0; r <= max_size; ++r)
    for (std::size_t s = 0; s <= max_size; ++s)
      for (std::size_t t = 0; t <= max_size; ++t) {
        const auto fs = all_relations(Ordinal{r}, Ordinal{s});
        const auto gs = all_relations(Ordinal{s}, Ordinal{t});
        for (const Relation& f : fs)
          for (const Relation& g : gs) {
            const auto span = rel_over(inst, to_span(f), to_span(g));
            const Relation got = to_rel(span);
            const Relation want = rel_compose(f, g);
            const std::string in = describe(f) + " " + describe(g);
            chk.expect(got == want, name + "-composition",
                       [&] { return rel_failure(in, got, want); });
            chk.expect(jointly_monic(inst, span), name + "-jointly-monic",
                       [&] { return Failure{"", in, "", ""}; });
          }
      }
  for (std::size_t r = 0; r <= max_size; ++r)
    for (const Relation& f : all_relations(Ordinal{r}, Ordinal{r})) {
      const auto id = span_identity(inst, Ordinal{r});
      const Relation got = to_rel(rel_over(inst, id, to_span(f)));
      chk.expect(got == f, name + "-identity-span", [&] { return rel_failure(describe(f), got, f); });
    }
}

template <RegularOps I>
SuiteReport check_rel_over_finset(const I& inst, std::size_t max_size) {
  SuiteReport rep{"rel-over-finset", Bounds{max_size, 0, 0, 0}, 0, 0, {}};
  Checker chk(rep);
  check_rel_over(
      chk, inst, max_size, [](const Relation& f) { return span_of(f); },
      [](const SpanRel<Ordinal, FinFn>& s) { return relation_of(s); }, "finset");
  return rep;
}

/// j and its inverse between Rel(FinSet) and Rel(LAdj(Rel(FinSet))).
inline SuiteReport check_rel_roundtrip(std::size_t max_size) {
  SuiteReport rep{"rel-roundtrip", Bounds{max_size, 0, 0, 0}, 0, 0, {}};
  Checker chk(rep);
  const LAdjOps ladj;
  for (std::size_t r = 0; r <= max_size; ++r)
    for (std::size_t s = 0; s <= max_size; ++s) {
      const auto fs = all_relations(Ordinal{r}, Ordinal{s});
      for (const Relation& f : fs) {
        const auto span = j_forward(f);
        const Relation back = j_inverse(span);
        chk.expect(back == f, "j-inverse-after-j", [&] { return rel_failure(describe(f), back, f); });
        chk.expect(jointly_monic(ladj, span), "j-span-jointly-monic",
                   [&] { return Failure{"", describe(f), "", ""}; });
      }
      for (const Relation& f : fs) {
        const auto jf = j_forward(f);
        for (const Relation& g : fs) {
          const bool direct = rel_leq(f, g);
          const bool spans = span_leq(ladj, jf, j_forward(g));
          chk.expect(direct == spans, "j-preserves-order", [&] {
            return Failure{"", describe(f) + " <= " + describe(g), direct ? "true" : "false",
                           spans ? "true" : "false"};
          });
        }
      }
    }
  const Relation id2 = rel_identity(Ordinal{2});
  chk.expect(j_inverse(span_identity(ladj, Ordinal{2})) == id2, "j-inverse-identity");
  check_rel_over(chk, ladj, max_size, [](const Relation& f) { return j_forward(f); },
                 [](const SpanRel<Ordinal, LAdjMor>& s) { return j_inverse(s); }, "ladj");
  check_rel_over(
      chk, FinSetOps{}, max_size, [](const Relation& f) { return span_of(f); },
      [](const SpanRel<Ordinal, FinFn>& s) { return relation_of(s); }, "finset");
  return rep;
}

using SuiteRunner = std::function<SuiteReport(const Bounds&)>;

inline const std::map<std::string, SuiteRunner>& suite_registry() {
  static const std::map<std::string, SuiteRunner> registry = {
      {"presentation", suite_presentation},
      {"adjointness-table", suite_adjointness},
      {"allegory", suite_allegory},
      {"supply-coherence", suite_supply_coherence},
      {"comonoid-uniqueness", suite_comonoid_uniqueness},
      {"square-lemma", suite_square_lemma},
      {"tabulation", suite_tabulation},
      {"factorization", suite_factorization},
  };
  return registry;
}

inline SuiteReport run_law_suite(const std::string& name, const Bounds& bounds) {
  const auto& reg = suite_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw DomainError("unknown suite \"" + name + "\"");
  return it->second(bounds);
}

}  // namespace relcalc
