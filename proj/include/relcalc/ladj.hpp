#pragma once

// LAdj(Rel(FinSet)): the regular category of left adjoint relations, with
// its limits and factorizations computed entirely inside the relation
// algebra (tabulations, supply, converse).

#include <cstddef>
#include <utility>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/finset.hpp"
#include "relcalc/rel.hpp"

namespace relcalc {

class LAdjMor {
 public:
  explicit LAdjMor(Relation rel) : rel_(std::move(rel)) {
    if (!is_left_adjoint(rel_))
      throw DomainError("relation is not a left adjoint");
  }

  static LAdjMor graph_of(const FinFn& f) { return LAdjMor(rel_graph(f)); }
  static LAdjMor identity(Ordinal n) { return LAdjMor(rel_identity(n)); }

  const Relation& rel() const noexcept { return rel_; }
  Ordinal dom() const noexcept { return rel_.src(); }
  Ordinal cod() const noexcept { return rel_.dst(); }
  FinFn function() const { return function_of(rel_); }

  /// The right adjoint, which is the converse.
  Relation adjoint() const { return rel_converse(rel_); }

  friend bool operator==(const LAdjMor&, const LAdjMor&) = default;

 private:
  Relation rel_;
};

inline LAdjMor ladj_compose(const LAdjMor& f, const LAdjMor& g) {
  return LAdjMor(rel_compose(f.rel(), g.rel()));
}

inline LAdjMor ladj_tensor(const LAdjMor& f, const LAdjMor& g) {
  return LAdjMor(rel_tensor(f.rel(), g.rel()));
}

/// The unique map to the terminal object 1, epsilon_r.
inline LAdjMor ladj_terminal(Ordinal r) {
  return LAdjMor(supply(r, Gen::epsilon));
}

inline LAdjMor ladj_diagonal(Ordinal r) {
  return LAdjMor(supply(r, Gen::delta));
}

struct LAdjProduct {
  Ordinal obj;
  LAdjMor proj1;
  LAdjMor proj2;
};

/// Projections id_r (x) eps_s and eps_r (x) id_s.
inline LAdjProduct ladj_product(Ordinal r, Ordinal s) {
  return {Ordinal{r.size * s.size},
          LAdjMor(rel_tensor(rel_identity(r), supply(s, Gen::epsilon))),
          LAdjMor(rel_tensor(supply(r, Gen::epsilon), rel_identity(s)))};
}

/// <f, g> = delta ; (f (x) g).
inline LAdjMor ladj_pairing(const LAdjMor& f, const LAdjMor& g) {
  if (f.dom() != g.dom()) throw TypeError("pairing needs a common domain");
  return LAdjMor(rel_compose(supply(f.dom(), Gen::delta),
                             rel_tensor(f.rel(), g.rel())));
}

struct LAdjPullback {
  Ordinal apex;
  LAdjMor p1;
  LAdjMor p2;
};

/// Tabulation of g1 ; g2^dagger.
inline LAdjPullback ladj_pullback(const LAdjMor& g1, const LAdjMor& g2) {
  if (g1.cod() != g2.cod())
    throw TypeError("pullback needs a common codomain");
  Tabulation t = tabulate(rel_compose(g1.rel(), g2.adjoint()));
  return {t.apex, LAdjMor(rel_converse(t.right_leg)), LAdjMor(t.left_leg)};
}

struct Restriction {
  LAdjMor restricted;  // s -> |x|
  LAdjMor inclusion;   // x_L : |x| -> r, a mono
};

/// Corestricts f : s -> r through the subobject |x| of r named by
/// x : 1 -/-> r, provided eta_s ; f <= x.
inline Restriction ladj_restrict(const LAdjMor& f, const Relation& x) {
  if (x.src() != Ordinal{1} || x.dst() != f.cod())
    throw TypeError("subobject must be a relation 1 -/-> codomain");
  Relation image = rel_compose(supply(f.dom(), Gen::eta), f.rel());
  if (!rel_leq(image, x))
    throw DomainError("image of f is not contained in the subobject");
  Tabulation t = tabulate(x);
  LAdjMor incl(t.left_leg);
  return {LAdjMor(rel_compose(f.rel(), incl.adjoint())), incl};
}

struct LAdjFactorization {
  LAdjMor epi;
  LAdjMor mono;
};

/// Restriction to x = eta ; f, with the image relabelled by first occurrence
/// (the same normal form as finset's image_factorize).
inline LAdjFactorization ladj_image_factorize(const LAdjMor& f) {
  Relation x = rel_compose(supply(f.dom(), Gen::eta), f.rel());
  Restriction r = ladj_restrict(f, x);
  Factorization relabel = image_factorize(r.restricted.function());
  // relabel.mono is a bijection |x| -> |x| here since r.restricted is onto.
  LAdjMor iso = LAdjMor::graph_of(relabel.mono);
  return {LAdjMor::graph_of(relabel.epi), ladj_compose(iso, r.inclusion)};
}

struct LAdjClass {
  bool mono = false;
  bool extremal_epi = false;

  friend bool operator==(const LAdjClass&, const LAdjClass&) = default;
};

inline LAdjClass ladj_classify(const LAdjMor& f) {
  LAdjClass c;
  c.mono = rel_compose(f.rel(), f.adjoint()) == rel_identity(f.dom());
  c.extremal_epi = rel_leq(rel_identity(f.cod()),
                           rel_compose(f.adjoint(), f.rel()));
  return c;
}

inline std::vector<LAdjMor> all_left_adjoints(Ordinal a, Ordinal b) {
  std::vector<LAdjMor> out;
  for (const FinFn& f : all_functions(a, b)) out.push_back(LAdjMor::graph_of(f));
  return out;
}

}  // namespace relcalc
