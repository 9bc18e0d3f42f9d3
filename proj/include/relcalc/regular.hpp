#pragma once

// A minimal interface to a finitely complete category with image
// factorizations, and the relations construction over it: relations are
// jointly-monic spans, composed by pullback followed by image.
//
// Two instances ship: FinSetOps (functions) and LAdjOps (left adjoint
// relations). Running rel_over on LAdjOps builds Rel(LAdj(Rel(FinSet))).

#include <concepts>
#include <cstddef>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/finset.hpp"
#include "relcalc/ladj.hpp"
#include "relcalc/rel.hpp"

namespace relcalc {

template <class Obj, class Mor>
struct Cone {
  Obj apex;
  Mor first;
  Mor second;
};

template <class Mor>
struct EpiMono {
  Mor epi;
  Mor mono;
};

template <class I>
concept RegularOps = requires(const I& c, const typename I::Object& o,
                              const typename I::Morphism& f) {
  { c.dom(f) } -> std::same_as<typename I::Object>;
  { c.cod(f) } -> std::same_as<typename I::Object>;
  { c.identity(o) } -> std::same_as<typename I::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename I::Morphism>;
  { c.terminal() } -> std::same_as<typename I::Object>;
  { c.to_terminal(o) } -> std::same_as<typename I::Morphism>;
  { c.product(o, o) } -> std::same_as<Cone<typename I::Object, typename I::Morphism>>;
  { c.pairing(f, f) } -> std::same_as<typename I::Morphism>;
  { c.pullback(f, f) } -> std::same_as<Cone<typename I::Object, typename I::Morphism>>;
  { c.image(f) } -> std::same_as<EpiMono<typename I::Morphism>>;
  { c.is_mono(f) } -> std::same_as<bool>;
  { c.is_extremal_epi(f) } -> std::same_as<bool>;
  { c.hom(o, o) } -> std::same_as<std::vector<typename I::Morphism>>;
  { f == f } -> std::convertible_to<bool>;
};

struct FinSetOps {
  using Object = Ordinal;
  using Morphism = FinFn;

  Object dom(const FinFn& f) const { return f.dom(); }
  Object cod(const FinFn& f) const { return f.cod(); }
  FinFn identity(Ordinal o) const { return FinFn::identity(o); }
  FinFn compose(const FinFn& f, const FinFn& g) const { return relcalc::compose(f, g); }
  Object terminal() const { return Ordinal{1}; }
  FinFn to_terminal(Ordinal o) const {
    return FinFn(o, Ordinal{1}, std::vector<std::size_t>(o.size, 0));
  }
  Cone<Ordinal, FinFn> product(Ordinal a, Ordinal b) const {
    Product p = relcalc::product(a, b);
    return {p.obj, p.proj1, p.proj2};
  }
  FinFn pairing(const FinFn& f, const FinFn& g) const { return relcalc::pairing(f, g); }
  Cone<Ordinal, FinFn> pullback(const FinFn& f, const FinFn& g) const {
    Pullback p = relcalc::pullback(f, g);
    return {p.apex, p.p1, p.p2};
  }
  EpiMono<FinFn> image(const FinFn& f) const {
    Factorization fa = image_factorize(f);
    return {fa.epi, fa.mono};
  }
  bool is_mono(const FinFn& f) const { return classify(f).mono; }
  bool is_extremal_epi(const FinFn& f) const { return classify(f).epi; }
  std::vector<FinFn> hom(Ordinal a, Ordinal b) const { return all_functions(a, b); }
};

struct LAdjOps {
  using Object = Ordinal;
  using Morphism = LAdjMor;

  Object dom(const LAdjMor& f) const { return f.dom(); }
  Object cod(const LAdjMor& f) const { return f.cod(); }
  LAdjMor identity(Ordinal o) const { return LAdjMor::identity(o); }
  LAdjMor compose(const LAdjMor& f, const LAdjMor& g) const { return ladj_compose(f, g); }
  Object terminal() const { return Ordinal{1}; }
  LAdjMor to_terminal(Ordinal o) const { return ladj_terminal(o); }
  Cone<Ordinal, LAdjMor> product(Ordinal a, Ordinal b) const {
    LAdjProduct p = ladj_product(a, b);
    return {p.obj, p.proj1, p.proj2};
  }
  LAdjMor pairing(const LAdjMor& f, const LAdjMor& g) const { return ladj_pairing(f, g); }
  Cone<Ordinal, LAdjMor> pullback(const LAdjMor& f, const LAdjMor& g) const {
    LAdjPullback p = ladj_pullback(f, g);
    return {p.apex, p.p1, p.p2};
  }
  EpiMono<LAdjMor> image(const LAdjMor& f) const {
    LAdjFactorization fa = ladj_image_factorize(f);
    return {fa.epi, fa.mono};
  }
  bool is_mono(const LAdjMor& f) const { return ladj_classify(f).mono; }
  bool is_extremal_epi(const LAdjMor& f) const { return ladj_classify(f).extremal_epi; }
  std::vector<LAdjMor> hom(Ordinal a, Ordinal b) const { return all_left_adjoints(a, b); }
};

/// A relation src -/-> dst over an instance: a span src <- apex -> dst.
template <class Obj, class Mor>
struct SpanRel {
  Obj src;
  Obj dst;
  Obj apex;
  Mor left;   // apex -> src
  Mor right;  // apex -> dst
};

template <RegularOps I>
using SpanOf = SpanRel<typename I::Object, typename I::Morphism>;

template <RegularOps I>
SpanOf<I> span_identity(const I& inst, const typename I::Object& o) {
  return {o, o, o, inst.identity(o), inst.identity(o)};
}

template <RegularOps I>
bool jointly_monic(const I& inst, const SpanOf<I>& s) {
  return inst.is_mono(inst.pairing(s.left, s.right));
}

/// Composite of relations: pull back the inner legs, then take the image of
/// the induced map into src x dst.
template <RegularOps I>
SpanOf<I> rel_over(const I& inst, const SpanOf<I>& f, const SpanOf<I>& g) {
  if (!(f.dst == g.src)) throw TypeError("rel_over: spans are not composable");
  auto pb = inst.pullback(f.right, g.left);
  auto outer_left = inst.compose(pb.first, f.left);
  auto outer_right = inst.compose(pb.second, g.right);
  auto prod = inst.product(f.src, g.dst);
  auto img = inst.image(inst.pairing(outer_left, outer_right));
  return {f.src, g.dst, inst.cod(img.epi), inst.compose(img.mono, prod.first),
          inst.compose(img.mono, prod.second)};
}

/// a <= b iff some k : a.apex -> b.apex commutes with both legs.
template <RegularOps I>
bool span_leq(const I& inst, const SpanOf<I>& a, const SpanOf<I>& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw TypeError("span_leq: spans of different types");
  for (const auto& k : inst.hom(a.apex, b.apex))
    if (inst.compose(k, b.left) == a.left && inst.compose(k, b.right) == a.right)
      return true;
  return false;
}

/// The canonical span of a pair set (apex = the pairs in canonical order).
inline SpanRel<Ordinal, FinFn> span_of(const Relation& r) {
  auto legs = detail::legs_of(r);
  return {r.src(), r.dst(), Ordinal{r.size()}, legs.left, legs.right};
}

/// The pair set a FinSet span covers.
inline Relation relation_of(const SpanRel<Ordinal, FinFn>& s) {
  std::vector<Pair> p;
  for (std::size_t t = 0; t < s.apex.size; ++t)
    p.emplace_back(s.left(t), s.right(t));
  return Relation(s.src, s.dst, std::move(p));
}

// The isomorphism j : Rel(FinSet) -> Rel(LAdj(Rel(FinSet))) and its inverse.

inline SpanRel<Ordinal, LAdjMor> j_forward(const Relation& f) {
  Tabulation t = tabulate(f);
  return {f.src(), f.dst(), t.apex, LAdjMor(rel_converse(t.right_leg)),
          LAdjMor(t.left_leg)};
}

inline Relation j_inverse(const SpanRel<Ordinal, LAdjMor>& s) {
  return rel_compose(s.left.adjoint(), s.right.rel());
}

}  // namespace relcalc
