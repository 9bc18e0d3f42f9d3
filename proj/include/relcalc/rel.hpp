#pragma once

// The po-category Rel(FinSet). A relation src -/-> dst is stored as its
// canonical (sorted, duplicate-free) set of pairs, which is the canonical
// representative of a jointly-monic span into src x dst.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/finset.hpp"
#include "relcalc/wprop.hpp"

namespace relcalc {

using Pair = std::pair<std::size_t, std::size_t>;

class Relation {
 public:
  Relation() = default;

  Relation(Ordinal src, Ordinal dst, std::vector<Pair> pairs)
      : src_(src), dst_(dst), pairs_(std::move(pairs)) {
    for (const auto& [i, j] : pairs_)
      if (i >= src_.size || j >= dst_.size)
        throw TypeError("pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ") outside " + to_string(src_) +
                        "x" + to_string(dst_));
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  Relation(std::size_t src, std::size_t dst, std::vector<Pair> pairs)
      : Relation(Ordinal{src}, Ordinal{dst}, std::move(pairs)) {}

  Ordinal src() const noexcept { return src_; }
  Ordinal dst() const noexcept { return dst_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool contains(std::size_t i, std::size_t j) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Ordinal src_{};
  Ordinal dst_{};
  std::vector<Pair> pairs_;
};

inline Relation rel_identity(Ordinal n) {
  std::vector<Pair> p;
  for (std::size_t i = 0; i < n.size; ++i) p.emplace_back(i, i);
  return Relation(n, n, std::move(p));
}

inline Relation rel_empty(Ordinal src, Ordinal dst) {
  return Relation(src, dst, {});
}

inline Relation rel_top(Ordinal src, Ordinal dst) {
  std::vector<Pair> p;
  for (std::size_t i = 0; i < src.size; ++i)
    for (std::size_t j = 0; j < dst.size; ++j) p.emplace_back(i, j);
  return Relation(src, dst, std::move(p));
}

/// Direct route: (i,k) whenever some j has (i,j) in f and (j,k) in g.
inline Relation rel_compose(const Relation& f, const Relation& g) {
  if (f.dst() != g.src())
    throw TypeError("cannot compose relations " + to_string(f.src()) + "->" +
                    to_string(f.dst()) + " and " + to_string(g.src()) + "->" +
                    to_string(g.dst()));
  std::vector<std::vector<std::size_t>> succ(g.src().size);
  for (const auto& [j, k] : g.pairs()) succ[j].push_back(k);
  std::vector<Pair> out;
  for (const auto& [i, j] : f.pairs())
    for (std::size_t k : succ[j]) out.emplace_back(i, k);
  return Relation(f.src(), g.dst(), std::move(out));
}

namespace detail {

struct SpanLegs {
  FinFn left;   // apex -> src
  FinFn right;  // apex -> dst
};

inline SpanLegs legs_of(const Relation& r) {
  std::vector<std::size_t> l, rr;
  for (const auto& [i, j] : r.pairs()) {
    l.push_back(i);
    rr.push_back(j);
  }
  Ordinal apex{r.size()};
  return {FinFn(apex, r.src(), std::move(l)), FinFn(apex, r.dst(), std::move(rr))};
}

}  // namespace detail

/// Categorical route: pull back the inner legs, pair the outer legs into
/// src x dst, and keep the image.
inline Relation rel_compose_categorical(const Relation& f, const Relation& g) {
  if (f.dst() != g.src())
    throw TypeError("cannot compose relations " + to_string(f.src()) + "->" +
                    to_string(f.dst()) + " and " + to_string(g.src()) + "->" +
                    to_string(g.dst()));
  auto [fl, fr] = detail::legs_of(f);
  auto [gl, gr] = detail::legs_of(g);
  Pullback pb = pullback(fr, gl);
  FinFn induced = pairing(compose(pb.p1, fl), compose(pb.p2, gr));
  Factorization img = image_factorize(induced);
  std::vector<Pair> out;
  for (std::size_t code : img.mono.table())
    out.push_back(decode_pair(code, g.dst()));
  return Relation(f.src(), g.dst(), std::move(out));
}

/// Monoidal product on objects src_f x src_g (row-major).
inline Relation rel_tensor(const Relation& f, const Relation& g) {
  std::vector<Pair> out;
  out.reserve(f.size() * g.size());
  for (const auto& [i, j] : f.pairs())
    for (const auto& [i2, j2] : g.pairs())
      out.emplace_back(encode_pair(i, i2, g.src()), encode_pair(j, j2, g.dst()));
  return Relation(Ordinal{f.src().size * g.src().size},
                  Ordinal{f.dst().size * g.dst().size}, std::move(out));
}

inline Relation rel_converse(const Relation& f) {
  std::vector<Pair> out;
  out.reserve(f.size());
  for (const auto& [i, j] : f.pairs()) out.emplace_back(j, i);
  return Relation(f.dst(), f.src(), std::move(out));
}

inline void require_parallel(const Relation& f, const Relation& g,
                             const char* what) {
  if (f.src() != g.src() || f.dst() != g.dst())
    throw TypeError(std::string(what) + " needs relations of the same type");
}

inline bool rel_leq(const Relation& f, const Relation& g) {
  require_parallel(f, g, "rel_leq");
  return std::includes(g.pairs().begin(), g.pairs().end(), f.pairs().begin(),
                       f.pairs().end());
}

inline Relation rel_meet(const Relation& f, const Relation& g) {
  require_parallel(f, g, "rel_meet");
  std::vector<Pair> out;
  std::set_intersection(f.pairs().begin(), f.pairs().end(), g.pairs().begin(),
                        g.pairs().end(), std::back_inserter(out));
  return Relation(f.src(), f.dst(), std::move(out));
}

enum class GraphSide { graph, cograph };

inline Relation rel_graph(const FinFn& f, GraphSide side = GraphSide::graph) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < f.dom().size; ++i)
    out.emplace_back(i, f.table()[i]);
  Relation g(f.dom(), f.cod(), std::move(out));
  return side == GraphSide::graph ? g : rel_converse(g);
}

/// Every relation src -/-> dst, ordered by the bitmask of pairs in row-major
/// order. Only sensible for src*dst well below 32.
inline std::vector<Relation> all_relations(Ordinal src, Ordinal dst) {
  const std::size_t cells = src.size * dst.size;
  if (cells >= 32) throw DomainError("too many relations to enumerate");
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
    std::vector<Pair> p;
    for (std::size_t c = 0; c < cells; ++c)
      if (mask & (std::uint32_t{1} << c)) p.push_back(decode_pair(c, dst));
    out.emplace_back(src, dst, std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Supply of wirings.

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// The relation carrier^m -/-> carrier^n relating (x, y) when the joint
/// coordinate vector of x then y is constant on every block of w.
inline Relation interpret_wiring(Ordinal carrier, const WMor& w) {
  if (w.is_zero_zero()) {
    bool inhabited = w.apex() == ZeroApex::empty || carrier.size >= 1;
    return Relation(1, 1, inhabited ? std::vector<Pair>{{0, 0}}
                                    : std::vector<Pair>{});
  }
  const std::size_t c = carrier.size, m = w.m(), n = w.n();
  const std::size_t blocks = w.block_count();
  Ordinal src{ipow(c, m)}, dst{ipow(c, n)};
  std::vector<Pair> out;
  if (c == 0) return Relation(src, dst, std::move(out));
  std::vector<std::size_t> value(blocks, 0);
  while (true) {
    std::size_t x = 0, y = 0;
    for (std::size_t t = 0; t < m; ++t) x = x * c + value[w.labels()[t]];
    for (std::size_t t = 0; t < n; ++t) y = y * c + value[w.labels()[m + t]];
    out.emplace_back(x, y);
    std::size_t b = blocks;
    while (b > 0) {
      --b;
      if (++value[b] < c) break;
      value[b] = 0;
      if (b == 0) return Relation(src, dst, std::move(out));
    }
  }
}

inline Relation supply(Ordinal carrier, Gen g, std::size_t k = 0) {
  return interpret_wiring(carrier, w_generator(g, k));
}

/// The bijection carrier_c^m x carrier_d^m -> (c x d)^m interleaving
/// coordinates.
inline FinFn symmetry_shuffle(Ordinal c, Ordinal d, std::size_t m) {
  const std::size_t cm = ipow(c.size, m), dm = ipow(d.size, m);
  const std::size_t cd = c.size * d.size;
  std::vector<std::size_t> t(cm * dm);
  for (std::size_t x = 0; x < cm; ++x)
    for (std::size_t y = 0; y < dm; ++y) {
      std::size_t z = 0, scale = 1, xr = x, yr = y;
      for (std::size_t k = 0; k < m; ++k) {
        z += encode_pair(xr % c.size, yr % d.size, d) * scale;
        xr /= c.size;
        yr /= d.size;
        scale *= cd;
      }
      t[encode_pair(x, y, Ordinal{dm})] = z;
    }
  return FinFn(Ordinal{cm * dm}, Ordinal{ipow(cd, m)}, std::move(t));
}

// ---------------------------------------------------------------------------
// Adjointness.

struct AdjointnessProfile {
  bool h1 = false;  // comultiplication homomorphism
  bool h2 = false;  // counit homomorphism
  bool h3 = false;  // multiplication homomorphism
  bool h4 = false;  // unit homomorphism
  bool a1 = false;  // deterministic
  bool a2 = false;  // total
  bool a3 = false;  // co-deterministic
  bool a4 = false;  // co-total

  friend bool operator==(const AdjointnessProfile&,
                         const AdjointnessProfile&) = default;
};

inline bool is_deterministic(const Relation& f) {
  for (std::size_t k = 1; k < f.size(); ++k)
    if (f.pairs()[k].first == f.pairs()[k - 1].first) return false;
  return true;
}

inline bool is_total(const Relation& f) {
  std::vector<bool> hit(f.src().size, false);
  for (const auto& p : f.pairs()) hit[p.first] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

inline AdjointnessProfile adjointness_profile(const Relation& f) {
  const Ordinal r = f.src(), s = f.dst();
  const Relation fc = rel_converse(f);
  AdjointnessProfile p;
  p.a1 = is_deterministic(f);
  p.a2 = is_total(f);
  p.a3 = is_deterministic(fc);
  p.a4 = is_total(fc);
  p.h1 = rel_compose(f, supply(s, Gen::delta)) ==
         rel_compose(supply(r, Gen::delta), rel_tensor(f, f));
  p.h2 = rel_compose(f, supply(s, Gen::epsilon)) == supply(r, Gen::epsilon);
  p.h3 = rel_compose(rel_tensor(f, f), supply(s, Gen::mu)) ==
         rel_compose(supply(r, Gen::mu), f);
  p.h4 = rel_compose(supply(r, Gen::eta), f) == supply(s, Gen::eta);
  return p;
}

inline bool is_left_adjoint(const Relation& f) {
  return is_deterministic(f) && is_total(f);
}

inline bool is_right_adjoint(const Relation& f) {
  return is_left_adjoint(rel_converse(f));
}

/// The function whose graph is f.
inline FinFn function_of(const Relation& f) {
  if (!is_left_adjoint(f))
    throw DomainError("relation is not the graph of a function");
  std::vector<std::size_t> t(f.src().size);
  for (const auto& [i, j] : f.pairs()) t[i] = j;
  return FinFn(f.src(), f.dst(), std::move(t));
}

// ---------------------------------------------------------------------------
// Tabulation.

struct Tabulation {
  Ordinal apex;
  Relation right_leg;  // src -/-> apex, a right adjoint (f_R)
  Relation left_leg;   // apex -/-> dst, a left adjoint (f_L)
  Relation span;       // apex -/-> src x dst, graph of an injection
};

/// Apex element t is the t-th pair of f in canonical order.
inline Tabulation tabulate(const Relation& f) {
  Ordinal apex{f.size()};
  std::vector<Pair> r, l, s;
  for (std::size_t t = 0; t < f.size(); ++t) {
    const auto& [i, j] = f.pairs()[t];
    r.emplace_back(i, t);
    l.emplace_back(t, j);
    s.emplace_back(t, encode_pair(i, j, f.dst()));
  }
  return {apex, Relation(f.src(), apex, std::move(r)),
          Relation(apex, f.dst(), std::move(l)),
          Relation(apex, Ordinal{f.src().size * f.dst().size}, std::move(s))};
}

}  // namespace relcalc
