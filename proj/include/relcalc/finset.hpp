#pragma once

// Skeletal finite sets {0,...,n-1} and total functions between them, with the
// finite limits, pushouts and epi-mono factorization that make FinSet regular.
// Composition is written in diagrammatic order: compose(f, g) is "f then g".

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/union_find.hpp"

namespace relcalc {

struct Ordinal {
  std::size_t size = 0;

  constexpr Ordinal() = default;
  constexpr explicit Ordinal(std::size_t n) : size(n) {}

  friend constexpr auto operator<=>(const Ordinal&, const Ordinal&) = default;
};

inline std::string to_string(Ordinal o) { return std::to_string(o.size); }

/// Row-major encoding of the pair (i, j) in a x b as i*|b| + j. Every module
/// that tensors objects uses this encoding.
constexpr std::size_t encode_pair(std::size_t i, std::size_t j, Ordinal b) {
  return i * b.size + j;
}

constexpr std::pair<std::size_t, std::size_t> decode_pair(std::size_t code,
                                                          Ordinal b) {
  return {code / b.size, code % b.size};
}

class FinFn {
 public:
  FinFn() = default;

  FinFn(Ordinal dom, Ordinal cod, std::vector<std::size_t> table)
      : dom_(dom), cod_(cod), table_(std::move(table)) {
    if (table_.size() != dom_.size)
      throw TypeError("function table has length " +
                      std::to_string(table_.size()) + " but domain is " +
                      to_string(dom_));
    for (std::size_t v : table_)
      if (v >= cod_.size)
        throw TypeError("function value " + std::to_string(v) +
                        " outside codomain " + to_string(cod_));
  }

  /// Domain is inferred from the table length.
  static FinFn from_table(std::size_t cod, std::vector<std::size_t> table) {
    Ordinal dom{table.size()};
    return FinFn(dom, Ordinal{cod}, std::move(table));
  }

  static FinFn identity(Ordinal n) {
    std::vector<std::size_t> t(n.size);
    for (std::size_t i = 0; i < n.size; ++i) t[i] = i;
    return FinFn(n, n, std::move(t));
  }

  Ordinal dom() const noexcept { return dom_; }
  Ordinal cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t i) const { return table_.at(i); }

  friend bool operator==(const FinFn&, const FinFn&) = default;

 private:
  Ordinal dom_{};
  Ordinal cod_{};
  std::vector<std::size_t> table_;
};

inline FinFn compose(const FinFn& f, const FinFn& g) {
  if (f.cod() != g.dom())
    throw TypeError("cannot compose " + to_string(f.dom()) + "->" +
                    to_string(f.cod()) + " with " + to_string(g.dom()) + "->" +
                    to_string(g.cod()));
  std::vector<std::size_t> t(f.dom().size);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table()[f.table()[i]];
  return FinFn(f.dom(), g.cod(), std::move(t));
}

struct FnClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;

  friend bool operator==(const FnClass&, const FnClass&) = default;
};

inline FnClass classify(const FinFn& f) {
  std::vector<std::size_t> hits(f.cod().size, 0);
  for (std::size_t v : f.table()) ++hits[v];
  FnClass c;
  c.mono = std::all_of(hits.begin(), hits.end(),
                       [](std::size_t h) { return h <= 1; });
  c.epi = std::all_of(hits.begin(), hits.end(),
                      [](std::size_t h) { return h >= 1; });
  c.iso = c.mono && c.epi;
  return c;
}

struct Factorization {
  Ordinal mid;
  FinFn epi;   // dom -> mid, surjective
  FinFn mono;  // mid -> cod, injective
};

/// Image elements are numbered by first occurrence in f's table.
inline Factorization image_factorize(const FinFn& f) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(f.cod().size, unset);
  std::vector<std::size_t> epi(f.dom().size);
  std::vector<std::size_t> mono;
  for (std::size_t i = 0; i < f.dom().size; ++i) {
    std::size_t v = f.table()[i];
    if (slot[v] == unset) {
      slot[v] = mono.size();
      mono.push_back(v);
    }
    epi[i] = slot[v];
  }
  Ordinal mid{mono.size()};
  return {mid, FinFn(f.dom(), mid, std::move(epi)),
          FinFn(mid, f.cod(), std::move(mono))};
}

struct Product {
  Ordinal obj;
  FinFn proj1;
  FinFn proj2;
};

inline Product product(Ordinal a, Ordinal b) {
  Ordinal obj{a.size * b.size};
  std::vector<std::size_t> p1(obj.size), p2(obj.size);
  for (std::size_t i = 0; i < a.size; ++i)
    for (std::size_t j = 0; j < b.size; ++j) {
      p1[encode_pair(i, j, b)] = i;
      p2[encode_pair(i, j, b)] = j;
    }
  return {obj, FinFn(obj, a, std::move(p1)), FinFn(obj, b, std::move(p2))};
}

/// The mediating map <f, g> into product(f.cod, g.cod).
inline FinFn pairing(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom())
    throw TypeError("pairing needs a common domain");
  std::vector<std::size_t> t(f.dom().size);
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = encode_pair(f.table()[i], g.table()[i], g.cod());
  return FinFn(f.dom(), Ordinal{f.cod().size * g.cod().size}, std::move(t));
}

/// f x g : a x c -> b x d.
inline FinFn fn_tensor(const FinFn& f, const FinFn& g) {
  Ordinal dom{f.dom().size * g.dom().size};
  std::vector<std::size_t> t(dom.size);
  for (std::size_t i = 0; i < f.dom().size; ++i)
    for (std::size_t j = 0; j < g.dom().size; ++j)
      t[encode_pair(i, j, g.dom())] =
          encode_pair(f.table()[i], g.table()[j], g.cod());
  return FinFn(dom, Ordinal{f.cod().size * g.cod().size}, std::move(t));
}

struct Equalizer {
  Ordinal obj;
  FinFn incl;
};

inline Equalizer equalizer(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw TypeError("equalizer needs parallel functions");
  std::vector<std::size_t> agree;
  for (std::size_t i = 0; i < f.dom().size; ++i)
    if (f.table()[i] == g.table()[i]) agree.push_back(i);
  Ordinal obj{agree.size()};
  return {obj, FinFn(obj, f.dom(), std::move(agree))};
}

struct Pullback {
  Ordinal apex;
  FinFn p1;
  FinFn p2;
};

/// Apex enumerates the pairs (i, j) with f(i) = g(j) lexicographically.
inline Pullback pullback(const FinFn& f, const FinFn& g) {
  if (f.cod() != g.cod())
    throw TypeError("pullback needs a common codomain");
  std::vector<std::vector<std::size_t>> fibre(g.cod().size);
  for (std::size_t j = 0; j < g.dom().size; ++j)
    fibre[g.table()[j]].push_back(j);
  std::vector<std::size_t> p1, p2;
  for (std::size_t i = 0; i < f.dom().size; ++i)
    for (std::size_t j : fibre[f.table()[i]]) {
      p1.push_back(i);
      p2.push_back(j);
    }
  Ordinal apex{p1.size()};
  return {apex, FinFn(apex, f.dom(), std::move(p1)),
          FinFn(apex, g.dom(), std::move(p2))};
}

struct Pushout {
  Ordinal apex;
  FinFn q1;
  FinFn q2;
};

/// Apex is (f.cod + g.cod) modulo f(x) ~ g(x); classes are numbered by their
/// smallest member of the disjoint union, f.cod first.
inline Pushout pushout(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom())
    throw TypeError("pushout needs a common domain");
  const std::size_t left = f.cod().size;
  UnionFind uf(left + g.cod().size);
  for (std::size_t x = 0; x < f.dom().size; ++x)
    uf.unite(f.table()[x], left + g.table()[x]);
  std::vector<std::size_t> labels = uf.canonical_labels();
  std::size_t classes =
      labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  Ordinal apex{classes};
  std::vector<std::size_t> q1(labels.begin(), labels.begin() + left);
  std::vector<std::size_t> q2(labels.begin() + left, labels.end());
  return {apex, FinFn(f.cod(), apex, std::move(q1)),
          FinFn(g.cod(), apex, std::move(q2))};
}

/// Every function a -> b, in lexicographic order of tables.
inline std::vector<FinFn> all_functions(Ordinal a, Ordinal b) {
  std::vector<FinFn> out;
  if (b.size == 0 && a.size > 0) return out;
  std::vector<std::size_t> t(a.size, 0);
  while (true) {
    out.emplace_back(a, b, t);
    std::size_t k = a.size;
    while (k > 0) {
      --k;
      if (++t[k] < b.size) break;
      t[k] = 0;
      if (k == 0) return out;
    }
    if (a.size == 0) return out;
  }
}

}  // namespace relcalc
