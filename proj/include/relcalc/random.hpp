#pragma once

// Seeded generators for randomized law checking.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "relcalc/finset.hpp"
#include "relcalc/rel.hpp"
#include "relcalc/wlang.hpp"
#include "relcalc/wprop.hpp"

namespace relcalc {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

/// Requires b > 0 unless a = 0.
inline FinFn random_fn(Rng& rng, Ordinal a, Ordinal b) {
  std::vector<std::size_t> t(a.size);
  for (auto& v : t) v = uniform(rng, 0, b.size - 1);
  return FinFn(a, b, std::move(t));
}

inline Relation random_relation(Rng& rng, Ordinal src, Ordinal dst,
                                double density = 0.5) {
  std::vector<Pair> p;
  for (std::size_t i = 0; i < src.size; ++i)
    for (std::size_t j = 0; j < dst.size; ++j)
      if (coin(rng, density)) p.emplace_back(i, j);
  return Relation(src, dst, std::move(p));
}

/// Random partition of the m+n boundary (a restricted growth string).
inline WMor random_wmor(Rng& rng, std::size_t m, std::size_t n) {
  if (m + n == 0)
    return WMor::zero(coin(rng) ? ZeroApex::point : ZeroApex::empty);
  std::vector<std::size_t> labels(m + n, 0);
  std::size_t top = 0;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    labels[i] = uniform(rng, 0, top + 1);
    if (labels[i] > top) top = labels[i];
  }
  return WMor::from_labels(m, n, labels);
}

namespace detail {

inline WiringTerm random_atom_from(Rng& rng, std::size_t k, std::size_t cap) {
  using K = WiringTerm::Kind;
  switch (k) {
    case 0: return coin(rng, 0.7) ? WiringTerm::atom(K::eta) : WiringTerm::id(0);
    case 1: {
      std::size_t c = uniform(rng, 0, cap >= 2 ? 2 : 1);
      if (c == 0) return WiringTerm::atom(K::eps);
      if (c == 1) return WiringTerm::id(1);
      return WiringTerm::atom(K::delta);
    }
    case 2: {
      std::size_t c = uniform(rng, 0, 2);
      if (c == 0) return WiringTerm::atom(K::mu);
      if (c == 1) return WiringTerm::atom(K::swap);
      return WiringTerm::id(2);
    }
    default: return WiringTerm::id(k);
  }
}

inline WiringTerm random_term_from(Rng& rng, std::size_t k, std::size_t depth,
                                   std::size_t cap) {
  if (depth == 0 || coin(rng, 0.25)) return random_atom_from(rng, k, cap);
  WiringTerm t = WiringTerm::id(k);
  if (coin(rng, 0.6)) {
    WiringTerm a = random_term_from(rng, k, depth - 1, cap);
    WiringTerm b = random_term_from(rng, a.n(), depth - 1, cap);
    t = WiringTerm::seq(a, b);
  } else {
    std::size_t k1 = uniform(rng, 0, k);
    t = WiringTerm::par(random_term_from(rng, k1, depth - 1, cap),
                        random_term_from(rng, k - k1, depth - 1, cap));
  }
  return t.n() <= cap ? t : WiringTerm::id(k);
}

}  // namespace detail

/// Well-typed term of depth <= max_depth whose every intermediate arity is
/// at most cap (cap >= 2).
inline WiringTerm random_term(Rng& rng, std::size_t max_depth, std::size_t cap) {
  return detail::random_term_from(rng, uniform(rng, 0, cap), max_depth, cap);
}

}  // namespace relcalc
