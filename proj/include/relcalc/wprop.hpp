#pragma once

// Morphisms of the wiring po-prop W. A morphism m -> n with m + n >= 1 is an
// equivalence relation on the boundary points i0..i(m-1), o0..o(n-1); the
// hom W(0,0) has exactly two elements, the empty cospan (identity) and the
// floating point (eta ; epsilon), with point <= empty.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/finset.hpp"
#include "relcalc/union_find.hpp"

namespace relcalc {

enum class ZeroApex { empty, point };

class WMor {
 public:
  using Block = std::vector<std::size_t>;

  /// From an arbitrary block labelling of the m+n boundary points; the
  /// labelling is canonicalized (classes renumbered by least element).
  static WMor from_labels(std::size_t m, std::size_t n,
                          const std::vector<std::size_t>& labels) {
    if (m + n == 0)
      throw TypeError("a 0 -> 0 wiring must be given as a ZeroZero apex");
    if (labels.size() != m + n)
      throw TypeError("expected " + std::to_string(m + n) +
                      " boundary labels, got " +
                      std::to_string(labels.size()));
    WMor w;
    w.m_ = m;
    w.n_ = n;
    w.labels_ = canonicalize(labels);
    return w;
  }

  /// From explicit blocks over indices 0..m+n-1 (inputs first).
  static WMor from_blocks(std::size_t m, std::size_t n,
                          const std::vector<Block>& blocks) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(m + n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw TypeError("blocks must be nonempty");
      for (std::size_t idx : blocks[b]) {
        if (idx >= m + n)
          throw TypeError("boundary index " + std::to_string(idx) +
                          " out of range");
        if (labels[idx] != unset)
          throw TypeError("boundary index " + std::to_string(idx) +
                          " appears in two blocks");
        labels[idx] = b;
      }
    }
    for (std::size_t l : labels)
      if (l == unset) throw TypeError("blocks do not cover the boundary");
    return from_labels(m, n, labels);
  }

  static WMor zero(ZeroApex apex) {
    WMor w;
    w.apex_ = apex;
    return w;
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  bool is_zero_zero() const noexcept { return m_ + n_ == 0; }
  ZeroApex apex() const noexcept { return apex_; }

  /// Canonical block label of each boundary point (empty for 0 -> 0).
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }

  std::size_t block_count() const noexcept {
    return labels_.empty()
               ? 0
               : *std::max_element(labels_.begin(), labels_.end()) + 1;
  }

  std::vector<Block> blocks() const {
    std::vector<Block> out(block_count());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      out[labels_[i]].push_back(i);
    return out;
  }

  friend bool operator==(const WMor&, const WMor&) = default;

 private:
  WMor() = default;

  static std::vector<std::size_t> canonicalize(
      const std::vector<std::size_t>& labels) {
    std::vector<std::size_t> out(labels.size());
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](const auto& p) { return p.first == labels[i]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[i], seen.size());
        out[i] = seen.size() - 1;
      } else {
        out[i] = it->second;
      }
    }
    return out;
  }

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::size_t> labels_;
  ZeroApex apex_ = ZeroApex::empty;
};

/// Boundary label "i3" / "o0" for index idx of an m -> n wiring.
inline std::string boundary_name(std::size_t idx, std::size_t m) {
  return idx < m ? "i" + std::to_string(idx) : "o" + std::to_string(idx - m);
}

enum class Gen { epsilon, delta, eta, mu, identity, swap };

inline WMor w_identity(std::size_t k) {
  if (k == 0) return WMor::zero(ZeroApex::empty);
  std::vector<std::size_t> labels(2 * k);
  for (std::size_t t = 0; t < k; ++t) labels[t] = labels[k + t] = t;
  return WMor::from_labels(k, k, labels);
}

/// `k` is only read for Gen::identity.
inline WMor w_generator(Gen kind, std::size_t k = 0) {
  switch (kind) {
    case Gen::epsilon: return WMor::from_labels(1, 0, {0});
    case Gen::delta: return WMor::from_labels(1, 2, {0, 0, 0});
    case Gen::eta: return WMor::from_labels(0, 1, {0});
    case Gen::mu: return WMor::from_labels(2, 1, {0, 0, 0});
    case Gen::identity: return w_identity(k);
    case Gen::swap: return WMor::from_labels(2, 2, {0, 1, 1, 0});
  }
  throw DomainError("unknown generator");
}

/// f ; g. Classes living only on the shared middle boundary are dropped when
/// the composite has a nonempty boundary.
inline WMor w_compose(const WMor& f, const WMor& g) {
  if (f.n() != g.m())
    throw TypeError("cannot compose " + std::to_string(f.m()) + "->" +
                    std::to_string(f.n()) + " with " + std::to_string(g.m()) +
                    "->" + std::to_string(g.n()));
  const std::size_t m = f.m(), n = f.n(), k = g.n();
  if (m + k == 0) {
    bool empty = n == 0 && f.apex() == ZeroApex::empty &&
                 g.apex() == ZeroApex::empty;
    return WMor::zero(empty ? ZeroApex::empty : ZeroApex::point);
  }
  // Points: f inputs [0,m), shared middle [m,m+n), g outputs [m+n,m+n+k).
  UnionFind uf(m + n + k);
  auto unite_blocks = [&](const WMor& w, std::size_t offset) {
    std::vector<std::size_t> first(w.block_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < w.labels().size(); ++i) {
      std::size_t b = w.labels()[i];
      if (first[b] == static_cast<std::size_t>(-1))
        first[b] = offset + i;
      else
        uf.unite(first[b], offset + i);
    }
  };
  unite_blocks(f, 0);
  unite_blocks(g, m);
  std::vector<std::size_t> labels;
  labels.reserve(m + k);
  for (std::size_t i = 0; i < m; ++i) labels.push_back(uf.find(i));
  for (std::size_t i = 0; i < k; ++i) labels.push_back(uf.find(m + n + i));
  return WMor::from_labels(m, k, labels);
}

inline WMor w_tensor(const WMor& f, const WMor& g) {
  if (f.is_zero_zero() && g.is_zero_zero()) {
    bool point = f.apex() == ZeroApex::point || g.apex() == ZeroApex::point;
    return WMor::zero(point ? ZeroApex::point : ZeroApex::empty);
  }
  // A floating point next to a nonempty boundary is identified away.
  if (f.is_zero_zero()) return g;
  if (g.is_zero_zero()) return f;
  const std::size_t m1 = f.m(), n1 = f.n(), m2 = g.m(), n2 = g.n();
  const std::size_t shift = f.block_count();
  std::vector<std::size_t> labels;
  labels.reserve(m1 + m2 + n1 + n2);
  for (std::size_t i = 0; i < m1; ++i) labels.push_back(f.labels()[i]);
  for (std::size_t i = 0; i < m2; ++i) labels.push_back(shift + g.labels()[i]);
  for (std::size_t i = 0; i < n1; ++i) labels.push_back(f.labels()[m1 + i]);
  for (std::size_t i = 0; i < n2; ++i)
    labels.push_back(shift + g.labels()[m2 + i]);
  return WMor::from_labels(m1 + m2, n1 + n2, labels);
}

/// Transpose: inputs and outputs trade places.
inline WMor w_dagger(const WMor& f) {
  if (f.is_zero_zero()) return f;
  const std::size_t m = f.m(), n = f.n();
  std::vector<std::size_t> labels;
  labels.reserve(m + n);
  for (std::size_t t = 0; t < n; ++t) labels.push_back(f.labels()[m + t]);
  for (std::size_t t = 0; t < m; ++t) labels.push_back(f.labels()[t]);
  return WMor::from_labels(n, m, labels);
}

/// f <= g iff g's partition refines f's (coarser wiring is smaller).
inline bool w_leq(const WMor& f, const WMor& g) {
  if (f.m() != g.m() || f.n() != g.n())
    throw TypeError("cannot order wirings of different types");
  if (f.is_zero_zero())
    return f.apex() == g.apex() || f.apex() == ZeroApex::point;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(g.block_count(), unset);
  for (std::size_t i = 0; i < g.labels().size(); ++i) {
    std::size_t& slot = image[g.labels()[i]];
    if (slot == unset)
      slot = f.labels()[i];
    else if (slot != f.labels()[i])
      return false;
  }
  return true;
}

/// Poset reflection of the cospan m -left-> p <-right- n.
inline WMor w_from_cospan(const FinFn& left, const FinFn& right) {
  if (left.cod() != right.cod())
    throw TypeError("cospan legs need a common apex");
  const std::size_t m = left.dom().size, n = right.dom().size;
  if (m + n == 0)
    return WMor::zero(left.cod().size == 0 ? ZeroApex::empty : ZeroApex::point);
  std::vector<std::size_t> labels(left.table());
  labels.insert(labels.end(), right.table().begin(), right.table().end());
  return WMor::from_labels(m, n, labels);
}

/// Every partition of m+n boundary points (both elements when m = n = 0),
/// enumerated as restricted growth strings.
inline std::vector<WMor> all_wirings(std::size_t m, std::size_t n) {
  if (m + n == 0)
    return {WMor::zero(ZeroApex::empty), WMor::zero(ZeroApex::point)};
  std::vector<WMor> out;
  const std::size_t p = m + n;
  std::vector<std::size_t> rgs(p, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_label) -> void {
    if (i == p) {
      out.push_back(WMor::from_labels(m, n, rgs));
      return;
    }
    for (std::size_t l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

}  // namespace relcalc
