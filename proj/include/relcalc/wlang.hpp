#pragma once

// Wiring terms: expressions over the generators of W, parsed from text,
// type-checked, and evaluated to normal form. Since the normal form is a
// complete invariant, equality and order of string diagrams are decided by
// comparing normal forms.
//
// Grammar ("*" binds tighter than ";", both left-associative):
//   term   := factor (";" factor)*
//   factor := atom ("*" atom)*
//   atom   := "e" | "d" | "n" | "m" | "sw" | "id" NAT | "(" term ")"

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/wprop.hpp"

namespace relcalc {

class WiringTerm {
 public:
  enum class Kind { eps, delta, eta, mu, swap, id, seq, par };

  static WiringTerm atom(Kind kind, std::size_t k = 0) {
    switch (kind) {
      case Kind::eps: return WiringTerm(kind, 0, 1, 0, nullptr, nullptr);
      case Kind::delta: return WiringTerm(kind, 0, 1, 2, nullptr, nullptr);
      case Kind::eta: return WiringTerm(kind, 0, 0, 1, nullptr, nullptr);
      case Kind::mu: return WiringTerm(kind, 0, 2, 1, nullptr, nullptr);
      case Kind::swap: return WiringTerm(kind, 0, 2, 2, nullptr, nullptr);
      case Kind::id: return WiringTerm(kind, k, k, k, nullptr, nullptr);
      default: throw DomainError("not an atom");
    }
  }

  static WiringTerm id(std::size_t k) { return atom(Kind::id, k); }

  static WiringTerm seq(const WiringTerm& a, const WiringTerm& b) {
    if (a.n() != b.m())
      throw TypeError("type error in " + a.to_string() + " ; " +
                      b.to_string() + ": left side is " +
                      std::to_string(a.m()) + "->" + std::to_string(a.n()) +
                      ", right side is " + std::to_string(b.m()) + "->" +
                      std::to_string(b.n()));
    return WiringTerm(Kind::seq, 0, a.m(), b.n(),
                      std::make_shared<const WiringTerm>(a),
                      std::make_shared<const WiringTerm>(b));
  }

  static WiringTerm par(const WiringTerm& a, const WiringTerm& b) {
    return WiringTerm(Kind::par, 0, a.m() + b.m(), a.n() + b.n(),
                      std::make_shared<const WiringTerm>(a),
                      std::make_shared<const WiringTerm>(b));
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t id_width() const noexcept { return k_; }
  bool is_atom() const noexcept { return lhs_ == nullptr; }
  const WiringTerm& lhs() const { return *lhs_; }
  const WiringTerm& rhs() const { return *rhs_; }

  std::size_t depth() const {
    return is_atom() ? 0 : 1 + std::max(lhs_->depth(), rhs_->depth());
  }

  /// Canonical, fully parenthesized text.
  std::string to_string() const {
    switch (kind_) {
      case Kind::eps: return "e";
      case Kind::delta: return "d";
      case Kind::eta: return "n";
      case Kind::mu: return "m";
      case Kind::swap: return "sw";
      case Kind::id: return "id" + std::to_string(k_);
      case Kind::seq:
        return "(" + lhs_->to_string() + " ; " + rhs_->to_string() + ")";
      case Kind::par:
        return "(" + lhs_->to_string() + " * " + rhs_->to_string() + ")";
    }
    return {};
  }

  friend bool operator==(const WiringTerm& a, const WiringTerm& b) {
    if (a.kind_ != b.kind_ || a.k_ != b.k_ || a.m_ != b.m_ || a.n_ != b.n_)
      return false;
    if (a.is_atom()) return true;
    return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
  }

 private:
  WiringTerm(Kind kind, std::size_t k, std::size_t m, std::size_t n,
             std::shared_ptr<const WiringTerm> lhs,
             std::shared_ptr<const WiringTerm> rhs)
      : kind_(kind), k_(k), m_(m), n_(n), lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  Kind kind_;
  std::size_t k_;
  std::size_t m_;
  std::size_t n_;
  std::shared_ptr<const WiringTerm> lhs_;
  std::shared_ptr<const WiringTerm> rhs_;
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  WiringTerm parse() {
    WiringTerm t = term();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WiringTerm term() {
    WiringTerm t = factor();
    while (accept(';')) t = WiringTerm::seq(t, factor());
    return t;
  }

  WiringTerm factor() {
    WiringTerm t = atom();
    while (accept('*')) t = WiringTerm::par(t, atom());
    return t;
  }

  WiringTerm atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    if (accept('(')) {
      WiringTerm t = term();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return t;
    }
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    using K = WiringTerm::Kind;
    if (word == "e") return WiringTerm::atom(K::eps);
    if (word == "d") return WiringTerm::atom(K::delta);
    if (word == "n") return WiringTerm::atom(K::eta);
    if (word == "m") return WiringTerm::atom(K::mu);
    if (word == "sw") return WiringTerm::atom(K::swap);
    if (word == "id") {
      skip_ws();
      const std::size_t digits = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (digits == pos_) throw ParseError(pos_, "expected width after 'id'");
      std::size_t k = 0;
      for (std::size_t i = digits; i < pos_; ++i) {
        k = k * 10 + static_cast<std::size_t>(text_[i] - '0');
        if (k > 64) throw ParseError(digits, "identity width too large");
      }
      return WiringTerm::id(k);
    }
    if (word.empty())
      throw ParseError(start, "unexpected '" + std::string(1, text_[start]) + "'");
    throw ParseError(start, "unknown generator '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError on malformed text and TypeError on ill-typed terms.
inline WiringTerm parse_term(std::string_view text) {
  return detail::TermParser(text).parse();
}

inline WMor eval_term(const WiringTerm& t) {
  using K = WiringTerm::Kind;
  switch (t.kind()) {
    case K::eps: return w_generator(Gen::epsilon);
    case K::delta: return w_generator(Gen::delta);
    case K::eta: return w_generator(Gen::eta);
    case K::mu: return w_generator(Gen::mu);
    case K::swap: return w_generator(Gen::swap);
    case K::id: return w_identity(t.id_width());
    case K::seq: return w_compose(eval_term(t.lhs()), eval_term(t.rhs()));
    case K::par: return w_tensor(eval_term(t.lhs()), eval_term(t.rhs()));
  }
  throw DomainError("unknown term node");
}

enum class Comparison { equal, strictly_less, strictly_greater, incomparable };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::strictly_less: return "strictly_less";
    case Comparison::strictly_greater: return "strictly_greater";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

inline Comparison compare_wirings(const WMor& a, const WMor& b) {
  const bool le = w_leq(a, b), ge = w_leq(b, a);
  if (le && ge) return Comparison::equal;
  if (le) return Comparison::strictly_less;
  if (ge) return Comparison::strictly_greater;
  return Comparison::incomparable;
}

inline Comparison compare_terms(const WiringTerm& a, const WiringTerm& b) {
  if (a.m() != b.m() || a.n() != b.n())
    throw TypeError("cannot compare " + std::to_string(a.m()) + "->" +
                    std::to_string(a.n()) + " with " + std::to_string(b.m()) +
                    "->" + std::to_string(b.n()));
  return compare_wirings(eval_term(a), eval_term(b));
}

// ---------------------------------------------------------------------------
// Synthesis: a term for every normal form.

namespace detail {

inline WiringTerm seq_all(const std::vector<WiringTerm>& layers,
                          std::size_t width) {
  if (layers.empty()) return WiringTerm::id(width);
  WiringTerm t = layers.front();
  for (std::size_t i = 1; i < layers.size(); ++i) t = WiringTerm::seq(t, layers[i]);
  return t;
}

/// Tensor of the given terms, treating an empty list as id0. Runs of
/// identities are fused into one.
inline WiringTerm par_all(const std::vector<WiringTerm>& parts) {
  using K = WiringTerm::Kind;
  std::vector<WiringTerm> fused;
  for (const WiringTerm& p : parts) {
    if (p.kind() == K::id && !fused.empty() && fused.back().kind() == K::id)
      fused.back() = WiringTerm::id(fused.back().id_width() + p.id_width());
    else
      fused.push_back(p);
  }
  if (fused.empty()) return WiringTerm::id(0);
  WiringTerm t = fused.front();
  for (std::size_t i = 1; i < fused.size(); ++i) t = WiringTerm::par(t, fused[i]);
  return t;
}

/// id_left * sw * id_right, omitting zero-width identities.
inline WiringTerm swap_layer(std::size_t pos, std::size_t width) {
  std::vector<WiringTerm> parts;
  if (pos > 0) parts.push_back(WiringTerm::id(pos));
  parts.push_back(WiringTerm::atom(WiringTerm::Kind::swap));
  if (width > pos + 2) parts.push_back(WiringTerm::id(width - pos - 2));
  return par_all(parts);
}

/// Wire network that moves the wire at position i to position rank[i], as
/// the adjacent transpositions of a bubble sort.
inline WiringTerm permutation_term(std::vector<std::size_t> rank) {
  const std::size_t width = rank.size();
  std::vector<WiringTerm> layers;
  for (std::size_t pass = 0; pass < width; ++pass)
    for (std::size_t i = 0; i + 1 < width; ++i)
      if (rank[i] > rank[i + 1]) {
        std::swap(rank[i], rank[i + 1]);
        layers.push_back(swap_layer(i, width));
      }
  return seq_all(layers, width);
}

/// a -> 1 by a left-leaning tree of mu's (eta when a = 0).
inline WiringTerm gather_tree(std::size_t a) {
  using K = WiringTerm::Kind;
  if (a == 0) return WiringTerm::atom(K::eta);
  WiringTerm t = WiringTerm::id(1);
  for (std::size_t k = 2; k <= a; ++k) {
    // t : k-1 -> 1; extend to k -> 1.
    WiringTerm head = WiringTerm::atom(K::mu);
    if (k > 2) head = WiringTerm::par(head, WiringTerm::id(k - 2));
    t = k == 2 ? head : WiringTerm::seq(head, t);
  }
  return t;
}

/// 1 -> c by a tree of delta's (epsilon when c = 0).
inline WiringTerm scatter_tree(std::size_t c) {
  using K = WiringTerm::Kind;
  if (c == 0) return WiringTerm::atom(K::eps);
  WiringTerm t = WiringTerm::id(1);
  for (std::size_t k = 2; k <= c; ++k) {
    WiringTerm tail = WiringTerm::atom(K::delta);
    if (k > 2) tail = WiringTerm::par(tail, WiringTerm::id(k - 2));
    t = k == 2 ? tail : WiringTerm::seq(t, tail);
  }
  return t;
}

}  // namespace detail

/// A term whose evaluation is w: permute inputs into block order, merge each
/// block's inputs, split to its outputs, permute outputs into place.
inline WiringTerm synthesize_term(const WMor& w) {
  using K = WiringTerm::Kind;
  if (w.is_zero_zero()) {
    if (w.apex() == ZeroApex::empty) return WiringTerm::id(0);
    return WiringTerm::seq(WiringTerm::atom(K::eta), WiringTerm::atom(K::eps));
  }
  const std::size_t m = w.m();
  const auto blocks = w.blocks();

  // Inputs: position in block-grouped order of each original input.
  std::vector<std::size_t> in_rank(m), out_order;
  std::vector<WiringTerm> gathers, scatters;
  std::size_t next_in = 0;
  for (const auto& block : blocks) {
    std::size_t ins = 0, outs = 0;
    for (std::size_t idx : block) {
      if (idx < m) {
        in_rank[idx] = next_in++;
        ++ins;
      } else {
        out_order.push_back(idx - m);
        ++outs;
      }
    }
    gathers.push_back(detail::gather_tree(ins));
    scatters.push_back(detail::scatter_tree(outs));
  }

  // Output wire at grouped position p belongs at position out_order[p].
  std::vector<WiringTerm> layers;
  for (WiringTerm layer : {detail::permutation_term(in_rank), detail::par_all(gathers),
                           detail::par_all(scatters), detail::permutation_term(out_order)})
    if (layer.kind() != K::id) layers.push_back(std::move(layer));
  return detail::seq_all(layers, m);
}

}  // namespace relcalc
