#pragma once

// JSON forms of the library's values. Key order is fixed (ordered_json) so
// the output is byte-stable.
//
//   FinFn      {"dom":n,"cod":m,"table":[...]}
//   WMor       {"m":M,"n":N,"blocks":[["i0","o1"],...]}
//              {"m":0,"n":0,"apex":"empty"|"point"}
//   Relation   {"src":n,"dst":m,"pairs":[[i,j],...]}
//   WiringTerm {"op":"seq"|"par","m":..,"n":..,"lhs":..,"rhs":..}
//              {"op":"gen","name":"e"|"d"|"n"|"m"|"sw","m":..,"n":..}
//              {"op":"id","k":K,"m":K,"n":K}

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/finset.hpp"
#include "relcalc/rel.hpp"
#include "relcalc/wlang.hpp"
#include "relcalc/wprop.hpp"

namespace relcalc {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::size_t get_size(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned())
    throw TypeError(std::string("expected non-negative integer field \"") +
                    key + "\"");
  return j.at(key).get<std::size_t>();
}

inline const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw TypeError(std::string("expected array field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline Json to_json(const FinFn& f) {
  return Json{{"dom", f.dom().size}, {"cod", f.cod().size}, {"table", f.table()}};
}

inline FinFn finfn_from_json(const Json& j) {
  std::vector<std::size_t> table;
  for (const Json& v : detail::get_array(j, "table")) {
    if (!v.is_number_unsigned()) throw TypeError("table entries must be naturals");
    table.push_back(v.get<std::size_t>());
  }
  return FinFn(Ordinal{detail::get_size(j, "dom")},
               Ordinal{detail::get_size(j, "cod")}, std::move(table));
}

inline Json to_json(const WMor& w) {
  if (w.is_zero_zero())
    return Json{{"m", 0}, {"n", 0},
                {"apex", w.apex() == ZeroApex::empty ? "empty" : "point"}};
  Json blocks = Json::array();
  for (const auto& block : w.blocks()) {
    Json b = Json::array();
    for (std::size_t idx : block) b.push_back(boundary_name(idx, w.m()));
    blocks.push_back(std::move(b));
  }
  return Json{{"m", w.m()}, {"n", w.n()}, {"blocks", std::move(blocks)}};
}

/// Block members may be "i#"/"o#" labels or raw boundary indices.
inline WMor wmor_from_json(const Json& j) {
  const std::size_t m = detail::get_size(j, "m"), n = detail::get_size(j, "n");
  if (m + n == 0) {
    if (!j.contains("apex") || !j.at("apex").is_string())
      throw TypeError("a 0 -> 0 wiring needs \"apex\": \"empty\" or \"point\"");
    const std::string apex = j.at("apex").get<std::string>();
    if (apex == "empty") return WMor::zero(ZeroApex::empty);
    if (apex == "point") return WMor::zero(ZeroApex::point);
    throw TypeError("unknown apex \"" + apex + "\"");
  }
  std::vector<WMor::Block> blocks;
  for (const Json& b : detail::get_array(j, "blocks")) {
    if (!b.is_array()) throw TypeError("each block must be an array");
    WMor::Block block;
    for (const Json& e : b) {
      if (e.is_number_unsigned()) {
        block.push_back(e.get<std::size_t>());
        continue;
      }
      if (!e.is_string()) throw TypeError("bad boundary label");
      const std::string s = e.get<std::string>();
      if (s.size() < 2 || (s[0] != 'i' && s[0] != 'o') ||
          s.find_first_not_of("0123456789", 1) != std::string::npos)
        throw TypeError("bad boundary label \"" + s + "\"");
      const std::size_t t = std::stoul(s.substr(1));
      if (s[0] == 'i') {
        if (t >= m) throw TypeError("input label \"" + s + "\" out of range");
        block.push_back(t);
      } else {
        if (t >= n) throw TypeError("output label \"" + s + "\" out of range");
        block.push_back(m + t);
      }
    }
    blocks.push_back(std::move(block));
  }
  return WMor::from_blocks(m, n, blocks);
}

inline Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& [i, j] : r.pairs()) pairs.push_back(Json::array({i, j}));
  return Json{{"src", r.src().size}, {"dst", r.dst().size}, {"pairs", std::move(pairs)}};
}

inline Relation relation_from_json(const Json& j) {
  std::vector<Pair> pairs;
  for (const Json& p : detail::get_array(j, "pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned())
      throw TypeError("pairs must be [i,j] arrays of naturals");
    pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return Relation(Ordinal{detail::get_size(j, "src")},
                  Ordinal{detail::get_size(j, "dst")}, std::move(pairs));
}

inline Json to_json(const WiringTerm& t) {
  using K = WiringTerm::Kind;
  switch (t.kind()) {
    case K::seq:
    case K::par:
      return Json{{"op", t.kind() == K::seq ? "seq" : "par"},
                  {"m", t.m()},
                  {"n", t.n()},
                  {"lhs", to_json(t.lhs())},
                  {"rhs", to_json(t.rhs())}};
    case K::id:
      return Json{{"op", "id"}, {"k", t.id_width()}, {"m", t.m()}, {"n", t.n()}};
    default:
      return Json{{"op", "gen"}, {"name", t.to_string()}, {"m", t.m()}, {"n", t.n()}};
  }
}

inline WiringTerm term_from_json(const Json& j) {
  using K = WiringTerm::Kind;
  if (!j.is_object() || !j.contains("op") || !j.at("op").is_string())
    throw TypeError("term node needs a string \"op\"");
  const std::string op = j.at("op").get<std::string>();
  if (op == "seq" || op == "par") {
    if (!j.contains("lhs") || !j.contains("rhs"))
      throw TypeError("binary term node needs \"lhs\" and \"rhs\"");
    WiringTerm a = term_from_json(j.at("lhs")), b = term_from_json(j.at("rhs"));
    return op == "seq" ? WiringTerm::seq(a, b) : WiringTerm::par(a, b);
  }
  if (op == "id") return WiringTerm::id(detail::get_size(j, "k"));
  if (op == "gen") {
    const std::string name = j.value("name", "");
    if (name == "e") return WiringTerm::atom(K::eps);
    if (name == "d") return WiringTerm::atom(K::delta);
    if (name == "n") return WiringTerm::atom(K::eta);
    if (name == "m") return WiringTerm::atom(K::mu);
    if (name == "sw") return WiringTerm::atom(K::swap);
    throw TypeError("unknown generator \"" + name + "\"");
  }
  throw TypeError("unknown term op \"" + op + "\"");
}

}  // namespace relcalc
