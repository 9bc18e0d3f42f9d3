#pragma once

// Compact human-readable renderings, used in suite failure reports and the
// CLI's text mode.

#include <string>

#include "relcalc/finset.hpp"
#include "relcalc/rel.hpp"
#include "relcalc/wprop.hpp"

namespace relcalc {

inline std::string describe(const FinFn& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.dom().size; ++i) {
    if (i) s += ",";
    s += std::to_string(f.table()[i]);
  }
  return s + "]:" + to_string(f.dom()) + "->" + to_string(f.cod());
}

inline std::string describe(const Relation& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, j] : r.pairs()) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s + "}:" + to_string(r.src()) + "->" + to_string(r.dst());
}

inline std::string describe(const WMor& w) {
  if (w.is_zero_zero())
    return w.apex() == ZeroApex::empty ? "empty:0->0" : "point:0->0";
  std::string s = "[";
  bool first_block = true;
  for (const auto& block : w.blocks()) {
    if (!first_block) s += ",";
    first_block = false;
    s += "{";
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) s += ",";
      s += boundary_name(block[k], w.m());
    }
    s += "}";
  }
  return s + "]:" + std::to_string(w.m()) + "->" + std::to_string(w.n());
}

}  // namespace relcalc
