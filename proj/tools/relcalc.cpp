// relcalc: evaluate, compare and interpret wiring terms; run law suites.
//
// Exit codes: 0 success / holds, 1 does not hold, 2 parse or type error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>

#include "relcalc/equiv.hpp"
#include "relcalc/json_io.hpp"
#include "relcalc/wlang.hpp"

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kInternal = 3 };

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Config {
  bool json = false;
  std::string term1, term2;
  std::size_t size = 2;
  std::string partition;
  std::string suite;
  relcalc::Bounds bounds;
  std::size_t roundtrip_max = 2;
};

const std::set<std::string> kRandomizedSuites = {"adjointness-table", "allegory",
                                                 "supply-coherence", "square-lemma"};

void print(const relcalc::Json& j) { std::cout << j.dump() << '\n'; }

int run_eval(const Config& cfg) {
  print(relcalc::to_json(relcalc::eval_term(relcalc::parse_term(cfg.term1))));
  return kOk;
}

int run_cmp(const Config& cfg) {
  const auto c = relcalc::compare_terms(relcalc::parse_term(cfg.term1),
                                        relcalc::parse_term(cfg.term2));
  if (cfg.json)
    print(relcalc::Json(relcalc::to_string(c)));
  else
    std::cout << relcalc::to_string(c) << '\n';
  return c == relcalc::Comparison::equal || c == relcalc::Comparison::strictly_less ? kOk : kFails;
}

int run_interp(const Config& cfg) {
  const auto w = relcalc::eval_term(relcalc::parse_term(cfg.term1));
  print(relcalc::to_json(relcalc::interpret_wiring(relcalc::Ordinal{cfg.size}, w)));
  return kOk;
}

int run_synth(const Config& cfg) {
  relcalc::Json in;
  try {
    in = relcalc::Json::parse(cfg.partition);
  } catch (const relcalc::Json::parse_error& e) {
    throw relcalc::ParseError(e.byte, std::string("bad partition JSON: ") + e.what());
  }
  const auto w = relcalc::wmor_from_json(in);
  const auto t = relcalc::synthesize_term(w);
  if (!(relcalc::eval_term(t) == w))
    throw InvariantViolation("synthesized term does not evaluate to the input");
  if (cfg.json)
    print(relcalc::to_json(t));
  else
    std::cout << t.to_string() << '\n';
  return kOk;
}

void print_report_text(const relcalc::SuiteReport& r, bool prefix) {
  if (prefix) std::cout << r.suite << ": ";
  std::cout << (r.cases - r.failed) << '/' << r.cases << (r.passed() ? " pass" : " fail")
            << '\n';
  for (const auto& f : r.failures)
    std::cout << "  " << f.check << ": " << f.input << " | " << f.lhs << " | " << f.rhs << '\n';
}

int run_laws(const Config& cfg) {
  const auto rep = relcalc::run_law_suite(cfg.suite, cfg.bounds);
  if (cfg.json) {
    print(relcalc::to_json(rep));
  } else {
    print_report_text(rep, false);
    if (kRandomizedSuites.count(cfg.suite)) std::cout << "seed " << cfg.bounds.seed << '\n';
  }
  return rep.passed() ? kOk : kFails;
}

int run_roundtrip(const Config& cfg) {
  const auto lemma = relcalc::check_fundamental_lemma(cfg.roundtrip_max);
  const auto j = relcalc::check_rel_roundtrip(cfg.roundtrip_max);
  if (cfg.json) {
    print(relcalc::Json::array({relcalc::to_json(lemma), relcalc::to_json(j)}));
  } else {
    print_report_text(lemma, true);
    print_report_text(j, true);
  }
  return lemma.passed() && j.passed() ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"relcalc: the calculus of relations over finite sets"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Emit JSON output");

  auto* eval = app.add_subcommand("eval", "Print the normal form of a wiring term");
  eval->add_option("term", cfg.term1, "Wiring term, e.g. \"d ; m\"")->required();

  auto* cmp = app.add_subcommand("cmp", "Compare two wiring terms in the wiring order");
  cmp->add_option("lhs", cfg.term1)->required();
  cmp->add_option("rhs", cfg.term2)->required();

  auto* interp = app.add_subcommand("interp", "Interpret a term as a relation on a carrier");
  interp->add_option("--size", cfg.size, "Carrier size")->required();
  interp->add_option("term", cfg.term1)->required();

  auto* synth = app.add_subcommand("synth", "Build a term denoting a given wiring");
  synth->add_option("--partition", cfg.partition, "Wiring as JSON")->required();

  auto* laws = app.add_subcommand("laws", "Run a named law suite");
  std::string suites;
  for (const auto& [name, _] : relcalc::suite_registry()) suites += (suites.empty() ? "" : ", ") + name;
  laws->add_option("suite", cfg.suite, "One of: " + suites)->required();
  laws->add_option("--max", cfg.bounds.max_size, "Exhaustive size bound");
  laws->add_option("--random-size", cfg.bounds.random_size, "Size bound for random samples");
  laws->add_option("--samples", cfg.bounds.samples, "Random samples");
  laws->add_option("--seed", cfg.bounds.seed, "Random seed");

  auto* roundtrip = app.add_subcommand("roundtrip", "Fundamental lemma and j round trip");
  roundtrip->add_option("--max", cfg.roundtrip_max, "Exhaustive size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (const char* env = std::getenv("RELCALC_SEED")) {
    try {
      cfg.bounds.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: RELCALC_SEED must be a non-negative integer\n";
      return kUsage;
    }
  }

  try {
    if (*eval) return run_eval(cfg);
    if (*cmp) return run_cmp(cfg);
    if (*interp) return run_interp(cfg);
    if (*synth) return run_synth(cfg);
    if (*laws) return run_laws(cfg);
    if (*roundtrip) return run_roundtrip(cfg);
  } catch (const relcalc::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const relcalc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
