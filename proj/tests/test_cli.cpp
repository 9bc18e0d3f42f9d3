#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "relcalc/json_io.hpp"
#include "support/run_cli.hpp"

using relcalc::Json;

TEST_CASE("documented invocations", "[cli]") {
  auto e = cli::run("--json eval 'd ; m'");
  CHECK(e.code == 0);
  CHECK(e.out == "{\"m\":1,\"n\":1,\"blocks\":[[\"i0\",\"o0\"]]}\n");

  auto c = cli::run("--json cmp id1 'e ; n'");
  CHECK(c.code == 0);
  CHECK(c.out == "\"strictly_less\"\n");

  auto l = cli::run("laws presentation");
  CHECK(l.code == 0);
  CHECK(l.out == "13/13 pass\n");
}

TEST_CASE("text mode and exit codes", "[cli]") {
  CHECK(cli::run("eval 'd ; m'").out == "{\"m\":1,\"n\":1,\"blocks\":[[\"i0\",\"o0\"]]}\n");
  CHECK(cli::run("cmp id1 'e ; n'").out == "strictly_less\n");
  CHECK(cli::run("cmp 'd ; m' id1").code == 0);

  auto gt = cli::run("cmp 'e ; n' id1");
  CHECK(gt.code == 1);
  CHECK(gt.out == "strictly_greater\n");
  CHECK(cli::run("cmp sw id2").code == 1);

  CHECK(cli::run("eval 'e ; d'").code == 2);
  CHECK(cli::run("eval 'd ; ; m'").code == 2);
  CHECK(cli::run("cmp d m").code == 2);
  CHECK(cli::run("laws nonsense").code == 2);
  CHECK(cli::run("synth --partition '{\"m\":1'").code == 2);
  CHECK(cli::run("synth --partition '{\"m\":1,\"n\":1,\"blocks\":[[\"i0\"]]}'").code == 2);
  CHECK(cli::run("").code == 2);
  CHECK(cli::run("frobnicate").code == 2);
}

TEST_CASE("interp prints a relation", "[cli]") {
  auto r = cli::run("interp --size 2 'd ; m'");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(relcalc::relation_from_json(j) == relcalc::rel_identity(relcalc::Ordinal{2}));

  auto top = cli::run("interp --size 2 'e ; n'");
  CHECK(relcalc::relation_from_json(Json::parse(top.out)) ==
        relcalc::rel_top(relcalc::Ordinal{2}, relcalc::Ordinal{2}));
}

TEST_CASE("synth witnesses a partition", "[cli]") {
  auto s = cli::run("synth --partition '{\"m\":1,\"n\":2,\"blocks\":[[\"i0\",\"o0\",\"o1\"]]}'");
  CHECK(s.code == 0);
  CHECK(s.out == "d\n");

  auto p = cli::run("synth --partition '{\"m\":0,\"n\":0,\"apex\":\"point\"}'");
  CHECK(p.out == "(n ; e)\n");

  auto j = cli::run("--json synth --partition '{\"m\":1,\"n\":1,\"blocks\":[[\"i0\"],[\"o0\"]]}'");
  CHECK(j.code == 0);
  const auto t = relcalc::term_from_json(Json::parse(j.out));
  CHECK(relcalc::eval_term(t) == relcalc::WMor::from_labels(1, 1, {0, 1}));
}

TEST_CASE("laws and roundtrip reports", "[cli]") {
  auto l = cli::run("--json laws allegory --samples 50 --seed 7");
  CHECK(l.code == 0);
  const Json j = Json::parse(l.out);
  CHECK(j["suite"] == "allegory");
  CHECK(j["bounds"]["seed"] == 7);
  CHECK(j["failed"] == 0);

  auto text = cli::run("laws allegory --samples 50 --seed 7");
  CHECK(text.out.find("seed 7\n") != std::string::npos);

  auto env = cli::run("--json laws allegory --samples 50 --seed 7", "RELCALC_SEED=99");
  CHECK(Json::parse(env.out)["bounds"]["seed"] == 99);
  CHECK(cli::run("laws allegory", "RELCALC_SEED=abc").code == 2);

  auto rt = cli::run("--json roundtrip --max 1");
  CHECK(rt.code == 0);
  const Json a = Json::parse(rt.out);
  REQUIRE(a.is_array());
  CHECK(a.size() == 2);
  CHECK(a[0]["suite"] == "fundamental-lemma");
  CHECK(a[1]["suite"] == "rel-roundtrip");
}

TEST_CASE("identical invocations are byte-identical", "[cli]") {
  const std::string args = "--json laws supply-coherence --samples 100 --seed 3";
  CHECK(cli::run(args).out == cli::run(args).out);
  const std::string t = "--json eval '(d * id1) ; (id1 * m)'";
  CHECK(cli::run(t).out == cli::run(t).out);
}
