#include "support.hpp"

#include "toricpair/cli.hpp"
#include "toricpair/error.hpp"

#include <gtest/gtest.h>

namespace toricpair {
namespace {

Json pts(std::initializer_list<std::initializer_list<long long>> rows) {
  Json a = Json::array();
  for (auto r : rows) a.push_back(Json(std::vector<long long>(r)));
  return a;
}

PairSpec spec_of(const std::string& text) { return parse_pair_spec(text); }

TEST(Analyze, CyclicFamily) {
  const CommandResult d2 = cmd_analyze(cyclic_spec(2));
  EXPECT_EQ(d2.exit_code, exit_code::ok);
  EXPECT_EQ(d2.report["mld"]["value"], "0");
  EXPECT_EQ(d2.report["mld"]["kind"], "finite");
  EXPECT_EQ(d2.report["classification"]["class"], "log-canonical-not-lt");
  EXPECT_EQ(d2.report["z_nash"]["members"], pts({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  for (const auto& [k, a] : d2.report["z_nash"]["log_discrepancies"].items()) EXPECT_EQ(a, "1") << k;
  EXPECT_EQ(d2.report["qgorenstein"]["index"], 1);

  const CommandResult d3 = cmd_analyze(cyclic_spec(3));
  EXPECT_EQ(d3.report["mld"]["value"], "-inf");
  EXPECT_EQ(d3.report["mld"]["witness"], Json({1, 1, 1}));
  EXPECT_EQ(d3.report["classification"]["class"], "not-log-canonical");
  EXPECT_EQ(d3.report["classification"]["d_part"], pts({{1, 1, 1}}));
  EXPECT_EQ(d3.report["classification"]["l_coefficients"]["(1,1,1)"], "-1");
}

TEST(Analyze, InvalidExponent) {
  const CommandResult r = cmd_analyze(spec_of(R"({"dim": 3, "ideal_exponents": [[-1, 0, 0]]})"));
  EXPECT_EQ(r.exit_code, exit_code::invalid_input);
  EXPECT_NE(r.report["error"].get<std::string>().find("exponent not in dual cone"), std::string::npos);
}

TEST(Analyze, NotQGorenstein) {
  const CommandResult r = cmd_analyze(
      spec_of(R"({"dim": 3, "cone_rays": [[1,0,0],[0,1,0],[1,0,1],[0,2,1]], "ideal_exponents": [[1,1,1]]})"));
  EXPECT_EQ(r.exit_code, exit_code::not_q_gorenstein);
  EXPECT_EQ(r.report["qgorenstein"], "not-q-gorenstein");
  EXPECT_EQ(r.report["mld"], "skipped: not q-gorenstein");
  EXPECT_EQ(r.report["classification"], "skipped: not q-gorenstein");
  // The Nash sets need no canonical class.
  EXPECT_FALSE(r.report["log_nash"]["members"].empty());
  const CommandResult v = cmd_verify(spec_of(r.report["input"].dump()));
  EXPECT_EQ(v.exit_code, exit_code::not_q_gorenstein);
  EXPECT_EQ(v.report["checks"]["discrepancy_crosscheck"]["status"], "skipped: not q-gorenstein");
}

TEST(Analyze, ByteDeterministic) {
  PairSpec s = cyclic_spec(2);
  s.options.seed = 9;
  EXPECT_EQ(cmd_analyze(s).report.dump(2), cmd_analyze(s).report.dump(2));
  EXPECT_EQ(cmd_verify(s).report.dump(2), cmd_verify(s).report.dump(2));
  EXPECT_EQ(cmd_corpus(6, 2, 3, 5).report.dump(2), cmd_corpus(6, 2, 3, 5).report.dump(2));
}

TEST(PairSpecJson, RoundTrip) {
  const PairSpec specs[] = {
      cyclic_spec(3),
      spec_of(R"({"dim": 2, "cone_rays": [[1,0],[1,2]], "ideal_exponents": [[0,1],[2,-1]],
                  "options": {"bound": 4, "samples": 2, "seed": 18446744073709551615}})"),
  };
  for (const PairSpec& s : specs) {
    EXPECT_EQ(parse_pair_spec(to_json(s)), s);
    EXPECT_EQ(parse_pair_spec(cmd_analyze(s).report["input"]), s);
  }
}

TEST(PairSpecJson, Rejects) {
  const char* bad[] = {
      R"({"dim": 1, "ideal_exponents": [[1]]})",
      R"({"dim": 2, "ideal_exponents": []})",
      R"({"dim": 2, "ideal_exponents": [[1, 0, 0]]})",
      R"({"dim": 2, "ideal_exponents": [[1, 0.5]]})",
      R"({"dim": 2, "ideal_exponents": [[1, 0]], "colour": 1})",
      R"({"dim": 2, "ideal_exponents": [[1, 0]], "options": {"bound": 0}})",
      R"({"dim": 2})",
      R"([1, 2])",
      R"({"dim": 2, )",
  };
  for (const char* text : bad) EXPECT_THROW(spec_of(text), InvalidInput) << text;
}

TEST(Verify, CyclicFamily) {
  for (long long d : {2, 3}) {
    const CommandResult r = cmd_verify(cyclic_spec(d));
    EXPECT_EQ(r.exit_code, exit_code::ok) << r.report["summary"].dump();
    EXPECT_TRUE(r.report["summary"]["failed"].empty());
    const Json& checks = r.report["checks"];
    if (d == 2) {
      EXPECT_EQ(checks["lognash_computes_mld"]["status"], "pass");
      EXPECT_EQ(checks["negative_lognash"]["status"], "skipped: mld is finite");
    } else {
      EXPECT_EQ(checks["negative_lognash"]["status"], "pass");
      EXPECT_EQ(checks["lognash_computes_mld"]["status"], "skipped: mld is -inf");
    }
    for (const char* name : {"mld_brute_force", "z_nash_oracle", "log_nash_oracle", "z_nash_in_log_nash",
                             "log_nash_in_essential", "discrepancy_crosscheck"})
      EXPECT_EQ(checks[name]["status"], "pass") << name;
  }
}

TEST(Verify, UncertifiedBoundWarns) {
  PairSpec s = cyclic_spec(2);
  s.options.bound = 1;
  const CommandResult r = cmd_verify(s);
  EXPECT_EQ(r.exit_code, exit_code::ok);
  EXPECT_EQ(r.report["log_nash"]["status"], "uncertified");
  EXPECT_GT(r.report["summary"]["warnings"].get<int>(), 0);
  EXPECT_EQ(r.report["checks"]["log_nash_oracle"]["status"], "warning");
}

TEST(Verify, KnownCounterexamples) {
  // mld attained only at rays with ord 0: the theorem check fails honestly.
  const CommandResult origin = cmd_verify(spec_of(R"({"dim": 3, "ideal_exponents": [[1,0,0],[0,1,0],[0,0,1]]})"));
  EXPECT_EQ(origin.exit_code, exit_code::verification_failed);
  EXPECT_EQ(origin.messages.front(), "verification failed: lognash_computes_mld");

  // The all-witnesses statement fails but is informational only.
  const CommandResult nc = cmd_verify(spec_of(R"({"dim": 2, "ideal_exponents": [[1,1]]})"));
  EXPECT_EQ(nc.exit_code, exit_code::ok);
  EXPECT_EQ(nc.report["checks"]["mld_witnesses_lognash"]["status"], "info");
  EXPECT_FALSE(nc.report["checks"]["mld_witnesses_lognash"]["holds"].get<bool>());
}

TEST(Oracle, CyclicFamily) {
  const CommandResult r = cmd_oracle(cyclic_spec(2));
  EXPECT_EQ(r.exit_code, exit_code::ok);
  EXPECT_EQ(r.report["z_nash"], pts({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(r.report["mld"]["value"], "0");
}

TEST(Corpus, Small) {
  const CommandResult principal = cmd_corpus(1, 2, 1, 0);
  EXPECT_EQ(principal.exit_code, exit_code::ok);
  EXPECT_EQ(principal.report["summary"]["pass"], 1);

  const CommandResult r = cmd_corpus(20, 2, 4, 42);
  EXPECT_EQ(r.exit_code, exit_code::ok);
  EXPECT_EQ(r.report["instances"].size(), 20u);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(r.report["instances"][i]["index"], i);

  EXPECT_EQ(cmd_corpus(1, 4, 2, 0).exit_code, exit_code::invalid_input);
}

TEST(RenderText, Lossy) {
  const std::string text = render_text(cmd_analyze(cyclic_spec(2)).report);
  EXPECT_NE(text.find("mld:\n"), std::string::npos);
  EXPECT_NE(text.find("  value: 0\n"), std::string::npos);
  EXPECT_NE(text.find("class: log-canonical-not-lt"), std::string::npos);
}

}  // namespace
}  // namespace toricpair
