#include <doctest.h>

#include "normcomm/verify.hpp"

using namespace normcomm;
using namespace normcomm::verify;

namespace {

SuiteConfig small_config(parallel::Mode mode) {
  SuiteConfig cfg;
  cfg.size_cap = 24;
  cfg.pair_cap = 12;
  cfg.oracle_pair_cap = 8;
  cfg.samples = 20;
  cfg.mode = mode;
  return cfg;
}

}  // namespace

TEST_CASE("summary counts match records") {
  const auto r = suite_examples(SuiteConfig{});
  CHECK(r.passed() + r.failed() == r.records.size());
  CHECK(r.failed() == 0);
  const auto j = r.to_json(false);
  CHECK(j["summary"]["pass"] == r.passed());
  CHECK(j["summary"]["fail"] == 0);
  CHECK_FALSE(j["records"][0].contains("elapsed_ms"));
  CHECK(r.to_json(true)["records"][0].contains("elapsed_ms"));
}

TEST_CASE("serial and OpenMP suites produce identical reports") {
  for (const auto& name : suite_names()) {
    if (name == "hierarchy") continue;  // covered below on a smaller cap
    const auto s = run_suite(name, small_config(parallel::Mode::Serial)).to_json(false);
    const auto p = run_suite(name, small_config(parallel::Mode::OpenMP)).to_json(false);
    CHECK_MESSAGE(s["records"].dump() == p["records"].dump(), name);
    CHECK(s["summary"] == p["summary"]);
    CHECK_MESSAGE(s["summary"]["fail"] == 0, name);
  }
  auto cfg = small_config(parallel::Mode::Serial);
  cfg.size_cap = 8;
  const auto s = suite_hierarchy(cfg).to_json(false);
  cfg.mode = parallel::Mode::OpenMP;
  const auto p = suite_hierarchy(cfg).to_json(false);
  CHECK(s["records"].dump() == p["records"].dump());
  CHECK(s["summary"]["fail"] == 0);
}

TEST_CASE("config echo and seeding") {
  auto cfg = small_config(parallel::Mode::OpenMP);
  cfg.seed = 5;
  const auto a = suite_commutator_algebra(cfg).to_json(false);
  const auto b = suite_commutator_algebra(cfg).to_json(false);
  CHECK(a.dump() == b.dump());
  CHECK(a["config"]["seed"] == 5);
  CHECK(a["config"]["pair_cap"] == 12);
}

TEST_CASE("exceptions become failing records") {
  std::vector<Check> checks{
      [] {
        CheckRecord r;
        r.check = "ok";
        r.pass = true;
        return r;
      },
      []() -> CheckRecord { throw std::runtime_error("boom"); }};
  const auto recs = run_checks(checks, parallel::Mode::OpenMP);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].pass);
  CHECK_FALSE(recs[1].pass);
}

TEST_CASE("a starved oracle budget fails the oracle suite") {
  auto cfg = small_config(parallel::Mode::Serial);
  cfg.oracle.budget = 10;
  const auto r = suite_oracle(cfg);
  CHECK(r.failed() > 0);
}

TEST_CASE("unknown suite") { CHECK_THROWS(run_suite("nope", SuiteConfig{})); }
