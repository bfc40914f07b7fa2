#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "normcomm/commutators.hpp"
#include "normcomm/io.hpp"
#include "normcomm/parallel.hpp"

namespace normcomm::verify {

struct SuiteConfig {
  std::size_t size_cap = 60;      // single-K suites
  std::size_t pair_cap = 24;      // exhaustive (H, K) pair suites
  std::size_t oracle_pair_cap = 12;
  std::size_t samples = 200;      // sampled pairs in A5
  std::uint64_t seed = 0;
  OracleParams oracle{};
  std::size_t depth = 3;
  parallel::Mode mode = parallel::Mode::OpenMP;
  bool timings = false;

  json to_json() const;
};

struct CheckRecord {
  std::string check;
  std::string algebra;
  json subsets = json::array();
  json expected;
  json actual;
  bool pass = false;
  json witness;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::string suite;
  json config;
  std::vector<CheckRecord> records;

  std::size_t passed() const;
  std::size_t failed() const;
  json to_json(bool include_timings) const;
};

using Check = std::function<CheckRecord()>;

/// Runs checks through the work queue and returns their records in input
/// order. Exceptions become failing records carrying the message.
std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, parallel::Mode mode);

/// For every group/ring catalog entry within size_cap and every subalgebra K:
/// [A,K] <= K agrees with K normal; normal K also gets a forward-only record.
SuiteReport suite_theorem(const SuiteConfig& cfg);

/// Huq = normalization of Higgins, Higgins normal in the join, coincidence at
/// full join, symmetry, monotonicity, and [A,K] = [A,normalization(K)].
SuiteReport suite_commutator_algebra(const SuiteConfig& cfg);

/// The A5 and A6 values reproduced exactly.
SuiteReport suite_examples(const SuiteConfig& cfg);

/// Normality flags collapse in groups/rings; monoids keep the chain and
/// show a seminormal non-kernel.
SuiteReport suite_hierarchy(const SuiteConfig& cfg);

/// The bounded word oracle generates the same subgroup as the commutator
/// strategy.
SuiteReport suite_oracle(const SuiteConfig& cfg);

/// Suite names accepted by run_suite, in "all" order.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace normcomm::verify
