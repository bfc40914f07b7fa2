#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcomm/algebra.hpp"
#include "normcomm/closure.hpp"
#include "normcomm/terms.hpp"

namespace normcomm {

enum class Exactness { Exact, BoundedDepthHeuristic };
std::string_view to_string(Exactness e);

/// Outcome of a single normality predicate. On a false answer, `witness`
/// and/or `witness_pair` explain why.
struct PredicateResult {
  bool value = false;
  std::optional<Element> witness;
  std::optional<ElementPair> witness_pair;
  std::string method;
};

struct BoundedPredicateResult {
  bool value = false;
  Exactness exactness = Exactness::Exact;
  std::optional<Element> witness;
  std::string method;
};

struct NormalityOptions {
  std::size_t depth = 3;
  TermBudget budget{};
  /// Reused across calls on the same algebra when non-null.
  const TermFunctions* terms = nullptr;
};

/// K is a kernel iff it is the zero-class of the congruence generated by
/// {(0, k)}: any congruence with zero-class K contains that one, and the
/// least one has the least zero-class.
PredicateResult is_kernel(const FiniteAlgebra& alg, const Subset& k);

/// Same test as is_kernel (equivalence relations here are congruences);
/// groups are additionally checked against conjugation closure.
PredicateResult is_normal(const FiniteAlgebra& alg, const Subset& k);

/// K is seminormal iff it is the zero-class of the least reflexive
/// compatible relation containing {(0, k)}.
PredicateResult is_seminormal(const FiniteAlgebra& alg, const Subset& k);

struct ClotResult {
  BoundedPredicateResult primary;      // seminormal route, exact
  BoundedPredicateResult bounded;      // term-function route
  std::optional<bool> conjugation;     // groups only
  std::vector<std::string> disagreements;
};

ClotResult is_clot(const FiniteAlgebra& alg, const Subset& k, const NormalityOptions& opts = {});

/// Groups and rings: exact, equal to is_kernel. Otherwise a bounded-depth
/// ideal-term closure, flagged as heuristic.
BoundedPredicateResult is_ideal(const FiniteAlgebra& alg, const Subset& k,
                                const NormalityOptions& opts = {});

/// [A, K] <= K. Throws Refusal for varieties without a Higgins strategy.
bool commutator_normality_test(const FiniteAlgebra& alg, const Subset& k);

struct NormalitySpectrum {
  std::string algebra_name;
  Subset subject;
  PredicateResult kernel;
  PredicateResult normal;
  PredicateResult seminormal;
  ClotResult clot;
  BoundedPredicateResult ideal;
  std::optional<bool> commutator_test;
  std::vector<std::string> notes;

  bool is_kernel() const { return kernel.value; }
  bool is_normal() const { return normal.value; }
  bool is_seminormal() const { return seminormal.value; }
  bool is_clot() const { return clot.primary.value; }
  bool is_ideal() const { return ideal.value; }
};

/// Runs every predicate; throws CrossCheckFailure when the exact flags break
/// the chain kernel => normal => seminormal => clot => ideal, or when two
/// routes to the same flag disagree. Collapse of the chain is not asserted
/// here; that is a property the verification suites test.
NormalitySpectrum classify(const FiniteAlgebra& alg, std::string_view name, const Subset& k,
                           const NormalityOptions& opts = {});

}  // namespace normcomm
