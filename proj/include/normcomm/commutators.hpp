#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "normcomm/algebra.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/subset.hpp"

namespace normcomm {

enum class HigginsStrategy { GroupCommutators, RingMixedMonomials, BoundedWordOracle };

std::string_view to_string(HigginsStrategy s);

/// Strategy used by higgins_commutator for this variety; nullopt when none.
std::optional<HigginsStrategy> higgins_strategy(Variety v);

/// Smallest normal subobject containing K: the zero-class of the congruence
/// generated by {(zero, k)}.
Subset normalization(const FiniteAlgebra& alg, const Subset& k);

/// Groups only: the subgroup generated by all conjugates g k g^-1.
Subset conjugation_closure(const FiniteAlgebra& alg, const Subset& k);

/// Subalgebra generated by H and K.
Subset join(const FiniteAlgebra& alg, const Subset& h, const Subset& k);

/// Higgins commutator [H,K]. Groups: subgroup generated by h k h^-1 k^-1.
/// Rings: additive span of products with a factor from each side, closed
/// under multiplication by H and K. Other varieties throw Refusal.
Subset higgins_commutator(const FiniteAlgebra& alg, const Subset& h, const Subset& k);

/// Huq commutator, computed as the normalization of the Higgins commutator
/// and as the kernel of the cokernel projection; throws CrossCheckFailure if
/// the two routes differ.
Subset huq_commutator(const FiniteAlgebra& alg, const Subset& h, const Subset& k);

struct OracleParams {
  std::size_t max_len = 12;
  std::size_t window = 2;
  std::uint64_t budget = 10'000'000;
};

struct OracleResult {
  Subset values;
  std::size_t lengths_explored = 0;
  bool stabilized = false;
  std::uint64_t work = 0;
};

/// Thrown when the oracle runs out of budget; carries the values found.
class OracleBudgetExceeded : public Refusal {
 public:
  OracleBudgetExceeded(const std::string& what, OracleResult partial)
      : Refusal(what), partial_(std::move(partial)) {}
  const OracleResult& partial() const { return partial_; }

 private:
  OracleResult partial_;
};

/// Realizes, in the group, every alternating word over H\{e} and K\{e} of
/// length <= max_len whose H-letters and K-letters each multiply to e (the
/// words of the free product lying over the identity of H x K). Lengths are
/// explored in increasing order; once length 4 is reached, the search stops
/// after `window` consecutive lengths add nothing. The empty word makes e
/// always present.
OracleResult diamond_image_oracle(const FiniteAlgebra& alg, const Subset& h, const Subset& k,
                                  const OracleParams& params = {});

struct CommutatorReport {
  Subset higgins;
  Subset huq;
  Subset join;
  Subset normalization_of_higgins;
  HigginsStrategy strategy;
  std::optional<OracleParams> oracle_params;
  std::optional<OracleResult> oracle;
};

/// Computes every field and checks the report invariants
/// (higgins <= huq = normalization_of_higgins, higgins <= join).
CommutatorReport commutator_report(const FiniteAlgebra& alg, const Subset& h, const Subset& k,
                                   std::optional<OracleParams> oracle = std::nullopt);

}  // namespace normcomm
