#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "normcomm/algebra.hpp"

namespace normcomm {

/// Limits for term-function enumeration. The variable count is the largest
/// v <= max_variables with |A|^v <= max_table.
struct TermBudget {
  std::size_t max_variables = 4;
  std::size_t max_table = 4096;
  std::size_t max_entries = 2'000'000;
};

/// The distinct functions A^v -> A computed by terms of bounded depth over
/// the signature (variables and the zero constant at depth 0). Each function
/// is a value table indexed by tuples, first variable most significant.
class TermFunctions {
 public:
  static TermFunctions enumerate(const FiniteAlgebra& alg, std::size_t depth,
                                 const TermBudget& budget = {});

  std::size_t variables() const { return variables_; }
  std::size_t table_size() const { return table_size_; }
  std::size_t count() const { return depth_of_.size(); }
  std::span<const std::uint16_t> function(std::size_t i) const {
    return {values_.data() + i * table_size_, table_size_};
  }
  std::size_t depth_of(std::size_t i) const { return depth_of_[i]; }
  /// Depth of the deepest layer that was generated completely.
  std::size_t depth_reached() const { return depth_reached_; }
  std::size_t depth_requested() const { return depth_requested_; }
  bool truncated() const { return truncated_; }

  /// Tuple index of (prefix..., zero, ..., zero) where prefix fills the
  /// first variables.
  std::size_t tuple_index(std::span<const Element> values) const;

 private:
  std::size_t carrier_ = 0;
  std::size_t variables_ = 0;
  std::size_t table_size_ = 0;
  std::vector<std::uint16_t> values_;
  std::vector<std::size_t> depth_of_;
  std::size_t depth_reached_ = 0;
  std::size_t depth_requested_ = 0;
  bool truncated_ = false;
};

struct TermViolation {
  std::size_t function;
  std::size_t k_variables;
  std::vector<Element> arguments;  // a-part then k-part
  Element value;
};

/// Bounded clot test: for every enumerated term function t, every split of
/// its variables into a-slots followed by k-slots, and every a-assignment
/// with t(a, 0...0) = 0, requires t(a, k) in K for all k in K^slots.
std::optional<TermViolation> find_clot_violation(const FiniteAlgebra& alg, const Subset& k,
                                                 const TermFunctions& terms);

/// Closure of K under the ideal terms among `terms`: functions with
/// t(x, 0...0) = 0 for every x (checked on this algebra only).
Subset ideal_term_closure(const FiniteAlgebra& alg, const Subset& k, const TermFunctions& terms);

}  // namespace normcomm
