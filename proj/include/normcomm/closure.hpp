#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "normcomm/algebra.hpp"
#include "normcomm/subset.hpp"

namespace normcomm {

using ElementPair = std::pair<Element, Element>;

/// An equivalence relation in partition form: class_of[x] is the least
/// member of x's class.
class Congruence {
 public:
  Congruence() = default;
  /// Throws InvalidArgument unless class_of is a canonical class map.
  explicit Congruence(std::vector<Element> class_of);

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t parent_size() const { return class_of_.size(); }
  Element representative(Element x) const { return class_of_[x]; }
  const std::vector<Element>& class_map() const { return class_of_; }
  bool related(Element a, Element b) const { return class_of_[a] == class_of_[b]; }
  std::size_t class_count() const;
  /// Classes ordered by representative.
  std::vector<std::vector<Element>> classes() const;
  BinaryRelation to_relation() const;

  /// First (operation index, argument tuple) breaking compatibility, if any.
  std::optional<std::pair<std::size_t, std::vector<Element>>> compatibility_violation(
      const FiniteAlgebra& alg) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<Element> class_of_;
};

bool is_subalgebra(const FiniteAlgebra& alg, const Subset& s);
/// Throws InvalidArgument naming `what` when s is not a subalgebra.
void require_subalgebra(const FiniteAlgebra& alg, const Subset& s, const char* what);

/// Smallest subalgebra containing seed and zero.
Subset subalgebra_closure(const FiniteAlgebra& alg, const Subset& seed);

/// Least congruence containing the pairs (union-find fixpoint over one-step
/// translations of every merged pair).
Congruence congruence_generated(const FiniteAlgebra& alg,
                                const std::vector<ElementPair>& pairs);

/// Least reflexive relation containing the pairs that is closed under the
/// componentwise operations. No symmetry or transitivity is imposed.
BinaryRelation reflexive_compatible_closure(const FiniteAlgebra& alg,
                                            const std::vector<ElementPair>& pairs);

namespace detail {
/// As reflexive_compatible_closure, but stops as soon as stop(a, b) returns
/// true for a newly added pair. The returned relation is then partial.
BinaryRelation reflexive_compatible_closure_until(
    const FiniteAlgebra& alg, const std::vector<ElementPair>& pairs,
    const std::function<bool(Element, Element)>& stop);
}  // namespace detail

Subset zero_class(const BinaryRelation& rel, const FiniteAlgebra& alg);
Subset zero_class(const Congruence& rel, const FiniteAlgebra& alg);

/// Pairs {(zero, k) : k in K}.
std::vector<ElementPair> zero_pairs(const FiniteAlgebra& alg, const Subset& k);

/// Componentwise product; element (a, b) has index a * |B| + b.
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

inline constexpr std::size_t kDefaultEnumerationCap = 60;

/// Every subalgebra, ordered by (size, element list). Throws Refusal when
/// alg.size() > cap.
std::vector<Subset> enumerate_subalgebras(const FiniteAlgebra& alg,
                                          std::size_t cap = kDefaultEnumerationCap);

/// A subalgebra re-indexed as an algebra in its own right.
struct InducedAlgebra {
  FiniteAlgebra algebra;
  std::vector<Element> embedding;  // local index -> parent index
  std::vector<Element> local;      // parent index -> local index (or size())
  Subset to_local(const Subset& parent_subset) const;
  Subset to_parent(const Subset& local_subset) const;
};

InducedAlgebra induced_subalgebra(const FiniteAlgebra& alg, const Subset& s);

}  // namespace normcomm
