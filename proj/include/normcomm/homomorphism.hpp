#pragma once

#include <optional>
#include <vector>

#include "normcomm/algebra.hpp"
#include "normcomm/closure.hpp"

namespace normcomm {

/// A zero- and operation-preserving map between finite algebras. Operations
/// are matched by name and arity; the domain's operations must all exist in
/// the codomain.
class Homomorphism {
 public:
  /// Throws InvalidArgument when the map is not a homomorphism.
  Homomorphism(FiniteAlgebra domain, FiniteAlgebra codomain, std::vector<Element> map);

  static Homomorphism identity(const FiniteAlgebra& alg);

  const FiniteAlgebra& domain() const { return domain_; }
  const FiniteAlgebra& codomain() const { return codomain_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }
  bool is_surjective() const { return surjective_; }

  /// Congruence identifying elements with equal images.
  Congruence kernel_pair() const;

 private:
  FiniteAlgebra domain_;
  FiniteAlgebra codomain_;
  std::vector<Element> map_;
  bool surjective_ = false;
};

/// Describes why `map` fails to be a homomorphism, or nullopt.
std::optional<std::string> homomorphism_violation(const FiniteAlgebra& domain,
                                                  const FiniteAlgebra& codomain,
                                                  const std::vector<Element>& map);

struct Quotient {
  FiniteAlgebra algebra;
  Homomorphism projection;
};

/// One element per class, ordered by class representative. Throws
/// InvalidArgument when theta is not compatible with alg.
Quotient quotient(const FiniteAlgebra& alg, const Congruence& theta);

Subset kernel_of(const Homomorphism& f);
Subset hom_image(const Homomorphism& f, const Subset& s);

/// Searches for an isomorphism a -> b matching operations by name/arity.
/// Backtracking with zero fixed; intended for small algebras.
std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b);

}  // namespace normcomm
