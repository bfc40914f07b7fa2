#include "normcomm/normality.hpp"

#include "normcomm/commutators.hpp"
#include "normcomm/errors.hpp"

namespace normcomm {

std::string_view to_string(Exactness e) {
  return e == Exactness::Exact ? "Exact" : "BoundedDepthHeuristic";
}

namespace {

std::optional<Element> first_outside(const Subset& s, const Subset& k) {
  for (Element x : s.elements())
    if (!k.contains(x)) return x;
  return std::nullopt;
}

std::optional<ElementPair> conjugation_violation(const FiniteAlgebra& alg, const Subset& k) {
  const auto& mul = alg.op("mul", 2);
  const auto& inv = alg.op("inv", 1);
  const auto ks = k.elements();
  for (Element g = 0; g < alg.size(); ++g)
    for (Element x : ks)
      if (!k.contains(alg.apply(mul, alg.apply(mul, g, x), alg.apply(inv, g))))
        return ElementPair{g, x};
  return std::nullopt;
}

}  // namespace

PredicateResult is_kernel(const FiniteAlgebra& alg, const Subset& k) {
  require_subalgebra(alg, k, "K");
  const Subset zc = zero_class(congruence_generated(alg, zero_pairs(alg, k)), alg);
  PredicateResult r;
  r.witness = first_outside(zc, k);
  r.value = !r.witness;
  r.method = "zero-class of the generated congruence";
  return r;
}

PredicateResult is_normal(const FiniteAlgebra& alg, const Subset& k) {
  PredicateResult r = is_kernel(alg, k);
  r.method = "alias of kernel (equivalence relations are congruences)";
  if (alg.variety() == Variety::Group) {
    r.witness_pair = conjugation_violation(alg, k);
    if (r.witness_pair.has_value() == r.value)
      throw CrossCheckFailure("normality: generated congruence says " +
                              std::string(r.value ? "normal" : "not normal") +
                              " but conjugation closure disagrees");
    r.method += "; cross-checked by conjugation";
  }
  return r;
}

PredicateResult is_seminormal(const FiniteAlgebra& alg, const Subset& k) {
  require_subalgebra(alg, k, "K");
  const Element z = alg.zero();
  std::optional<Element> escape;
  // Stop at the first pair (0, x) with x outside K: the zero-class only grows.
  detail::reflexive_compatible_closure_until(alg, zero_pairs(alg, k), [&](Element a, Element b) {
    if (a == z && !k.contains(b)) {
      escape = b;
      return true;
    }
    return false;
  });
  PredicateResult r;
  r.value = !escape;
  r.witness = escape;
  r.method = "zero-class of the generated reflexive compatible relation";
  return r;
}

ClotResult is_clot(const FiniteAlgebra& alg, const Subset& k, const NormalityOptions& opts) {
  ClotResult out;
  const auto semi = is_seminormal(alg, k);
  out.primary = {semi.value, Exactness::Exact, semi.witness,
                 "equivalent to seminormality in pointed regular varieties"};

  std::optional<TermFunctions> own;
  const TermFunctions* terms = opts.terms;
  if (!terms) {
    own = TermFunctions::enumerate(alg, opts.depth, opts.budget);
    terms = &*own;
  }
  const auto violation = find_clot_violation(alg, k, *terms);
  out.bounded.method = "term functions in " + std::to_string(terms->variables()) +
                       " variables to depth " + std::to_string(terms->depth_reached()) +
                       (terms->truncated() ? " (truncated by budget)" : "");
  if (violation) {
    // A concrete failing substitution refutes clot-ness outright.
    out.bounded.value = false;
    out.bounded.exactness = Exactness::Exact;
    out.bounded.witness = violation->value;
  } else {
    out.bounded.value = true;
    out.bounded.exactness = Exactness::BoundedDepthHeuristic;
  }
  if (out.bounded.value != out.primary.value && out.bounded.exactness == Exactness::Exact)
    out.disagreements.push_back("bounded term check refutes a seminormal subalgebra");

  if (alg.variety() == Variety::Group) {
    out.conjugation = !conjugation_violation(alg, k).has_value();
    if (*out.conjugation != out.primary.value)
      out.disagreements.push_back("conjugation closure disagrees with the seminormal route");
  }
  return out;
}

BoundedPredicateResult is_ideal(const FiniteAlgebra& alg, const Subset& k,
                                const NormalityOptions& opts) {
  if (alg.variety() == Variety::Group || alg.variety() == Variety::Ring) {
    const auto kr = is_kernel(alg, k);
    return {kr.value, Exactness::Exact, kr.witness, "ideal-determined variety: ideals are kernels"};
  }
  require_subalgebra(alg, k, "K");
  std::optional<TermFunctions> own;
  const TermFunctions* terms = opts.terms;
  if (!terms) {
    own = TermFunctions::enumerate(alg, opts.depth, opts.budget);
    terms = &*own;
  }
  const Subset closed = ideal_term_closure(alg, k, *terms);
  BoundedPredicateResult r;
  r.witness = first_outside(closed, k);
  r.value = !r.witness;
  r.exactness = Exactness::BoundedDepthHeuristic;
  r.method = "ideal-term closure, terms in " + std::to_string(terms->variables()) +
             " variables to depth " + std::to_string(terms->depth_reached()) +
             (terms->truncated() ? " (truncated by budget)" : "") +
             ", identities checked on this algebra";
  return r;
}

bool commutator_normality_test(const FiniteAlgebra& alg, const Subset& k) {
  if (!higgins_strategy(alg.variety()))
    throw Refusal("commutator normality test unsupported for variety '" +
                  std::string(to_string(alg.variety())) + "'");
  return higgins_commutator(alg, Subset::full(alg.size()), k).is_subset_of(k);
}

NormalitySpectrum classify(const FiniteAlgebra& alg, std::string_view name, const Subset& k,
                           const NormalityOptions& opts) {
  require_subalgebra(alg, k, "K");
  std::optional<TermFunctions> own;
  NormalityOptions local = opts;
  if (!local.terms) {
    own = TermFunctions::enumerate(alg, opts.depth, opts.budget);
    local.terms = &*own;
  }
  NormalitySpectrum s;
  s.algebra_name = std::string(name);
  s.subject = k;
  s.kernel = is_kernel(alg, k);
  s.normal = is_normal(alg, k);
  s.seminormal = is_seminormal(alg, k);
  s.clot = is_clot(alg, k, local);
  s.ideal = is_ideal(alg, k, local);
  if (higgins_strategy(alg.variety())) {
    s.commutator_test = commutator_normality_test(alg, k);
  } else {
    s.notes.push_back("commutator test: no Higgins strategy for this variety");
  }

  if (!s.clot.disagreements.empty())
    throw CrossCheckFailure("clot routes disagree: " + s.clot.disagreements.front());
  const bool chain_ok = (!s.is_kernel() || s.is_normal()) &&
                        (!s.is_normal() || s.is_seminormal()) &&
                        (!s.is_seminormal() || s.is_clot()) &&
                        (s.ideal.exactness != Exactness::Exact || !s.is_clot() || s.is_ideal());
  if (!chain_ok) throw CrossCheckFailure("normality chain broken for " + s.algebra_name);
  s.notes.push_back("normal: " + s.normal.method);
  s.notes.push_back("clot: " + s.clot.primary.method + "; bounded route: " + s.clot.bounded.method);
  s.notes.push_back("ideal: " + s.ideal.method);
  return s;
}

}  // namespace normcomm
