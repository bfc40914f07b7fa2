#include "normcomm/commutators.hpp"

#include <deque>
#include <vector>

#include "normcomm/closure.hpp"
#include "normcomm/homomorphism.hpp"

namespace normcomm {

std::string_view to_string(HigginsStrategy s) {
  switch (s) {
    case HigginsStrategy::GroupCommutators: return "GroupCommutators";
    case HigginsStrategy::RingMixedMonomials: return "RingMixedMonomials";
    case HigginsStrategy::BoundedWordOracle: return "BoundedWordOracle";
  }
  return "?";
}

std::optional<HigginsStrategy> higgins_strategy(Variety v) {
  switch (v) {
    case Variety::Group: return HigginsStrategy::GroupCommutators;
    case Variety::Ring: return HigginsStrategy::RingMixedMonomials;
    default: return std::nullopt;
  }
}

Subset normalization(const FiniteAlgebra& alg, const Subset& k) {
  require_subalgebra(alg, k, "K");
  return zero_class(congruence_generated(alg, zero_pairs(alg, k)), alg);
}

Subset conjugation_closure(const FiniteAlgebra& alg, const Subset& k) {
  if (alg.variety() != Variety::Group)
    throw InvalidArgument("conjugation closure needs a group");
  const auto& mul = alg.op("mul", 2);
  const auto& inv = alg.op("inv", 1);
  Subset seed(alg.size());
  for (Element g = 0; g < alg.size(); ++g)
    for (Element x : k.elements())
      seed.insert(alg.apply(mul, alg.apply(mul, g, x), alg.apply(inv, g)));
  return subalgebra_closure(alg, seed);
}

Subset join(const FiniteAlgebra& alg, const Subset& h, const Subset& k) {
  require_subalgebra(alg, h, "H");
  require_subalgebra(alg, k, "K");
  return subalgebra_closure(alg, h | k);
}

namespace {

Subset group_higgins(const FiniteAlgebra& alg, const Subset& h, const Subset& k) {
  const auto& mul = alg.op("mul", 2);
  const auto& inv = alg.op("inv", 1);
  Subset seed(alg.size());
  const auto ks = k.elements();
  for (Element x : h.elements())
    for (Element y : ks)
      seed.insert(alg.apply(mul, alg.apply(mul, x, y),
                            alg.apply(mul, alg.apply(inv, x), alg.apply(inv, y))));
  return subalgebra_closure(alg, seed);
}

Subset ring_higgins(const FiniteAlgebra& alg, const Subset& h, const Subset& k) {
  const auto& add = alg.op("add", 2);
  const auto& neg = alg.op("neg", 1);
  const auto& mul = alg.op("mul", 2);
  const auto sides = (h | k).elements();
  Subset out(alg.size());
  std::vector<Element> processed;
  std::deque<Element> pending;
  auto put = [&](Element x) {
    if (out.insert(x)) pending.push_back(x);
  };
  put(alg.zero());
  for (Element x : h.elements())
    for (Element y : k.elements()) {
      put(alg.apply(mul, x, y));
      put(alg.apply(mul, y, x));
    }
  // Sums and products of mixed elements stay mixed, as do their products
  // with anything from H or K.
  while (!pending.empty()) {
    const Element x = pending.front();
    pending.pop_front();
    processed.push_back(x);
    put(alg.apply(neg, x));
    for (Element y : processed) {
      put(alg.apply(add, x, y));
      put(alg.apply(mul, x, y));
      put(alg.apply(mul, y, x));
    }
    for (Element m : sides) {
      put(alg.apply(mul, x, m));
      put(alg.apply(mul, m, x));
    }
  }
  return out;
}

}  // namespace

Subset higgins_commutator(const FiniteAlgebra& alg, const Subset& h, const Subset& k) {
  require_subalgebra(alg, h, "H");
  require_subalgebra(alg, k, "K");
  switch (alg.variety()) {
    case Variety::Group: return group_higgins(alg, h, k);
    case Variety::Ring: return ring_higgins(alg, h, k);
    default:
      throw Refusal("no Higgins strategy for variety '" + std::string(to_string(alg.variety())) +
                    "'; use diamond_image_oracle for bounded word realizations");
  }
}

Subset huq_commutator(const FiniteAlgebra& alg, const Subset& h, const Subset& k) {
  const Subset higgins = higgins_commutator(alg, h, k);
  const Congruence theta = congruence_generated(alg, zero_pairs(alg, higgins));
  const Subset by_normalization = zero_class(theta, alg);
  const Subset by_cokernel = kernel_of(quotient(alg, theta).projection);
  if (by_normalization != by_cokernel)
    throw CrossCheckFailure("Huq routes disagree: normalization has " +
                            std::to_string(by_normalization.count()) +
                            " elements, cokernel kernel has " +
                            std::to_string(by_cokernel.count()));
  return by_normalization;
}

OracleResult diamond_image_oracle(const FiniteAlgebra& alg, const Subset& h, const Subset& k,
                                  const OracleParams& params) {
  if (alg.variety() != Variety::Group)
    throw Refusal("diamond_image_oracle models the free product of groups only");
  if (params.max_len < 4) throw InvalidArgument("max_len must be at least 4");
  require_subalgebra(alg, h, "H");
  require_subalgebra(alg, k, "K");
  const auto& mul = alg.op("mul", 2);
  const std::size_t n = alg.size();
  const Element e = alg.zero();

  std::vector<Element> letters[2];
  for (Element x : h.elements())
    if (x != e) letters[0].push_back(x);
  for (Element x : k.elements())
    if (x != e) letters[1].push_back(x);

  OracleResult result{Subset(n), 0, false, 0};
  result.values.insert(e);
  if (letters[0].empty() || letters[1].empty()) {
    result.stabilized = true;
    return result;
  }

  // State of a word: (value in A, product of H-letters, product of
  // K-letters, side of the last letter). Words with equal states extend
  // identically, so a per-length reachable-state set replaces the words.
  // Projections are stored as local indices into H and K.
  const auto h_elems = h.elements(), k_elems = k.elements();
  const std::size_t nh = h_elems.size(), nk = k_elems.size();
  std::vector<Element> local(n, 0);
  for (Element i = 0; i < nh; ++i) local[h_elems[i]] = i;
  std::vector<Element> local_k(n, 0);
  for (Element i = 0; i < nk; ++i) local_k[k_elems[i]] = i;
  auto encode = [&](Element v, Element hp, Element kp, int side) {
    return ((static_cast<std::size_t>(v) * nh + local[hp]) * nk + local_k[kp]) * 2 +
           static_cast<std::size_t>(side);
  };
  struct Decoded {
    Element value, hp, kp;
    int side;
  };
  auto decode = [&](std::size_t s) {
    const int side = static_cast<int>(s % 2);
    s /= 2;
    const Element kp = k_elems[s % nk];
    s /= nk;
    const Element hp = h_elems[s % nh];
    return Decoded{static_cast<Element>(s / nh), hp, kp, side};
  };
  std::vector<std::uint8_t> current(n * nh * nk * 2, 0), next(current.size(), 0);
  std::vector<std::size_t> live, next_live;
  for (int side = 0; side < 2; ++side)
    for (Element x : letters[side]) {
      const std::size_t s = side == 0 ? encode(x, x, e, 0) : encode(x, e, x, 1);
      if (!current[s]) {
        current[s] = 1;
        live.push_back(s);
      }
    }

  std::size_t quiet = 0;
  for (std::size_t len = 1;; ++len) {
    bool grew = false;
    for (std::size_t s : live) {
      const auto d = decode(s);
      if (d.hp == e && d.kp == e) grew |= result.values.insert(d.value);
    }
    result.lengths_explored = len;
    if (len >= 4) {
      quiet = grew ? 0 : quiet + 1;
      if (quiet >= params.window) {
        result.stabilized = true;
        break;
      }
    }
    if (len == params.max_len) break;

    next_live.clear();
    for (std::size_t s : live) {
      const auto [v, hp, kp, side] = decode(s);
      const int other = 1 - side;
      result.work += letters[other].size();
      if (result.work > params.budget)
        throw OracleBudgetExceeded("diamond oracle exceeded its budget of " +
                                       std::to_string(params.budget) + " transitions",
                                   result);
      for (Element x : letters[other]) {
        const std::size_t t =
            other == 0 ? encode(alg.apply(mul, v, x), alg.apply(mul, hp, x), kp, 0)
                       : encode(alg.apply(mul, v, x), hp, alg.apply(mul, kp, x), 1);
        if (!next[t]) {
          next[t] = 1;
          next_live.push_back(t);
        }
      }
    }
    for (std::size_t s : live) current[s] = 0;
    std::swap(current, next);
    std::swap(live, next_live);
  }
  return result;
}

CommutatorReport commutator_report(const FiniteAlgebra& alg, const Subset& h, const Subset& k,
                                   std::optional<OracleParams> oracle) {
  const auto strategy = higgins_strategy(alg.variety());
  if (!strategy)
    throw Refusal("no Higgins strategy for variety '" + std::string(to_string(alg.variety())) +
                  "'");
  CommutatorReport r{higgins_commutator(alg, h, k), Subset(), join(alg, h, k), Subset(),
                     *strategy, oracle, std::nullopt};
  r.huq = huq_commutator(alg, h, k);
  r.normalization_of_higgins = normalization(alg, r.higgins);
  if (r.huq != r.normalization_of_higgins)
    throw CrossCheckFailure("Huq commutator differs from the normalization of Higgins");
  if (!r.higgins.is_subset_of(r.huq) || !r.higgins.is_subset_of(r.join))
    throw CrossCheckFailure("Higgins commutator escapes Huq or the join");
  if (oracle && alg.variety() == Variety::Group)
    r.oracle = diamond_image_oracle(alg, h, k, *oracle);
  return r;
}

}  // namespace normcomm
