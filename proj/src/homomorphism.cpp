#include "normcomm/homomorphism.hpp"

#include <algorithm>

#include "normcomm/errors.hpp"

namespace normcomm {

std::optional<std::string> homomorphism_violation(const FiniteAlgebra& domain,
                                                  const FiniteAlgebra& codomain,
                                                  const std::vector<Element>& map) {
  if (map.size() != domain.size()) return "map length differs from domain size";
  for (Element v : map)
    if (v >= codomain.size()) return "map sends an element outside the codomain";
  if (map[domain.zero()] != codomain.zero()) return "zero is not preserved";
  const auto n = static_cast<Element>(domain.size());
  for (const auto& op : domain.ops()) {
    const auto* target = codomain.find_op(op.name, op.arity);
    if (!target) return "codomain lacks operation " + op.name;
    if (op.arity == 1) {
      for (Element a = 0; a < n; ++a)
        if (map[domain.apply(op, a)] != codomain.apply(*target, map[a]))
          return op.name + " not preserved at " + domain.label(a);
    } else {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (map[domain.apply(op, a, b)] != codomain.apply(*target, map[a], map[b]))
            return op.name + " not preserved at (" + domain.label(a) + ", " +
                   domain.label(b) + ")";
    }
  }
  return std::nullopt;
}

Homomorphism::Homomorphism(FiniteAlgebra domain, FiniteAlgebra codomain,
                           std::vector<Element> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (auto why = homomorphism_violation(domain_, codomain_, map_))
    throw InvalidArgument("not a homomorphism: " + *why);
  Subset hit(codomain_.size());
  for (Element v : map_) hit.insert(v);
  surjective_ = hit.is_full();
}

Homomorphism Homomorphism::identity(const FiniteAlgebra& alg) {
  std::vector<Element> map(alg.size());
  for (Element x = 0; x < alg.size(); ++x) map[x] = x;
  return Homomorphism(alg, alg, std::move(map));
}

Congruence Homomorphism::kernel_pair() const {
  std::vector<Element> first(codomain_.size(), static_cast<Element>(domain_.size()));
  std::vector<Element> class_of(domain_.size());
  for (Element x = 0; x < domain_.size(); ++x) {
    auto& f = first[map_[x]];
    if (f == domain_.size()) f = x;
    class_of[x] = f;
  }
  return Congruence(std::move(class_of));
}

Quotient quotient(const FiniteAlgebra& alg, const Congruence& theta) {
  if (theta.parent_size() != alg.size())
    throw InvalidArgument("congruence is over a different carrier");
  if (auto bad = theta.compatibility_violation(alg))
    throw InvalidArgument("relation is not compatible with operation " +
                          alg.ops()[bad->first].name);
  std::vector<Element> reps;
  std::vector<Element> index_of_rep(alg.size(), 0);
  for (Element x = 0; x < alg.size(); ++x)
    if (theta.representative(x) == x) {
      index_of_rep[x] = static_cast<Element>(reps.size());
      reps.push_back(x);
    }
  const std::size_t m = reps.size();
  auto cls = [&](Element x) { return index_of_rep[theta.representative(x)]; };
  std::vector<Operation> ops;
  for (const auto& op : alg.ops()) {
    Operation q{op.name, op.arity, {}};
    if (op.arity == 1) {
      for (Element r : reps) q.table.push_back(cls(alg.apply(op, r)));
    } else {
      for (Element r : reps)
        for (Element s : reps) q.table.push_back(cls(alg.apply(op, r, s)));
    }
    ops.push_back(std::move(q));
  }
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back("[" + alg.label(r) + "]");
  FiniteAlgebra qa(m, cls(alg.zero()), std::move(ops), alg.variety(), std::move(labels));
  std::vector<Element> map(alg.size());
  for (Element x = 0; x < alg.size(); ++x) map[x] = cls(x);
  return Quotient{qa, Homomorphism(alg, qa, std::move(map))};
}

Subset kernel_of(const Homomorphism& f) {
  Subset out(f.domain().size());
  for (Element x = 0; x < f.domain().size(); ++x)
    if (f(x) == f.codomain().zero()) out.insert(x);
  return out;
}

Subset hom_image(const Homomorphism& f, const Subset& s) {
  if (s.parent_size() != f.domain().size())
    throw InvalidArgument("subset is not over the homomorphism's domain");
  Subset out(f.codomain().size());
  for (Element x : s.elements()) out.insert(f(x));
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b) : a_(a), b_(b) {}

  std::optional<std::vector<Element>> run() {
    const auto n = a_.size();
    map_.assign(n, kUnset);
    used_.assign(n, false);
    map_[a_.zero()] = b_.zero();
    used_[b_.zero()] = true;
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool consistent() const {
    const auto n = static_cast<Element>(a_.size());
    for (const auto& op : a_.ops()) {
      const auto& t = b_.op(op.name, op.arity);
      if (op.arity == 1) {
        for (Element x = 0; x < n; ++x) {
          if (map_[x] == kUnset) continue;
          const Element y = map_[a_.apply(op, x)];
          if (y != kUnset && y != b_.apply(t, map_[x])) return false;
        }
      } else {
        for (Element x = 0; x < n; ++x) {
          if (map_[x] == kUnset) continue;
          for (Element z = 0; z < n; ++z) {
            if (map_[z] == kUnset) continue;
            const Element y = map_[a_.apply(op, x, z)];
            if (y != kUnset && y != b_.apply(t, map_[x], map_[z])) return false;
          }
        }
      }
    }
    return true;
  }

  bool search(Element x) {
    if (x == a_.size()) return true;
    if (map_[x] != kUnset) return search(x + 1);
    for (Element y = 0; y < b_.size(); ++y) {
      if (used_[y]) continue;
      map_[x] = y;
      used_[y] = true;
      if (consistent() && search(x + 1)) return true;
      used_[y] = false;
    }
    map_[x] = kUnset;
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b) {
  if (a.size() != b.size() || a.ops().size() != b.ops().size()) return std::nullopt;
  for (const auto& op : a.ops())
    if (!b.find_op(op.name, op.arity)) return std::nullopt;
  auto m = IsoSearch(a, b).run();
  if (m && homomorphism_violation(a, b, *m)) return std::nullopt;
  return m;
}

}  // namespace normcomm
