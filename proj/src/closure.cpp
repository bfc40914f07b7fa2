#include "normcomm/closure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "normcomm/errors.hpp"

namespace normcomm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }
  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller root so the final representatives are class minima.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Element> parent_;
};

}  // namespace

Congruence::Congruence(std::vector<Element> class_of) : class_of_(std::move(class_of)) {
  for (Element x = 0; x < class_of_.size(); ++x) {
    const Element r = class_of_[x];
    if (r >= class_of_.size() || class_of_[r] != r || r > x)
      throw InvalidArgument("class map is not canonical at element " + std::to_string(x));
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Element> m(n);
  std::iota(m.begin(), m.end(), Element{0});
  return Congruence(std::move(m));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<Element>(n, 0)); }

std::size_t Congruence::class_count() const {
  std::size_t n = 0;
  for (Element x = 0; x < class_of_.size(); ++x) n += class_of_[x] == x;
  return n;
}

std::vector<std::vector<Element>> Congruence::classes() const {
  std::map<Element, std::vector<Element>> by_rep;
  for (Element x = 0; x < class_of_.size(); ++x) by_rep[class_of_[x]].push_back(x);
  std::vector<std::vector<Element>> out;
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

BinaryRelation Congruence::to_relation() const {
  BinaryRelation r(class_of_.size());
  for (const auto& cls : classes())
    for (Element a : cls)
      for (Element b : cls) r.insert(a, b);
  return r;
}

std::optional<std::pair<std::size_t, std::vector<Element>>>
Congruence::compatibility_violation(const FiniteAlgebra& alg) const {
  // Checking each argument position against the class representative is
  // enough: a full tuple replacement is a chain of single replacements.
  const auto n = static_cast<Element>(alg.size());
  for (std::size_t i = 0; i < alg.ops().size(); ++i) {
    const auto& op = alg.ops()[i];
    if (op.arity == 1) {
      for (Element a = 0; a < n; ++a)
        if (!related(alg.apply(op, a), alg.apply(op, class_of_[a])))
          return std::pair{i, std::vector<Element>{a}};
    } else {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          const Element v = alg.apply(op, a, b);
          if (!related(v, alg.apply(op, class_of_[a], b)) ||
              !related(v, alg.apply(op, a, class_of_[b])))
            return std::pair{i, std::vector<Element>{a, b}};
        }
    }
  }
  return std::nullopt;
}

bool is_subalgebra(const FiniteAlgebra& alg, const Subset& s) {
  if (s.parent_size() != alg.size() || !s.contains(alg.zero())) return false;
  const auto elems = s.elements();
  for (const auto& op : alg.ops()) {
    if (op.arity == 1) {
      for (Element a : elems)
        if (!s.contains(alg.apply(op, a))) return false;
    } else {
      for (Element a : elems)
        for (Element b : elems)
          if (!s.contains(alg.apply(op, a, b))) return false;
    }
  }
  return true;
}

void require_subalgebra(const FiniteAlgebra& alg, const Subset& s, const char* what) {
  if (!is_subalgebra(alg, s))
    throw InvalidArgument(std::string(what) + " is not a subalgebra");
}

Subset subalgebra_closure(const FiniteAlgebra& alg, const Subset& seed) {
  if (seed.parent_size() != alg.size())
    throw InvalidArgument("seed is over a different carrier");
  Subset out(alg.size());
  std::vector<Element> processed;
  std::deque<Element> pending;
  auto add = [&](Element x) {
    if (out.insert(x)) pending.push_back(x);
  };
  add(alg.zero());
  for (Element x : seed.elements()) add(x);
  while (!pending.empty()) {
    const Element x = pending.front();
    pending.pop_front();
    processed.push_back(x);
    for (const auto& op : alg.ops()) {
      if (op.arity == 1) {
        add(alg.apply(op, x));
        continue;
      }
      for (Element y : processed) {
        add(alg.apply(op, x, y));
        add(alg.apply(op, y, x));
      }
    }
  }
  return out;
}

Congruence congruence_generated(const FiniteAlgebra& alg,
                                const std::vector<ElementPair>& pairs) {
  const auto n = static_cast<Element>(alg.size());
  UnionFind uf(n);
  // Every successful union is queued once; translating the merged pair by
  // each basic operation (other arguments ranging over the carrier) and
  // merging the images is enough, since unary polynomials are composites of
  // these one-step translations.
  std::deque<ElementPair> work;
  auto merge = [&](Element a, Element b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidArgument("pair outside the carrier");
    merge(a, b);
  }
  while (!work.empty()) {
    const auto [a, b] = work.front();
    work.pop_front();
    for (const auto& op : alg.ops()) {
      if (op.arity == 1) {
        merge(alg.apply(op, a), alg.apply(op, b));
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        merge(alg.apply(op, a, z), alg.apply(op, b, z));
        merge(alg.apply(op, z, a), alg.apply(op, z, b));
      }
    }
  }
  std::vector<Element> class_of(n);
  for (Element x = 0; x < n; ++x) class_of[x] = uf.find(x);
  return Congruence(std::move(class_of));
}

namespace detail {

BinaryRelation reflexive_compatible_closure_until(
    const FiniteAlgebra& alg, const std::vector<ElementPair>& pairs,
    const std::function<bool(Element, Element)>& stop) {
  const auto n = static_cast<Element>(alg.size());
  BinaryRelation rel = BinaryRelation::diagonal(n);
  std::vector<ElementPair> processed;
  std::deque<ElementPair> pending;
  bool stopped = false;
  auto add = [&](Element a, Element b) {
    if (stopped || !rel.insert(a, b)) return;
    pending.emplace_back(a, b);
    if (stop && stop(a, b)) stopped = true;
  };
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidArgument("pair outside the carrier");
    add(a, b);
  }
  // Products of a new pair with diagonal pairs and with every off-diagonal
  // pair processed so far; diagonal-by-diagonal products stay diagonal.
  while (!pending.empty() && !stopped) {
    const auto [a, b] = pending.front();
    pending.pop_front();
    processed.emplace_back(a, b);
    for (const auto& op : alg.ops()) {
      if (op.arity == 1) {
        add(alg.apply(op, a), alg.apply(op, b));
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        add(alg.apply(op, a, z), alg.apply(op, b, z));
        add(alg.apply(op, z, a), alg.apply(op, z, b));
      }
      for (const auto& [c, d] : processed) {
        add(alg.apply(op, a, c), alg.apply(op, b, d));
        add(alg.apply(op, c, a), alg.apply(op, d, b));
      }
    }
  }
  return rel;
}

}  // namespace detail

BinaryRelation reflexive_compatible_closure(const FiniteAlgebra& alg,
                                            const std::vector<ElementPair>& pairs) {
  return detail::reflexive_compatible_closure_until(alg, pairs, {});
}

Subset zero_class(const BinaryRelation& rel, const FiniteAlgebra& alg) {
  return rel.row(alg.zero());
}

Subset zero_class(const Congruence& rel, const FiniteAlgebra& alg) {
  Subset out(alg.size());
  const Element rep = rel.representative(alg.zero());
  for (Element x = 0; x < alg.size(); ++x)
    if (rel.representative(x) == rep) out.insert(x);
  return out;
}

std::vector<ElementPair> zero_pairs(const FiniteAlgebra& alg, const Subset& k) {
  std::vector<ElementPair> out;
  for (Element x : k.elements()) out.emplace_back(alg.zero(), x);
  return out;
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.ops().size() != b.ops().size())
    throw InvalidArgument("signature mismatch: different operation counts");
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > kMaxCarrierSize) throw Refusal("product exceeds the carrier size cap");
  std::vector<Operation> ops;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    const auto& oa = a.ops()[i];
    const auto& ob = b.ops()[i];
    if (oa.name != ob.name || oa.arity != ob.arity)
      throw InvalidArgument("signature mismatch at operation " + oa.name);
    Operation op{oa.name, oa.arity, {}};
    if (op.arity == 1) {
      op.table.resize(n);
      for (Element x = 0; x < na; ++x)
        for (Element y = 0; y < nb; ++y)
          op.table[x * nb + y] =
              static_cast<Element>(a.apply(oa, x) * nb + b.apply(ob, y));
    } else {
      op.table.resize(n * n);
      for (Element x1 = 0; x1 < na; ++x1)
        for (Element y1 = 0; y1 < nb; ++y1)
          for (Element x2 = 0; x2 < na; ++x2)
            for (Element y2 = 0; y2 < nb; ++y2) {
              const std::size_t p = x1 * nb + y1, q = x2 * nb + y2;
              op.table[p * n + q] =
                  static_cast<Element>(a.apply(oa, x1, x2) * nb + b.apply(ob, y1, y2));
            }
    }
    ops.push_back(std::move(op));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  const Variety v = a.variety() == b.variety() ? a.variety() : Variety::Raw;
  return FiniteAlgebra(n, static_cast<Element>(a.zero() * nb + b.zero()), std::move(ops), v,
                       std::move(labels));
}

std::vector<Subset> enumerate_subalgebras(const FiniteAlgebra& alg, std::size_t cap) {
  if (alg.size() > cap)
    throw Refusal("subalgebra enumeration refused: size " + std::to_string(alg.size()) +
                  " exceeds cap " + std::to_string(cap));
  // Every subalgebra is a join of 1-generated ones, so growing known
  // subalgebras by one cyclic subalgebra at a time reaches all of them.
  std::map<std::vector<Element>, Subset> known;
  std::vector<Subset> cyclic;
  for (Element x = 0; x < alg.size(); ++x) {
    Subset seed(alg.size());
    seed.insert(x);
    Subset c = subalgebra_closure(alg, seed);
    if (known.emplace(c.elements(), c).second) cyclic.push_back(c);
  }
  std::vector<Subset> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        if (c.is_subset_of(s)) continue;
        Subset j = subalgebra_closure(alg, s | c);
        if (known.emplace(j.elements(), j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Subset> out;
  out.reserve(known.size());
  for (auto& [key, s] : known) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [](const Subset& a, const Subset& b) { return canonical_order(a, b) < 0; });
  return out;
}

Subset InducedAlgebra::to_local(const Subset& parent_subset) const {
  Subset out(embedding.size());
  for (Element x : parent_subset.elements()) {
    if (local[x] >= embedding.size())
      throw InvalidArgument("subset leaves the induced subalgebra");
    out.insert(local[x]);
  }
  return out;
}

Subset InducedAlgebra::to_parent(const Subset& local_subset) const {
  Subset out(local.size());
  for (Element x : local_subset.elements()) out.insert(embedding[x]);
  return out;
}

InducedAlgebra induced_subalgebra(const FiniteAlgebra& alg, const Subset& s) {
  require_subalgebra(alg, s, "induced carrier");
  InducedAlgebra out;
  out.embedding = s.elements();
  const std::size_t m = out.embedding.size();
  out.local.assign(alg.size(), static_cast<Element>(m));
  for (Element i = 0; i < m; ++i) out.local[out.embedding[i]] = i;
  std::vector<Operation> ops;
  for (const auto& op : alg.ops()) {
    Operation sub{op.name, op.arity, {}};
    if (op.arity == 1) {
      for (Element a : out.embedding) sub.table.push_back(out.local[alg.apply(op, a)]);
    } else {
      for (Element a : out.embedding)
        for (Element b : out.embedding) sub.table.push_back(out.local[alg.apply(op, a, b)]);
    }
    ops.push_back(std::move(sub));
  }
  std::vector<std::string> labels;
  if (alg.has_labels())
    for (Element a : out.embedding) labels.push_back(alg.label(a));
  out.algebra = FiniteAlgebra(m, out.local[alg.zero()], std::move(ops), alg.variety(),
                              std::move(labels));
  return out;
}

}  // namespace normcomm
