#pragma once

// Test-only brute-force oracles. They read operation tables directly and
// share no code with the closure engines they check.

#include <functional>
#include <set>
#include <vector>

#include "normcomm/algebra.hpp"

namespace brute {

using normcomm::Element;
using normcomm::FiniteAlgebra;
using Bits = std::vector<bool>;

inline bool closed(const FiniteAlgebra& a, const Bits& s) {
  if (!s[a.zero()]) return false;
  const auto n = static_cast<Element>(a.size());
  for (const auto& op : a.ops())
    for (Element x = 0; x < n; ++x) {
      if (!s[x]) continue;
      if (op.arity == 1) {
        if (!s[op.table[x]]) return false;
        continue;
      }
      for (Element y = 0; y < n; ++y)
        if (s[y] && !s[op.table[x * n + y]]) return false;
    }
  return true;
}

/// Every subalgebra, by scanning all 2^n subsets (n <= 20).
inline std::vector<Bits> all_subalgebras(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    if (closed(a, s)) out.push_back(s);
  }
  return out;
}

/// Smallest subalgebra containing seed: intersection of all subalgebras
/// containing it (n <= 20).
inline Bits closure_by_intersection(const FiniteAlgebra& a, const Bits& seed) {
  Bits acc(a.size(), true);
  for (const auto& s : all_subalgebras(a)) {
    bool contains = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (seed[i] && !s[i]) contains = false;
    if (contains)
      for (std::size_t i = 0; i < a.size(); ++i) acc[i] = acc[i] && s[i];
  }
  return acc;
}

/// All set partitions of 0..n-1 as restricted-growth strings.
inline void partitions(std::size_t n, const std::function<void(const std::vector<Element>&)>& f) {
  if (n == 0) return;
  std::vector<Element> rgs(n, 0);
  std::function<void(std::size_t, Element)> go = [&](std::size_t i, Element maxb) {
    if (i == n) {
      f(rgs);
      return;
    }
    for (Element b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      go(i + 1, b > maxb ? b : maxb);
    }
  };
  go(1, 0);
}

inline bool compatible_partition(const FiniteAlgebra& a, const std::vector<Element>& block) {
  const auto n = static_cast<Element>(a.size());
  for (const auto& op : a.ops()) {
    if (op.arity == 1) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (block[x] == block[y] && block[op.table[x]] != block[op.table[y]]) return false;
      continue;
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (block[x] != block[y]) continue;
        for (Element z = 0; z < n; ++z)
          if (block[op.table[x * n + z]] != block[op.table[y * n + z]] ||
              block[op.table[z * n + x]] != block[op.table[z * n + y]])
            return false;
      }
  }
  return true;
}

/// Every congruence of the algebra, as block labelings.
inline std::vector<std::vector<Element>> all_congruences(const FiniteAlgebra& a) {
  std::vector<std::vector<Element>> out;
  partitions(a.size(), [&](const std::vector<Element>& p) {
    if (compatible_partition(a, p)) out.push_back(p);
  });
  return out;
}

/// Relation as an n*n bit vector.
using Rel = std::vector<bool>;

/// Intersection of all congruences containing the pairs.
inline Rel least_congruence(const FiniteAlgebra& a,
                            const std::vector<std::vector<Element>>& congruences,
                            const std::vector<std::pair<Element, Element>>& pairs) {
  const std::size_t n = a.size();
  Rel acc(n * n, true);
  for (const auto& c : congruences) {
    bool contains = true;
    for (auto [x, y] : pairs)
      if (c[x] != c[y]) contains = false;
    if (!contains) continue;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (c[x] != c[y]) acc[x * n + y] = false;
  }
  return acc;
}

inline bool compatible_reflexive(const FiniteAlgebra& a, const Rel& r) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x)
    if (!r[x * n + x]) return false;
  for (const auto& op : a.ops())
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!r[x * n + y]) continue;
        if (op.arity == 1) {
          if (!r[op.table[x] * n + op.table[y]]) return false;
          continue;
        }
        for (Element u = 0; u < n; ++u)
          for (Element v = 0; v < n; ++v)
            if (r[u * n + v] && !r[op.table[x * n + u] * n + op.table[y * n + v]]) return false;
      }
  return true;
}

/// Intersection of every reflexive compatible relation containing the pairs,
/// by enumerating all reflexive relations (n <= 4).
inline Rel least_reflexive_by_enumeration(const FiniteAlgebra& a,
                                          const std::vector<std::pair<Element, Element>>& pairs) {
  const std::size_t n = a.size();
  std::vector<std::size_t> off;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) off.push_back(x * n + y);
  Rel acc(n * n, true);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    Rel r(n * n, false);
    for (std::size_t x = 0; x < n; ++x) r[x * n + x] = true;
    for (std::size_t i = 0; i < off.size(); ++i) r[off[i]] = (mask >> i) & 1;
    bool contains = true;
    for (auto [x, y] : pairs)
      if (!r[x * n + y]) contains = false;
    if (!contains || !compatible_reflexive(a, r)) continue;
    for (std::size_t i = 0; i < n * n; ++i) acc[i] = acc[i] && r[i];
  }
  return acc;
}

/// Least reflexive compatible relation by naive Kleene iteration: apply every
/// operation to every tuple of related pairs until nothing changes.
inline Rel least_reflexive_by_iteration(const FiniteAlgebra& a,
                                        const std::vector<std::pair<Element, Element>>& pairs) {
  const auto n = static_cast<Element>(a.size());
  Rel r(std::size_t{n} * n, false);
  for (Element x = 0; x < n; ++x) r[x * n + x] = true;
  for (auto [x, y] : pairs) r[x * n + y] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    Rel next = r;
    for (const auto& op : a.ops())
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          if (!r[x * n + y]) continue;
          if (op.arity == 1) {
            next[op.table[x] * n + op.table[y]] = true;
            continue;
          }
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v)
              if (r[u * n + v]) next[op.table[x * n + u] * n + op.table[y * n + v]] = true;
        }
    if (next != r) {
      r = std::move(next);
      changed = true;
    }
  }
  return r;
}

}  // namespace brute
