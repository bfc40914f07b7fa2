#include "normcomm/terms.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "normcomm/errors.hpp"

namespace normcomm {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t hash_table(std::span<const std::uint16_t> t) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : t) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TermFunctions TermFunctions::enumerate(const FiniteAlgebra& alg, std::size_t depth,
                                       const TermBudget& budget) {
  if (alg.size() > 65536) throw Refusal("term tables need carriers of at most 65536");
  TermFunctions tf;
  tf.carrier_ = alg.size();
  tf.depth_requested_ = depth;
  const std::size_t n = alg.size();
  tf.variables_ = 1;
  while (tf.variables_ < budget.max_variables &&
         power(n, tf.variables_ + 1) <= budget.max_table)
    ++tf.variables_;
  tf.table_size_ = power(n, tf.variables_);
  const std::size_t ts = tf.table_size_;
  const std::size_t max_functions = std::max<std::size_t>(1, budget.max_entries / ts);

  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  std::vector<std::uint16_t> scratch(ts);
  auto try_add = [&](std::size_t d) {
    const auto h = hash_table(scratch);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      auto f = tf.function(it->second);
      if (std::equal(f.begin(), f.end(), scratch.begin())) return true;
    }
    if (tf.count() >= max_functions) return false;
    seen.emplace(h, tf.count());
    tf.values_.insert(tf.values_.end(), scratch.begin(), scratch.end());
    tf.depth_of_.push_back(d);
    return true;
  };

  for (std::size_t var = 0; var < tf.variables_; ++var) {
    const std::size_t stride = power(n, tf.variables_ - 1 - var);
    for (std::size_t t = 0; t < ts; ++t) scratch[t] = static_cast<std::uint16_t>((t / stride) % n);
    try_add(0);
  }
  std::fill(scratch.begin(), scratch.end(), static_cast<std::uint16_t>(alg.zero()));
  try_add(0);

  std::size_t layer_begin = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::size_t layer_end = tf.count();
    if (layer_begin == layer_end) {
      tf.depth_reached_ = depth;
      return tf;
    }
    bool ok = true;
    for (const auto& op : alg.ops()) {
      if (!ok) break;
      if (op.arity == 1) {
        for (std::size_t i = layer_begin; i < layer_end && ok; ++i) {
          auto f = tf.function(i);
          for (std::size_t t = 0; t < ts; ++t) scratch[t] = static_cast<std::uint16_t>(op.table[f[t]]);
          ok = try_add(d);
        }
        continue;
      }
      // Pairs with at least one argument from the previous layer.
      for (std::size_t i = 0; i < layer_end && ok; ++i)
        for (std::size_t j = (i >= layer_begin ? 0 : layer_begin); j < layer_end && ok; ++j) {
          auto f = tf.function(i);
          auto g = tf.function(j);
          for (std::size_t t = 0; t < ts; ++t)
            scratch[t] = static_cast<std::uint16_t>(op.table[std::size_t{f[t]} * n + g[t]]);
          ok = try_add(d);
        }
    }
    if (!ok) {
      tf.truncated_ = true;
      tf.depth_reached_ = d - 1;
      return tf;
    }
    layer_begin = layer_end;
    tf.depth_reached_ = d;
  }
  return tf;
}

std::size_t TermFunctions::tuple_index(std::span<const Element> values) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < variables_; ++i) idx = idx * carrier_ + values[i];
  return idx;
}

namespace {

// Iterates over all tuples in `domain`^count, calling body(tuple).
template <class Body>
bool for_each_tuple(const std::vector<Element>& domain, std::size_t count,
                    std::vector<Element>& tuple, std::size_t offset, Body&& body) {
  if (count == 0) return body();
  std::vector<std::size_t> pos(count, 0);
  if (domain.empty()) return true;
  while (true) {
    for (std::size_t i = 0; i < count; ++i) tuple[offset + i] = domain[pos[i]];
    if (!body()) return false;
    std::size_t i = count;
    while (i > 0) {
      --i;
      if (++pos[i] < domain.size()) break;
      pos[i] = 0;
      if (i == 0) return true;
    }
  }
}

}  // namespace

std::optional<TermViolation> find_clot_violation(const FiniteAlgebra& alg, const Subset& k,
                                                 const TermFunctions& terms) {
  const std::size_t v = terms.variables();
  std::vector<Element> carrier(alg.size());
  for (Element x = 0; x < alg.size(); ++x) carrier[x] = x;
  const auto ks = k.elements();
  std::vector<Element> tuple(v, alg.zero());
  for (std::size_t fi = 0; fi < terms.count(); ++fi) {
    const auto f = terms.function(fi);
    for (std::size_t slots = 1; slots <= v; ++slots) {
      const std::size_t m = v - slots;
      std::optional<TermViolation> found;
      for_each_tuple(carrier, m, tuple, 0, [&] {
        for (std::size_t i = m; i < v; ++i) tuple[i] = alg.zero();
        if (f[terms.tuple_index(tuple)] != alg.zero()) return true;
        return for_each_tuple(ks, slots, tuple, m, [&] {
          const Element val = f[terms.tuple_index(tuple)];
          if (k.contains(val)) return true;
          found = TermViolation{fi, slots, tuple, val};
          return false;
        });
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

Subset ideal_term_closure(const FiniteAlgebra& alg, const Subset& k, const TermFunctions& terms) {
  const std::size_t v = terms.variables();
  std::vector<Element> carrier(alg.size());
  for (Element x = 0; x < alg.size(); ++x) carrier[x] = x;
  std::vector<Element> tuple(v, alg.zero());

  // (function, k-slot count) pairs that vanish identically when the k-part is zero.
  std::vector<std::pair<std::size_t, std::size_t>> ideal_terms;
  for (std::size_t fi = 0; fi < terms.count(); ++fi) {
    const auto f = terms.function(fi);
    for (std::size_t slots = 1; slots <= v; ++slots) {
      const std::size_t m = v - slots;
      const bool vanishes = for_each_tuple(carrier, m, tuple, 0, [&] {
        for (std::size_t i = m; i < v; ++i) tuple[i] = alg.zero();
        return f[terms.tuple_index(tuple)] == alg.zero();
      });
      if (vanishes) ideal_terms.emplace_back(fi, slots);
    }
  }

  Subset closed = k;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = closed.elements();
    for (auto [fi, slots] : ideal_terms) {
      const auto f = terms.function(fi);
      const std::size_t m = v - slots;
      for_each_tuple(carrier, m, tuple, 0, [&] {
        return for_each_tuple(current, slots, tuple, m, [&] {
          grew |= closed.insert(f[terms.tuple_index(tuple)]);
          return true;
        });
      });
    }
  }
  return closed;
}

}  // namespace normcomm
