#pragma once

#include <string>
#include <vector>

#include "normcomm/catalog.hpp"
#include "normcomm/closure.hpp"
#include "normcomm/varieties.hpp"

namespace testing {

using namespace normcomm;

inline Element el(const FiniteAlgebra& a, const std::string& cycles) {
  auto x = element_from_cycles(a, cycles);
  if (!x) throw std::runtime_error("no element " + cycles);
  return *x;
}

/// Subgroup generated by the listed cycle-notation elements.
inline Subset gen(const FiniteAlgebra& a, const std::vector<std::string>& gens) {
  Subset seed(a.size());
  for (const auto& g : gens) seed.insert(el(a, g));
  return subalgebra_closure(a, seed);
}

inline const FiniteAlgebra& cat(const std::string& name) { return catalog_entry(name).algebra; }

inline std::vector<std::string> labels(const FiniteAlgebra& a, const Subset& s) {
  std::vector<std::string> out;
  for (Element x : s.elements()) out.push_back(a.label(x));
  return out;
}

/// Deterministic xorshift generator for hand-rolled property tests.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ull + 1) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  Subset subset(std::size_t n, std::size_t max_size) {
    Subset s(n);
    const std::size_t k = below(max_size + 1);
    for (std::size_t i = 0; i < k; ++i) s.insert(static_cast<Element>(below(n)));
    return s;
  }
};

}  // namespace testing
