#include "normcomm/catalog.hpp"

#include <array>
#include <functional>
#include <memory>
#include <mutex>

#include "normcomm/closure.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/varieties.hpp"

namespace normcomm {

const Subset& CatalogEntry::subset(std::string_view wanted) const {
  for (const auto& d : distinguished)
    if (d.name == wanted) return d.subset;
  throw InvalidArgument(name + " has no distinguished subset '" + std::string(wanted) + "'");
}

namespace {

CatalogEntry permutation_entry(std::string name, std::size_t degree,
                               const std::vector<std::string>& gens,
                               const std::vector<std::pair<std::string, std::vector<std::string>>>&
                                   distinguished = {}) {
  CatalogEntry e{std::move(name), group_from_permutations(PermutationSpec::from_cycles(degree, gens)),
                 {}};
  for (const auto& [dname, dgens] : distinguished) {
    Subset seed(e.algebra.size());
    for (const auto& g : dgens) seed.insert(*element_from_cycles(e.algebra, g));
    e.distinguished.push_back({dname, subalgebra_closure(e.algebra, seed)});
  }
  return e;
}

FiniteAlgebra upper_triangular_z2() {
  // [[a, b], [0, c]] encoded as 4a + 2b + c.
  constexpr std::size_t n = 8;
  std::vector<Element> add(n * n), mul(n * n);
  std::vector<std::string> labels;
  for (Element x = 0; x < n; ++x) {
    const Element a = x >> 2, b = (x >> 1) & 1, c = x & 1;
    labels.push_back("[" + std::to_string(a) + std::to_string(b) + ";0" + std::to_string(c) + "]");
    for (Element y = 0; y < n; ++y) {
      const Element a2 = y >> 2, b2 = (y >> 1) & 1, c2 = y & 1;
      add[x * n + y] = x ^ y;
      mul[x * n + y] = ((a & a2) << 2) | ((((a & b2) ^ (b & c2)) & 1) << 1) | (c & c2);
    }
  }
  return ring_from_tables(n, std::move(add), std::move(mul), std::move(labels));
}

FiniteAlgebra absorbing_monoid() {
  // e, a, b with a idempotent and b absorbing: e x = x e = x, a a = a, a b = b a = b b = b.
  return monoid_from_table(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0, {"e", "a", "b"});
}

FiniteAlgebra left_zero_monoid() {
  // Left-zero band {a, b} with an identity adjoined: x y = x for x, y in {a, b}.
  return monoid_from_table(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0, {"e", "a", "b"});
}

FiniteAlgebra right_zero_monoid() {
  return monoid_from_table(3, {0, 1, 2, 1, 1, 2, 2, 1, 2}, 0, {"e", "a", "b"});
}

FiniteAlgebra transformation_monoid_2() {
  // All maps {0,1} -> {0,1}, as image pairs; f * g applies f first.
  const std::vector<std::array<Element, 2>> maps{{0, 1}, {1, 0}, {0, 0}, {1, 1}};
  std::vector<Element> mul;
  for (const auto& f : maps)
    for (const auto& g : maps) {
      const std::array<Element, 2> h{g[f[0]], g[f[1]]};
      for (Element i = 0; i < maps.size(); ++i)
        if (maps[i] == h) mul.push_back(i);
    }
  return monoid_from_table(4, std::move(mul), 0, {"id", "swap", "const0", "const1"});
}

struct Slot {
  std::string name;
  std::function<CatalogEntry()> build;
  std::once_flag once;
  std::unique_ptr<CatalogEntry> entry;
};

std::vector<std::unique_ptr<Slot>> make_slots() {
  std::vector<std::unique_ptr<Slot>> slots;
  auto add = [&](std::string name, std::function<CatalogEntry()> build) {
    auto s = std::make_unique<Slot>();
    s->name = std::move(name);
    s->build = std::move(build);
    slots.push_back(std::move(s));
  };
  add("trivial", [] { return CatalogEntry{"trivial", cyclic_group(1), {}}; });
  for (std::size_t n = 2; n <= 12; ++n) {
    const std::string name = "Z" + std::to_string(n) + "-group";
    add(name, [n, name] { return CatalogEntry{name, cyclic_group(n), {}}; });
  }
  add("S3", [] { return permutation_entry("S3", 3, {"(1 2)", "(1 2 3)"}); });
  add("D8", [] { return permutation_entry("D8", 4, {"(1 2 3 4)", "(1 3)"}); });
  add("Q8", [] {
    return permutation_entry("Q8", 8, {"(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"});
  });
  add("A4", [] { return permutation_entry("A4", 4, {"(1 2 3)", "(1 2)(3 4)"}); });
  add("S4", [] { return permutation_entry("S4", 4, {"(1 2 3 4)", "(1 2)"}); });
  add("A5", [] {
    return permutation_entry("A5", 5, {"(1 2 3)", "(1 2 3 4 5)"},
                             {{"H", {"(1 2)(3 4)"}}, {"K", {"(1 2)(4 5)"}}});
  });
  add("A6", [] {
    return permutation_entry("A6", 6, {"(1 2 3)", "(2 3 4 5 6)"},
                             {{"H", {"(1 2 3)"}}, {"K", {"(4 5 6)"}}});
  });
  for (std::size_t n = 2; n <= 16; ++n) {
    const std::string name = "Z" + std::to_string(n) + "-ring";
    add(name, [n, name] { return CatalogEntry{name, ring_mod_n(n), {}}; });
  }
  add("UT2-Z2", [] { return CatalogEntry{"UT2-Z2", upper_triangular_z2(), {}}; });
  add("Z4-zero-ring", [] { return CatalogEntry{"Z4-zero-ring", zero_ring(4), {}}; });
  add("M3-absorbing", [] {
    auto alg = absorbing_monoid();
    return CatalogEntry{"M3-absorbing", alg, {{"K", Subset(3, {0, 2})}}};
  });
  add("LZ2-e", [] {
    auto alg = left_zero_monoid();
    return CatalogEntry{"LZ2-e", alg, {{"K", Subset(3, {0, 1})}}};
  });
  add("RZ2-e", [] {
    auto alg = right_zero_monoid();
    return CatalogEntry{"RZ2-e", alg, {{"K", Subset(3, {0, 1})}}};
  });
  add("T2", [] { return CatalogEntry{"T2", transformation_monoid_2(), {}}; });
  return slots;
}

std::vector<std::unique_ptr<Slot>>& slots() {
  static std::vector<std::unique_ptr<Slot>> s = make_slots();
  return s;
}

const CatalogEntry& materialize(Slot& slot) {
  std::call_once(slot.once, [&] {
    auto e = std::make_unique<CatalogEntry>(slot.build());
    require_valid(e->algebra);
    for (const auto& d : e->distinguished) require_subalgebra(e->algebra, d.subset, d.name.c_str());
    slot.entry = std::move(e);
  });
  return *slot.entry;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : slots()) out.push_back(s->name);
    return out;
  }();
  return names;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (auto& s : slots())
    if (s->name == name) return materialize(*s);
  throw InvalidArgument("unknown catalog algebra '" + std::string(name) + "'");
}

std::vector<const CatalogEntry*> catalog() {
  std::vector<const CatalogEntry*> out;
  for (auto& s : slots()) out.push_back(&materialize(*s));
  return out;
}

}  // namespace normcomm
