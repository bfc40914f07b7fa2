#include <doctest.h>

#include "helpers.hpp"
#include "normcomm/errors.hpp"

using namespace testing;

TEST_CASE("subset set operations") {
  Subset a(70, {0, 3, 64, 69});
  Subset b(70, {3, 64});
  CHECK(a.count() == 4);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  CHECK(a.elements() == std::vector<Element>{0, 3, 64, 69});
  CHECK(canonical_order(b, a) < 0);
  CHECK(canonical_order(Subset(5, {0, 1}), Subset(5, {0, 2})) < 0);
  CHECK(Subset::full(70).is_full());
}

TEST_CASE("validate accepts Z6 and rejects a corrupted table") {
  const auto z6 = cyclic_group(6);
  CHECK(validate(z6).empty());

  auto ops = std::vector<Operation>(z6.ops().begin(), z6.ops().end());
  ops[0].table[2 * 6 + 3] = 0;  // 2 + 3 should be 5
  const FiniteAlgebra broken(6, 0, ops, Variety::Group);
  const auto report = validate(broken);
  REQUIRE_FALSE(report.empty());
  bool has_assoc = false;
  for (const auto& v : report)
    if (v.law.find("associative") != std::string::npos) {
      has_assoc = true;
      REQUIRE(v.witness.size() == 3);
      const auto& mul = broken.ops()[0];
      const auto [a, b, c] = std::tuple{v.witness[0], v.witness[1], v.witness[2]};
      CHECK(broken.apply(mul, broken.apply(mul, a, b), c) !=
            broken.apply(mul, a, broken.apply(mul, b, c)));
    }
  CHECK(has_assoc);
}

TEST_CASE("validate accepts the ring Z4") { CHECK(validate(ring_mod_n(4)).empty()); }

TEST_CASE("validate reports missing operations") {
  const FiniteAlgebra g(2, 0, {Operation{"mul", 2, {0, 1, 1, 0}}}, Variety::Group);
  const auto report = validate(g);
  REQUIRE(report.size() == 1);
  CHECK(report[0].law == "missing operation inv/1");
}

TEST_CASE("structural table errors are rejected at construction") {
  CHECK_THROWS_AS(FiniteAlgebra(2, 0, {Operation{"mul", 2, {0, 1, 1}}}, Variety::Raw),
                  InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(2, 0, {Operation{"mul", 2, {0, 1, 1, 2}}}, Variety::Raw),
                  InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(2, 5, {}, Variety::Raw), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(0, 0, {}, Variety::Raw), InvalidArgument);
}

TEST_CASE("serial and OpenMP validation agree, witnesses included") {
  for (const auto* e : catalog()) {
    const auto s = validate(e->algebra, parallel::Mode::Serial);
    const auto p = validate(e->algebra, parallel::Mode::OpenMP);
    CHECK(s.empty());
    CHECK(p.empty());
  }
  // A non-associative magma: both paths must report the same first witness.
  std::vector<Element> t(25);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) t[a * 5 + b] = (2 * a + 3 * b + 1) % 5;
  t[0] = 0;
  const FiniteAlgebra m(5, 0, {Operation{"mul", 2, t}}, Variety::Monoid);
  const auto s = validate(m, parallel::Mode::Serial);
  const auto p = validate(m, parallel::Mode::OpenMP);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].law == p[i].law);
    CHECK(s[i].witness == p[i].witness);
  }
}

TEST_CASE("trivial algebra is valid") {
  const auto& t = cat("trivial");
  CHECK(t.size() == 1);
  CHECK(validate(t).empty());
}
