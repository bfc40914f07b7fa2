#include <doctest.h>

#include "helpers.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/homomorphism.hpp"

using namespace testing;

namespace {

// Parity of a permutation by counting inversions.
Element sign(const Permutation& p) {
  Element inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      if (p.images[i] > p.images[j]) ++inv;
  return inv % 2;
}

}  // namespace

TEST_CASE("quotient of Z6 by <2>") {
  const auto z6 = cyclic_group(6);
  const auto theta = congruence_generated(z6, {{0, 2}});
  const auto q = quotient(z6, theta);
  CHECK(q.algebra.size() == 2);
  CHECK(validate(q.algebra).empty());
  CHECK(q.projection.is_surjective());
  CHECK(kernel_of(q.projection) == Subset(6, {0, 2, 4}));
  CHECK(q.algebra.label(0) == "[0]");
  CHECK(q.algebra.label(1) == "[1]");
}

TEST_CASE("quotient rejects an incompatible partition") {
  const auto z4 = cyclic_group(4);
  CHECK_THROWS_AS(quotient(z4, Congruence({0, 0, 2, 3})), InvalidArgument);
}

TEST_CASE("sign map S3 -> Z2 has kernel A3") {
  const auto& s3 = cat("S3");
  const auto perms = permutations_from_labels(s3);
  REQUIRE(perms.has_value());
  std::vector<Element> map;
  for (const auto& p : *perms) map.push_back(sign(p));
  const Homomorphism f(s3, cyclic_group(2), map);
  CHECK(f.is_surjective());
  CHECK(kernel_of(f) == gen(s3, {"(1 2 3)"}));
  CHECK(kernel_of(f).count() == 3);
  CHECK(hom_image(f, gen(s3, {"(1 2)"})) == Subset(2, {0, 1}));
  CHECK(hom_image(f, gen(s3, {"(1 2 3)"})) == Subset(2, {0}));
}

TEST_CASE("non-homomorphisms are rejected") {
  const auto z4 = cyclic_group(4);
  const auto z2 = cyclic_group(2);
  CHECK(homomorphism_violation(z4, z2, {0, 1, 0, 1}) == std::nullopt);
  CHECK(homomorphism_violation(z4, z2, {0, 1, 1, 0}).has_value());
  CHECK(homomorphism_violation(z4, z2, {1, 0, 1, 0}).has_value());
  CHECK_THROWS_AS(Homomorphism(z4, z2, {0, 1, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(Homomorphism(z4, z2, {0, 1}), InvalidArgument);
}

TEST_CASE("first isomorphism theorem on catalog groups") {
  for (const char* name : {"S3", "D8", "Q8", "A4", "Z12-group"}) {
    const auto& a = cat(name);
    for (const auto& k : enumerate_subalgebras(a)) {
      const auto theta = congruence_generated(a, zero_pairs(a, k));
      const auto q = quotient(a, theta);
      const auto kern = kernel_of(q.projection);
      CHECK(kern.is_subset_of(Subset::full(a.size())));
      CHECK(q.algebra.size() * kern.count() == a.size());
      CHECK(q.projection.kernel_pair() == theta);
      CHECK(validate(q.algebra).empty());
    }
  }
}

TEST_CASE("image of a subalgebra is a subalgebra") {
  const auto& s4 = cat("S4");
  const auto klein = gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto q = quotient(s4, congruence_generated(s4, zero_pairs(s4, klein)));
  CHECK(q.algebra.size() == 6);
  CHECK(find_isomorphism(q.algebra, cat("S3")).has_value());
  for (const auto& h : enumerate_subalgebras(s4))
    CHECK(is_subalgebra(q.algebra, hom_image(q.projection, h)));
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(product_algebra(cyclic_group(2), cyclic_group(3)), cyclic_group(6))
            .has_value());
  CHECK_FALSE(find_isomorphism(product_algebra(cyclic_group(2), cyclic_group(2)), cyclic_group(4))
                  .has_value());
  CHECK_FALSE(find_isomorphism(cat("D8"), cat("Q8")).has_value());
  CHECK(find_isomorphism(cat("D8"), cat("D8")).has_value());
  CHECK_FALSE(find_isomorphism(cyclic_group(6), cat("S3")).has_value());
}
