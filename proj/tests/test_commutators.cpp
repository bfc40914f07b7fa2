#include <doctest.h>

#include "helpers.hpp"
#include "normcomm/commutators.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/terms.hpp"

using namespace testing;

TEST_CASE("A5: Higgins is <(3 4 5)>, Huq is all of A5") {
  const auto& e = catalog_entry("A5");
  const auto& a5 = e.algebra;
  const auto h = gen(a5, {"(1 2)(3 4)"});
  const auto k = gen(a5, {"(1 2)(4 5)"});
  CHECK(h == e.subset("H"));
  CHECK(k == e.subset("K"));
  const auto higgins = higgins_commutator(a5, h, k);
  CHECK(labels(a5, higgins) == std::vector<std::string>{"e", "(3 4 5)", "(3 5 4)"});
  CHECK(huq_commutator(a5, h, k).count() == 60);
  CHECK(join(a5, h, k).count() == 6);
}

TEST_CASE("A6: Huq of <(1 2 3)>, <(4 5 6)> is trivial, of the normalizations is A6") {
  const auto& a6 = cat("A6");
  const auto h = gen(a6, {"(1 2 3)"});
  const auto k = gen(a6, {"(4 5 6)"});
  CHECK(huq_commutator(a6, h, k).count() == 1);
  CHECK(higgins_commutator(a6, h, k).count() == 1);
  const auto hn = normalization(a6, h);
  const auto kn = normalization(a6, k);
  CHECK(hn.count() == 360);
  CHECK(huq_commutator(a6, hn, kn).count() == 360);
  CHECK(join(a6, h, k).count() == 9);
}

TEST_CASE("S3 commutators") {
  const auto& s3 = cat("S3");
  const auto all = Subset::full(6);
  const auto t = gen(s3, {"(1 2)"});
  const auto c = higgins_commutator(s3, all, t);
  CHECK(c == gen(s3, {"(1 2 3)"}));
  CHECK(normalization(s3, t).count() == 6);
  CHECK(conjugation_closure(s3, t) == normalization(s3, t));
  CHECK(higgins_commutator(s3, all, all) == gen(s3, {"(1 2 3)"}));
}

TEST_CASE("abelian groups and zero rings have trivial commutators") {
  const auto z12 = cat("Z12-group");
  const auto all = Subset::full(12);
  CHECK(higgins_commutator(z12, all, all).count() == 1);
  const auto& zr = cat("Z4-zero-ring");
  CHECK(higgins_commutator(zr, Subset::full(4), Subset::full(4)).count() == 1);
}

TEST_CASE("ring commutators are ideal products") {
  const auto& z12 = cat("Z12-ring");
  const auto two = subalgebra_closure(z12, Subset(12, {2}));
  const auto three = subalgebra_closure(z12, Subset(12, {3}));
  CHECK(higgins_commutator(z12, two, three).count() == 2);  // 6Z12
  CHECK(higgins_commutator(z12, two, two).count() == 3);    // 4Z12
  CHECK(higgins_commutator(z12, Subset::full(12), two) == two);
}

// Independent route for rings: evaluate every term function that vanishes
// when either block of variables is zero on H- and K-arguments, then close.
TEST_CASE("ring strategy agrees with a bounded term oracle") {
  for (const char* name : {"Z4-ring", "Z6-ring", "Z8-ring", "Z12-ring", "UT2-Z2", "Z4-zero-ring"}) {
    const auto& a = cat(name);
    const auto terms = TermFunctions::enumerate(a, 3);
    const auto v = terms.variables();
    const auto subs = enumerate_subalgebras(a);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        Subset values(a.size());
        values.insert(a.zero());
        std::vector<Element> tuple(v);
        for (std::size_t fi = 0; fi < terms.count(); ++fi) {
          const auto f = terms.function(fi);
          for (std::size_t split = 1; split < v; ++split) {
            // f is a commutator word for this split if it vanishes whenever
            // the first block or the second block is zero.
            bool word = true;
            const std::size_t total = terms.table_size();
            for (std::size_t idx = 0; idx < total && word; ++idx) {
              std::size_t r = idx;
              for (std::size_t i = v; i-- > 0;) {
                tuple[i] = static_cast<Element>(r % a.size());
                r /= a.size();
              }
              bool left_zero = true, right_zero = true;
              for (std::size_t i = 0; i < split; ++i) left_zero &= tuple[i] == a.zero();
              for (std::size_t i = split; i < v; ++i) right_zero &= tuple[i] == a.zero();
              if ((left_zero || right_zero) && f[idx] != a.zero()) word = false;
            }
            if (!word) continue;
            for (std::size_t idx = 0; idx < total; ++idx) {
              std::size_t r = idx;
              bool ok = true;
              for (std::size_t i = v; i-- > 0;) {
                const auto x = static_cast<Element>(r % a.size());
                r /= a.size();
                ok &= i < split ? h.contains(x) : k.contains(x);
              }
              if (ok) values.insert(f[idx]);
            }
          }
        }
        CHECK_MESSAGE(subalgebra_closure(a, values) == higgins_commutator(a, h, k), name);
      }
  }
}

TEST_CASE("Huq equals the normalization of Higgins and is symmetric") {
  for (const char* name : {"S3", "D8", "Q8", "A4"}) {
    const auto& a = cat(name);
    const auto subs = enumerate_subalgebras(a);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        const auto hq = huq_commutator(a, h, k);
        CHECK(hq == normalization(a, higgins_commutator(a, h, k)));
        CHECK(hq == huq_commutator(a, k, h));
        CHECK(higgins_commutator(a, h, k).is_subset_of(join(a, h, k)));
      }
  }
}

TEST_CASE("diamond oracle on S3 realizes A3") {
  const auto& s3 = cat("S3");
  const auto h = gen(s3, {"(1 2)"});
  const auto k = gen(s3, {"(1 2 3)"});
  const auto r = diamond_image_oracle(s3, h, k, {8, 2, 1'000'000});
  CHECK(labels(s3, r.values) == std::vector<std::string>{"e", "(1 2 3)", "(1 3 2)"});
  CHECK(r.stabilized);
  CHECK(subalgebra_closure(s3, r.values) == higgins_commutator(s3, h, k));
}

TEST_CASE("diamond oracle on A5 stabilizes to the Higgins commutator") {
  const auto& e = catalog_entry("A5");
  const auto r = diamond_image_oracle(e.algebra, e.subset("H"), e.subset("K"), {10, 2, 10'000'000});
  CHECK(r.stabilized);
  CHECK(subalgebra_closure(e.algebra, r.values) ==
        higgins_commutator(e.algebra, e.subset("H"), e.subset("K")));
}

TEST_CASE("diamond oracle reports a partial result when over budget") {
  const auto& e = catalog_entry("A5");
  try {
    diamond_image_oracle(e.algebra, e.subset("H"), e.subset("K"), {12, 100, 10});
    FAIL("expected OracleBudgetExceeded");
  } catch (const OracleBudgetExceeded& ex) {
    CHECK(ex.partial().values.contains(e.algebra.zero()));
    CHECK(ex.partial().work > 0);
    CHECK_FALSE(ex.partial().stabilized);
  }
  CHECK_THROWS_AS(diamond_image_oracle(e.algebra, e.subset("H"), e.subset("K"), {3, 2, 100}),
                  InvalidArgument);
}

TEST_CASE("monoids have no Higgins strategy") {
  const auto& m = cat("M3-absorbing");
  const auto all = Subset::full(m.size());
  CHECK_FALSE(higgins_strategy(Variety::Monoid).has_value());
  CHECK_THROWS_AS(higgins_commutator(m, all, all), Refusal);
  CHECK_THROWS_AS(commutator_report(m, all, all), Refusal);
  CHECK_THROWS_AS(diamond_image_oracle(m, all, all), Refusal);
}

TEST_CASE("non-subalgebra arguments are rejected") {
  const auto& s3 = cat("S3");
  const Subset bad(6, {0, el(s3, "(1 2 3)")});
  CHECK_THROWS_AS(higgins_commutator(s3, bad, Subset::full(6)), InvalidArgument);
}

TEST_CASE("commutator report bundles consistent values") {
  const auto& e = catalog_entry("A5");
  const auto r = commutator_report(e.algebra, e.subset("H"), e.subset("K"), OracleParams{});
  CHECK(r.strategy == HigginsStrategy::GroupCommutators);
  CHECK(r.higgins.count() == 3);
  CHECK(r.huq.count() == 60);
  CHECK(r.normalization_of_higgins == r.huq);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->stabilized);
}
