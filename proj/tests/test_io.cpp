#include <doctest.h>

#include "helpers.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/io.hpp"

using namespace testing;

TEST_CASE("algebra JSON round trip") {
  for (const char* name : {"S3", "Z6-ring", "UT2-Z2", "T2", "trivial"}) {
    const auto& a = cat(name);
    const auto j = algebra_to_json(a);
    const auto back = algebra_from_json(json::parse(j.dump()));
    CHECK(back.same_structure(a));
    CHECK(back.labels() == a.labels());
    CHECK(algebra_to_json(back) == j);
  }
}

TEST_CASE("algebra JSON errors") {
  auto j = algebra_to_json(cyclic_group(3));
  auto missing = j;
  missing.erase("ops");
  CHECK_THROWS_AS(algebra_from_json(missing), ParseError);
  auto bad_variety = j;
  bad_variety["variety"] = "lattice";
  CHECK_THROWS_AS(algebra_from_json(bad_variety), ParseError);
  auto bad_entry = j;
  bad_entry["ops"][0]["table"][1] = 7;
  CHECK_THROWS_AS(algebra_from_json(bad_entry), InvalidArgument);
  auto not_assoc = j;
  not_assoc["ops"][0]["table"][4] = 0;  // 1 + 1 = 0 breaks the group laws
  CHECK_THROWS_AS(algebra_from_json(not_assoc), InvalidArgument);
  CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.json"), ParseError);
}

TEST_CASE("subset specs") {
  const auto& e = catalog_entry("A5");
  const auto& a5 = e.algebra;
  CHECK(resolve_subset_spec(a5, "(1 2)(3 4)", &e) == e.subset("H"));
  CHECK(resolve_subset_spec(a5, "@K", &e) == e.subset("K"));
  CHECK(resolve_subset_spec(a5, "(1 2 3); (3 4 5)").count() == 60);
  CHECK(resolve_subset_spec(a5, "all").count() == 60);
  CHECK(resolve_subset_spec(a5, "zero").count() == 1);
  const auto z6 = cyclic_group(6);
  CHECK(resolve_subset_spec(z6, "<2>") == Subset(6, {0, 2, 4}));
  CHECK(resolve_subset_spec(z6, "{0, 3}") == Subset(6, {0, 3}));
  CHECK_THROWS_AS(resolve_subset_spec(z6, "{0, 2}"), ParseError);
  CHECK_THROWS_AS(resolve_subset_spec(z6, "<2"), ParseError);
  CHECK_THROWS_AS(resolve_subset_spec(z6, "<9>"), ParseError);
  CHECK_THROWS_AS(resolve_subset_spec(a5, "@nope", &e), ParseError);
  CHECK_THROWS_AS(resolve_subset_spec(a5, "@H"), ParseError);
  CHECK_THROWS_AS(resolve_subset_spec(a5, "(1 2)"), ParseError);
}

TEST_CASE("subset JSON carries labels") {
  const auto& s3 = cat("S3");
  const auto j = subset_to_json(s3, gen(s3, {"(1 2 3)"}));
  CHECK(j["order"] == 3);
  CHECK(j["labels"] == json::array({"e", "(1 2 3)", "(1 3 2)"}));
}

TEST_CASE("spectrum JSON") {
  const auto& s3 = cat("S3");
  const auto j = to_json(s3, classify(s3, "S3", gen(s3, {"(1 2)"})));
  CHECK(j["is_kernel"] == false);
  CHECK(j["witnesses"].contains("normal"));
  CHECK(j["is_ideal"]["exactness"] == "Exact");
  CHECK(j.contains("witnesses"));
}
