#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "normcomm/algebra.hpp"
#include "normcomm/catalog.hpp"
#include "normcomm/commutators.hpp"
#include "normcomm/normality.hpp"

namespace normcomm {

using json = nlohmann::ordered_json;

/// {"size", "zero", "variety", "ops": [{"name", "arity", "table"}], "labels"?}
json algebra_to_json(const FiniteAlgebra& alg);
/// Throws ParseError on schema problems and InvalidArgument when the tables
/// violate the declared variety's laws.
FiniteAlgebra algebra_from_json(const json& j);
FiniteAlgebra load_algebra(const std::filesystem::path& path);

/// {"order", "indices", "labels"}.
json subset_to_json(const FiniteAlgebra& alg, const Subset& s);
/// {"order", "indices"} only.
json subset_indices_json(const Subset& s);

json to_json(const FiniteAlgebra& alg, const CommutatorReport& r);
json to_json(const FiniteAlgebra& alg, const NormalitySpectrum& s);

/// Resolves a subset spec to a subalgebra:
///   "(1 2)(3 4); (4 5 6)"  cycle-notation generators (groups with cycle labels)
///   "<0,2>"                generated by element indices
///   "{0,2}"                exactly these indices (must be a subalgebra)
///   "@H"                   a distinguished subset of the catalog entry
///   "all" / "zero"         the whole carrier / {zero}
/// Throws ParseError for malformed specs or specs that are not subalgebras.
Subset resolve_subset_spec(const FiniteAlgebra& alg, std::string_view spec,
                           const CatalogEntry* entry = nullptr);

}  // namespace normcomm
