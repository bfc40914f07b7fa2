#include "normcomm/io.hpp"

#include <cctype>
#include <fstream>

#include "normcomm/closure.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/varieties.hpp"

namespace normcomm {

json algebra_to_json(const FiniteAlgebra& alg) {
  json j;
  j["size"] = alg.size();
  j["zero"] = alg.zero();
  j["variety"] = std::string(to_string(alg.variety()));
  j["ops"] = json::array();
  for (const auto& op : alg.ops())
    j["ops"].push_back({{"name", op.name}, {"arity", op.arity}, {"table", op.table}});
  if (alg.has_labels()) j["labels"] = alg.labels();
  return j;
}

FiniteAlgebra algebra_from_json(const json& j) {
  try {
    const auto size = j.at("size").get<std::size_t>();
    const auto zero = j.at("zero").get<Element>();
    const auto vname = j.at("variety").get<std::string>();
    const auto variety = parse_variety(vname);
    if (!variety) throw ParseError("unknown variety '" + vname + "'");
    std::vector<Operation> ops;
    for (const auto& o : j.at("ops"))
      ops.push_back({o.at("name").get<std::string>(), o.at("arity").get<int>(),
                     o.at("table").get<std::vector<Element>>()});
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    FiniteAlgebra alg(size, zero, std::move(ops), *variety, std::move(labels));
    require_valid(alg);
    return alg;
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return algebra_from_json(j);
}

json subset_indices_json(const Subset& s) {
  return {{"order", s.count()}, {"indices", s.elements()}};
}

json subset_to_json(const FiniteAlgebra& alg, const Subset& s) {
  json j = subset_indices_json(s);
  json labels = json::array();
  for (Element x : s.elements()) labels.push_back(alg.label(x));
  j["labels"] = std::move(labels);
  return j;
}

json to_json(const FiniteAlgebra& alg, const CommutatorReport& r) {
  json j;
  j["strategy"] = std::string(to_string(r.strategy));
  j["higgins"] = subset_to_json(alg, r.higgins);
  j["huq"] = subset_to_json(alg, r.huq);
  j["join"] = subset_to_json(alg, r.join);
  j["normalization_of_higgins"] = subset_to_json(alg, r.normalization_of_higgins);
  if (r.oracle_params) {
    j["oracle_params"] = {{"max_len", r.oracle_params->max_len},
                          {"window", r.oracle_params->window},
                          {"budget", r.oracle_params->budget}};
  }
  if (r.oracle) {
    j["oracle"] = {{"values", subset_to_json(alg, r.oracle->values)},
                   {"closure", subset_to_json(alg, subalgebra_closure(alg, r.oracle->values))},
                   {"lengths_explored", r.oracle->lengths_explored},
                   {"stabilized", r.oracle->stabilized}};
  }
  return j;
}

namespace {

json witness_json(const FiniteAlgebra& alg, const std::optional<Element>& w,
                  const std::optional<ElementPair>& pair = std::nullopt) {
  if (pair) return {{"g", alg.label(pair->first)}, {"k", alg.label(pair->second)}};
  if (w) return alg.label(*w);
  return nullptr;
}

}  // namespace

json to_json(const FiniteAlgebra& alg, const NormalitySpectrum& s) {
  json j;
  j["algebra"] = s.algebra_name;
  j["subject"] = subset_to_json(alg, s.subject);
  j["is_kernel"] = s.is_kernel();
  j["is_normal"] = s.is_normal();
  j["is_seminormal"] = s.is_seminormal();
  j["is_clot"] = s.is_clot();
  j["is_ideal"] = {{"value", s.is_ideal()}, {"exactness", std::string(to_string(s.ideal.exactness))}};
  j["commutator_test"] = s.commutator_test ? json(*s.commutator_test) : json(nullptr);
  json w;
  if (!s.is_kernel()) w["kernel"] = witness_json(alg, s.kernel.witness);
  if (!s.is_normal()) w["normal"] = witness_json(alg, s.normal.witness, s.normal.witness_pair);
  if (!s.is_seminormal()) w["seminormal"] = witness_json(alg, s.seminormal.witness);
  if (!s.is_clot()) w["clot"] = witness_json(alg, s.clot.primary.witness);
  if (!s.is_ideal()) w["ideal"] = witness_json(alg, s.ideal.witness);
  j["witnesses"] = w.is_null() ? json::object() : w;
  j["clot_bounded"] = {{"value", s.clot.bounded.value},
                       {"exactness", std::string(to_string(s.clot.bounded.exactness))},
                       {"method", s.clot.bounded.method}};
  if (s.clot.conjugation) j["clot_conjugation"] = *s.clot.conjugation;
  j["method_notes"] = s.notes;
  return j;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Element> parse_index_list(std::string_view body, std::size_t size) {
  std::vector<Element> out;
  std::string token;
  auto flush = [&] {
    const std::string t = trim(token);
    token.clear();
    if (t.empty()) return;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(t, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad element index '" + t + "'");
    }
    if (pos != t.size()) throw ParseError("bad element index '" + t + "'");
    if (v >= size) throw ParseError("element index " + t + " out of range");
    out.push_back(static_cast<Element>(v));
  };
  for (char c : body) {
    if (c == ',') flush();
    else token += c;
  }
  flush();
  return out;
}

}  // namespace

Subset resolve_subset_spec(const FiniteAlgebra& alg, std::string_view raw,
                           const CatalogEntry* entry) {
  const std::string spec = trim(raw);
  if (spec == "all") return Subset::full(alg.size());
  if (spec == "zero") return Subset(alg.size(), {alg.zero()});
  if (!spec.empty() && spec.front() == '@') {
    if (!entry) throw ParseError("named subsets need a catalog algebra");
    try {
      return entry->subset(spec.substr(1));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '<')) {
    const char close = spec.front() == '{' ? '}' : '>';
    if (spec.back() != close) throw ParseError("unterminated subset spec '" + spec + "'");
    const Subset s(alg.size(), parse_index_list(spec.substr(1, spec.size() - 2), alg.size()));
    if (spec.front() == '<') return subalgebra_closure(alg, s);
    if (!is_subalgebra(alg, s)) throw ParseError("subset " + spec + " is not a subalgebra");
    return s;
  }
  Subset seed(alg.size());
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto end = spec.find(';', start);
    const std::string gen = trim(std::string_view(spec).substr(
        start, end == std::string::npos ? std::string::npos : end - start));
    if (!gen.empty()) {
      const auto x = element_from_cycles(alg, gen);
      if (!x) throw ParseError("no element '" + gen + "' in this algebra");
      seed.insert(*x);
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return subalgebra_closure(alg, seed);
}

}  // namespace normcomm
