#include "normcomm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>

#include "normcomm/catalog.hpp"
#include "normcomm/closure.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/normality.hpp"
#include "normcomm/varieties.hpp"

namespace normcomm::verify {

json SuiteConfig::to_json() const {
  return {{"size_cap", size_cap},
          {"pair_cap", pair_cap},
          {"oracle_pair_cap", oracle_pair_cap},
          {"samples", samples},
          {"seed", seed},
          {"oracle", {{"max_len", oracle.max_len}, {"window", oracle.window}, {"budget", oracle.budget}}},
          {"term_depth", depth},
          {"execution", mode == parallel::Mode::OpenMP ? "openmp" : "serial"}};
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

std::size_t SuiteReport::failed() const { return records.size() - passed(); }

json SuiteReport::to_json(bool include_timings) const {
  json recs = json::array();
  for (const auto& r : records) {
    json j{{"check", r.check},   {"algebra", r.algebra}, {"subsets", r.subsets},
           {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass},
           {"witness", r.witness}};
    if (include_timings) j["elapsed_ms"] = r.elapsed_ms;
    recs.push_back(std::move(j));
  }
  return {{"suite", suite},
          {"config", config},
          {"records", std::move(recs)},
          {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, parallel::Mode mode) {
  std::vector<CheckRecord> out(checks.size());
  parallel::for_each_index(
      checks.size(),
      [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
          out[i] = checks[i]();
        } catch (const std::exception& e) {
          out[i].check = "exception";
          out[i].pass = false;
          out[i].witness = e.what();
        }
        out[i].elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      },
      mode);
  return out;
}

namespace {

bool is_group_or_ring(const FiniteAlgebra& a) {
  return a.variety() == Variety::Group || a.variety() == Variety::Ring;
}

CheckRecord make(std::string check, const std::string& algebra, json subsets, json expected,
                 json actual, bool pass, json witness = nullptr) {
  CheckRecord r;
  r.check = std::move(check);
  r.algebra = algebra;
  r.subsets = std::move(subsets);
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.pass = pass;
  r.witness = std::move(witness);
  return r;
}

json label_list(const FiniteAlgebra& alg, const Subset& s) {
  json j = json::array();
  for (Element x : s.elements()) j.push_back(alg.label(x));
  return j;
}

// Shared per-algebra data for a suite: entry plus its enumerated subalgebras.
struct Universe {
  const CatalogEntry* entry;
  std::vector<Subset> subalgebras;
};

std::vector<Universe> universes(std::size_t cap, const std::function<bool(const FiniteAlgebra&)>& keep) {
  std::vector<Universe> out;
  for (const auto* e : catalog()) {
    if (e->algebra.size() > cap || !keep(e->algebra)) continue;
    out.push_back({e, enumerate_subalgebras(e->algebra, cap)});
  }
  return out;
}

}  // namespace

SuiteReport suite_theorem(const SuiteConfig& cfg) {
  SuiteReport rep{"theorem", cfg.to_json(), {}};
  std::vector<Check> checks;
  for (const auto& u : universes(cfg.size_cap, is_group_or_ring)) {
    for (const auto& k : u.subalgebras) {
      const CatalogEntry* e = u.entry;
      checks.push_back([e, k] {
        const auto& alg = e->algebra;
        const bool normal = is_normal(alg, k).value;
        const bool test = commutator_normality_test(alg, k);
        json w = nullptr;
        if (normal != test) {
          const Subset c = higgins_commutator(alg, Subset::full(alg.size()), k);
          w = {{"commutator", subset_indices_json(c)}};
        }
        return make("normal iff [A,K] <= K", e->name, json::array({subset_indices_json(k)}),
                    normal, test, normal == test, w);
      });
      checks.push_back([e, k] {
        const auto& alg = e->algebra;
        const bool normal = is_normal(alg, k).value;
        if (!normal)
          return make("normal implies [A,K] <= K", e->name, json::array({subset_indices_json(k)}),
                      "vacuous", "vacuous", true);
        const bool test = commutator_normality_test(alg, k);
        return make("normal implies [A,K] <= K", e->name, json::array({subset_indices_json(k)}),
                    true, test, test);
      });
    }
  }
  rep.records = run_checks(checks, cfg.mode);
  return rep;
}

namespace {

struct PairOutcome {
  Subset higgins;
  CheckRecord record;
};

PairOutcome check_pair(const CatalogEntry& e, const Subset& h, const Subset& k) {
  const auto& alg = e.algebra;
  const Subset higgins = higgins_commutator(alg, h, k);
  const Subset huq = huq_commutator(alg, h, k);
  const Subset norm = normalization(alg, higgins);
  const Subset j = join(alg, h, k);
  std::vector<std::string> failed;
  if (huq != norm) failed.push_back("huq = normalization(higgins)");
  if (!higgins.is_subset_of(huq)) failed.push_back("higgins <= huq");
  if (!higgins.is_subset_of(j)) {
    failed.push_back("higgins <= join");
  } else {
    const auto sub = induced_subalgebra(alg, j);
    if (!is_kernel(sub.algebra, sub.to_local(higgins)).value)
      failed.push_back("higgins normal in join");
  }
  if (j.is_full() && higgins != huq) failed.push_back("coincidence at full join");
  if (higgins_commutator(alg, k, h) != higgins) failed.push_back("symmetry");
  json actual = {{"higgins", higgins.count()}, {"huq", huq.count()}, {"join", j.count()}};
  const bool ok = failed.empty();
  return {higgins,
          make("commutator pair properties", e.name,
               json::array({subset_indices_json(h), subset_indices_json(k)}), "all hold", actual,
               ok, ok ? json(nullptr) : json(failed))};
}

}  // namespace

SuiteReport suite_commutator_algebra(const SuiteConfig& cfg) {
  SuiteReport rep{"commutators", cfg.to_json(), {}};
  std::vector<Check> checks;

  // Exhaustive pairs; Higgins values are kept for the monotonicity pass.
  const auto small = universes(cfg.pair_cap, is_group_or_ring);
  std::vector<std::vector<Subset>> higgins_tables(small.size());
  for (std::size_t u = 0; u < small.size(); ++u) {
    const auto& subs = small[u].subalgebras;
    higgins_tables[u].resize(subs.size() * subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = 0; j < subs.size(); ++j) {
        const CatalogEntry* e = small[u].entry;
        Subset* slot = &higgins_tables[u][i * subs.size() + j];
        const Subset h = subs[i], k = subs[j];
        checks.push_back([e, h, k, slot] {
          auto out = check_pair(*e, h, k);
          *slot = std::move(out.higgins);
          return out.record;
        });
      }
  }
  auto records = run_checks(checks, cfg.mode);
  rep.records.insert(rep.records.end(), records.begin(), records.end());

  for (std::size_t u = 0; u < small.size(); ++u) {
    const auto& subs = small[u].subalgebras;
    const std::size_t m = subs.size();
    json witness = nullptr;
    for (std::size_t i = 0; i < m && witness.is_null(); ++i)
      for (std::size_t i2 = 0; i2 < m && witness.is_null(); ++i2) {
        if (!subs[i].is_subset_of(subs[i2])) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (!higgins_tables[u][i * m + j].is_subset_of(higgins_tables[u][i2 * m + j])) {
            witness = {{"H", subset_indices_json(subs[i])},
                       {"H'", subset_indices_json(subs[i2])},
                       {"K", subset_indices_json(subs[j])}};
            break;
          }
      }
    rep.records.push_back(make("higgins monotone", small[u].entry->name, json::array(), true,
                               witness.is_null(), witness.is_null(), witness));
  }

  checks.clear();
  // Seeded sample of subgroup pairs in A5.
  const auto& a5 = catalog_entry("A5");
  const auto a5_subs = enumerate_subalgebras(a5.algebra, 60);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Subset h = a5_subs[rng() % a5_subs.size()];
    const Subset k = a5_subs[rng() % a5_subs.size()];
    checks.push_back([&a5, h, k] { return check_pair(a5, h, k).record; });
  }

  // [A,K] = [A, normalization(K)] over every K of every catalog group and ring
  // within size_cap, plus the distinguished subsets of larger entries.
  for (const auto* e : catalog()) {
    if (!is_group_or_ring(e->algebra)) continue;
    std::vector<Subset> ks;
    if (e->algebra.size() <= cfg.size_cap) ks = enumerate_subalgebras(e->algebra, cfg.size_cap);
    else
      for (const auto& d : e->distinguished) ks.push_back(d.subset);
    for (const auto& k : ks)
      checks.push_back([e, k] {
        const auto& alg = e->algebra;
        const Subset full = Subset::full(alg.size());
        const Subset lhs = higgins_commutator(alg, full, k);
        const Subset rhs = higgins_commutator(alg, full, normalization(alg, k));
        return make("[A,K] = [A,normalization(K)]", e->name, json::array({subset_indices_json(k)}),
                    subset_indices_json(rhs), subset_indices_json(lhs), lhs == rhs);
      });
  }
  records = run_checks(checks, cfg.mode);
  rep.records.insert(rep.records.end(), records.begin(), records.end());
  return rep;
}

SuiteReport suite_examples(const SuiteConfig& cfg) {
  SuiteReport rep{"examples", cfg.to_json(), {}};
  std::vector<Check> checks;
  const auto& a5 = catalog_entry("A5");
  const auto& a6 = catalog_entry("A6");

  checks.push_back([&a5] {
    const auto& alg = a5.algebra;
    const Subset h = higgins_commutator(alg, a5.subset("H"), a5.subset("K"));
    const Subset expected = subalgebra_closure(
        alg, Subset(alg.size(), {*element_from_cycles(alg, "(3 4 5)")}));
    return make("A5 Higgins commutator = <(3 4 5)>", "A5",
                json::array({"<(1 2)(3 4)>", "<(1 2)(4 5)>"}),
                {{"order", 3}, {"labels", label_list(alg, expected)}},
                {{"order", h.count()}, {"labels", label_list(alg, h)}},
                h == expected && h.count() == 3);
  });
  checks.push_back([&a5] {
    const auto& alg = a5.algebra;
    const Subset q = huq_commutator(alg, a5.subset("H"), a5.subset("K"));
    return make("A5 Huq commutator = A5", "A5", json::array({"<(1 2)(3 4)>", "<(1 2)(4 5)>"}), 60,
                q.count(), q.is_full() && q.count() == 60);
  });
  checks.push_back([&a5] {
    const auto& alg = a5.algebra;
    const Subset h = higgins_commutator(alg, a5.subset("H"), a5.subset("K"));
    const Subset q = huq_commutator(alg, a5.subset("H"), a5.subset("K"));
    return make("A5 Higgins differs from Huq", "A5", json::array({"<(1 2)(3 4)>", "<(1 2)(4 5)>"}),
                true, h != q, h != q);
  });
  checks.push_back([&a5] {
    // Two involutions generate a dihedral group: order 2 * order((12)(34)(12)(45)) = 6.
    const Subset j = join(a5.algebra, a5.subset("H"), a5.subset("K"));
    return make("A5 join of H and K", "A5", json::array({"<(1 2)(3 4)>", "<(1 2)(4 5)>"}), 6,
                j.count(), j.count() == 6);
  });
  checks.push_back([&a5, cfg] {
    const auto& alg = a5.algebra;
    const auto o = diamond_image_oracle(alg, a5.subset("H"), a5.subset("K"), cfg.oracle);
    const Subset closed = subalgebra_closure(alg, o.values);
    const Subset h = higgins_commutator(alg, a5.subset("H"), a5.subset("K"));
    return make("A5 word oracle agrees with Higgins", "A5",
                json::array({"<(1 2)(3 4)>", "<(1 2)(4 5)>"}), label_list(alg, h),
                label_list(alg, closed), closed == h);
  });
  checks.push_back([&a6] {
    const auto& alg = a6.algebra;
    const Subset q = huq_commutator(alg, a6.subset("H"), a6.subset("K"));
    return make("A6 Huq commutator of <(1 2 3)>, <(4 5 6)> is trivial", "A6",
                json::array({"<(1 2 3)>", "<(4 5 6)>"}), json::array({"e"}), label_list(alg, q),
                q.count() == 1 && q.contains(alg.zero()));
  });
  checks.push_back([&a6] {
    const auto& alg = a6.algebra;
    const Subset hb = normalization(alg, a6.subset("H"));
    const Subset kb = normalization(alg, a6.subset("K"));
    const Subset q = huq_commutator(alg, hb, kb);
    return make("A6 Huq commutator of the normalizations = A6", "A6",
                json::array({"normalization <(1 2 3)>", "normalization <(4 5 6)>"}),
                {{"H", 360}, {"K", 360}, {"huq", 360}},
                {{"H", hb.count()}, {"K", kb.count()}, {"huq", q.count()}},
                q.is_full() && q.count() == 360);
  });
  checks.push_back([&a6] {
    const Subset j = join(a6.algebra, a6.subset("H"), a6.subset("K"));
    return make("A6 join of <(1 2 3)>, <(4 5 6)>", "A6", json::array({"<(1 2 3)>", "<(4 5 6)>"}),
                9, j.count(), j.count() == 9);
  });
  rep.records = run_checks(checks, cfg.mode);
  return rep;
}

SuiteReport suite_hierarchy(const SuiteConfig& cfg) {
  SuiteReport rep{"hierarchy", cfg.to_json(), {}};
  std::vector<Check> checks;
  const auto all = universes(cfg.size_cap, [](const FiniteAlgebra&) { return true; });
  std::vector<std::shared_ptr<const TermFunctions>> terms(all.size());
  parallel::for_each_index(
      all.size(),
      [&](std::size_t u) {
        terms[u] = std::make_shared<TermFunctions>(
            TermFunctions::enumerate(all[u].entry->algebra, cfg.depth));
      },
      cfg.mode);

  std::vector<std::size_t> monoid_records;
  for (std::size_t u = 0; u < all.size(); ++u) {
    const CatalogEntry* e = all[u].entry;
    for (const auto& k : all[u].subalgebras) {
      if (e->algebra.variety() == Variety::Monoid) monoid_records.push_back(checks.size());
      auto tf = terms[u];
      const std::size_t depth = cfg.depth;
      checks.push_back([e, k, tf, depth] {
        const auto& alg = e->algebra;
        NormalityOptions opts;
        opts.depth = depth;
        opts.terms = tf.get();
        const auto s = classify(alg, e->name, k, opts);
        json flags = {{"kernel", s.is_kernel()},
                      {"normal", s.is_normal()},
                      {"seminormal", s.is_seminormal()},
                      {"clot", s.is_clot()},
                      {"ideal", s.is_ideal()}};
        if (is_group_or_ring(alg)) {
          const bool v = s.is_kernel();
          const bool ok = s.is_normal() == v && s.is_seminormal() == v && s.is_clot() == v &&
                          s.is_ideal() == v;
          return make("normality flags collapse", e->name, json::array({subset_indices_json(k)}),
                      "all equal", flags, ok);
        }
        // classify() already rejects a broken chain; reaching here means it held.
        return make("normality chain", e->name, json::array({subset_indices_json(k)}), "chain holds",
                    flags, true);
      });
    }
  }
  rep.records = run_checks(checks, cfg.mode);

  json witness = nullptr;
  for (std::size_t i : monoid_records) {
    const auto& r = rep.records[i];
    if (r.pass && r.actual.at("seminormal").get<bool>() && !r.actual.at("kernel").get<bool>()) {
      witness = {{"algebra", r.algebra}, {"K", r.subsets.at(0)}};
      break;
    }
  }
  rep.records.push_back(make("monoid seminormal but not kernel", "monoid catalog", json::array(),
                             true, !witness.is_null(), !witness.is_null(), witness));
  return rep;
}

SuiteReport suite_oracle(const SuiteConfig& cfg) {
  SuiteReport rep{"oracle", cfg.to_json(), {}};
  std::vector<Check> checks;
  auto add = [&](const CatalogEntry* e, const Subset& h, const Subset& k) {
    const OracleParams params = cfg.oracle;
    checks.push_back([e, h, k, params] {
      const auto& alg = e->algebra;
      const auto o = diamond_image_oracle(alg, h, k, params);
      const Subset closed = subalgebra_closure(alg, o.values);
      const Subset strat = higgins_commutator(alg, h, k);
      return make("word oracle = GroupCommutators", e->name,
                  json::array({subset_indices_json(h), subset_indices_json(k)}),
                  subset_indices_json(strat), subset_indices_json(closed), closed == strat);
    });
  };
  std::mt19937_64 rng(cfg.seed);
  for (const auto* e : catalog()) {
    if (e->algebra.variety() != Variety::Group || e->algebra.size() > cfg.size_cap) continue;
    const auto subs = enumerate_subalgebras(e->algebra, cfg.size_cap);
    if (e->algebra.size() <= cfg.oracle_pair_cap) {
      for (const auto& h : subs)
        for (const auto& k : subs) add(e, h, k);
    } else {
      for (const auto& d1 : e->distinguished)
        for (const auto& d2 : e->distinguished) add(e, d1.subset, d2.subset);
      for (std::size_t s = 0; s < 20; ++s)
        add(e, subs[rng() % subs.size()], subs[rng() % subs.size()]);
    }
  }
  rep.records = run_checks(checks, cfg.mode);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"examples", "theorem", "commutators", "hierarchy",
                                              "oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "examples") return suite_examples(cfg);
  if (name == "theorem") return suite_theorem(cfg);
  if (name == "commutators") return suite_commutator_algebra(cfg);
  if (name == "hierarchy") return suite_hierarchy(cfg);
  if (name == "oracle") return suite_oracle(cfg);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace normcomm::verify
