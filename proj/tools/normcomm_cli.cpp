// normcomm: commutators and normality over finite groups, rings and monoids.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "normcomm/catalog.hpp"
#include "normcomm/commutators.hpp"
#include "normcomm/errors.hpp"
#include "normcomm/io.hpp"
#include "normcomm/normality.hpp"
#include "normcomm/verify.hpp"

namespace {

using normcomm::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kRefused = 3 };

struct Output {
  std::string format = "text";
  std::string out_path;

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw normcomm::ParseError("cannot write " + out_path);
    f << text;
  }
};

struct LoadedAlgebra {
  normcomm::FiniteAlgebra algebra;
  std::string name;
  const normcomm::CatalogEntry* entry = nullptr;
};

LoadedAlgebra load(const std::string& ref) {
  if (std::filesystem::exists(ref)) return {normcomm::load_algebra(ref), ref, nullptr};
  const auto& names = normcomm::catalog_names();
  if (std::find(names.begin(), names.end(), ref) == names.end())
    throw normcomm::ParseError("'" + ref + "' is neither a file nor a catalog algebra");
  const auto& e = normcomm::catalog_entry(ref);
  return {e.algebra, e.name, &e};
}

// Plain rendering of a JSON value: objects become indented key lines, short
// scalar arrays stay inline.
void render(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const bool inline_value =
          !value.is_structured() || value.empty() ||
          (value.is_array() && std::none_of(value.begin(), value.end(),
                                            [](const json& x) { return x.is_structured(); }));
      if (inline_value) {
        os << pad << key << ": ";
        if (value.is_string()) os << value.get<std::string>();
        else os << value.dump();
        os << '\n';
      } else {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        render(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string as_text(const json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

std::string report_text(const json& report) {
  std::ostringstream os;
  os << "suite " << report["suite"].get<std::string>() << '\n';
  os << "config " << report["config"].dump() << '\n';
  for (const auto& r : report["records"]) {
    os << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["check"].get<std::string>() << " ["
       << r["algebra"].get<std::string>() << "] subsets=" << r["subsets"].dump()
       << " expected=" << r["expected"].dump() << " actual=" << r["actual"].dump();
    if (!r["witness"].is_null()) os << " witness=" << r["witness"].dump();
    if (r.contains("elapsed_ms")) os << " elapsed_ms=" << r["elapsed_ms"].dump();
    os << '\n';
  }
  os << "summary pass=" << report["summary"]["pass"] << " fail=" << report["summary"]["fail"]
     << '\n';
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutators and normality for finite groups, rings and monoids"};
  app.require_subcommand(1);

  Output output;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", output.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", output.out_path, "Write the report to a file");
  };

  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  auto* cat_list = cat->add_subcommand("list", "List catalog entries");
  std::string show_name;
  auto* cat_show = cat->add_subcommand("show", "Print a catalog algebra in the JSON file format");
  cat_show->add_option("name", show_name)->required();
  cat->require_subcommand(1);
  add_output(cat_list);
  add_output(cat_show);

  std::string algebra_ref, h_spec, k_spec;
  normcomm::OracleParams oracle;
  bool run_oracle = false;
  auto* compute = app.add_subcommand("compute", "Higgins and Huq commutators of H and K");
  compute->set_help_flag("--help", "Print this help message and exit");
  compute->add_option("--algebra", algebra_ref, "Catalog name or JSON file")->required();
  compute->add_option("--h", h_spec, "Subset spec for H")->required();
  compute->add_option("--k", k_spec, "Subset spec for K")->required();
  compute->add_flag("--oracle", run_oracle, "Also run the bounded word oracle (groups)");
  compute->add_option("--max-len", oracle.max_len, "Oracle word length bound")
      ->capture_default_str();
  compute->add_option("--window", oracle.window, "Oracle stabilization window")
      ->capture_default_str();
  compute->add_option("--budget", oracle.budget, "Oracle transition budget")->capture_default_str();
  add_output(compute);

  std::size_t depth = 3;
  auto* classify = app.add_subcommand("classify", "Normality spectrum of K");
  classify->add_option("--algebra", algebra_ref, "Catalog name or JSON file")->required();
  classify->add_option("--k", k_spec, "Subset spec for K")->required();
  classify->add_option("--depth", depth, "Term depth for bounded checks")->capture_default_str();
  add_output(classify);

  normcomm::verify::SuiteConfig cfg;
  std::string suite = "all";
  int threads = 0;
  bool serial = false;
  auto add_verify_options = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.size_cap, "Size cap for single-subset suites")
        ->capture_default_str();
    sub->add_option("--pair-cap", cfg.pair_cap, "Size cap for exhaustive pair suites")
        ->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Sampled A5 pairs")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    sub->add_option("--max-len", cfg.oracle.max_len, "Oracle word length bound")
        ->capture_default_str();
    sub->add_option("--window", cfg.oracle.window, "Oracle stabilization window")
        ->capture_default_str();
    sub->add_option("--budget", cfg.oracle.budget, "Oracle transition budget")
        ->capture_default_str();
    sub->add_option("--depth", cfg.depth, "Term depth for bounded checks")->capture_default_str();
    sub->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
    sub->add_flag("--serial", serial, "Run checks on the serial reference path");
    sub->add_flag("--timings", cfg.timings, "Include per-check elapsed time");
    add_output(sub);
  };
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "examples|theorem|commutators|hierarchy|oracle|all")
      ->check(CLI::IsMember({"examples", "theorem", "commutators", "hierarchy", "oracle", "all"}))
      ->capture_default_str();
  add_verify_options(verify);
  auto* examples = app.add_subcommand("examples", "Shorthand for verify --suite examples");
  add_verify_options(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kUsage;
  }

  const bool as_json = output.format == "json";
  try {
    if (*cat) {
      if (*cat_list) {
        json j = json::array();
        for (const auto* e : normcomm::catalog())
          j.push_back({{"name", e->name},
                       {"variety", std::string(normcomm::to_string(e->algebra.variety()))},
                       {"size", e->algebra.size()}});
        if (as_json) {
          output.emit(dump(j));
        } else {
          std::ostringstream os;
          for (const auto& e : j)
            os << e["name"].get<std::string>() << '\t' << e["variety"].get<std::string>() << '\t'
               << e["size"] << '\n';
          output.emit(os.str());
        }
      } else {
        const auto loaded = load(show_name);
        output.emit(dump(normcomm::algebra_to_json(loaded.algebra)));
      }
      return kOk;
    }

    if (*compute) {
      const auto a = load(algebra_ref);
      const auto h = normcomm::resolve_subset_spec(a.algebra, h_spec, a.entry);
      const auto k = normcomm::resolve_subset_spec(a.algebra, k_spec, a.entry);
      const auto report = normcomm::commutator_report(
          a.algebra, h, k, run_oracle ? std::optional(oracle) : std::nullopt);
      json j = {{"algebra", a.name},
                {"H", normcomm::subset_to_json(a.algebra, h)},
                {"K", normcomm::subset_to_json(a.algebra, k)}};
      j.update(normcomm::to_json(a.algebra, report));
      output.emit(as_json ? dump(j) : as_text(j));
      return kOk;
    }

    if (*classify) {
      const auto a = load(algebra_ref);
      const auto k = normcomm::resolve_subset_spec(a.algebra, k_spec, a.entry);
      normcomm::NormalityOptions opts;
      opts.depth = depth;
      const auto s = normcomm::classify(a.algebra, a.name, k, opts);
      const json j = normcomm::to_json(a.algebra, s);
      output.emit(as_json ? dump(j) : as_text(j));
      return kOk;
    }

    if (*verify || *examples) {
      if (*examples) suite = "examples";
      cfg.mode = serial ? normcomm::parallel::Mode::Serial : normcomm::parallel::Mode::OpenMP;
      normcomm::parallel::set_thread_count(threads);
      std::vector<std::string> names;
      if (suite == "all") names = normcomm::verify::suite_names();
      else names.push_back(suite);
      json reports = json::array();
      std::size_t pass = 0, fail = 0;
      for (const auto& n : names) {
        const auto r = normcomm::verify::run_suite(n, cfg);
        pass += r.passed();
        fail += r.failed();
        reports.push_back(r.to_json(cfg.timings));
      }
      json out = names.size() == 1
                     ? reports.front()
                     : json{{"suites", reports}, {"summary", {{"pass", pass}, {"fail", fail}}}};
      if (as_json) {
        output.emit(dump(out));
      } else {
        std::string text;
        for (const auto& r : reports) text += report_text(r);
        if (names.size() > 1)
          text += "total pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) + "\n";
        output.emit(text);
      }
      return fail == 0 ? kOk : kCheckFailed;
    }
  } catch (const normcomm::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n';
    return kUsage;
  } catch (const normcomm::InvalidArgument& e) {
    std::cerr << "error: invalid: " << e.what() << '\n';
    return kUsage;
  } catch (const normcomm::Refusal& e) {
    std::cerr << "error: refused: " << e.what() << '\n';
    return kRefused;
  } catch (const normcomm::CrossCheckFailure& e) {
    std::cerr << "error: cross-check: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}
