// Command-line front end. Exit codes: 0 success, 1 semantic failure (axiom
// violation or failed check), 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbert/adjoint.hpp"
#include "hilbert/closure.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/filters.hpp"
#include "hilbert/io.hpp"
#include "hilbert/multipliers.hpp"
#include "hilbert/suites.hpp"

namespace fs = std::filesystem;
using hilbert::Algebra;
using hilbert::Element;
using hilbert::ElementSet;
using hilbert::EndoMap;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

int default_jobs() {
  if (const char* env = std::getenv("HILBERT_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

json set_json(const Algebra& a, ElementSet s) {
  json out = json::array();
  for (Element x : s) out.push_back(a.label(x));
  return out;
}

json map_json(const Algebra& a, const EndoMap& f) {
  json out = json::array();
  for (Element x = 0; x < f.size(); ++x) out.push_back(a.label(f(x)));
  return out;
}

json covers_json(const hilbert::Poset& order) {
  json out = json::array();
  for (auto [lo, hi] : order.covers()) out.push_back({lo, hi});
  return out;
}

std::string flag(bool b) { return b ? "yes" : "no"; }

// ---- validate ----

int cmd_validate(const std::string& path) {
  const auto file = hilbert::read_algebra_file(path);
  const auto result = hilbert::validate_hilbert(file.table, file.one);
  auto label = [&](Element x) { return file.labels.empty() ? std::to_string(x) : file.labels[x]; };
  if (!result.valid()) {
    for (const auto& v : result.violations) {
      std::string inst;
      for (Element e : v.instance) inst += (inst.empty() ? "" : ",") + label(e);
      std::cout << v.axiom << ": (" << inst << ")\n";
    }
    return kFailure;
  }
  const Algebra a = hilbert::to_algebra(file);
  const auto cls = hilbert::classify(a);
  std::cout << "valid Hilbert algebra, " << a.size() << " elements, unit " << a.label(a.one())
            << "\nimplication algebra: " << flag(cls.implication_algebra)
            << "\nimplicative semilattice: " << flag(cls.implicative_semilattice) << '\n';
  return kOk;
}

// ---- analyze ----

struct AnalyzeFlags {
  bool ce = false, filters = false, multipliers = false, adjoint = false, extension = false, json = false;
};

json analyze(const Algebra& a, const AnalyzeFlags& f) {
  json doc;
  const auto cls = hilbert::classify(a);
  doc["size"] = a.size();
  doc["one"] = a.label(a.one());
  doc["labels"] = a.labels();
  doc["implication_algebra"] = cls.implication_algebra;
  doc["implicative_semilattice"] = cls.implicative_semilattice;
  doc["order_covers"] = covers_json(hilbert::Poset::from_relation(a.size(), [&](int x, int y) { return a.leq(x, y); }));
  if (f.filters) {
    const auto fl = hilbert::all_filters(a);
    json items = json::array();
    for (ElementSet j : fl.carrier) items.push_back({{"members", set_json(a, j)}, {"monomial", hilbert::is_monomial(a, j)}});
    doc["filters"] = {{"count", fl.carrier.size()}, {"items", items}, {"covers", covers_json(fl.lattice.order())}};
  }
  if (f.multipliers) {
    const auto ms = hilbert::multipliers(a);
    json items = json::array();
    for (const auto& m : ms) items.push_back({{"map", map_json(a, m)}, {"isotone", hilbert::is_isotone(a, m)}});
    doc["multipliers"] = {{"count", ms.size()}, {"items", items}};
  }
  if (f.ce) {
    const auto ce = hilbert::all_ce(a);
    json items = json::array();
    for (const auto& m : ce.carrier)
      items.push_back({{"map", map_json(a, m)},
                       {"kernel", set_json(a, hilbert::kernel(a, m))},
                       {"fixpoints", set_json(a, hilbert::fixpoints(a, m))}});
    doc["ce"] = {{"count", ce.size()}, {"items", items}, {"covers", covers_json(ce.lattice.order())},
                 {"eps", ce.eps}, {"iota", ce.iota}};
  }
  if (f.adjoint) {
    const auto s = hilbert::adjoint_semilattice(a);
    json items = json::array();
    for (const auto& m : s.carrier) items.push_back(map_json(a, m));
    doc["adjoint"] = {{"count", s.size()}, {"carrier", items}, {"join", s.join}, {"difference", s.difference},
                      {"covers", covers_json(s.order)}};
  }
  if (f.extension) {
    const auto e = hilbert::minimal_brouwerian_extension(a);
    json items = json::array();
    for (ElementSet j : e.carrier) items.push_back(set_json(a, j));
    doc["extension"] = {{"count", e.size()}, {"carrier", items}, {"meet", e.meet}, {"imp", e.imp},
                        {"top", e.top}, {"embedding", e.embedding}};
  }
  return doc;
}

std::string fmt_list(const json& arr) {
  std::string out = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? "," : "") + arr[i].get<std::string>();
  return out + "}";
}

std::string fmt_map(const json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? "," : "") + arr[i].get<std::string>();
  return out + "]";
}

void print_analysis(const json& doc) {
  std::cout << "size " << doc["size"] << ", unit " << doc["one"].get<std::string>() << "\nimplication algebra: "
            << flag(doc["implication_algebra"]) << "\nimplicative semilattice: " << flag(doc["implicative_semilattice"])
            << '\n';
  if (doc.contains("filters")) {
    std::cout << "filters (" << doc["filters"]["count"] << "):\n";
    for (const auto& j : doc["filters"]["items"])
      std::cout << "  " << fmt_list(j["members"]) << (j["monomial"] ? "  monomial" : "  not monomial") << '\n';
  }
  if (doc.contains("multipliers")) {
    std::cout << "multipliers (" << doc["multipliers"]["count"] << "):\n";
    for (const auto& m : doc["multipliers"]["items"])
      std::cout << "  " << fmt_map(m["map"]) << (m["isotone"] ? "  isotone" : "") << '\n';
  }
  if (doc.contains("ce")) {
    std::cout << "closure endomorphisms (" << doc["ce"]["count"] << "):\n";
    for (const auto& m : doc["ce"]["items"])
      std::cout << "  " << fmt_map(m["map"]) << "  kernel " << fmt_list(m["kernel"]) << "  fixpoints "
                << fmt_list(m["fixpoints"]) << '\n';
    std::cout << "  covers " << doc["ce"]["covers"].dump() << '\n';
  }
  if (doc.contains("adjoint")) {
    std::cout << "adjoint semilattice (" << doc["adjoint"]["count"] << "):\n";
    for (const auto& m : doc["adjoint"]["carrier"]) std::cout << "  " << fmt_map(m) << '\n';
    std::cout << "  join " << doc["adjoint"]["join"].dump() << "\n  difference " << doc["adjoint"]["difference"].dump()
              << '\n';
  }
  if (doc.contains("extension")) {
    std::cout << "minimal Brouwerian extension (" << doc["extension"]["count"] << "):\n";
    for (const auto& j : doc["extension"]["carrier"]) std::cout << "  " << fmt_list(j) << '\n';
    std::cout << "  imp " << doc["extension"]["imp"].dump() << "\n  embedding " << doc["extension"]["embedding"].dump()
              << '\n';
  }
}

// ---- verify / enumerate ----

std::vector<hilbert::NamedAlgebra> catalog_algebras(int n, bool cumulative, int jobs, int bound) {
  std::vector<hilbert::NamedAlgebra> out;
  hilbert::EnumerationOptions opt;
  opt.jobs = jobs;
  opt.bound = bound;
  for (int k = cumulative ? 1 : n; k <= n; ++k)
    for (auto& e : hilbert::enumerate_algebras(k, opt).entries) out.push_back({e.name, std::move(e.algebra)});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Hilbert algebra toolkit"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check the axioms for an algebra file");
  validate->add_option("path", path, "Algebra file (JSON or text)")->required();

  AnalyzeFlags af;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute derived structures");
  analyze_cmd->add_option("path", path, "Algebra file")->required();
  analyze_cmd->add_flag("--ce", af.ce, "Closure endomorphism lattice with kernels and fixpoint sets");
  analyze_cmd->add_flag("--filters", af.filters, "Filter lattice");
  analyze_cmd->add_flag("--multipliers", af.multipliers, "Multipliers");
  analyze_cmd->add_flag("--adjoint", af.adjoint, "Adjoint semilattice with subtraction");
  analyze_cmd->add_flag("--extension", af.extension, "Minimal Brouwerian extension");
  analyze_cmd->add_flag("--json", af.json, "Machine-readable output");

  int jobs = default_jobs();
  int enumerate_n = 0;
  int bound = 6;
  bool cumulative = false, as_json = false, timing = false;
  std::vector<std::string> suites;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("path", path, "Algebra file");
  auto* enum_opt = verify_cmd->add_option("--enumerate", enumerate_n, "Verify every algebra of this size");
  verify_cmd->add_flag("--cumulative", cumulative, "With --enumerate, include all sizes from 1");
  verify_cmd->add_option("--suite", suites, "Suite name or 'all' (repeatable)")->default_str("all");
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default from HILBERT_JOBS, else 1)");
  verify_cmd->add_option("--bound", bound, "Largest size enumeration accepts");
  verify_cmd->add_flag("--json", as_json, "JSON report");
  verify_cmd->add_flag("--timing", timing, "Include elapsed times (makes output run-dependent)");

  std::string out_dir;
  bool raw = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List algebras of a given size up to isomorphism");
  enumerate_cmd->add_option("n", enumerate_n, "Size")->required();
  enumerate_cmd->add_flag("--cumulative", cumulative, "All sizes from 1 to n");
  enumerate_cmd->add_option("--out", out_dir, "Write one file per representative plus summary.txt");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads");
  enumerate_cmd->add_option("--bound", bound, "Largest size accepted");
  enumerate_cmd->add_flag("--raw", raw, "Count labelled tables instead of isomorphism classes");

  std::string dot_kind, out_file;
  auto* export_cmd = app.add_subcommand("export", "Export a lattice as a DOT digraph");
  export_cmd->add_option("path", path, "Algebra file")->required();
  export_cmd->add_option("--dot", dot_kind, "hasse | ce | filters")
      ->required()
      ->check(CLI::IsMember({"hasse", "ce", "filters"}));
  export_cmd->add_option("--out", out_file, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (suites.empty()) suites = {"all"};

  try {
    if (validate->parsed()) return cmd_validate(path);

    if (analyze_cmd->parsed()) {
      const json doc = analyze(hilbert::load_algebra(path), af);
      if (af.json) {
        std::cout << doc.dump(2) << '\n';
      } else {
        print_analysis(doc);
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<hilbert::NamedAlgebra> algebras;
      if (enum_opt->count() > 0) {
        algebras = catalog_algebras(enumerate_n, cumulative, jobs, bound);
      } else if (!path.empty()) {
        algebras.push_back({fs::path(path).stem().string(), hilbert::load_algebra(path)});
      } else {
        std::cerr << "verify: give a path or --enumerate n\n";
        return kInputError;
      }
      for (const auto& s : suites) {
        if (s != "all" && !hilbert::is_suite(s)) {
          std::cerr << "unknown suite '" << s << "'\n";
          return kInputError;
        }
      }
      const auto report = hilbert::verify(algebras, suites, jobs);
      if (as_json) {
        json doc = json::parse(hilbert::report_to_json(report, timing));
        json names = json::array();
        for (const auto& na : algebras) names.push_back(na.name);
        doc["algebras"] = names;
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << "algebras: " << algebras.size() << '\n' << hilbert::report_to_text(report, timing);
      }
      return report.passed() ? kOk : kFailure;
    }

    if (enumerate_cmd->parsed()) {
      hilbert::EnumerationOptions opt;
      opt.jobs = jobs;
      opt.bound = bound;
      std::ostringstream summary;
      if (raw) {
        opt.deduplicate = false;
        for (int k = cumulative ? 1 : enumerate_n; k <= enumerate_n; ++k)
          summary << "n=" << k << "  labelled tables (unit last): " << hilbert::enumerate_tables(k, opt).size() << '\n';
        std::cout << summary.str();
        return kOk;
      }
      if (!out_dir.empty()) fs::create_directories(out_dir);
      summary << "name      n  filters  multipliers  ce  implication  implicative-semilattice\n";
      for (int k = cumulative ? 1 : enumerate_n; k <= enumerate_n; ++k) {
        const auto catalog = hilbert::enumerate_algebras(k, opt);
        int impl = 0, isl = 0;
        for (const auto& e : catalog.entries) {
          impl += e.flags.implication_algebra;
          isl += e.flags.implicative_semilattice;
          char line[160];
          std::snprintf(line, sizeof line, "%-8s %2d  %7d  %11d  %2d  %-11s  %s\n", e.name.c_str(), k, e.filters,
                        e.multipliers, e.closure_endomorphisms, flag(e.flags.implication_algebra).c_str(),
                        flag(e.flags.implicative_semilattice).c_str());
          summary << line;
          if (!out_dir.empty()) std::ofstream(fs::path(out_dir) / (e.name + ".json")) << hilbert::to_json_text(e.algebra);
        }
        summary << "n=" << k << ": " << catalog.entries.size() << " algebras, " << impl << " implication algebras, "
                << isl << " implicative semilattices\n";
      }
      std::cout << summary.str();
      if (!out_dir.empty()) std::ofstream(fs::path(out_dir) / "summary.txt") << summary.str();
      return kOk;
    }

    if (export_cmd->parsed()) {
      const Algebra a = hilbert::load_algebra(path);
      std::string dot;
      if (dot_kind == "hasse") {
        dot = hilbert::to_dot("hasse", hilbert::Poset::from_relation(a.size(), [&](int x, int y) { return a.leq(x, y); }),
                              a.labels());
      } else if (dot_kind == "ce") {
        const auto ce = hilbert::all_ce(a);
        std::vector<std::string> labels;
        for (const auto& m : ce.carrier) labels.push_back(hilbert::format_map(a, m));
        dot = hilbert::to_dot("ce", ce.lattice.order(), labels);
      } else {
        const auto fl = hilbert::all_filters(a);
        std::vector<std::string> labels;
        for (ElementSet j : fl.carrier) labels.push_back(hilbert::format_set(a, j));
        dot = hilbert::to_dot("filters", fl.lattice.order(), labels);
      }
      if (out_file.empty()) {
        std::cout << dot;
      } else {
        std::ofstream(out_file) << dot;
      }
      return kOk;
    }
  } catch (const hilbert::MalformedInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const hilbert::InvalidAlgebra& e) {
    std::cerr << "invalid algebra: " << e.what() << '\n';
    return kInputError;
  } catch (const hilbert::BoundExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kInputError;
  } catch (const hilbert::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
