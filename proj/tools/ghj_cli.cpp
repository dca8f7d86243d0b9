#include <CLI11.hpp>
#include <iostream>

#include "ghj/cli.hpp"
#include "ghj/error.hpp"

using namespace ghj;
using ghj::cli::json;

namespace {

enum Exit { kOk = 0, kValidation = 1, kUsage = 2, kDecomposition = 3 };

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnknownFamily:
    case ErrorKind::RankOutOfRange:
    case ErrorKind::UnknownVertex:
    case ErrorKind::LengthTooLarge:
    case ErrorKind::InvalidArgument:
      return kUsage;
    case ErrorKind::DecompositionFailed:
    case ErrorKind::AmbiguousDecomposition:
      return kDecomposition;
    default:
      return kValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal graphs, fusion rings and connection systems of GHJ subfactors"};
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Do not read or write the result cache");

  std::string diagram, vertex, format;
  bool dual = false, table = false, all = false, json_out = false;

  auto* esspath = app.add_subcommand("esspath", "Essential-path dimension tables");
  esspath->add_option("diagram", diagram, "A<n>, D<n> or E<6|7|8>")->required();
  format = "table";
  esspath->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* graph = app.add_subcommand("graph", "Principal or dual principal graph");
  graph->add_option("diagram", diagram)->required();
  graph->add_option("vertex", vertex)->required();
  graph->add_flag("--dual", dual, "Dual principal graph");
  std::string graph_format = "dot";
  graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* zsys = app.add_subcommand("zsystem", "Irreducible K-K connections and their fusion");
  zsys->add_option("diagram", diagram)->required();
  zsys->add_flag("--table", table, "Print the fusion table in product form");
  zsys->add_flag("--json", json_out, "JSON output");

  auto* report = app.add_subcommand("report", "Summary of GHJ(K, x)");
  report->add_option("diagram", diagram)->required();
  report->add_option("vertex", vertex)->required();
  report->add_flag("--json", json_out, "JSON output");

  auto* subeq = app.add_subcommand("subequivalence", "Ring-level evidence for A_{h-1} > K");
  subeq->add_option("diagram", diagram)->required();

  auto* check = app.add_subcommand("check", "Run the acceptance suite");
  check->add_flag("--all", all, "Run every criterion")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto cache = cli::Cache::from_environment();
  const cli::Cache* cache_ptr = no_cache ? nullptr : &cache;

  try {
    if (*esspath) {
      const auto t = esspath_table(build_diagram(diagram));
      if (format == "json") std::cout << cli::esspath_json(t).dump(2) << "\n";
      else std::cout << cli::esspath_text(t);
      return kOk;
    }
    if (*graph) {
      const auto t = esspath_table(build_diagram(diagram));
      const auto x = t.graph().index_of(vertex);
      const auto g = dual ? dual_principal_graph(cli::load_or_decompose(t, cache_ptr), x)
                          : principal_graph(t, x);
      const auto name = t.graph().name() + "_" + t.graph().label(x) + (dual ? "_dual" : "_principal");
      if (graph_format == "json")
        std::cout << cli::graph_json(g, t.graph().name(), t.graph().label(x), dual).dump(2) << "\n";
      else
        std::cout << cli::graph_dot(g, name);
      return kOk;
    }
    if (*zsys) {
      const auto t = esspath_table(build_diagram(diagram));
      const auto sys = cli::load_or_decompose(t, cache_ptr);
      const auto ring = zfusion_table(sys);
      const auto verdict = validate_system(sys, product_gram(t));
      const auto axioms = check_ring(ring);
      if (json_out) {
        std::cout << cli::system_json(sys, ring).dump(2) << "\n";
      } else {
        std::cout << cli::system_text(sys);
        if (table) std::cout << "\n" << cli::fusion_table_text(ring);
      }
      if (!verdict.ok() || !axioms.ok()) {
        std::cerr << "validation failed: " << verdict.detail << axioms.detail << "\n";
        return kValidation;
      }
      return kOk;
    }
    if (*report) {
      const auto t = esspath_table(build_diagram(diagram));
      const auto x = t.graph().index_of(vertex);
      const auto sys = cli::load_or_decompose(t, cache_ptr);
      const auto r = ghj_report(t, sys, zfusion_table(sys), x);
      if (json_out) std::cout << cli::report_json(r).dump(2) << "\n";
      else std::cout << cli::report_box(r);
      return kOk;
    }
    if (*subeq) {
      const auto t = esspath_table(build_diagram(diagram));
      const auto rep = subequivalence_report(t);
      std::cout << cli::subequivalence_text(rep);
      return rep.holds ? kOk : kValidation;
    }
    if (*check) {
      cli::Workspace ws(cache_ptr);
      bool ok = true;
      cli::run_acceptance(ws, [&](const cli::CheckResult& r) {
        ok = ok && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << std::endl;
      });
      return ok ? kOk : kValidation;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
