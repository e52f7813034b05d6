// coxsys: build hyperbolic Coxeter polygons/polyhedra, search reflection
// groups for short loxodromic elements, and verify injectivity-radius bounds
// and the associated combinatorial claims.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "coxsys/cli.hpp"

namespace {

int emit(const coxsys::cli::CommandResult& result, const std::string& output_path) {
  if (!result.error_text.empty())
    std::cerr << "coxsys: " << result.error_text << "\n";
  if (output_path.empty()) {
    std::cout << result.json_text << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "coxsys: cannot write '" << output_path << "'\n";
      return 2;
    }
    out << result.json_text << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic Coxeter polyhedra: systole search and bound verification"};
  app.require_subcommand(1);

  std::string output;

  auto* cat = app.add_subcommand("catalog", "list or show built-in entries");
  cat->add_option("--output", output, "write the JSON result to a file");
  auto* cat_list = cat->add_subcommand("list", "list all entries");
  auto* cat_show = cat->add_subcommand("show", "dump one entry as a spec file");
  std::string show_name;
  cat_show->add_option("name", show_name, "entry name")->required();
  cat->require_subcommand(1);

  auto* sys = app.add_subcommand("systole", "shortest translation length search");
  coxsys::cli::SystoleOptions sys_opt;
  sys->add_option("--catalog", sys_opt.catalog, "catalog entry name");
  sys->add_option("--input", sys_opt.input_path, "polyhedron spec file");
  sys->add_option("--max-len", sys_opt.max_len, "maximum word length (>= 2)");
  sys->add_flag("--pairs-only", sys_opt.pairs_only,
                "only two-reflection elements from disjoint face pairs");
  sys->add_option("--output", output, "write the JSON result to a file");

  auto* ver = app.add_subcommand("verify", "run a bound or enumeration check");
  coxsys::cli::VerifyOptions ver_opt;
  ver->add_option("--claim", ver_opt.claim,
                  "nikulin | thm42 | cor46 | thm41 | cases | case2b | lanner")
      ->required();
  ver->add_option("--catalog", ver_opt.catalog, "catalog entry name");
  ver->add_option("--input", ver_opt.input_path, "polyhedron spec file");
  ver->add_option("--graph", ver_opt.graph_path, "face-graph file (cor46)");
  ver->add_option("--max-len", ver_opt.max_len, "search depth (thm41)");
  ver->add_option("--random", ver_opt.random_count,
                  "nikulin: sample this many random ideal polygons per n");
  ver->add_option("--output", output, "write the JSON result to a file");

  auto* gr = app.add_subcommand("graph", "combinatorial checks on a face graph");
  coxsys::cli::GraphOptions gr_opt;
  gr->add_option("--catalog", gr_opt.catalog, "catalog entry name");
  gr->add_option("--input", gr_opt.input_path, "face-graph file");
  gr->add_option("--check", gr_opt.check,
                 "simple | euler | prismatic | lemma32 | lemma33 | thm31")
      ->required();
  gr->add_option("--output", output, "write the JSON result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) {
      coxsys::cli::CatalogOptions opt;
      opt.list = cat_list->parsed();
      if (cat_show->parsed()) opt.show = show_name;
      return emit(coxsys::cli::cmd_catalog(opt), output);
    }
    if (sys->parsed()) return emit(coxsys::cli::cmd_systole(sys_opt), output);
    if (ver->parsed()) return emit(coxsys::cli::cmd_verify(ver_opt), output);
    if (gr->parsed()) return emit(coxsys::cli::cmd_graph(gr_opt), output);
  } catch (const std::exception& e) {
    std::cerr << "coxsys: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
