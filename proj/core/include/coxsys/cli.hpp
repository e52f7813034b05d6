#pragma once

#include <string>

#include "coxsys/report.hpp"

namespace coxsys::cli {

// Command implementations behind the coxsys binary.  Each returns the JSON
// document to print and the process exit code (0 all pass, 1 any fail,
// 2 input error).  Input errors raised while resolving targets are caught
// here and turned into exit-code-2 results; the message is in `error_text`.

struct CommandResult {
  std::string json_text;
  int exit_code = 0;
  std::string error_text;  // non-empty on input errors, for stderr
};

struct CatalogOptions {
  bool list = false;
  std::string show;  // entry name when showing
};

struct SystoleOptions {
  std::string catalog;     // catalog entry name, or
  std::string input_path;  // polyhedron spec file
  int max_len = 8;
  bool pairs_only = false;
};

struct VerifyOptions {
  std::string claim;  // nikulin | thm42 | cor46 | thm41 | cases | case2b | lanner
  std::string catalog;
  std::string input_path;
  std::string graph_path;  // cor46 with --input
  int max_len = 10;
  int random_count = 0;  // nikulin sampling harness: ideal polygons per n
};

struct GraphOptions {
  std::string catalog;
  std::string input_path;
  std::string check;  // simple | euler | prismatic | lemma32 | lemma33 | thm31
};

CommandResult cmd_catalog(const CatalogOptions& opt);
CommandResult cmd_systole(const SystoleOptions& opt);
CommandResult cmd_verify(const VerifyOptions& opt);
CommandResult cmd_graph(const GraphOptions& opt);

}  // namespace coxsys::cli
