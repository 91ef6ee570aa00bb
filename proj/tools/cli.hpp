#pragma once

// The scverify command line: verify, charsum, analytic and catalog
// subcommands. Exit codes: 0 success, 1 a check failed, 2 usage or catalog
// error, 3 internal error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_internal = 3;

struct CliConfig {
  std::string command;
  std::string catalog_action;
  std::string catalog_target;
  std::string examples = "all";
  std::uint64_t pmax = 150;
  std::string mod = "2";
  long precision = 256;
  std::string format = "table";
  std::string out;
  std::string catalog_path;
  unsigned parallel = 0;
  bool expect_fail = false;
  bool with_fp2 = false;
  std::uint64_t fp2_qmax = 49;
  std::vector<std::string> only;
};

// Parses and dispatches; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_charsum(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_analytic(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_catalog(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace scv::cli
