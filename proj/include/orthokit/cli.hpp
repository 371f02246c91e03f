#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orthokit/kernels.hpp"
#include "orthokit/report.hpp"

namespace ortho::cli {

// Exit codes. 0-3 are the stable public contract; 4/5 distinguish the two
// parse-failure classes from validation failures.
enum ExitCode {
  exit_ok = 0,
  exit_invalid = 1,
  exit_usage = 2,
  exit_budget = 3,
  exit_syntax = 4,
  exit_undeclared = 5,
};

/// Full command-line entry point, exposed for in-process testing. `in` backs
/// subcommands reading stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// The pinned verification suite behind `check paper`: one check per
/// catalogued result, grouped preliminaries / completions / spaces /
/// monadic_spaces, including the two-point counterexample.
Report paper_suite(const Budget& budget = Budget::from_env());

}  // namespace ortho::cli
