#pragma once

#include <iosfwd>

namespace fnclass
{

/// Exit codes of the command-line tool.
enum ExitCode : int
{
  exit_ok = 0,
  exit_failure = 1, ///< verification failure or table mismatch
  exit_usage = 2,
  exit_budget = 3
};

/*! \brief Runs the command line `fnclass <subcommand> [flags]` in-process.

  Subcommands: analyze, diagram, classify, tables, verify, parse. Normal
  output goes to `out`, diagnostics to `err`. Returns an ExitCode.
*/
int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace fnclass
