#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ncrat::cli {

enum ExitCode : int { Success = 0, VerificationFailed = 1, UsageError = 2, ComputationError = 3 };

struct ParsedCommand {
  std::string subcommand;
  std::string ring = "Z";
  std::optional<std::size_t> order;
  std::optional<unsigned> mu;
  /// Present only for verify-counterexample; nullopt inside means "inf".
  std::optional<std::optional<unsigned>> stage;
  /// Expression text, or a file path ("-" for stdin) for file subcommands.
  std::string input;
  bool json = false;
  std::string out_path;
};

struct Outcome {
  int exit_code = Success;
  std::string output;
  std::string error;
};

/// argv-style parse. On --help or a usage error the outcome carries the text
/// and exit code and no command is returned.
std::optional<ParsedCommand> parse_command(const std::vector<std::string>& args, Outcome& outcome);

/// Executes one command. Output is not written to `out_path`; see `main_entry`.
Outcome run(const ParsedCommand& cmd);

/// parse_command + run + writing output to stdout or --out.
int main_entry(int argc, char** argv);

} // namespace ncrat::cli
