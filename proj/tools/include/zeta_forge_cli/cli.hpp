#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zeta_forge::cli {

enum class CommandKind { Verify, Zeta, Gf, Coeffs, Bench };

enum class OutputFormat { Json, Csv };

struct Command {
  CommandKind kind = CommandKind::Verify;
  std::optional<std::string> pair;
  std::optional<std::string> identity;
  std::optional<std::string> formula;
  std::vector<std::string> a;  ///< raw "p/q" literals, validated in run()
  long digits = 30;
  long order = 4;
  long n_max = 25;
  long k_max = 25;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;
  bool certify = false;  // verify: also run the truncation-doubling protocol
  bool check = false;    // gf: compare against direct left-hand summation
  bool meta = false;     // wrap the payload with a runtime metadata block
};

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Parses argv[1..]. Returns nullopt after printing help (exit 0) or a usage
/// diagnostic; `exit_code` is set accordingly.
std::optional<Command> parse_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                     int& exit_code);

/// Executes one command, writing a single JSON document (or CSV table) to
/// `out`, or to the file named by --out.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_command followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeta_forge::cli
