#include "zeta_forge_cli/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>

#include "zeta_forge/coeff_extract.hpp"
#include "zeta_forge/errors.hpp"
#include "zeta_forge/serialize.hpp"
#include "zeta_forge/series_eval.hpp"
#include "zeta_forge/wz_verify.hpp"

namespace zeta_forge::cli {

namespace {

using nlohmann::json;

// Payload produced by one command: JSON document or CSV text, plus status.
struct Outcome {
  json document;
  std::optional<std::string> csv;
  int status = kSuccess;
};

std::string_view command_name(CommandKind kind) {
  switch (kind) {
    case CommandKind::Verify: return "verify";
    case CommandKind::Zeta: return "zeta";
    case CommandKind::Gf: return "gf";
    case CommandKind::Coeffs: return "coeffs";
    case CommandKind::Bench: return "bench";
  }
  return "?";
}

const std::string& require(const std::optional<std::string>& value, const char* flag, CommandKind kind) {
  if (!value) {
    throw UsageError(std::string(command_name(kind)) + " requires " + flag);
  }
  return *value;
}

BigRational single_a(const Command& command) {
  if (command.a.size() > 1) {
    throw UsageError(std::string(command_name(command.kind)) + " accepts a single --a");
  }
  return command.a.empty() ? BigRational(0) : parse_rational(command.a.front());
}

void require_json(const Command& command) {
  if (command.format != OutputFormat::Json) {
    throw UsageError(std::string(command_name(command.kind)) + " only supports --format json");
  }
}

BigFloat agreement_tolerance(long digits) {
  BigFloat tol = BigFloat::pow10(-digits, BigFloat::bits_for_digits(digits + 10));
  tol *= BigFloat(2L, tol.precision());
  return tol;
}

Outcome run_verify(const Command& command) {
  require_json(command);
  if (command.n_max < 0 || command.k_max < 0) {
    throw UsageError("--nmax and --kmax must be nonnegative");
  }
  std::vector<BigRational> a_values;
  for (const auto& text : command.a) {
    a_values.push_back(parse_rational(text));
  }
  if (a_values.empty()) {
    a_values = default_sample_a();
  }
  for (const auto& a : a_values) {
    if (is_nonzero_integer(a)) {
      throw DomainError("a = " + to_string(a) + " is a nonzero integer");
    }
  }
  std::vector<PairId> pairs;
  if (command.pair) {
    pairs.push_back(parse_pair_id(*command.pair));
  } else {
    pairs.assign(kAllPairs.begin(), kAllPairs.end());
  }

  Outcome outcome;
  json reports = json::array();
  for (PairId pair : pairs) {
    GridReport report = check_pair(pair, command.n_max, command.k_max, a_values);
    json entry = to_json(report);
    if (!report.passed()) {
      outcome.status = kVerificationFailure;
    }
    if (command.certify) {
      json certification = json::array();
      for (const auto& a : a_values) {
        json step = {{"a", to_string(a)}};
        try {
          DoublingReport doubling = doubling_protocol(pair, a, 32, 2, command.digits);
          step["doubling"] = to_json(doubling, command.digits);
          if (!doubling.shrinking) {
            outcome.status = kVerificationFailure;
          }
        } catch (const CertificationError& e) {
          step["error"] = e.what();
          outcome.status = kVerificationFailure;
        }
        certification.push_back(std::move(step));
      }
      entry["certification"] = std::move(certification);
    }
    reports.push_back(std::move(entry));
  }
  outcome.document = command.pair ? reports.front() : reports;
  return outcome;
}

Outcome run_zeta(const Command& command) {
  require_json(command);
  NamedFormulaId id = parse_named_formula_id(require(command.formula, "--formula", command.kind));
  const EvalOptions options = EvalOptions::from_environment();
  Outcome outcome;
  outcome.document = to_json(zeta_named(id, command.digits, options));
  outcome.document["formula"] = std::string(to_string(id));
  return outcome;
}

Outcome run_gf(const Command& command) {
  require_json(command);
  IdentityId id = parse_identity_id(require(command.identity, "--identity", command.kind));
  const BigRational a = single_a(command);
  const EvalOptions options = EvalOptions::from_environment();
  EvalReport rhs = sum_rhs(id, a, command.digits, options);

  Outcome outcome;
  json doc = to_json(rhs);
  doc["identity"] = std::string(to_string(id));
  doc["a"] = to_string(a);
  if (command.check) {
    EvalReport lhs = sum_lhs_direct(lhs_family(id), a, command.digits, options);
    BigFloat difference = abs(rhs.value - lhs.value);
    const bool agrees = difference < agreement_tolerance(command.digits);
    doc["lhs"] = to_json(lhs);
    doc["lhs"]["family"] = std::string(to_string(lhs_family(id)));
    doc["difference"] = difference.to_scientific(6);
    doc["agrees"] = agrees;
    if (!agrees) {
      outcome.status = kVerificationFailure;
    }
  }
  outcome.document = std::move(doc);
  return outcome;
}

Outcome run_coeffs(const Command& command) {
  if (command.order < 0) {
    throw UsageError("--order must be nonnegative");
  }
  ExtractOptions options;
  options.eval = EvalOptions::from_environment();
  Outcome outcome;
  if (command.formula) {
    if (command.identity) {
      throw UsageError("coeffs takes either --identity or --formula, not both");
    }
    require_json(command);
    CorollaryReport report = corollary_check(parse_named_formula_id(*command.formula), command.digits, options);
    outcome.document = to_json(report);
    if (!report.agrees) {
      outcome.status = kVerificationFailure;
    }
    return outcome;
  }
  IdentityId id = parse_identity_id(require(command.identity, "--identity or --formula", command.kind));
  CoefficientReport report = gf_coefficients(id, static_cast<std::size_t>(command.order), command.digits, options);
  if (command.format == OutputFormat::Csv) {
    outcome.csv = to_csv(report);
  } else {
    outcome.document = to_json(report);
  }
  return outcome;
}

Outcome run_bench(const Command& command) {
  IdentityId id = parse_identity_id(require(command.identity, "--identity", command.kind));
  const BigRational a = single_a(command);
  if (command.n_max < 1) {
    throw UsageError("--nmax must be >= 1");
  }
  auto rows = convergence_table(id, a, command.n_max);
  Outcome outcome;
  if (command.format == OutputFormat::Csv) {
    outcome.csv = to_csv(rows);
  } else {
    outcome.document = {{"identity", std::string(to_string(id))},
                        {"a", to_string(a)},
                        {"ratio", to_string(identity_ratio(id))},
                        {"rows", to_json(rows)}};
  }
  return outcome;
}

Outcome dispatch(const Command& command) {
  if (command.digits <= 0) {
    throw UsageError("--digits must be >= 1, got " + std::to_string(command.digits));
  }
  switch (command.kind) {
    case CommandKind::Verify: return run_verify(command);
    case CommandKind::Zeta: return run_zeta(command);
    case CommandKind::Gf: return run_gf(command);
    case CommandKind::Coeffs: return run_coeffs(command);
    case CommandKind::Bench: return run_bench(command);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::optional<Command> parse_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                     int& exit_code) {
  CLI::App app{"Exact WZ-pair verification and high-precision zeta series evaluation", "zeta-forge"};
  app.require_subcommand(1);

  Command command;
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

  struct Spec {
    CommandKind kind;
    const char* description;
  };
  const Spec specs[] = {
      {CommandKind::Verify, "check the WZ relation on an exact grid"},
      {CommandKind::Zeta, "sum a named zeta series"},
      {CommandKind::Gf, "evaluate an identity's accelerated series at a"},
      {CommandKind::Coeffs, "extract generating-function coefficients or check a corollary"},
      {CommandKind::Bench, "tabulate term magnitudes and ratios"},
  };
  std::vector<std::pair<CLI::App*, CommandKind>> subcommands;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(spec.kind)), spec.description);
    subcommands.emplace_back(sub, spec.kind);
    sub->add_option("--a", command.a, "parameter a as p/q (repeatable for verify)");
    sub->add_option("--digits", command.digits, "requested decimal digits")->capture_default_str();
    sub->add_option("--format", command.format, "json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", command.out_path, "write output to FILE");
    sub->add_flag("--meta", command.meta, "add a runtime metadata block");
    switch (spec.kind) {
      case CommandKind::Verify:
        sub->add_option("--pair", command.pair, "pair id; all pairs when omitted");
        sub->add_option("--nmax", command.n_max)->capture_default_str();
        sub->add_option("--kmax", command.k_max)->capture_default_str();
        sub->add_flag("--certify", command.certify, "run the truncation-doubling protocol too");
        break;
      case CommandKind::Zeta:
        sub->add_option("--formula", command.formula, "named formula id");
        break;
      case CommandKind::Gf:
        sub->add_option("--identity", command.identity, "identity id");
        sub->add_flag("--check", command.check, "compare with direct left-hand summation");
        break;
      case CommandKind::Coeffs:
        sub->add_option("--identity", command.identity, "identity id");
        sub->add_option("--formula", command.formula, "corollary formula id (thm1-z5, thm2-z4, thm4-z5)");
        sub->add_option("--order", command.order, "highest a^2 power")->capture_default_str();
        break;
      case CommandKind::Bench:
        sub->add_option("--identity", command.identity, "identity id");
        sub->add_option("--nmax", command.n_max)->capture_default_str();
        break;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kSuccess;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "zeta-forge: " << e.what() << '\n';
    exit_code = kUsageError;
    return std::nullopt;
  }
  for (const auto& [sub, kind] : subcommands) {
    if (sub->parsed()) {
      command.kind = kind;
    }
  }
  exit_code = kSuccess;
  return command;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = dispatch(command);
  } catch (const UsageError& e) {
    err << "zeta-forge: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "zeta-forge: domain error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NonConvergenceError& e) {
    err << "zeta-forge: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const CertificationError& e) {
    err << "zeta-forge: " << e.what() << '\n';
    return kVerificationFailure;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (outcome.csv) {
    text = *outcome.csv;
  } else {
    json doc = std::move(outcome.document);
    if (command.meta) {
      char seconds[32];
      std::snprintf(seconds, sizeof seconds, "%.3f", elapsed);
      doc = {{"data", std::move(doc)},
             {"meta", {{"command", std::string(command_name(command.kind))},
                       {"elapsed_seconds", std::string(seconds)},
                       {"version", ZETA_FORGE_VERSION}}}};
    }
    text = doc.dump(2) + "\n";
  }

  if (command.out_path) {
    std::ofstream file(*command.out_path);
    if (!file) {
      err << "zeta-forge: cannot open " << *command.out_path << " for writing\n";
      return kUsageError;
    }
    file << text;
  } else {
    out << text;
  }
  if (outcome.status == kVerificationFailure) {
    err << "zeta-forge: verification failed\n";
  }
  return outcome.status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int exit_code = kSuccess;
  auto command = parse_command(args, out, err, exit_code);
  if (!command) {
    return exit_code;
  }
  return run(*command, out, err);
}

}  // namespace zeta_forge::cli
