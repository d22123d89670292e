#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ncrat/error.hpp"
#include "ncrat/io.hpp"
#include "ncrat/parse.hpp"

namespace ncrat::cli {

namespace {

const std::vector<std::string> kExprCommands{"expand", "linearize", "magnus"};

bool is_expr_command(const std::string& name) {
  return std::find(kExprCommands.begin(), kExprCommands.end(), name) != kExprCommands.end();
}

std::optional<unsigned> parse_stage(const std::string& text) {
  if (text == "inf")
    return std::nullopt;
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw CLI::ValidationError("--m", "expected a non-negative integer or 'inf', got '" + text + "'");
  return static_cast<unsigned>(std::stoul(text));
}

// Highest index among identifiers <prefix><digits>; 1 when none occur.
unsigned infer_rank(const std::string& src, char prefix) {
  unsigned best = 1;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] != prefix || (i > 0 && (std::isalnum(static_cast<unsigned char>(src[i - 1])) || src[i - 1] == '_')))
      continue;
    std::size_t j = i + 1;
    while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
      ++j;
    if (j == i + 1 || (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_')))
      continue;
    if (j - i - 1 <= 3)
      best = std::max(best, static_cast<unsigned>(std::stoul(src.substr(i + 1, j - i - 1))));
  }
  return best;
}

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string series_table(const TruncatedSeries& p) {
  std::ostringstream out;
  for (std::size_t k = 0; k <= p.order(); ++k)
    out << "degree " << k << ": " << p.homogeneous(k).to_string() << '\n';
  return out.str();
}

std::string necklace_table(const std::vector<NecklaceElement>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out << "x^" << i + 1 << ": " << values[i].to_string() << '\n';
  return out.str();
}

std::string diagonal_text(const std::vector<TruncatedSeries>& diagonal) {
  std::ostringstream out;
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    out << "  [" << i + 1 << "] " << diagonal[i].to_string() << '\n';
  return out.str();
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n')
    s += '\n';
  return s;
}

Outcome dispatch(const ParsedCommand& cmd) {
  const std::string& name = cmd.subcommand;
  Outcome result;

  if (name == "verify-counterexample") {
    const auto stage = *cmd.stage;
    const std::size_t order = cmd.order.value_or(stage ? *stage + 2 : 6);
    const ChainReport report = verify_counterexample_chain(stage, order);
    result.output = cmd.json ? io::write_report(report) : report.to_text();
    result.exit_code = report.pass() ? Success : VerificationFailed;
    return result;
  }

  const SpecPtr spec = RingSpec::parse(cmd.ring);

  if (is_expr_command(name)) {
    const unsigned mu = cmd.mu.value_or(infer_rank(cmd.input, name == "magnus" ? 'z' : 'x'));
    const std::size_t order = cmd.order.value_or(6);
    if (name == "magnus") {
      const auto series = magnus_expand(parse_group_ring(cmd.input, spec, mu), order);
      result.output = cmd.json ? io::write_series(series) : series_table(series);
      return result;
    }
    const RationalExpr expr = parse_expr(cmd.input, spec, mu);
    if (name == "expand") {
      const auto series = evaluate(expr, spec, mu, order);
      result.output = cmd.json ? io::write_series(series) : series_table(series);
    } else {
      const auto machine = linearize(expr, spec, mu);
      result.output = cmd.json ? io::write_machine(machine) : machine.to_string();
    }
    return result;
  }

  const std::string text = read_input(cmd.input);
  if (name == "machine-expand") {
    const auto series = machine_expand(io::read_machine(text), cmd.order.value_or(6));
    result.output = cmd.json ? io::write_series(series) : series_table(series);
  } else if (name == "chi") {
    const auto values = chi(io::read_ring_matrix(text), cmd.order.value_or(6));
    result.output = cmd.json ? io::write_necklaces(values) : necklace_table(values);
  } else if (name == "tmap") {
    const auto m = io::read_series_matrix(text);
    const auto values = tmap(m, cmd.order.value_or(m.order()));
    result.output = cmd.json ? io::write_necklaces(values) : necklace_table(values);
  } else if (name == "reduce") {
    const auto r = gaussian_reduce(io::read_series_matrix(text));
    const bool verified = r.log.verify();
    if (cmd.json) {
      result.output = io::write_reduction(r);
    } else {
      std::ostringstream out;
      out << "unit part: " << r.unit_part.to_string() << '\n'
          << "diagonal:\n" << diagonal_text(r.diagonal) << "operations (" << r.log.ops.size() << "):\n";
      for (const auto& op : r.log.ops)
        out << "  " << op.to_string() << '\n';
      out << "certificate: " << (verified ? "verified" : "FAILED") << '\n';
      result.output = out.str();
    }
    result.exit_code = verified ? Success : VerificationFailed;
  } else if (name == "witt") {
    const auto w = witt_split(io::read_series_matrix(text));
    const bool verified = w.reduction.log.verify();
    if (cmd.json) {
      result.output = io::write_witt(w);
    } else {
      std::ostringstream out;
      out << "K1 part: " << w.unit_part.to_string() << '\n'
          << "Witt part: " << w.witt_part.to_string() << '\n'
          << "diagonal:\n" << diagonal_text(w.reduction.diagonal)
          << "certificate: " << (verified ? "verified" : "FAILED") << '\n';
      result.output = out.str();
    }
    result.exit_code = verified ? Success : VerificationFailed;
  } else {
    throw InvalidArgument("unknown subcommand '" + name + "'");
  }
  return result;
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const UnknownSymbol*>(&e) ||
         dynamic_cast<const FormatError*>(&e) || dynamic_cast<const InvalidSpec*>(&e);
}

} // namespace

std::optional<ParsedCommand> parse_command(const std::vector<std::string>& args, Outcome& outcome) {
  CLI::App app{"Exact noncommutative rational power series over monomial-quotient rings", "ncrat"};
  app.require_subcommand(1);

  ParsedCommand cmd;
  std::string format = "text";
  std::string stage_text;

  auto add_common = [&](CLI::App* sub, bool ring, bool mu) {
    if (ring)
      sub->add_option("--ring", cmd.ring, "Coefficient ring: Z, free:a,b, S:m, S:inf, quot:a,b/ab");
    if (mu)
      sub->add_option("--mu", cmd.mu, "Number of indeterminates (default: highest index used)");
    sub->add_option("--order", cmd.order, "Truncation order N");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cmd.out_path, "Write output to FILE");
  };

  const std::vector<std::pair<std::string, std::string>> expr_help{
      {"expand", "Expand a rational expression to a truncated series"},
      {"linearize", "Realize a rational expression as a linear machine"},
      {"magnus", "Magnus expansion of a free group ring element"}};
  for (const auto& [name, help] : expr_help) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, true, true);
    sub->add_option("expression", cmd.input, "Input expression")->required();
  }
  const std::vector<std::pair<std::string, std::string>> file_help{
      {"machine-expand", "Expand a machine file"},
      {"chi", "Trace invariant of a square matrix file"},
      {"tmap", "Trace-log-derivative of a series matrix file"},
      {"reduce", "Gaussian reduction of a series matrix file with its certificate"},
      {"witt", "Split a series matrix file into unit and Witt parts"}};
  for (const auto& [name, help] : file_help) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, false, false);
    sub->add_option("file", cmd.input, "Input file ('-' for stdin)")->required();
  }
  auto* verify = app.add_subcommand("verify-counterexample", "Check the counterexample identity chain");
  add_common(verify, false, false);
  verify->add_option("--m", stage_text, "Stage m (integer or inf)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
    if (verify->parsed())
      cmd.stage = parse_stage(stage_text);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    outcome.exit_code = app.exit(e, out, err) == 0 ? Success : UsageError;
    outcome.output = out.str();
    outcome.error = err.str();
    return std::nullopt;
  }
  cmd.subcommand = app.get_subcommands().front()->get_name();
  cmd.json = format == "json";
  return cmd;
}

Outcome run(const ParsedCommand& cmd) {
  try {
    Outcome result = dispatch(cmd);
    result.output = with_newline(std::move(result.output));
    return result;
  } catch (const Error& e) {
    return {is_input_error(e) ? UsageError : ComputationError, "", std::string("error: ") + e.what() + '\n'};
  }
}

int main_entry(int argc, char** argv) {
  Outcome outcome;
  const auto cmd = parse_command(std::vector<std::string>(argv, argv + argc), outcome);
  if (cmd)
    outcome = run(*cmd);
  std::cerr << outcome.error;
  if (cmd && !cmd->out_path.empty() && !outcome.output.empty()) {
    std::ofstream out(cmd->out_path);
    if (!(out << outcome.output)) {
      std::cerr << "error: cannot write '" << cmd->out_path << "'\n";
      return UsageError;
    }
  } else {
    std::cout << outcome.output;
  }
  return outcome.exit_code;
}

} // namespace ncrat::cli
