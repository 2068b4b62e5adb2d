// Command-line front end: check, interpret, derive, measure, goedel.
// Exit codes: 0 success, 1 syntax or usage error, 2 semantic violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmeta/qmeta.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qmeta;

constexpr int kExitOk = 0;
constexpr int kExitSyntax = 1;
constexpr int kExitSemantic = 2;

int exit_code(const Error& e) {
  return e.kind() == ErrorKind::Syntax ? kExitSyntax : kExitSemantic;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw SyntaxError(0, {}, "cannot open script file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Applies --basis-order: a comma-separated permutation of the declared
/// basis atoms. Returns the reordered basis.
Basis make_basis(const Script& script, const std::string& order) {
  if (order.empty()) return Basis(script.basis);
  std::vector<std::string> atoms;
  std::size_t start = 0;
  while (start <= order.size()) {
    std::size_t comma = order.find(',', start);
    if (comma == std::string::npos) comma = order.size();
    std::string name = order.substr(start, comma - start);
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (!name.empty()) atoms.push_back(std::move(name));
    start = comma + 1;
  }
  Basis reordered(atoms);  // rejects duplicates
  if (atoms.size() != script.basis.size())
    throw SyntaxError(0, {},
                      "--basis-order must list every declared basis atom");
  for (const std::string& name : script.basis)
    if (!reordered.index_of(name))
      throw SyntaxError(0, {},
                        "--basis-order must be a permutation of the declared "
                        "basis, missing '" + name + "'");
  return reordered;
}

/// The statement a state command works on: the last one. Its assertion must
/// be plain (degree 1) and its subject a basis atom or a superposition.
const Statement& state_statement(const Script& script) {
  if (script.statements.empty())
    throw SyntaxError(0, {}, "script has no assertion to interpret");
  const Statement& stmt = script.statements.back();
  if (!stmt.assertion.is_classical())
    throw NotClassical("only a plain (degree-1) assertion names a state, got " +
                       to_text(stmt.assertion));
  return stmt;
}

QubitState state_of(const Script& script, const std::string& order) {
  const Statement& stmt = state_statement(script);
  Basis basis = make_basis(script, order);
  const Prop& subject = stmt.assertion.subject();
  if (subject.is_atom()) return interpret_atom(subject.atom_name(), basis);
  return interpret_superposition(subject, basis);
}

int cmd_check(const std::string& path, bool json) {
  Script script = parse_script(read_file(path));
  ordered_json out;
  out["command"] = "check";
  out["basis"] = script.basis;
  out["statements"] = ordered_json::array();
  for (const Statement& stmt : script.statements) {
    const Assertion& a = stmt.assertion;
    require_normalized(a.subject());
    if (a.subject().kind() == Prop::Kind::Superposition && a.is_classical()) {
      // round-trip through the definitional equation
      std::vector<Assertion> parts = decompose_quantum(a);
      if (!(compose_quantum(parts) == a))
        throw NormalizationViolation("decompose/compose round-trip changed " +
                                     to_text(a));
    }
    if (a.subject().kind() == Prop::Kind::ClassicalAnd && a.is_classical()) {
      auto [left, right] = decompose_classical(a);
      if (!(compose_classical(left, right) == a))
        throw NormalizationViolation("decompose/compose round-trip changed " +
                                     to_text(a));
    }
    if (json) {
      ordered_json entry;
      entry["label"] = stmt.label;
      entry["assertion"] = to_text(a);
      entry["status"] = "ok";
      out["statements"].push_back(entry);
    } else {
      std::cout << stmt.label << ": ok " << to_text(a) << "\n";
    }
  }
  if (json) {
    out["checked"] = script.statements.size();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << script.statements.size() << " statement(s) checked\n";
  }
  return kExitOk;
}

int cmd_interpret(const std::string& path, const std::string& order,
                  bool json) {
  Script script = parse_script(read_file(path));
  QubitState state = state_of(script, order);
  std::vector<StateRecord> records = state_records(state);
  if (json) {
    ordered_json out;
    out["command"] = "interpret";
    out["basis"] = state.basis().atoms();
    out["records"] = ordered_json::array();
    for (const StateRecord& r : records) {
      ordered_json entry;
      entry["atom"] = r.atom;
      entry["re"] = r.re;
      entry["im"] = r.im;
      entry["truth"] = r.truth;
      out["records"].push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "basis:";
    for (const std::string& atom : state.basis().atoms())
      std::cout << " " << atom;
    std::cout << "\n";
    for (const StateRecord& r : records)
      std::cout << r.atom << "  re " << to_text_sig12(r.re) << "  im "
                << to_text_sig12(r.im) << "  truth " << to_text_sig12(r.truth)
                << "\n";
  }
  return kExitOk;
}

int cmd_derive(const std::string& kind, const std::string& arg0,
               const std::string& arg1, bool json) {
  std::optional<DerivationTrace> trace;
  if (kind == "classical") {
    trace = derive_classical_defeq(arg0, arg1);
  } else if (kind == "quantum") {
    trace = derive_quantum_defeq(parse_complex(arg0), parse_complex(arg1));
  } else {
    std::cerr << "error: derive kind must be 'classical' or 'quantum', got '"
              << kind << "'\n";
    return kExitSyntax;
  }
  VerifyResult result = verify(*trace);
  if (json) {
    ordered_json out;
    out["command"] = "derive";
    out["kind"] = kind;
    out["lines"] = ordered_json::array();
    for (std::size_t i = 0; i < trace->lines().size(); ++i) {
      const TraceLine& line = trace->lines()[i];
      ordered_json entry;
      entry["n"] = i + 1;
      entry["judgment"] = line.judgment;
      entry["rule"] = line.rule;
      entry["refs"] = line.refs;
      out["lines"].push_back(entry);
    }
    out["conclusion"] = trace->conclusion();
    out["verified"] = result.ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << trace->rendered();
  }
  if (!result.ok) {
    std::cerr << "error: trace verification failed at line " << result.line
              << ": " << result.reason << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}

int cmd_measure(const std::string& path, std::uint64_t trials,
                std::uint64_t seed, const std::string& order, bool json) {
  if (trials < 1) {
    std::cerr << "error: --trials must be at least 1\n";
    return kExitSyntax;
  }
  Script script = parse_script(read_file(path));
  QubitState state = state_of(script, order);
  MeasurementStatistics stats = measure_statistics(state, trials, seed);
  if (json) {
    ordered_json out;
    out["command"] = "measure";
    out["seed"] = stats.seed;
    out["trials"] = stats.trials;
    out["records"] = ordered_json::array();
    for (const MeasurementRecord& r : stats.records) {
      ordered_json entry;
      entry["atom"] = r.atom;
      entry["count"] = r.count;
      entry["frequency"] = r.frequency;
      entry["expected"] = r.expected;
      out["records"].push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "seed " << stats.seed << "  trials " << stats.trials << "\n";
    for (const MeasurementRecord& r : stats.records)
      std::cout << r.atom << "  count " << r.count << "  frequency "
                << to_text_sig12(r.frequency) << "  expected "
                << to_text_sig12(r.expected) << "\n";
  }
  return kExitOk;
}

int cmd_goedel(const std::string& degree_text, bool json) {
  GoedelReport report = goedel_report(parse_complex(degree_text));
  if (json) {
    ordered_json out;
    out["command"] = "goedel";
    out["assertion"] = to_text(report.assertion);
    out["truth_value"] = report.truth_value.value();
    out["identification"] = report.identification;
    out["consistency_probability"] = report.consistency_probability.value();
    out["verdict"] = report.verdict;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "assertion: " << to_text(report.assertion) << "\n"
              << "truth value: " << to_text_sig12(report.truth_value.value())
              << "\n"
              << "identification: " << report.identification << "\n"
              << "consistency probability: "
              << to_text_sig12(report.consistency_probability.value()) << "\n"
              << "verdict: " << report.verdict << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded assertions, definitional equations, derivation traces "
               "and projective measurement for a quantum metalanguage"};
  app.require_subcommand(1);

  std::string check_file;
  bool check_json = false;
  CLI::App* check = app.add_subcommand(
      "check", "Parse a script and validate every assertion's degrees");
  check->add_option("file", check_file, "script file")->required();
  check->add_flag("--json", check_json, "structured output");

  std::string interpret_file, interpret_order;
  bool interpret_json = false;
  CLI::App* interpret = app.add_subcommand(
      "interpret", "Interpret the script's state as a qubit state");
  interpret->add_option("file", interpret_file, "script file")->required();
  interpret->add_option("--basis-order", interpret_order,
                        "comma-separated basis permutation");
  interpret->add_flag("--json", interpret_json, "structured output");

  std::string derive_kind, derive_arg0, derive_arg1;
  bool derive_json = false;
  CLI::App* derive = app.add_subcommand(
      "derive", "Print a definitional-equation derivation trace");
  derive->add_option("kind", derive_kind, "classical or quantum")->required();
  derive->add_option("arg0", derive_arg0, "atom name or complex degree")
      ->required();
  derive->add_option("arg1", derive_arg1, "atom name or complex degree")
      ->required();
  derive->add_flag("--json", derive_json, "structured output");

  std::string measure_file, measure_order;
  std::uint64_t measure_trials = 1000, measure_seed = 0;
  bool measure_json = false;
  CLI::App* measure = app.add_subcommand(
      "measure", "Sample projective measurements of the script's state");
  measure->add_option("file", measure_file, "script file")->required();
  measure->add_option("--trials", measure_trials, "number of measurements");
  measure->add_option("--seed", measure_seed, "random stream seed");
  measure->add_option("--basis-order", measure_order,
                      "comma-separated basis permutation");
  measure->add_flag("--json", measure_json, "structured output");

  std::string goedel_degree;
  bool goedel_json = false;
  CLI::App* goedel = app.add_subcommand(
      "goedel", "Report the graded assertion of the Goedel sentence");
  goedel->add_option("--degree", goedel_degree, "complex assertion degree")
      ->required();
  goedel->add_flag("--json", goedel_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitSyntax;
  }

  try {
    if (check->parsed()) return cmd_check(check_file, check_json);
    if (interpret->parsed())
      return cmd_interpret(interpret_file, interpret_order, interpret_json);
    if (derive->parsed())
      return cmd_derive(derive_kind, derive_arg0, derive_arg1, derive_json);
    if (measure->parsed())
      return cmd_measure(measure_file, measure_trials, measure_seed,
                         measure_order, measure_json);
    if (goedel->parsed()) return cmd_goedel(goedel_degree, goedel_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}
