#include "revpal/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "revpal/alt_construct.hpp"
#include "revpal/census.hpp"
#include "revpal/circuit_io.hpp"
#include "revpal/palindrome.hpp"
#include "revpal/simulator.hpp"

namespace revpal::cli
{

void RunReport::add(std::string key, std::string value)
{
  fields.emplace_back(std::move(key), std::move(value));
}

std::string RunReport::to_text() const
{
  std::ostringstream os;
  os << "command: " << command << '\n';
  for (auto const &[key, value] : fields)
    os << key << ": " << value << '\n';
  if (verdict)
    os << "verification: " << (*verdict ? "pass" : "fail") << '\n';
  if (elapsed_ms)
    os << "time: " << std::fixed << std::setprecision(3) << *elapsed_ms
       << " ms\n";
  return os.str();
}

Permutation read_permutation(std::string const &spec,
                             std::optional<unsigned> lines)
{
  bool const cycle_form = spec.find('(') != std::string::npos;
  if (lines) {
    if (*lines < 1 || *lines > 16)
      throw std::invalid_argument("--n must be in 1..16");
    return parse_permutation(spec, std::size_t{1} << *lines);
  }
  auto p = parse_permutation(spec);
  auto const degree = std::bit_ceil(std::max<std::size_t>(p.degree(), 2));
  if (degree == p.degree())
    return p;
  if (!cycle_form)
    throw std::invalid_argument("one-line form has " +
                                std::to_string(p.degree()) +
                                " entries, which is not a power of two");
  return parse_permutation(spec, degree);
}

namespace
{

using clock = std::chrono::steady_clock;

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string bits(std::uint32_t x, unsigned width)
{
  std::string s;
  for (unsigned line = width; line >= 1; --line)
    s += (x & line_bit(line)) ? '1' : '0';
  return s;
}

std::string circuit_stats(Circuit const &c)
{
  std::ostringstream os;
  os << c.lines << " lines";
  if (c.ancilla)
    os << ", ancilla x" << *c.ancilla;
  os << ", " << c.size() << " gates, "
     << (parity(c) == Parity::odd ? "odd" : "even") << ", "
     << (is_palindromic(c) ? "palindromic" : "not palindromic");
  return os.str();
}

struct Options
{
  bool timing = false;
  std::string perm;
  std::optional<unsigned> lines;
  std::string mode = "auto";
  std::string output;
  std::string circuit;
  bool ancilla = false;
  unsigned census_n = 1;
  bool brute_force = false;
  bool json = false;
  std::string input;
  bool all = false;
  bool semiclassical = false;
};

int cmd_classify(Options const &o, RunReport &report)
{
  auto const p = read_permutation(o.perm, o.lines);
  auto const c = classify(p);
  report.add("permutation", to_cycle_string(p));
  report.add("lines", std::to_string(c.lines));
  report.add("cycle type", to_string(cycle_type(p)));
  report.add("classification", describe(c));
  return ok;
}

int cmd_synth(Options const &o, RunReport &report, std::string &circuit_text,
              std::ostream &err)
{
  auto const p = read_permutation(o.perm, o.lines);
  auto const c = classify(p);
  report.add("permutation", to_cycle_string(p));
  report.add("lines", std::to_string(c.lines));
  report.add("classification", describe(c));

  std::string mode = o.mode;
  if (mode == "auto")
    mode = (c.kind == InvolutionKind::in_In || c.kind == InvolutionKind::identity)
             ? "palindrome"
             : "ancilla";
  if (c.kind == InvolutionKind::not_involution) {
    err << "error: only involutions can be synthesized as palindromes\n";
    return usage_error;
  }

  Circuit circuit;
  if (mode == "palindrome") {
    circuit = build_palindrome(p).circuit;
  } else if (mode == "ancilla") {
    circuit = build_ancilla_circuit(p);
  } else {
    circuit = build_v_circuit(p);
  }
  report.add("mode", mode);
  report.add("circuit", circuit_stats(circuit));

  auto const verdict = circuit.ancilla
                         ? equivalent_with_ancilla(circuit, p, *circuit.ancilla)
                         : equivalent(circuit, p);
  report.verdict = verdict.equivalent;
  if (!verdict) {
    report.add("diagnostic", verdict.diagnostic);
    return verification_failed;
  }

  auto const text = serialize_circuit(circuit);
  if (!o.output.empty()) {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << o.output << "'\n";
      return usage_error;
    }
    report.add("output", o.output);
  } else {
    report.add("output", "stdout");
    circuit_text = text;
  }
  return ok;
}

int cmd_verify(Options const &o, RunReport &report)
{
  auto const circuit = parse_circuit(read_file(o.circuit));
  if (o.ancilla && !circuit.ancilla)
    throw std::invalid_argument("--ancilla given but circuit declares no "
                                ".ancilla line");
  unsigned const data_lines =
    o.lines.value_or(circuit.lines - (o.ancilla ? 1u : 0u));
  auto const p = read_permutation(o.perm, data_lines);
  report.add("circuit", o.circuit);
  report.add("permutation", to_cycle_string(p));
  report.add("stats", circuit_stats(circuit));
  auto const verdict = o.ancilla
                         ? equivalent_with_ancilla(circuit, p, *circuit.ancilla)
                         : equivalent(circuit, p);
  report.verdict = verdict.equivalent;
  if (!verdict) {
    report.add("diagnostic", verdict.diagnostic);
    return verification_failed;
  }
  return ok;
}

int cmd_simulate(Options const &o, RunReport &report)
{
  auto const circuit = parse_circuit(read_file(o.circuit));
  if (circuit.has_v_gates() && !o.semiclassical)
    throw std::invalid_argument("circuit has V gates; use --semiclassical");
  report.add("circuit", o.circuit);
  report.add("stats", circuit_stats(circuit));
  report.add("model", o.semiclassical ? "semiclassical" : "classical");

  std::vector<ClassicalState> inputs;
  if (!o.input.empty()) {
    if (o.input.size() != circuit.lines ||
        o.input.find_first_not_of("01") != std::string::npos)
      throw std::invalid_argument("--input must be " +
                                  std::to_string(circuit.lines) +
                                  " binary digits written x_n..x_1");
    inputs.push_back(static_cast<ClassicalState>(std::stoul(o.input, nullptr, 2)));
  } else {
    for (ClassicalState x = 0; x < (ClassicalState{1} << circuit.lines); ++x)
      inputs.push_back(x);
  }

  int code = ok;
  for (auto x : inputs) {
    std::string row;
    if (!o.semiclassical) {
      row = bits(simulate_classical(circuit, x), circuit.lines);
    } else {
      try {
        auto const state = simulate_semiclassical(circuit, x);
        if (state.is_classical()) {
          row = bits(classical_readout(state), circuit.lines);
        } else {
          std::string cells;
          for (auto j = circuit.lines; j >= 1; --j)
            cells += static_cast<char>('0' + state.cells[j - 1]);
          row = "non-classical cells " + cells;
          code = non_classical;
        }
      } catch (NonClassicalError const &e) {
        row = std::string("non-classical: ") + e.what();
        code = non_classical;
      }
    }
    report.add(bits(x, circuit.lines), row);
  }
  return code;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err)
{
  CLI::App app{"Palindromic circuits for self-inverse reversible functions",
               "revpal"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Append elapsed time to the report");

  auto *classify_cmd = app.add_subcommand("classify", "Classify a permutation");
  classify_cmd->add_option("--perm", o.perm, "Cycle or one-line form")->required();
  classify_cmd->add_option("--n", o.lines, "Number of lines");

  auto *synth_cmd = app.add_subcommand("synth", "Build a verified palindromic circuit");
  synth_cmd->add_option("--perm", o.perm, "Cycle or one-line form")->required();
  synth_cmd->add_option("--n", o.lines, "Number of lines");
  synth_cmd->add_option("--mode", o.mode, "Construction")
    ->check(CLI::IsMember({"auto", "palindrome", "ancilla", "vgate"}));
  synth_cmd->add_option("-o,--output", o.output, "Circuit file to write");

  auto *verify_cmd = app.add_subcommand("verify", "Check a circuit against a permutation");
  verify_cmd->add_option("--circuit", o.circuit, "Circuit file")->required();
  verify_cmd->add_option("--perm", o.perm, "Cycle or one-line form")->required();
  verify_cmd->add_option("--n", o.lines, "Number of data lines");
  verify_cmd->add_flag("--ancilla", o.ancilla, "Use the circuit's zero-initialized ancilla");

  auto *census_cmd = app.add_subcommand("census", "Count function classes");
  census_cmd->add_option("--n", o.census_n, "Number of lines")
    ->required()
    ->check(CLI::Range(1u, 16u));
  census_cmd->add_flag("--brute-force", o.brute_force, "Enumerate instead of formulas");
  census_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto *simulate_cmd = app.add_subcommand("simulate", "Run a circuit");
  simulate_cmd->add_option("--circuit", o.circuit, "Circuit file")->required();
  auto *input_opt =
    simulate_cmd->add_option("--input", o.input, "Input bits written x_n..x_1");
  simulate_cmd->add_flag("--all", o.all, "All inputs (default)")->excludes(input_opt);
  simulate_cmd->add_flag("--semiclassical", o.semiclassical, "Mod-4 V-gate model");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return usage_error;
  }

  auto const start = clock::now();
  RunReport report;
  std::string circuit_text;
  int code = ok;
  try {
    if (classify_cmd->parsed()) {
      report.command = "classify";
      code = cmd_classify(o, report);
    } else if (synth_cmd->parsed()) {
      report.command = "synth";
      code = cmd_synth(o, report, circuit_text, err);
    } else if (verify_cmd->parsed()) {
      report.command = "verify";
      code = cmd_verify(o, report);
    } else if (census_cmd->parsed()) {
      auto const r = o.brute_force ? brute_force_census(o.census_n)
                                   : formula_census(o.census_n);
      out << (o.json ? to_json(r) : to_text(r));
      return ok;
    } else if (simulate_cmd->parsed()) {
      report.command = "simulate";
      code = cmd_simulate(o, report);
    }
  } catch (CensusTooLarge const &e) {
    err << "error: " << e.what() << '\n';
    return census_too_large;
  } catch (ParseError const &e) {
    err << "error: " << o.circuit << ':' << e.what() << '\n';
    return usage_error;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  if (code == usage_error)
    return code;
  if (o.timing)
    report.elapsed_ms =
      std::chrono::duration<double, std::milli>(clock::now() - start).count();
  out << report.to_text();
  if (!circuit_text.empty())
    out << '\n' << circuit_text;
  return code;
}

} // namespace revpal::cli
