#include "revpal/circuit_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace revpal
{

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const &message)
  : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                       ": " + message),
    line_(line), column_(column)
{}

namespace
{

struct Token
{
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string const &line)
{
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#')
      break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    tokens.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return tokens;
}

unsigned parse_count(Token const &tok, std::size_t row)
{
  if (tok.text.empty() || tok.text.size() > 4)
    throw ParseError(row, tok.column, "expected a number, got '" + tok.text + "'");
  unsigned value = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(row, tok.column,
                       "expected a number, got '" + tok.text + "'");
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  return value;
}

struct LineRef
{
  unsigned line;
  bool negative;
};

LineRef parse_line_ref(Token const &tok, std::size_t row, unsigned lines)
{
  std::string s = tok.text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.erase(0, 1);
  }
  if (s.size() < 2 || s.front() != 'x')
    throw ParseError(row, tok.column, "expected x<i> or -x<i>, got '" +
                                        tok.text + "'");
  unsigned const line =
    parse_count({s.substr(1), tok.column + (negative ? 2 : 1)}, row);
  if (line < 1 || line > lines)
    throw ParseError(row, tok.column, "line x" + std::to_string(line) +
                                        " out of range 1.." +
                                        std::to_string(lines));
  return {line, negative};
}

} // namespace

Circuit parse_circuit(std::string const &text)
{
  std::optional<unsigned> lines;
  std::optional<unsigned> ancilla;
  std::size_t ancilla_row = 0, ancilla_col = 0;
  std::vector<CircuitGate> gates;

  std::istringstream in(text);
  std::string raw;
  std::size_t row = 0;
  while (std::getline(in, raw)) {
    ++row;
    auto const tokens = tokenize(raw);
    if (tokens.empty())
      continue;
    auto const &head = tokens.front();

    if (head.text == ".lines") {
      if (lines)
        throw ParseError(row, head.column, "duplicate .lines");
      if (!gates.empty())
        throw ParseError(row, head.column, ".lines must precede all gates");
      if (tokens.size() != 2)
        throw ParseError(row, head.column, ".lines takes one argument");
      auto const n = parse_count(tokens[1], row);
      if (n < 1 || n > max_lines)
        throw ParseError(row, tokens[1].column,
                         "line count must be in 1.." + std::to_string(max_lines));
      lines = n;
      continue;
    }
    if (head.text == ".ancilla") {
      if (ancilla)
        throw ParseError(row, head.column, "duplicate .ancilla");
      if (tokens.size() != 2)
        throw ParseError(row, head.column, ".ancilla takes one argument");
      ancilla = parse_count(tokens[1], row);
      ancilla_row = row;
      ancilla_col = tokens[1].column;
      continue;
    }

    GateKind kind;
    if (head.text == "t")
      kind = GateKind::toffoli;
    else if (head.text == "v")
      kind = GateKind::v;
    else if (head.text == "v+")
      kind = GateKind::v_dagger;
    else
      throw ParseError(row, head.column, "unknown directive '" + head.text + "'");

    if (!lines)
      throw ParseError(row, head.column, "gate before .lines header");
    if (tokens.size() < 2)
      throw ParseError(row, head.column, "gate needs a target line");

    CircuitGate gate{kind, 0, 0, 0};
    auto const &target_tok = tokens.back();
    auto const target = parse_line_ref(target_tok, row, *lines);
    if (target.negative)
      throw ParseError(row, target_tok.column, "target cannot be negated");
    gate.target = target.line;
    for (std::size_t j = 1; j + 1 < tokens.size(); ++j) {
      auto const ref = parse_line_ref(tokens[j], row, *lines);
      if (ref.line == gate.target)
        throw ParseError(row, tokens[j].column,
                         "target line listed among controls");
      if ((gate.controls() & line_bit(ref.line)) != 0)
        throw ParseError(row, tokens[j].column,
                         "line x" + std::to_string(ref.line) +
                           " controlled twice");
      (ref.negative ? gate.negative : gate.positive) |= line_bit(ref.line);
    }
    gates.push_back(gate);
  }

  if (!lines)
    throw ParseError(row == 0 ? 1 : row, 1, "missing .lines header");
  if (ancilla && (*ancilla < 1 || *ancilla > *lines))
    throw ParseError(ancilla_row, ancilla_col, "ancilla line out of range");
  return Circuit(*lines, std::move(gates), ancilla);
}

std::string serialize_circuit(Circuit const &c)
{
  std::ostringstream os;
  os << ".lines " << c.lines << '\n';
  if (c.ancilla)
    os << ".ancilla " << *c.ancilla << '\n';
  for (auto const &g : c.gates) {
    switch (g.kind) {
    case GateKind::toffoli: os << 't'; break;
    case GateKind::v: os << 'v'; break;
    case GateKind::v_dagger: os << "v+"; break;
    }
    for (unsigned line = 1; line <= c.lines; ++line) {
      if ((g.positive & line_bit(line)) != 0)
        os << " x" << line;
      else if ((g.negative & line_bit(line)) != 0)
        os << " -x" << line;
    }
    os << " x" << g.target << '\n';
  }
  return os.str();
}

} // namespace revpal
