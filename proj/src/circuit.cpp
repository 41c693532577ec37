#include "revpal/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revpal
{

CircuitGate CircuitGate::toffoli(MpmctGate const &g)
{
  return {GateKind::toffoli, g.target, g.positive, g.negative};
}

CircuitGate CircuitGate::toffoli(unsigned target, LineMask positive,
                                 LineMask negative)
{
  return {GateKind::toffoli, target, positive, negative};
}

CircuitGate CircuitGate::v(unsigned target, LineMask positive,
                           LineMask negative)
{
  return {GateKind::v, target, positive, negative};
}

CircuitGate CircuitGate::v_dagger(unsigned target, LineMask positive,
                                  LineMask negative)
{
  return {GateKind::v_dagger, target, positive, negative};
}

Circuit::Circuit(unsigned n, std::vector<CircuitGate> g,
                 std::optional<unsigned> anc)
  : lines(n), gates(std::move(g)), ancilla(anc)
{
  validate();
}

bool Circuit::has_v_gates() const
{
  return std::any_of(gates.begin(), gates.end(), [](auto const &g) {
    return g.kind != GateKind::toffoli;
  });
}

void Circuit::validate() const
{
  if (lines < 1 || lines > max_lines)
    throw std::invalid_argument("circuit line count must be in 1.." +
                                std::to_string(max_lines));
  LineMask const all = (LineMask{1} << lines) - 1;
  if (ancilla && (*ancilla < 1 || *ancilla > lines))
    throw std::invalid_argument("ancilla line out of range");
  for (std::size_t j = 0; j < gates.size(); ++j) {
    auto const &g = gates[j];
    std::string const where = "gate " + std::to_string(j + 1) + ": ";
    if (g.target < 1 || g.target > lines)
      throw std::invalid_argument(where + "target line out of range");
    if ((g.controls() & ~all) != 0)
      throw std::invalid_argument(where + "control line out of range");
    if ((g.positive & g.negative) != 0)
      throw std::invalid_argument(where + "line controlled with both polarities");
    if ((g.controls() & line_bit(g.target)) != 0)
      throw std::invalid_argument(where + "target line listed among controls");
  }
}

bool is_palindromic(Circuit const &c)
{
  return std::equal(c.gates.begin(), c.gates.end(), c.gates.rbegin());
}

Parity parity(Circuit const &c)
{
  return c.gates.size() % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<CircuitGate> reversed(std::vector<CircuitGate> gates)
{
  std::reverse(gates.begin(), gates.end());
  return gates;
}

std::vector<CircuitGate> operator+(std::vector<CircuitGate> a,
                                   std::vector<CircuitGate> const &b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::ostream &operator<<(std::ostream &os, CircuitGate const &g)
{
  switch (g.kind) {
  case GateKind::toffoli: os << 'T'; break;
  case GateKind::v: os << 'V'; break;
  case GateKind::v_dagger: os << "V+"; break;
  }
  os << "({";
  bool first = true;
  for (unsigned line = 1; line <= max_lines; ++line) {
    if ((g.controls() & line_bit(line)) == 0)
      continue;
    os << (first ? "" : ", ") << ((g.negative & line_bit(line)) ? "~" : "")
       << 'x' << line;
    first = false;
  }
  return os << "}, x" << g.target << ')';
}

} // namespace revpal
