#include "revpal/simulator.hpp"

#include <bit>
#include <optional>
#include <variant>

namespace revpal
{

namespace
{

void check_input(Circuit const &c, ClassicalState x)
{
  if (c.lines < 32 && (x >> c.lines) != 0)
    throw std::invalid_argument("input has bits beyond the circuit lines");
}

std::uint8_t increment(GateKind kind)
{
  switch (kind) {
  case GateKind::toffoli: return 2;
  case GateKind::v: return 1;
  case GateKind::v_dagger: return 3;
  }
  return 0;
}

std::string bits(std::uint32_t x, unsigned width)
{
  std::string s;
  for (unsigned line = width; line >= 1; --line)
    s += (x & line_bit(line)) ? '1' : '0';
  return s;
}

std::optional<unsigned> lines_of_degree(std::size_t degree)
{
  if (!std::has_single_bit(degree) || degree < 2)
    return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(degree));
}

// Runs c on x and returns its classical output, or a diagnostic.
std::variant<ClassicalState, std::string> run(Circuit const &c,
                                               ClassicalState x, bool semi)
{
  try {
    if (!semi)
      return simulate_classical(c, x);
    return classical_readout(simulate_semiclassical(c, x));
  } catch (NonClassicalError const &e) {
    return std::string("input ") + bits(x, c.lines) + ": " + e.what();
  }
}

} // namespace

SemiState SemiState::from_classical(ClassicalState x, unsigned lines)
{
  SemiState s;
  s.cells.resize(lines);
  for (unsigned line = 1; line <= lines; ++line)
    s.cells[line - 1] = (x & line_bit(line)) ? 2 : 0;
  return s;
}

bool SemiState::is_classical() const
{
  for (auto cell : cells)
    if (cell % 2 != 0)
      return false;
  return true;
}

ClassicalState simulate_classical(Circuit const &c, ClassicalState x)
{
  check_input(c, x);
  for (auto const &g : c.gates) {
    if (g.kind != GateKind::toffoli)
      throw std::invalid_argument("classical simulation cannot run V gates");
    if (g.fires(x))
      x ^= line_bit(g.target);
  }
  return x;
}

Permutation truth_table(Circuit const &c)
{
  std::vector<Point> image(std::size_t{1} << c.lines);
  for (Point x = 0; x < image.size(); ++x)
    image[x] = simulate_classical(c, x);
  return Permutation(std::move(image));
}

SemiState simulate_semiclassical(Circuit const &c, ClassicalState x)
{
  check_input(c, x);
  auto state = SemiState::from_classical(x, c.lines);
  for (std::size_t j = 0; j < c.gates.size(); ++j) {
    auto const &g = c.gates[j];
    bool fires = true;
    for (unsigned line = 1; line <= c.lines; ++line) {
      if ((g.controls() & line_bit(line)) == 0)
        continue;
      auto cell = state.cells[line - 1];
      if (cell % 2 != 0)
        throw NonClassicalError("gate " + std::to_string(j + 1) +
                                " reads non-classical control x" +
                                std::to_string(line));
      bool const one = cell == 2;
      bool const wanted = (g.positive & line_bit(line)) != 0;
      fires = fires && one == wanted;
    }
    if (fires) {
      auto &cell = state.cells[g.target - 1];
      cell = static_cast<std::uint8_t>((cell + increment(g.kind)) % 4);
    }
  }
  return state;
}

ClassicalState classical_readout(SemiState const &s)
{
  ClassicalState x = 0;
  for (unsigned line = 1; line <= s.cells.size(); ++line) {
    auto cell = s.cells[line - 1];
    if (cell % 2 != 0)
      throw NonClassicalError("line x" + std::to_string(line) +
                              " is not classical at readout");
    if (cell == 2)
      x |= line_bit(line);
  }
  return x;
}

Verification equivalent(Circuit const &c, Permutation const &p)
{
  auto const n = lines_of_degree(p.degree());
  if (!n || *n != c.lines)
    return {false, "circuit has " + std::to_string(c.lines) +
                     " lines but permutation degree is " +
                     std::to_string(p.degree())};
  bool const semi = c.has_v_gates();
  for (Point x = 0; x < p.degree(); ++x) {
    auto out = run(c, x, semi);
    if (auto const *why = std::get_if<std::string>(&out))
      return {false, *why};
    auto y = std::get<ClassicalState>(out);
    if (y != p(x))
      return {false, "input " + bits(x, c.lines) + " gives " +
                       bits(y, c.lines) + ", expected " +
                       bits(p(x), c.lines)};
  }
  return {true, {}};
}

Verification equivalent_with_ancilla(Circuit const &c, Permutation const &p,
                                     unsigned ancilla)
{
  auto const n = lines_of_degree(p.degree());
  if (!n || *n + 1 != c.lines)
    return {false, "circuit has " + std::to_string(c.lines) +
                     " lines but permutation needs " +
                     std::to_string(n ? *n + 1 : 0) + " with the ancilla"};
  if (ancilla < 1 || ancilla > c.lines)
    return {false, "ancilla line out of range"};

  LineMask const low = line_bit(ancilla) - 1;
  auto expand = [&](std::uint32_t data) {
    return (data & low) | ((data & ~low) << 1);
  };
  auto compress = [&](std::uint32_t x) {
    return (x & low) | ((x >> 1) & ~low);
  };

  bool const semi = c.has_v_gates();
  for (Point x = 0; x < p.degree(); ++x) {
    auto out = run(c, expand(x), semi);
    if (auto const *why = std::get_if<std::string>(&out))
      return {false, *why};
    auto y = std::get<ClassicalState>(out);
    if ((y & line_bit(ancilla)) != 0)
      return {false, "input " + bits(expand(x), c.lines) +
                       " leaves ancilla x" + std::to_string(ancilla) + " at 1"};
    if (compress(y) != p(x))
      return {false, "input " + bits(expand(x), c.lines) + " gives " +
                       bits(y, c.lines) + ", expected data " +
                       bits(p(x), *n)};
  }
  return {true, {}};
}

} // namespace revpal
