#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "revpal/circuit.hpp"
#include "revpal/permutation.hpp"

namespace revpal
{

/// Classical assignment; bit i-1 holds line x_i.
using ClassicalState = std::uint32_t;

/// Raised when the mod-4 model leaves its sound region: a control or final
/// readout sees a line in a V-superposed value.
class NonClassicalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Per-line values in Z_4: 0 = |0>, 1 = V|0>, 2 = |1>, 3 = V|1>.
/// NOT adds 2, V adds 1 and V-dagger adds 3 to the target cell.
struct SemiState
{
  std::vector<std::uint8_t> cells;

  static SemiState from_classical(ClassicalState x, unsigned lines);

  bool is_classical() const;
  bool operator==(SemiState const &) const = default;
};

/// Throws std::invalid_argument if the circuit contains V or V-dagger gates
/// or x has bits beyond the circuit's lines.
ClassicalState simulate_classical(Circuit const &c, ClassicalState x);

/// Collects all 2^lines outputs of a Toffoli-only circuit.
Permutation truth_table(Circuit const &c);

/// Throws NonClassicalError when a control line is not in {0, 2}.
SemiState simulate_semiclassical(Circuit const &c, ClassicalState x);

/// Throws NonClassicalError unless every cell is in {0, 2}.
ClassicalState classical_readout(SemiState const &s);

struct Verification
{
  bool equivalent = false;
  std::string diagnostic;

  explicit operator bool() const { return equivalent; }
};

/// Checks c(x) == p(x) for all x, simulating semi-classically when c has V
/// gates. Requires c.lines == log2(degree(p)).
Verification equivalent(Circuit const &c, Permutation const &p);

/// Checks that for every input with the ancilla line at 0 the data lines map
/// per p and the ancilla returns to 0. Data lines are the remaining lines in
/// ascending order. Inputs with the ancilla set are not constrained.
Verification equivalent_with_ancilla(Circuit const &c, Permutation const &p,
                                     unsigned ancilla);

} // namespace revpal
