#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "revpal/gate_algebra.hpp"

namespace revpal
{

enum class GateKind
{
  toffoli,
  v,
  v_dagger,
};

/// One gate of a circuit: a Toffoli-family or V-family gate with a target and
/// polarity-tagged controls. Structural equality is the mirror relation used by
/// palindrome checks.
struct CircuitGate
{
  GateKind kind = GateKind::toffoli;
  unsigned target = 1;
  LineMask positive = 0;
  LineMask negative = 0;

  static CircuitGate toffoli(MpmctGate const &g);
  static CircuitGate toffoli(unsigned target, LineMask positive = 0,
                             LineMask negative = 0);
  static CircuitGate v(unsigned target, LineMask positive = 0,
                       LineMask negative = 0);
  static CircuitGate v_dagger(unsigned target, LineMask positive = 0,
                              LineMask negative = 0);

  LineMask controls() const { return positive | negative; }
  bool fires(std::uint32_t x) const
  {
    return (x & positive) == positive && (x & negative) == 0;
  }

  auto operator<=>(CircuitGate const &) const = default;
};

enum class Parity
{
  even,
  odd,
};

/// Ordered gate list over `lines` lines, applied first to last. `ancilla`
/// optionally marks one line as zero-initialized.
struct Circuit
{
  unsigned lines = 1;
  std::vector<CircuitGate> gates;
  std::optional<unsigned> ancilla;

  Circuit() = default;
  explicit Circuit(unsigned lines, std::vector<CircuitGate> gates = {},
                   std::optional<unsigned> ancilla = std::nullopt);

  std::size_t size() const { return gates.size(); }
  bool has_v_gates() const;

  /// Throws std::invalid_argument on out-of-range lines, a target among its
  /// controls, or a line controlled with both polarities.
  void validate() const;

  bool operator==(Circuit const &) const = default;
};

bool is_palindromic(Circuit const &c);
Parity parity(Circuit const &c);

std::vector<CircuitGate> reversed(std::vector<CircuitGate> gates);

/// Concatenation a followed by b.
std::vector<CircuitGate> operator+(std::vector<CircuitGate> a,
                                   std::vector<CircuitGate> const &b);

std::ostream &operator<<(std::ostream &os, CircuitGate const &g);

} // namespace revpal
