#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "revpal/bigcount.hpp"
#include "revpal/permutation.hpp"

namespace revpal
{

/// Bit mask over circuit lines; line x_i is bit 2^(i-1).
using LineMask = std::uint32_t;

inline constexpr unsigned max_lines = 16;

constexpr LineMask line_bit(unsigned line) { return LineMask{1} << (line - 1); }

/// Mixed-polarity multiple-controlled Toffoli gate T(C, t).
///
/// Controls are two disjoint masks: a line in `positive` must be 1 and a line
/// in `negative` must be 0 for the target to be inverted. Neither mask may
/// contain the target. No controls at all is a NOT gate.
struct MpmctGate
{
  unsigned lines = 1;
  unsigned target = 1;
  LineMask positive = 0;
  LineMask negative = 0;

  MpmctGate() = default;
  /// Throws std::invalid_argument if the invariants do not hold.
  MpmctGate(unsigned lines, unsigned target, LineMask positive = 0,
            LineMask negative = 0);

  LineMask controls() const { return positive | negative; }
  unsigned control_count() const;

  bool fires(std::uint32_t x) const
  {
    return (x & positive) == positive && (x & negative) == 0;
  }

  auto operator<=>(MpmctGate const &) const = default;
};

/// Single-target gate T_g(t) with an arbitrary control function.
///
/// `control_function[j]` is g evaluated at the assignment j of the non-target
/// lines, packed in ascending line order with the lowest line in the least
/// significant bit.
struct SingleTargetGate
{
  unsigned lines = 1;
  unsigned target = 1;
  std::vector<bool> control_function;

  SingleTargetGate(unsigned lines, unsigned target,
                   std::vector<bool> control_function);

  /// Index into control_function for the full assignment x.
  std::size_t control_index(std::uint32_t x) const;
};

/// Positions in which the endpoints of a transposition set differ.
struct SpanMask
{
  std::uint32_t bits = 0;

  unsigned popcount() const;
  bool operator==(SpanMask const &) const = default;
};

/// H_n: transpositions whose endpoints have Hamming distance 1.
TranspositionSet hn(unsigned n);

/// H_{n,i}: transpositions t(a b) with a xor b = 2^(i-1).
TranspositionSet hni(unsigned n, unsigned i);

TranspositionSet gate_to_transpositions(MpmctGate const &g);
TranspositionSet gate_to_transpositions(SingleTargetGate const &g);

Permutation gate_permutation(MpmctGate const &g);
Permutation stg_to_permutation(SingleTargetGate const &g);

/// Bitwise OR of (v xor v0) over all endpoints v. Throws on an empty set.
SpanMask span(TranspositionSet const &ts);

/// The unique MPMCT gate whose transposition set is `ts`, if there is one.
///
/// A set of 2^(k-1) disjoint transpositions from a single H_{n,i} whose
/// endpoints span exactly k bit positions fills a k-dimensional subcube,
/// which is precisely the set of assignments an MPMCT gate with n-k controls
/// swaps. The single-H_{n,i} check is required: t(2 3) t(4 5) has the right
/// count but spans three positions.
std::optional<MpmctGate> recognize_mpmct(TranspositionSet const &ts, unsigned n);

/// All n * 3^(n-1) MPMCT gates, ordered by target and then by the base-3
/// digits (none, positive, negative) of the other lines.
std::vector<MpmctGate> enumerate_gates(unsigned n);

/// Gates acting on line i.
std::vector<MpmctGate> g_n_i(unsigned n, unsigned i);
/// Gates with n-k controls.
std::vector<MpmctGate> g_n_k(unsigned n, unsigned k);
std::vector<MpmctGate> g_n_i_k(unsigned n, unsigned i, unsigned k);

/// Number of distinct functions realized by one single-target gate,
/// n (2^(2^(n-1)) - 1) + 1.
BigCount num_stg_functions(unsigned n);

std::ostream &operator<<(std::ostream &os, MpmctGate const &g);

} // namespace revpal
