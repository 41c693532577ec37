#pragma once

#include <optional>
#include <string>

#include "revpal/circuit.hpp"
#include "revpal/gate_algebra.hpp"
#include "revpal/permutation.hpp"

namespace revpal
{

enum class InvolutionKind
{
  not_involution,
  identity,
  in_In,
  outside_In,
};

/// Where a permutation of degree 2^n sits relative to the involution sets
/// I_n^k (involutions with 2^(k-1) transpositions, 1 <= k <= n).
struct Classification
{
  InvolutionKind kind = InvolutionKind::not_involution;
  unsigned lines = 1;
  /// Number of transpositions; zero unless the input is an involution.
  std::size_t size = 0;
  /// Set only for in_In, with size == 2^(k-1).
  unsigned k = 0;
};

/// Throws std::invalid_argument unless the degree is 2^n for n >= 1.
Classification classify(Permutation const &p);

unsigned lines_for_degree(std::size_t degree);

std::string describe(Classification const &c);

/// Fully controlled Toffoli realizing t(u w) for u, w at Hamming distance 1.
MpmctGate adjacent_transposition_gate(Point u, Point w, unsigned lines);

/// Exact Toffoli realization of any permutation of degree 2^n.
///
/// Each cycle (i_1 ... i_m) is emitted as t(i_1 i_2), ..., t(i_1 i_m) in that
/// order. A transposition t(a b) is conjugated down to one Hamming step along
/// the path that flips the differing bits from the lowest line upward, giving
/// 2 d - 1 fully controlled gates for distance d.
Circuit synthesize_permutation(Permutation const &sigma);

/// Class-k gate with target x_1, lines x_2..x_k free and x_(k+1)..x_n
/// positively controlled.
MpmctGate canonical_middle_gate(unsigned lines, unsigned k);

struct PalindromeBuild
{
  Circuit circuit;
  /// Absent for the identity, whose realization is the empty (even) circuit.
  std::optional<MpmctGate> middle;
  /// sigma with p = sigma o perm(middle) o sigma^-1.
  Permutation conjugator;

  bool odd_guarantee() const { return middle.has_value(); }
};

/// Odd palindromic circuit R . g . reverse(R) realizing p in I_n, where R
/// realizes sigma^-1. When p is itself an MPMCT gate it is used as the middle
/// gate directly; otherwise the canonical class-k gate is used.
///
/// Throws std::domain_error for non-involutions and for involutions whose
/// size is not a power of two.
PalindromeBuild build_palindrome(Permutation const &p);

} // namespace revpal
