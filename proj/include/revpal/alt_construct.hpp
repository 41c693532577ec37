#pragma once

#include "revpal/circuit.hpp"
#include "revpal/gate_algebra.hpp"
#include "revpal/permutation.hpp"

namespace revpal
{

/// Splits an involution p with 2^(k-1) < size(p) < 2^k around a gate g of
/// size 2^k: pi_h keeps the size(p) largest transpositions of g, pi_r the
/// rest, so pi_h = pi_g o pi_r and p = sigma o pi_h o sigma^-1.
struct TargetDecomposition
{
  Permutation pi_h;
  MpmctGate pi_g;
  Permutation pi_r;
  Permutation sigma;
  unsigned k;
};

/// Gate with 2^k transpositions: target x_n, lines x_1..x_k free and
/// x_(k+1)..x_(n-1) positively controlled. Requires k < n.
MpmctGate canonical_spanning_gate(unsigned lines, unsigned k);

/// Throws std::domain_error unless p is an involution whose size is not a
/// power of two.
TargetDecomposition decompose(Permutation const &p);

/// Palindromic circuit on n + 1 lines (ancilla = x_(n+1)):
///
///   R . A . CNOT(x_(n+1) -> x_i) . reverse(A) . reverse(R)
///
/// where R realizes sigma^-1 and A = pi_g then one Toffoli per transposition
/// of pi_r, all retargeted onto the ancilla and controlled only by data lines
/// other than x_i. A leaves the ancilla holding "pi_h fires", which the
/// middle CNOT copies onto the target line.
Circuit build_ancilla_circuit(Permutation const &p);

/// Palindromic circuit on n lines:
///
///   R . Vs . pi_g . reverse(Vs) . reverse(R)
///
/// with one V gate per transposition t(a b) of pi_r, targeting x_i and
/// controlled by the shared bits of a and b. Inputs in pi_r see V X V, which
/// adds 4 = 0 (mod 4) to the target. The V gates share a target and have
/// classical controls, so their order is free.
Circuit build_v_circuit(Permutation const &p);

} // namespace revpal
