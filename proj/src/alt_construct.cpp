#include "revpal/alt_construct.hpp"

#include <bit>
#include <stdexcept>

#include "revpal/palindrome.hpp"

namespace revpal
{

MpmctGate canonical_spanning_gate(unsigned lines, unsigned k)
{
  if (k < 1 || k >= lines)
    throw std::invalid_argument("spanning gate needs 1 <= k < n");
  LineMask const free = (LineMask{1} << k) - 1;
  LineMask const controls = (line_bit(lines) - 1) & ~free;
  return MpmctGate(lines, lines, controls, 0);
}

TargetDecomposition decompose(Permutation const &p)
{
  auto const c = classify(p);
  if (c.kind != InvolutionKind::outside_In)
    throw std::domain_error("decompose needs an involution whose size is not "
                            "a power of two");

  unsigned const k = static_cast<unsigned>(std::bit_width(c.size - 1));
  auto const gate = canonical_spanning_gate(c.lines, k);
  auto const gate_trans = gate_to_transpositions(gate);

  auto const dropped = gate_trans.size() - c.size;
  TranspositionSet const kept(gate_trans.begin() + static_cast<long>(dropped),
                              gate_trans.end());
  auto pi_h = Permutation::from_transpositions(kept, p.degree());
  auto pi_r = compose(gate_permutation(gate), pi_h);
  auto sigma = find_conjugator(p, pi_h);
  return {std::move(pi_h), gate, std::move(pi_r), std::move(sigma), k};
}

namespace
{

// Gate controlled by every line of `lines` except the target, with the
// polarities read off x.
CircuitGate pinned(GateKind kind, unsigned target, unsigned lines,
                   LineMask free_target, Point x)
{
  LineMask const others = ((LineMask{1} << lines) - 1) & ~free_target;
  return {kind, target, others & x, others & ~x};
}

std::vector<CircuitGate> conjugator_prefix(Permutation const &sigma)
{
  return reversed(synthesize_permutation(sigma).gates);
}

} // namespace

Circuit build_ancilla_circuit(Permutation const &p)
{
  auto const d = decompose(p);
  unsigned const n = d.pi_g.lines;
  unsigned const ancilla = n + 1;
  LineMask const target_bit = line_bit(d.pi_g.target);

  std::vector<CircuitGate> block{
    CircuitGate::toffoli(ancilla, d.pi_g.positive, d.pi_g.negative)};
  for (auto const &t : trans(d.pi_r))
    block.push_back(pinned(GateKind::toffoli, ancilla, n, target_bit, t.a));

  auto const r = conjugator_prefix(d.sigma);
  auto const cnot = CircuitGate::toffoli(d.pi_g.target, line_bit(ancilla));
  return Circuit(ancilla,
                 r + block + std::vector{cnot} + reversed(block) + reversed(r),
                 ancilla);
}

Circuit build_v_circuit(Permutation const &p)
{
  auto const d = decompose(p);
  unsigned const n = d.pi_g.lines;
  LineMask const target_bit = line_bit(d.pi_g.target);

  std::vector<CircuitGate> vs;
  for (auto const &t : trans(d.pi_r))
    vs.push_back(pinned(GateKind::v, d.pi_g.target, n, target_bit, t.a));

  auto const r = conjugator_prefix(d.sigma);
  return Circuit(n, r + vs + std::vector{CircuitGate::toffoli(d.pi_g)} +
                      reversed(vs) + reversed(r));
}

} // namespace revpal
