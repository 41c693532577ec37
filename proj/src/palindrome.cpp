#include "revpal/palindrome.hpp"

#include <bit>
#include <stdexcept>

namespace revpal
{

unsigned lines_for_degree(std::size_t degree)
{
  if (degree < 2 || !std::has_single_bit(degree))
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " is not 2^n for n >= 1");
  return static_cast<unsigned>(std::countr_zero(degree));
}

Classification classify(Permutation const &p)
{
  Classification c;
  c.lines = lines_for_degree(p.degree());
  if (!is_involution(p)) {
    c.kind = InvolutionKind::not_involution;
    return c;
  }
  c.size = involution_size(p);
  if (c.size == 0) {
    c.kind = InvolutionKind::identity;
  } else if (std::has_single_bit(c.size)) {
    c.kind = InvolutionKind::in_In;
    c.k = static_cast<unsigned>(std::countr_zero(c.size)) + 1;
  } else {
    c.kind = InvolutionKind::outside_In;
  }
  return c;
}

std::string describe(Classification const &c)
{
  auto const n = std::to_string(c.lines);
  switch (c.kind) {
  case InvolutionKind::not_involution:
    return "not an involution";
  case InvolutionKind::identity:
    return "identity, size 0, not in I_" + n + " - empty (even) palindrome";
  case InvolutionKind::in_In:
    return "involution, size " + std::to_string(c.size) + ", in I_" + n + "^" +
           std::to_string(c.k) + " - odd palindromic circuit exists";
  case InvolutionKind::outside_In:
    return "involution, size " + std::to_string(c.size) + ", not in I_" + n +
           " - alternative construction required";
  }
  return {};
}

MpmctGate adjacent_transposition_gate(Point u, Point w, unsigned lines)
{
  auto const d = u ^ w;
  if (!std::has_single_bit(d))
    throw std::invalid_argument("endpoints are not at Hamming distance 1");
  unsigned const target = static_cast<unsigned>(std::countr_zero(d)) + 1;
  LineMask const others = ((LineMask{1} << lines) - 1) & ~d;
  return MpmctGate(lines, target, others & u, others & ~u);
}

namespace
{

std::vector<CircuitGate> transposition_chain(Point a, Point b, unsigned lines)
{
  std::vector<Point> path{a};
  for (unsigned line = 1; line <= lines; ++line)
    if (((a ^ b) & line_bit(line)) != 0)
      path.push_back(path.back() ^ line_bit(line));

  std::vector<CircuitGate> walk;
  for (std::size_t j = 0; j + 2 < path.size(); ++j)
    walk.push_back(CircuitGate::toffoli(
      adjacent_transposition_gate(path[j], path[j + 1], lines)));
  auto const last = path.size() - 1;
  auto middle = CircuitGate::toffoli(
    adjacent_transposition_gate(path[last - 1], path[last], lines));
  return walk + std::vector{middle} + reversed(walk);
}

} // namespace

Circuit synthesize_permutation(Permutation const &sigma)
{
  unsigned const n = lines_for_degree(sigma.degree());
  std::vector<CircuitGate> gates;
  for (auto const &cycle : to_cycles(sigma).cycles)
    for (std::size_t j = 1; j < cycle.size(); ++j)
      gates = gates + transposition_chain(cycle.front(), cycle[j], n);
  return Circuit(n, std::move(gates));
}

MpmctGate canonical_middle_gate(unsigned lines, unsigned k)
{
  if (k < 1 || k > lines)
    throw std::invalid_argument("class k must be in 1..n");
  LineMask const all = (LineMask{1} << lines) - 1;
  LineMask const low = (LineMask{1} << k) - 1;
  return MpmctGate(lines, 1, all & ~low, 0);
}

PalindromeBuild build_palindrome(Permutation const &p)
{
  auto const c = classify(p);
  switch (c.kind) {
  case InvolutionKind::not_involution:
    throw std::domain_error("only involutions have palindromic circuits");
  case InvolutionKind::outside_In:
    throw std::domain_error("involution of size " + std::to_string(c.size) +
                            " is not in I_n; use an alternative construction");
  case InvolutionKind::identity:
    return {Circuit(c.lines), std::nullopt, p};
  case InvolutionKind::in_In:
    break;
  }

  auto const middle =
    recognize_mpmct(trans(p), c.lines).value_or(canonical_middle_gate(c.lines, c.k));
  auto const sigma = find_conjugator(p, gate_permutation(middle));
  // Gates apply left to right, so reverse(synth(sigma)) realizes sigma^-1.
  auto const s = synthesize_permutation(sigma).gates;
  Circuit circuit(c.lines,
                  reversed(s) + std::vector{CircuitGate::toffoli(middle)} + s);
  return {std::move(circuit), middle, sigma};
}

} // namespace revpal
