#pragma once

// Seeded random generators shared by the property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "revpal/circuit.hpp"
#include "revpal/gate_algebra.hpp"
#include "revpal/permutation.hpp"

namespace revpal::testing
{

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 0x5eed'2026'1014ULL;

inline unsigned uniform(Rng &rng, unsigned lo, unsigned hi)
{
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline Permutation random_permutation(Rng &rng, std::size_t degree)
{
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

/// Random involution with exactly `size` transpositions.
inline Permutation random_involution(Rng &rng, std::size_t degree,
                                     std::size_t size)
{
  std::vector<Point> points(degree);
  std::iota(points.begin(), points.end(), Point{0});
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<std::vector<Point>> cycles;
  for (std::size_t j = 0; j < size; ++j)
    cycles.push_back({points[2 * j], points[2 * j + 1]});
  return Permutation::from_cycles(cycles, degree);
}

inline MpmctGate random_gate(Rng &rng, unsigned lines)
{
  unsigned const target = uniform(rng, 1, lines);
  LineMask pos = 0, neg = 0;
  for (unsigned line = 1; line <= lines; ++line) {
    if (line == target)
      continue;
    switch (uniform(rng, 0, 2)) {
    case 1: pos |= line_bit(line); break;
    case 2: neg |= line_bit(line); break;
    default: break;
    }
  }
  return MpmctGate(lines, target, pos, neg);
}

inline std::vector<CircuitGate> random_toffolis(Rng &rng, unsigned lines,
                                                std::size_t count)
{
  std::vector<CircuitGate> gates;
  for (std::size_t j = 0; j < count; ++j)
    gates.push_back(CircuitGate::toffoli(random_gate(rng, lines)));
  return gates;
}

} // namespace revpal::testing
