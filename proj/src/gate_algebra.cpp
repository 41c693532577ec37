#include "revpal/gate_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace revpal
{

namespace
{

void check_lines(unsigned n)
{
  if (n < 1 || n > max_lines)
    throw std::invalid_argument("line count must be in 1.." +
                                std::to_string(max_lines));
}

void check_line(unsigned n, unsigned i)
{
  check_lines(n);
  if (i < 1 || i > n)
    throw std::invalid_argument("line index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
}

LineMask all_lines(unsigned n) { return (LineMask{1} << n) - 1; }

} // namespace

MpmctGate::MpmctGate(unsigned n, unsigned t, LineMask pos, LineMask neg)
  : lines(n), target(t), positive(pos), negative(neg)
{
  check_line(n, t);
  if ((pos & neg) != 0)
    throw std::invalid_argument("line controlled with both polarities");
  if (((pos | neg) & ~all_lines(n)) != 0)
    throw std::invalid_argument("control line out of range");
  if (((pos | neg) & line_bit(t)) != 0)
    throw std::invalid_argument("target line listed among controls");
}

unsigned MpmctGate::control_count() const
{
  return static_cast<unsigned>(std::popcount(controls()));
}

SingleTargetGate::SingleTargetGate(unsigned n, unsigned t,
                                   std::vector<bool> g)
  : lines(n), target(t), control_function(std::move(g))
{
  check_line(n, t);
  if (control_function.size() != (std::size_t{1} << (n - 1)))
    throw std::invalid_argument("control function must have 2^(n-1) entries");
}

std::size_t SingleTargetGate::control_index(std::uint32_t x) const
{
  std::uint32_t low = line_bit(target) - 1;
  return (x & low) | ((x >> 1) & ~low);
}

unsigned SpanMask::popcount() const
{
  return static_cast<unsigned>(std::popcount(bits));
}

TranspositionSet hni(unsigned n, unsigned i)
{
  check_line(n, i);
  TranspositionSet ts;
  std::uint32_t const d = line_bit(i);
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a)
    if ((a & d) == 0)
      ts.emplace_back(a, a | d);
  return ts;
}

TranspositionSet hn(unsigned n)
{
  check_lines(n);
  TranspositionSet ts;
  for (unsigned i = 1; i <= n; ++i) {
    auto part = hni(n, i);
    ts.insert(ts.end(), part.begin(), part.end());
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

TranspositionSet gate_to_transpositions(MpmctGate const &g)
{
  TranspositionSet ts;
  std::uint32_t const d = line_bit(g.target);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << g.lines); ++x)
    if ((x & d) == 0 && g.fires(x))
      ts.emplace_back(x, x | d);
  return ts;
}

TranspositionSet gate_to_transpositions(SingleTargetGate const &g)
{
  TranspositionSet ts;
  std::uint32_t const d = line_bit(g.target);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << g.lines); ++x)
    if ((x & d) == 0 && g.control_function[g.control_index(x)])
      ts.emplace_back(x, x | d);
  return ts;
}

Permutation gate_permutation(MpmctGate const &g)
{
  std::vector<Point> image(std::size_t{1} << g.lines);
  for (Point x = 0; x < image.size(); ++x)
    image[x] = g.fires(x) ? x ^ line_bit(g.target) : x;
  return Permutation(std::move(image));
}

Permutation stg_to_permutation(SingleTargetGate const &g)
{
  std::vector<Point> image(std::size_t{1} << g.lines);
  for (Point x = 0; x < image.size(); ++x)
    image[x] = g.control_function[g.control_index(x)]
                 ? x ^ line_bit(g.target)
                 : x;
  return Permutation(std::move(image));
}

SpanMask span(TranspositionSet const &ts)
{
  if (ts.empty())
    throw std::invalid_argument("span of an empty transposition set");
  Point const v0 = ts.front().a;
  SpanMask mask;
  for (auto const &t : ts)
    mask.bits |= (t.a ^ v0) | (t.b ^ v0);
  return mask;
}

std::optional<MpmctGate> recognize_mpmct(TranspositionSet const &ts, unsigned n)
{
  check_lines(n);
  if (ts.empty())
    return std::nullopt;

  std::uint32_t const d = ts.front().a ^ ts.front().b;
  if (!std::has_single_bit(d) || d >= (std::uint32_t{1} << n))
    return std::nullopt;
  for (auto const &t : ts)
    if ((t.a ^ t.b) != d || t.b >= (std::uint32_t{1} << n))
      return std::nullopt;

  if (!std::has_single_bit(ts.size()))
    return std::nullopt;
  unsigned const k = static_cast<unsigned>(std::countr_zero(ts.size())) + 1;
  if (k > n)
    return std::nullopt;

  SpanMask const s = span(ts);
  if (s.popcount() != k)
    return std::nullopt;

  unsigned const target = static_cast<unsigned>(std::countr_zero(d)) + 1;
  LineMask const fixed = all_lines(n) & ~s.bits;
  LineMask const v0 = ts.front().a;
  MpmctGate gate(n, target, fixed & v0, fixed & ~v0);

  auto sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  if (gate_to_transpositions(gate) != sorted)
    return std::nullopt;
  return gate;
}

std::vector<MpmctGate> enumerate_gates(unsigned n)
{
  check_lines(n);
  std::vector<MpmctGate> gates;
  for (unsigned t = 1; t <= n; ++t) {
    std::uint64_t combos = 1;
    for (unsigned j = 1; j < n; ++j)
      combos *= 3;
    for (std::uint64_t code = 0; code < combos; ++code) {
      LineMask pos = 0, neg = 0;
      std::uint64_t rest = code;
      for (unsigned line = 1; line <= n; ++line) {
        if (line == t)
          continue;
        switch (rest % 3) {
        case 1: pos |= line_bit(line); break;
        case 2: neg |= line_bit(line); break;
        default: break;
        }
        rest /= 3;
      }
      gates.emplace_back(n, t, pos, neg);
    }
  }
  return gates;
}

std::vector<MpmctGate> g_n_i(unsigned n, unsigned i)
{
  check_line(n, i);
  std::vector<MpmctGate> out;
  for (auto const &g : enumerate_gates(n))
    if (g.target == i)
      out.push_back(g);
  return out;
}

std::vector<MpmctGate> g_n_k(unsigned n, unsigned k)
{
  check_line(n, k);
  std::vector<MpmctGate> out;
  for (auto const &g : enumerate_gates(n))
    if (g.control_count() == n - k)
      out.push_back(g);
  return out;
}

std::vector<MpmctGate> g_n_i_k(unsigned n, unsigned i, unsigned k)
{
  check_line(n, i);
  check_line(n, k);
  std::vector<MpmctGate> out;
  for (auto const &g : g_n_i(n, i))
    if (g.control_count() == n - k)
      out.push_back(g);
  return out;
}

BigCount num_stg_functions(unsigned n)
{
  check_lines(n);
  BigCount functions = BigCount{1} << (std::size_t{1} << (n - 1));
  return BigCount{n} * (functions - 1) + 1;
}

std::ostream &operator<<(std::ostream &os, MpmctGate const &g)
{
  os << "T({";
  bool first = true;
  for (unsigned line = 1; line <= g.lines; ++line) {
    if ((g.controls() & line_bit(line)) == 0)
      continue;
    os << (first ? "" : ", ") << ((g.negative & line_bit(line)) ? "~" : "")
       << 'x' << line;
    first = false;
  }
  return os << "}, x" << g.target << ')';
}

} // namespace revpal
