#include <bit>
#include <cmath>
#include <set>

#include "gtest/gtest.h"

#include "generators.hpp"
#include "revpal/gate_algebra.hpp"

using namespace revpal;

namespace
{

// All subsets of `pool` with the given size.
std::vector<TranspositionSet> subsets_of_size(TranspositionSet const &pool,
                                              std::size_t size)
{
  std::vector<TranspositionSet> out;
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size)
      continue;
    TranspositionSet s;
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (mask & (1u << j))
        s.push_back(pool[j]);
    out.push_back(std::move(s));
  }
  return out;
}

// Truth table of an MPMCT gate evaluated literal by literal.
Permutation gate_oracle(unsigned n, unsigned target,
                        std::vector<std::pair<unsigned, bool>> literals)
{
  std::vector<Point> image(1u << n);
  for (Point x = 0; x < image.size(); ++x) {
    bool fire = true;
    for (auto [line, positive] : literals)
      fire = fire && (((x >> (line - 1)) & 1) == (positive ? 1u : 0u));
    image[x] = fire ? x ^ (1u << (target - 1)) : x;
  }
  return Permutation(image);
}

} // namespace

TEST(GateAlgebraTest, HammingOneSets)
{
  EXPECT_EQ(hni(3, 1), (TranspositionSet{{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  EXPECT_EQ(hni(3, 2), (TranspositionSet{{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
  EXPECT_EQ(hni(3, 3), (TranspositionSet{{0, 4}, {1, 5}, {2, 6}, {3, 7}}));
  EXPECT_EQ(hn(4).size(), 32u);
  EXPECT_THROW(hni(3, 0), std::invalid_argument);
  EXPECT_THROW(hni(3, 4), std::invalid_argument);
}

TEST(GateAlgebraTest, HnIsDisjointUnionOfHni)
{
  for (unsigned n = 1; n <= 5; ++n) {
    std::set<Transposition> all;
    std::size_t total = 0;
    for (unsigned i = 1; i <= n; ++i) {
      auto const part = hni(n, i);
      EXPECT_EQ(part.size(), 1u << (n - 1));
      for (auto const &t : part)
        EXPECT_EQ(t.a ^ t.b, 1u << (i - 1));
      total += part.size();
      all.insert(part.begin(), part.end());
    }
    EXPECT_EQ(all.size(), total);
    EXPECT_EQ(hn(n), TranspositionSet(all.begin(), all.end()));
    EXPECT_EQ(hn(n).size(), n << (n - 1));
  }
}

TEST(GateAlgebraTest, GateToTranspositions)
{
  MpmctGate const not3(3, 3);
  EXPECT_EQ(gate_to_transpositions(not3),
            (TranspositionSet{{0, 4}, {1, 5}, {2, 6}, {3, 7}}));

  MpmctGate const r(3, 3, 0, line_bit(1) | line_bit(2));
  EXPECT_EQ(gate_to_transpositions(r), (TranspositionSet{{0, 4}}));

  SingleTargetGate const never(3, 2, std::vector<bool>(4, false));
  EXPECT_TRUE(gate_to_transpositions(never).empty());
  EXPECT_TRUE(stg_to_permutation(never).is_identity());
}

TEST(GateAlgebraTest, RejectsMalformedGates)
{
  EXPECT_THROW(MpmctGate(3, 2, line_bit(2)), std::invalid_argument);
  EXPECT_THROW(MpmctGate(3, 1, line_bit(2), line_bit(2)), std::invalid_argument);
  EXPECT_THROW(MpmctGate(3, 4), std::invalid_argument);
  EXPECT_THROW(MpmctGate(3, 1, line_bit(4)), std::invalid_argument);
  EXPECT_THROW(SingleTargetGate(3, 1, std::vector<bool>(3)),
               std::invalid_argument);
}

TEST(GateAlgebraTest, SpanOfWorkedExamples)
{
  auto const a = span({{4, 5}, {6, 7}});
  EXPECT_EQ(a.bits, 0b011u);
  EXPECT_EQ(a.popcount(), 2u);
  auto const b = span({{2, 3}, {4, 5}});
  EXPECT_EQ(b.bits, 0b111u);
  EXPECT_EQ(b.popcount(), 3u);
  auto const c = span({{0, 4}});
  EXPECT_EQ(c.bits, 0b100u);
  EXPECT_EQ(c.popcount(), 1u);
  EXPECT_THROW(span({}), std::invalid_argument);
}

TEST(GateAlgebraTest, RecognizesWorkedExamples)
{
  auto const g = recognize_mpmct({{4, 5}, {6, 7}}, 3);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, MpmctGate(3, 1, line_bit(3), 0));
  EXPECT_EQ(gate_permutation(*g), gate_oracle(3, 1, {{3, true}}));

  EXPECT_FALSE(recognize_mpmct({{2, 3}, {4, 5}}, 3).has_value());

  auto const n3 = recognize_mpmct({{0, 4}, {1, 5}, {2, 6}, {3, 7}}, 3);
  ASSERT_TRUE(n3.has_value());
  EXPECT_EQ(*n3, MpmctGate(3, 3));

  // Mixed lines, wrong cardinality, empty.
  EXPECT_FALSE(recognize_mpmct({{0, 1}, {0 + 4, 6}}, 3).has_value());
  EXPECT_FALSE(recognize_mpmct({{0, 1}, {2, 3}, {4, 5}}, 3).has_value());
  EXPECT_FALSE(recognize_mpmct({}, 3).has_value());
}

TEST(GateAlgebraTest, EnumerationCounts)
{
  EXPECT_EQ(enumerate_gates(1).size(), 1u);
  EXPECT_EQ(enumerate_gates(3).size(), 27u);
  EXPECT_EQ(enumerate_gates(4).size(), 108u);
  EXPECT_EQ(g_n_k(3, 3).size(), 3u);
  for (auto const &g : g_n_k(3, 3))
    EXPECT_EQ(g.controls(), 0u);

  auto binom = [](unsigned n, unsigned k) {
    unsigned r = 1;
    for (unsigned j = 1; j <= k; ++j)
      r = r * (n - k + j) / j;
    return r;
  };
  for (unsigned n = 1; n <= 5; ++n) {
    std::set<MpmctGate> distinct;
    for (auto const &g : enumerate_gates(n))
      distinct.insert(g);
    EXPECT_EQ(distinct.size(), enumerate_gates(n).size());
    for (unsigned i = 1; i <= n; ++i) {
      auto const line = g_n_i(n, i);
      EXPECT_EQ(line.size(), static_cast<std::size_t>(std::pow(3, n - 1)));
      auto const pool = hni(n, i);
      std::set<Transposition> const pool_set(pool.begin(), pool.end());
      for (auto const &g : line)
        for (auto const &t : gate_to_transpositions(g))
          EXPECT_TRUE(pool_set.count(t));
      for (unsigned k = 1; k <= n; ++k)
        EXPECT_EQ(g_n_i_k(n, i, k).size(), binom(n - 1, k - 1) << (n - k));
    }
  }
  EXPECT_THROW(g_n_i(3, 4), std::invalid_argument);
  EXPECT_THROW(g_n_k(3, 0), std::invalid_argument);
}

TEST(GateAlgebraTest, SingleTargetGates)
{
  // T_{x1 or x2}(x3): non-target assignment j = x1 + 2 x2.
  SingleTargetGate const g(3, 3, {false, true, true, true});
  std::vector<Point> image(8);
  for (Point x = 0; x < 8; ++x)
    image[x] = ((x & 1) || (x & 2)) ? x ^ 4 : x;
  EXPECT_EQ(stg_to_permutation(g), Permutation(image));
  EXPECT_EQ(stg_to_permutation(g),
            Permutation::from_cycles({{1, 5}, {2, 6}, {3, 7}}, 8));
  EXPECT_EQ(gate_to_transpositions(g),
            (TranspositionSet{{1, 5}, {2, 6}, {3, 7}}));

  // Target in the middle: non-target lines x1, x3 pack as x1 + 2 x3.
  SingleTargetGate const mid(3, 2, {false, false, true, false});
  EXPECT_EQ(stg_to_permutation(mid), Permutation::from_cycles({{4, 6}}, 8));

  EXPECT_EQ(num_stg_functions(1), 2);
  EXPECT_EQ(num_stg_functions(2), 7);
  EXPECT_EQ(num_stg_functions(3), 46);
}

TEST(GateAlgebraProperties, RoundTripEveryGate)
{
  for (unsigned n = 1; n <= 4; ++n) {
    for (auto const &g : enumerate_gates(n)) {
      auto const ts = gate_to_transpositions(g);
      auto const k = n - g.control_count();
      EXPECT_EQ(ts.size(), 1u << (k - 1));
      auto const back = recognize_mpmct(ts, n);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, g);

      auto const p = gate_permutation(g);
      EXPECT_TRUE(is_involution(p));
      EXPECT_EQ(involution_size(p), 1u << (k - 1));
      EXPECT_EQ(p, Permutation::from_transpositions(ts, p.degree()));
    }
  }
}

TEST(GateAlgebraProperties, RecognitionMatchesEnumerationOracle)
{
  for (unsigned n = 3; n <= 4; ++n) {
    std::set<TranspositionSet> gate_sets;
    for (auto const &g : enumerate_gates(n))
      gate_sets.insert(gate_to_transpositions(g));

    std::size_t accepted = 0;
    for (unsigned i = 1; i <= n; ++i) {
      auto const pool = hni(n, i);
      for (std::size_t size = 1; size <= pool.size(); size *= 2) {
        for (auto const &s : subsets_of_size(pool, size)) {
          bool const is_gate = gate_sets.count(s) > 0;
          auto const r = recognize_mpmct(s, n);
          EXPECT_EQ(r.has_value(), is_gate);
          if (r) {
            ++accepted;
            EXPECT_EQ(gate_to_transpositions(*r), s);
          }
        }
      }
    }
    EXPECT_EQ(accepted, gate_sets.size());
  }
}

TEST(GateAlgebraProperties, SubsetChain)
{
  for (unsigned n = 1; n <= 3; ++n) {
    std::set<Permutation> stg;
    std::size_t const width = std::size_t{1} << (n - 1);
    for (unsigned t = 1; t <= n; ++t)
      for (std::uint32_t code = 0; code < (1u << width); ++code) {
        std::vector<bool> table(width);
        for (std::size_t j = 0; j < width; ++j)
          table[j] = (code >> j) & 1;
        stg.insert(stg_to_permutation(SingleTargetGate(n, t, table)));
      }
    for (auto const &g : enumerate_gates(n))
      EXPECT_TRUE(stg.count(gate_permutation(g)));
    for (auto const &p : stg)
      EXPECT_TRUE(is_involution(p));
    for (auto const &t : hn(n)) {
      TranspositionSet const single{t};
      EXPECT_TRUE(recognize_mpmct(single, n).has_value());
    }
  }
}
