#include "gtest/gtest.h"

#include "generators.hpp"
#include "revpal/circuit_io.hpp"

using namespace revpal;
using revpal::testing::Rng;

TEST(CircuitIoTest, ParsesOrIntoX3)
{
  auto const c = parse_circuit("# x3 ^= x1 | x2\n.lines 3\nt -x1 -x2 x3\nt x3\n");
  EXPECT_EQ(c.lines, 3u);
  EXPECT_FALSE(c.ancilla.has_value());
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates[0], CircuitGate::toffoli(3, 0, line_bit(1) | line_bit(2)));
  EXPECT_EQ(c.gates[1], CircuitGate::toffoli(3));
}

TEST(CircuitIoTest, ParsesVGatesAndAncilla)
{
  auto const c = parse_circuit(".lines 4\n.ancilla 4\n  v -x1 -x2 x3  # V\nv+ x4 x1\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates[0], CircuitGate::v(3, 0, line_bit(1) | line_bit(2)));
  EXPECT_EQ(c.gates[1], CircuitGate::v_dagger(1, line_bit(4)));
  EXPECT_EQ(c.ancilla, 4u);

  auto const empty = parse_circuit(".lines 2\n");
  EXPECT_EQ(empty.lines, 2u);
  EXPECT_TRUE(empty.gates.empty());
}

TEST(CircuitIoTest, ReportsErrorPositions)
{
  auto expect_error = [](std::string const &text, std::size_t line,
                         std::size_t column) {
    try {
      parse_circuit(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (ParseError const &e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.column(), column) << e.what();
    }
  };
  expect_error("t x1\n", 1, 1);                  // gate before header
  expect_error(".lines 3\nt x1 x4\n", 2, 6);     // out of range
  expect_error(".lines 3\nt x2 -x1 x2\n", 2, 3); // target among controls
  expect_error(".lines 3\nt x1 x1 x2\n", 2, 6);  // duplicate control
  expect_error(".lines 3\nq x1\n", 2, 1);        // unknown gate
  expect_error(".lines 3\nt -x1\n", 2, 3);       // negated target
  expect_error(".lines 3\nt\n", 2, 1);           // no target
  expect_error(".lines 3\nt y1\n", 2, 3);
  expect_error(".lines 0\n", 1, 8);
  expect_error(".lines 3\n.ancilla 5\n", 2, 10);
  expect_error("# nothing\n", 1, 1);
  expect_error(".lines 2\n.lines 2\n", 2, 1);
}

TEST(CircuitIoTest, SerializeIsCanonical)
{
  Circuit const c(3,
                  {CircuitGate::toffoli(3, line_bit(2), line_bit(1)),
                   CircuitGate::v(1), CircuitGate::v_dagger(2, line_bit(3))},
                  3);
  EXPECT_EQ(serialize_circuit(c),
            ".lines 3\n.ancilla 3\nt -x1 x2 x3\nv x1\nv+ x3 x2\n");
}

TEST(CircuitIoProperties, RoundTrip)
{
  Rng rng(revpal::testing::default_seed + 40);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned const n = revpal::testing::uniform(rng, 1, 6);
    auto gates = revpal::testing::random_toffolis(
      rng, n, revpal::testing::uniform(rng, 0, 10));
    for (auto &g : gates)
      g.kind = static_cast<GateKind>(revpal::testing::uniform(rng, 0, 2));
    std::optional<unsigned> ancilla;
    if (trial % 3 == 0)
      ancilla = revpal::testing::uniform(rng, 1, n);
    Circuit const c(n, gates, ancilla);
    auto const text = serialize_circuit(c);
    auto const back = parse_circuit(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_circuit(back), text);
  }
}
