#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace revpal
{

using Point = std::uint32_t;

/// Largest degree accepted by any Permutation constructor (2^16).
inline constexpr std::size_t max_degree = std::size_t{1} << 16;

/// A 2-cycle t(a b), stored with a < b.
struct Transposition
{
  Point a;
  Point b;

  Transposition(Point x, Point y);

  auto operator<=>(Transposition const &) const = default;
};

using TranspositionSet = std::vector<Transposition>;

/// Cycles in canonical form: every cycle starts at its minimum element and
/// cycles are ordered by decreasing length, then by increasing first element.
/// Fixpoints are included as 1-cycles.
struct CycleDecomposition
{
  std::vector<std::vector<Point>> cycles;

  bool operator==(CycleDecomposition const &) const = default;
};

/// Non-increasing list of cycle lengths; an integer partition of the degree.
struct CycleType
{
  std::vector<std::size_t> parts;

  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> parts);

  std::size_t total() const;

  auto operator<=>(CycleType const &) const = default;
};

/// Bijection on {0, ..., N-1} in one-line form: image()[x] = p(x).
class Permutation
{
public:
  /// Throws std::invalid_argument unless `image` is a bijection on [0, N).
  explicit Permutation(std::vector<Point> image);
  Permutation(std::initializer_list<Point> image);

  static Permutation identity(std::size_t degree);

  /// Builds from a (possibly partial) list of cycles; points that do not
  /// occur are fixpoints. Throws on duplicate or out-of-range elements.
  static Permutation from_cycles(std::vector<std::vector<Point>> const &cycles,
                                 std::size_t degree);

  /// Product of pairwise disjoint transpositions.
  static Permutation from_transpositions(std::span<Transposition const> ts,
                                         std::size_t degree);

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point x) const { return image_[x]; }
  Point operator[](Point x) const { return image_[x]; }
  std::vector<Point> const &image() const { return image_; }

  bool is_identity() const;

  bool operator==(Permutation const &) const = default;
  auto operator<=>(Permutation const &) const = default;

private:
  std::vector<Point> image_;
};

/// (p ∘ q)(x) = p(q(x)); q is applied first.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

CycleDecomposition to_cycles(Permutation const &p);
Permutation from_cycles(CycleDecomposition const &c, std::size_t degree);

std::size_t cycle_count(Permutation const &p);
CycleType cycle_type(Permutation const &p);

bool is_involution(Permutation const &p);

/// Sorted transpositions of an involution. Throws std::domain_error for
/// non-involutions.
TranspositionSet trans(Permutation const &p);

/// Number of transpositions of an involution.
std::size_t involution_size(Permutation const &p);

/// sigma ∘ p ∘ sigma^-1.
Permutation conjugate(Permutation const &sigma, Permutation const &p);

/// Returns sigma with conjugate(sigma, q) == p by aligning the canonical cycle
/// decompositions of p and q element by element. Throws std::domain_error if
/// the cycle types differ.
Permutation find_conjugator(Permutation const &p, Permutation const &q);

/// Parses "4 2 6 0 3 1 5 7" (one-line) or "(0 4 3)(1 2 6 5)" (cycles).
/// Commas are accepted as separators. For cycle strings the degree is
/// `degree` when non-zero, otherwise max element + 1. One-line strings must
/// have exactly `degree` entries when `degree` is non-zero.
Permutation parse_permutation(std::string const &text, std::size_t degree = 0);

/// Cycle string with fixpoints omitted, e.g. "(0 4 3)(1 2 6 5)"; "()" for the
/// identity.
std::string to_cycle_string(Permutation const &p);
std::string to_one_line_string(Permutation const &p);
std::string to_string(CycleType const &t);

std::ostream &operator<<(std::ostream &os, Permutation const &p);
std::ostream &operator<<(std::ostream &os, Transposition const &t);

} // namespace revpal
