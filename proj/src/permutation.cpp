#include "revpal/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace revpal
{

Transposition::Transposition(Point x, Point y)
  : a(std::min(x, y)), b(std::max(x, y))
{
  if (x == y)
    throw std::invalid_argument("transposition endpoints must differ");
}

CycleType::CycleType(std::vector<std::size_t> p) : parts(std::move(p))
{
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>{}))
    throw std::invalid_argument("cycle type parts must be non-increasing");
  if (std::find(parts.begin(), parts.end(), 0u) != parts.end())
    throw std::invalid_argument("cycle type parts must be positive");
}

std::size_t CycleType::total() const
{
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

namespace
{

void check_degree(std::size_t degree)
{
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be positive");
  if (degree > max_degree)
    throw std::invalid_argument("permutation degree exceeds 2^16");
}

void check_same_degree(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
}

} // namespace

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image))
{
  check_degree(image_.size());
  std::vector<bool> seen(image_.size(), false);
  for (Point y : image_) {
    if (y >= image_.size() || seen[y])
      throw std::invalid_argument("one-line image is not a bijection");
    seen[y] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> image)
  : Permutation(std::vector<Point>(image))
{}

Permutation Permutation::identity(std::size_t degree)
{
  check_degree(degree);
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(
  std::vector<std::vector<Point>> const &cycles, std::size_t degree)
{
  check_degree(degree);
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> seen(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Point x = cycle[j];
      if (x >= degree)
        throw std::invalid_argument("cycle element " + std::to_string(x) +
                                    " out of range");
      if (seen[x])
        throw std::invalid_argument("cycle element " + std::to_string(x) +
                                    " repeated");
      seen[x] = true;
      image[x] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_transpositions(std::span<Transposition const> ts,
                                             std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  cycles.reserve(ts.size());
  for (auto const &t : ts)
    cycles.push_back({t.a, t.b});
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x)
      return false;
  return true;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  check_same_degree(p, q);
  std::vector<Point> image(p.degree());
  for (Point x = 0; x < image.size(); ++x)
    image[x] = p(q(x));
  return Permutation(std::move(image));
}

Permutation inverse(Permutation const &p)
{
  std::vector<Point> image(p.degree());
  for (Point x = 0; x < image.size(); ++x)
    image[p(x)] = x;
  return Permutation(std::move(image));
}

CycleDecomposition to_cycles(Permutation const &p)
{
  CycleDecomposition result;
  std::vector<bool> seen(p.degree(), false);
  // Visiting points in increasing order starts every cycle at its minimum.
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x])
      continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      cycle.push_back(y);
    }
    result.cycles.push_back(std::move(cycle));
  }
  std::stable_sort(result.cycles.begin(), result.cycles.end(),
                   [](auto const &l, auto const &r) {
                     return l.size() > r.size();
                   });
  return result;
}

Permutation from_cycles(CycleDecomposition const &c, std::size_t degree)
{
  return Permutation::from_cycles(c.cycles, degree);
}

std::size_t cycle_count(Permutation const &p)
{
  return to_cycles(p).cycles.size();
}

CycleType cycle_type(Permutation const &p)
{
  std::vector<std::size_t> parts;
  for (auto const &cycle : to_cycles(p).cycles)
    parts.push_back(cycle.size());
  return CycleType(std::move(parts));
}

bool is_involution(Permutation const &p)
{
  for (Point x = 0; x < p.degree(); ++x)
    if (p(p(x)) != x)
      return false;
  return true;
}

TranspositionSet trans(Permutation const &p)
{
  if (!is_involution(p))
    throw std::domain_error("trans() requires an involution");
  TranspositionSet ts;
  for (Point x = 0; x < p.degree(); ++x)
    if (p(x) > x)
      ts.emplace_back(x, p(x));
  return ts;
}

std::size_t involution_size(Permutation const &p)
{
  return trans(p).size();
}

Permutation conjugate(Permutation const &sigma, Permutation const &p)
{
  check_same_degree(sigma, p);
  // sigma p sigma^-1 maps sigma(x) to sigma(p(x)).
  std::vector<Point> image(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    image[sigma(x)] = sigma(p(x));
  return Permutation(std::move(image));
}

Permutation find_conjugator(Permutation const &p, Permutation const &q)
{
  check_same_degree(p, q);
  auto const pc = to_cycles(p);
  auto const qc = to_cycles(q);
  bool same_type = pc.cycles.size() == qc.cycles.size();
  for (std::size_t j = 0; same_type && j < pc.cycles.size(); ++j)
    same_type = pc.cycles[j].size() == qc.cycles[j].size();
  if (!same_type)
    throw std::domain_error("find_conjugator requires equal cycle types");

  std::vector<Point> image(p.degree());
  for (std::size_t j = 0; j < pc.cycles.size(); ++j)
    for (std::size_t m = 0; m < pc.cycles[j].size(); ++m)
      image[qc.cycles[j][m]] = pc.cycles[j][m];
  return Permutation(std::move(image));
}

namespace
{

std::vector<Point> parse_numbers(std::string const &text)
{
  std::vector<Point> values;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in permutation");
    std::size_t j = i;
    unsigned long value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      value = value * 10 + static_cast<unsigned long>(text[j] - '0');
      if (value >= max_degree)
        throw std::invalid_argument("permutation element too large");
      ++j;
    }
    values.push_back(static_cast<Point>(value));
    i = j;
  }
  return values;
}

} // namespace

Permutation parse_permutation(std::string const &text, std::size_t degree)
{
  if (text.find('(') == std::string::npos) {
    auto values = parse_numbers(text);
    if (values.empty())
      throw std::invalid_argument("empty permutation");
    if (degree != 0 && values.size() != degree)
      throw std::invalid_argument("one-line form has " +
                                  std::to_string(values.size()) +
                                  " entries, expected " +
                                  std::to_string(degree));
    return Permutation(std::move(values));
  }

  std::vector<std::vector<Point>> cycles;
  Point largest = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(')
      throw std::invalid_argument(std::string("expected '(' but found '") + c +
                                  "'");
    auto close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated cycle");
    auto body = text.substr(pos + 1, close - pos - 1);
    if (body.find('(') != std::string::npos)
      throw std::invalid_argument("nested '(' in cycle");
    auto cycle = parse_numbers(body);
    for (Point x : cycle)
      largest = std::max(largest, x);
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  if (degree == 0)
    degree = std::size_t{largest} + 1;
  return Permutation::from_cycles(cycles, degree);
}

std::string to_cycle_string(Permutation const &p)
{
  std::ostringstream os;
  bool any = false;
  for (auto const &cycle : to_cycles(p).cycles) {
    if (cycle.size() == 1)
      continue;
    any = true;
    os << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j)
      os << (j ? " " : "") << cycle[j];
    os << ')';
  }
  return any ? os.str() : "()";
}

std::string to_one_line_string(Permutation const &p)
{
  std::ostringstream os;
  for (Point x = 0; x < p.degree(); ++x)
    os << (x ? " " : "") << p(x);
  return os.str();
}

std::string to_string(CycleType const &t)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < t.parts.size(); ++j)
    os << (j ? "," : "") << t.parts[j];
  os << ')';
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << to_cycle_string(p);
}

std::ostream &operator<<(std::ostream &os, Transposition const &t)
{
  return os << "t(" << t.a << ' ' << t.b << ')';
}

} // namespace revpal
