#include "revpal/census.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "revpal/gate_algebra.hpp"

namespace revpal
{

BigCount double_factorial(long m)
{
  if (m < -1)
    throw std::invalid_argument("double factorial needs m >= -1");
  BigCount result = 1;
  for (long j = m; j > 1; j -= 2)
    result *= j;
  return result;
}

BigCount factorial(std::size_t m)
{
  BigCount result = 1;
  for (std::size_t j = 2; j <= m; ++j)
    result *= j;
  return result;
}

BigCount binomial(std::size_t n, std::size_t k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  // Each partial product is itself a binomial coefficient, so the division
  // is exact.
  for (std::size_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigCount z_mu(CycleType const &mu)
{
  std::map<std::size_t, std::size_t> multiplicity;
  for (auto part : mu.parts)
    ++multiplicity[part];
  BigCount z = 1;
  for (auto [part, count] : multiplicity)
    z *= boost::multiprecision::pow(BigCount{part}, static_cast<unsigned>(count)) *
         factorial(count);
  return z;
}

BigCount count_of_type(std::size_t degree, CycleType const &mu)
{
  if (mu.total() != degree)
    throw std::invalid_argument("cycle type " + to_string(mu) +
                                " is not a partition of " +
                                std::to_string(degree));
  return factorial(degree) / z_mu(mu);
}

namespace
{

void partitions(std::size_t remaining, std::size_t largest,
                std::vector<std::size_t> &prefix, std::vector<CycleType> &out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void check_n(unsigned n)
{
  if (n < 1)
    throw std::invalid_argument("census needs n >= 1");
}

} // namespace

std::vector<CycleType> integer_partitions(std::size_t m)
{
  if (m > 16)
    throw std::invalid_argument("integer partitions are limited to m <= 16");
  std::vector<CycleType> out;
  std::vector<std::size_t> prefix;
  partitions(m, m, prefix, out);
  return out;
}

BigCount count_reversible(unsigned n)
{
  check_n(n);
  return factorial(std::size_t{1} << n);
}

BigCount count_involutions(unsigned n)
{
  check_n(n);
  std::size_t const N = std::size_t{1} << n;
  BigCount total = 0;
  for (std::size_t k = 0; k <= N / 2; ++k)
    total += double_factorial(static_cast<long>(2 * k) - 1) * binomial(N, 2 * k);
  return total;
}

BigCount count_In(unsigned n)
{
  check_n(n);
  std::size_t const N = std::size_t{1} << n;
  BigCount total = 0;
  for (unsigned k = 1; k <= n; ++k) {
    std::size_t const points = std::size_t{1} << k;
    total += double_factorial(static_cast<long>(points) - 1) * binomial(N, points);
  }
  return total;
}

BigCount count_stg(unsigned n)
{
  check_n(n);
  return num_stg_functions(n);
}

BigCount count_mpmct(unsigned n)
{
  check_n(n);
  return BigCount{n} * boost::multiprecision::pow(BigCount{3}, n - 1);
}

BigCount count_transpositions(unsigned n)
{
  check_n(n);
  BigCount const N = BigCount{1} << n;
  return N * (N - 1) / 2;
}

BigCount const &CensusReport::at(std::string const &row) const
{
  for (auto const &[name, value] : rows)
    if (name == row)
      return value;
  throw std::out_of_range("census has no row '" + row + "'");
}

CensusReport formula_census(unsigned n)
{
  CensusReport r{n, CensusMethod::formula, {}};
  r.rows = {
    {"reversible", count_reversible(n)},
    {"self-inverse", count_involutions(n)},
    {"palindromic", count_In(n)},
    {"single-target", count_stg(n)},
    {"mpmct", count_mpmct(n)},
    {"transposition", count_transpositions(n)},
  };
  return r;
}

CensusReport brute_force_census(unsigned n)
{
  check_n(n);
  if (n > brute_force_max_lines)
    throw CensusTooLarge("brute-force census supports n <= " +
                         std::to_string(brute_force_max_lines));

  std::size_t const N = std::size_t{1} << n;
  std::uint64_t reversible = 0, involutions = 0, palindromic = 0,
                transpositions = 0;
  std::vector<Point> image(N);
  std::iota(image.begin(), image.end(), Point{0});
  do {
    ++reversible;
    Permutation const p(image);
    if (!is_involution(p))
      continue;
    ++involutions;
    auto const size = involution_size(p);
    if (std::has_single_bit(size))
      ++palindromic;
    if (size == 1)
      ++transpositions;
  } while (std::next_permutation(image.begin(), image.end()));

  std::set<Permutation> stg_functions;
  std::size_t const table_width = N / 2;
  for (unsigned t = 1; t <= n; ++t) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << table_width); ++code) {
      std::vector<bool> g(table_width);
      for (std::size_t j = 0; j < table_width; ++j)
        g[j] = (code >> j) & 1;
      stg_functions.insert(stg_to_permutation(SingleTargetGate(n, t, g)));
    }
  }

  std::set<Permutation> mpmct_functions;
  for (auto const &g : enumerate_gates(n))
    mpmct_functions.insert(gate_permutation(g));

  CensusReport r{n, CensusMethod::brute_force, {}};
  r.rows = {
    {"reversible", reversible},
    {"self-inverse", involutions},
    {"palindromic", palindromic},
    {"single-target", stg_functions.size()},
    {"mpmct", mpmct_functions.size()},
    {"transposition", transpositions},
  };
  return r;
}

namespace
{

char const *method_name(CensusMethod m)
{
  return m == CensusMethod::formula ? "formula" : "brute-force";
}

} // namespace

std::string to_text(CensusReport const &r)
{
  std::ostringstream os;
  os << "n: " << r.n << '\n' << "method: " << method_name(r.method) << '\n';
  for (auto const &[name, value] : r.rows)
    os << name << ": " << value << '\n';
  return os.str();
}

std::string to_json(CensusReport const &r)
{
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["method"] = method_name(r.method);
  auto &rows = j["rows"] = nlohmann::ordered_json::object();
  for (auto const &[name, value] : r.rows)
    rows[name] = value.str();
  return j.dump(2) + "\n";
}

} // namespace revpal
