#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revpal/bigcount.hpp"
#include "revpal/permutation.hpp"

namespace revpal
{

/// m!! with (-1)!! = 0!! = 1. Throws std::invalid_argument for m < -1.
BigCount double_factorial(long m);

BigCount factorial(std::size_t m);
BigCount binomial(std::size_t n, std::size_t k);

/// z_mu = prod_i i^(a_i) a_i!, where a_i is the multiplicity of part i.
BigCount z_mu(CycleType const &mu);

/// Number of permutations of degree N with cycle type mu, N! / z_mu.
/// Throws std::invalid_argument if mu is not a partition of N.
BigCount count_of_type(std::size_t degree, CycleType const &mu);

/// All integer partitions of m in reverse lexicographic order. Limited to
/// m <= 16.
std::vector<CycleType> integer_partitions(std::size_t m);

BigCount count_reversible(unsigned n);
BigCount count_involutions(unsigned n);
/// |I_n|: involutions whose size is a power of two.
BigCount count_In(unsigned n);
BigCount count_stg(unsigned n);
BigCount count_mpmct(unsigned n);
BigCount count_transpositions(unsigned n);

enum class CensusMethod
{
  formula,
  brute_force,
};

/// Row names in report order.
inline constexpr char const *census_rows[] = {
  "reversible", "self-inverse", "palindromic",
  "single-target", "mpmct", "transposition",
};

struct CensusReport
{
  unsigned n = 1;
  CensusMethod method = CensusMethod::formula;
  std::vector<std::pair<std::string, BigCount>> rows;

  BigCount const &at(std::string const &row) const;
};

/// Thrown when brute force is requested beyond the supported line count.
class CensusTooLarge : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

inline constexpr unsigned brute_force_max_lines = 3;

CensusReport formula_census(unsigned n);

/// Direct enumeration of S_{2^n} and of all gates. Throws CensusTooLarge for
/// n > brute_force_max_lines.
CensusReport brute_force_census(unsigned n);

/// "key: value" lines, one per row, preceded by n and method.
std::string to_text(CensusReport const &r);

/// {"n": 3, "method": "formula", "rows": {"reversible": "40320", ...}};
/// counts are strings.
std::string to_json(CensusReport const &r);

} // namespace revpal
