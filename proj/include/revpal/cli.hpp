#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "revpal/permutation.hpp"

namespace revpal::cli
{

/// Process exit codes.
enum ExitCode : int
{
  ok = 0,
  usage_error = 1,
  verification_failed = 2,
  census_too_large = 3,
  non_classical = 4,
};

/// Ordered "key: value" report printed by every subcommand.
struct RunReport
{
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::optional<bool> verdict;
  std::optional<double> elapsed_ms;

  void add(std::string key, std::string value);
  std::string to_text() const;
};

/// Reads a permutation spec. The degree is 2^lines when `lines` is given;
/// otherwise cycle strings are padded to the next power of two above their
/// largest element and one-line strings must already have power-of-two length.
Permutation read_permutation(std::string const &spec,
                             std::optional<unsigned> lines = std::nullopt);

/// Runs one command line. `args` excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err);

} // namespace revpal::cli
