#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "revpal/cli.hpp"

namespace revpal::testing
{

struct CliResult
{
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(std::vector<std::string> const &args)
{
  std::ostringstream out, err;
  int const code = revpal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A recorded command line and the file holding its expected stdout. Paths in
// the arguments are relative to the golden directory.
struct Transcript
{
  std::string file;
  std::vector<std::string> args;
};

inline std::vector<Transcript> const &transcripts()
{
  static std::vector<Transcript> const all{
    {"classify_size3.txt", {"classify", "--perm", "(0 1)(3 5)(2 7)"}},
    {"synth_size3_auto.txt", {"synth", "--perm", "(0 1)(3 5)(2 7)"}},
    {"synth_size3_vgate.txt",
     {"synth", "--perm", "(0 1)(3 5)(2 7)", "--mode", "vgate"}},
    {"synth_t07_palindrome.txt",
     {"synth", "--perm", "(0 7)", "--mode", "palindrome"}},
    {"verify_size3_ancilla.txt",
     {"verify", "--circuit", "size3_ancilla.real", "--perm", "(0 1)(3 5)(2 7)",
      "--ancilla"}},
    {"verify_size3_vgate.txt",
     {"verify", "--circuit", "size3_vgate.real", "--perm", "(0 1)(3 5)(2 7)"}},
    {"census_n3.txt", {"census", "--n", "3"}},
    {"census_n3_brute.txt", {"census", "--n", "3", "--brute-force"}},
    {"census_n5.json", {"census", "--n", "5", "--json"}},
    {"simulate_or_into_x3.txt",
     {"simulate", "--circuit", "or_into_x3.real", "--all"}},
    {"simulate_size3_vgate.txt",
     {"simulate", "--circuit", "size3_vgate.real", "--all", "--semiclassical"}},
  };
  return all;
}

// Runs `body` with the working directory set to `dir`, restoring it after.
template <typename F>
auto in_directory(std::filesystem::path const &dir, F &&body)
{
  struct Restore
  {
    std::filesystem::path old;
    ~Restore() { std::filesystem::current_path(old); }
  } restore{std::filesystem::current_path()};
  std::filesystem::current_path(dir);
  return body();
}

} // namespace revpal::testing
