#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plutus/errors.hpp"

namespace plutus::cli {

namespace fs = std::filesystem;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kPreflight = 3,
  kInfeasible = 4,
  kIterationCap = 5,
  kVerificationFailed = 6,
};

int exit_code_for(ErrorKind kind);

// Default soft bound on backbone stretch flagged by verify and bench.
inline constexpr double kStretchSoftBound = 5.0;

struct GenerateOptions {
  int n = 1;
  double radius = 0.3;
  std::uint64_t seed = 0;
  int count = 1;
  fs::path out_dir = ".";
};

struct SolveOptions {
  fs::path input;
  std::optional<fs::path> out;
  int k = 1;
  int m = 1;
  bool dot = false;
  bool strict = false;
  int max_iters = 0;
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  fs::path graph;
  fs::path result;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<fs::path> out;
  double stretch_bound = kStretchSoftBound;
  std::uint64_t seed = 0;
};

struct OracleOptions {
  fs::path graph;
  int k = 1;
  int m = 1;
  std::optional<int> size_cap;
  std::optional<fs::path> out;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  std::vector<int> sizes;
  double radius = 0.25;
  std::vector<std::uint64_t> seeds;
  int k = 1;
  int m = 1;
  bool strict = false;
  int max_iters = 0;
  bool oracle = false;
  std::optional<fs::path> out;
  double stretch_bound = kStretchSoftBound;
};

// Each command writes its primary output as JSON (to a file and/or `out`),
// a `<file>.manifest.json` beside every file it writes, and diagnostics to
// `err`. The return value is the process exit code.
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

// "1..20", "3,5,9", "1..3,7" (inclusive ranges). Empty text gives an empty
// list. Throws Error(Parse) on malformed input.
std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

std::string instance_file_name(int n, std::uint64_t seed);
fs::path manifest_path(const fs::path& output);

// Full command line entry point (CLI11 parsing + dispatch).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plutus::cli
