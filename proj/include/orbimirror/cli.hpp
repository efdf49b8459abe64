#pragma once

// Command-line front end. Exit codes: 0 success or PASS, 1 checker FAIL,
// 2 input error, 3 internal consistency error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orbimirror/combinatorics.hpp"

namespace orbimirror {

enum class Command { Basis, Cup, Pairing, SmallQC, BSide, Mirror, Reconstruct, Selftest };
enum class Format { Json, Tsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConsistency = 3;

inline constexpr std::int64_t kMaxWeight = 1'000'000;
inline constexpr std::int64_t kDefaultMuCap = 64;
inline constexpr std::int64_t kMaxLengthCap = 16;

struct RunConfig {
  Weights weights;
  Command command = Command::Basis;
  Format format = Format::Json;
  std::int64_t max_length = 7;
  std::optional<std::string> output;
  bool unsafe_large = false;
};

/// "1,2,2" -> Weights. Throws std::invalid_argument on anything but a
/// non-empty comma list of integers in [1, 10^6].
Weights parse_weights(const std::string& text);

/// The μ cap: ORBIMIRROR_MAX_MU if set, else 64. Throws std::invalid_argument
/// if the variable is not a positive integer.
std::int64_t mu_cap();

/// Parses argv[1..] into a config, or returns the exit code to stop with
/// (0 after --help, 2 on usage errors). Messages go to `out`/`err`.
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs a validated config, writing the artifact to `out` unless an output
/// path is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbimirror
