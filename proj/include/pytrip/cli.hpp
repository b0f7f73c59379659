#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pytrip/plot.hpp"

namespace pytrip::cli {

enum class Subcommand { classify, gen_euclid, gen_diff, invert, for_leg, twins, allowable_d, primes, plot, oracle };

enum class PrimeMode { leg, both, ends13, ends1, ends5, count, sum2sq };

struct Command {
  Subcommand sub = Subcommand::classify;
  std::array<u64, 3> triple{};
  u64 h = 0;
  u64 k = 0;
  bool odd_variant = false;
  u64 a = 0;
  u64 d = 0;
  u64 count = 0;
  u64 max = 0;
  PrimeMode mode = PrimeMode::leg;
  bool ppt_only = false;
  std::vector<u64> parabolas;
  u64 canvas_px = 1000;
  std::string out_path;
  OutputFormat format = OutputFormat::svg;
  bool verify_generators = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitUsage = 2;

/// Help text (exit 0) or a usage error (exit 2).
struct Usage {
  int exit_code = kExitUsage;
  std::string text;
};

/// Parses arguments after the program name.
std::variant<Command, Usage> parse_args(std::span<const std::string> args);

/// Executes a parsed command. Reports go to `out`, diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Strict decimal parse of a positive 64-bit integer; throws std::invalid_argument.
u64 parse_positive(const std::string& text);

}  // namespace pytrip::cli
