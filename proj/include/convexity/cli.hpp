#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "convexity/invariants.hpp"

namespace convexity {

enum class Command { space, invariants, fh, bk_embed, colorful, lemma31, selftest };
enum class OutputFormat { human, structured, delimited };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitHypothesis = 4;
inline constexpr int kExitVerification = 5;

struct RunConfig {
  Command command = Command::space;
  std::string space;   // shorthand or file
  std::string family;  // "lowerbound:d:n" or file
  std::string input;
  std::string out;     // empty: standard output
  OutputFormat format = OutputFormat::structured;
  bool header = true;  // delimited format only
  std::optional<std::size_t> k;
  std::optional<std::size_t> m;
  std::optional<std::size_t> r;
  std::optional<std::size_t> d;  // fh: also report the optimal beta for this d
  int precision = 12;
  std::size_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  InvariantSelection selection;
};

Command parse_command(const std::string& name);
std::string to_string(Command command);
OutputFormat parse_format(const std::string& name);

/// Executes one command, writing the record to `out` (or config.out) and
/// diagnostics to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace convexity
