#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmalign/core.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"
#include "mmalign/formulas.hpp"
#include "mmalign/report.hpp"

namespace mmalign::cli {

// Bad flags, missing options or an unparsable DSL expression (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

// --help was given; carries the help text.
struct HelpRequested {
  std::string text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

struct Command {
  std::string verb;
  std::optional<StepSet> steps;
  std::optional<LengthTuple> lengths;
  std::optional<unsigned> k;
  std::optional<unsigned> max;
  std::uint64_t seed = 0;
  unsigned samples = 1;
  std::optional<FormulaId> formula;
  unsigned bound_m = 0;
  // largest N covered by a catalog verify
  std::size_t max_dimension = 3;
  unsigned long cap = kDefaultEnumerationCap;
  bool json = false;
  bool list = false;
};

const std::vector<std::string>& verbs();

// args excludes the program name. Throws UsageError or HelpRequested.
Command parse(const std::vector<std::string>& args);

// The report and exit code for a parsed command. Library errors propagate.
std::pair<Report, int> execute(const Command& cmd);

// Prints the report (text or JSON) to out, errors to err; returns the exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// parse + run with usage handling, for main().
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmalign::cli
