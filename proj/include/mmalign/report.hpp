#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mmalign/bigint.hpp"
#include "mmalign/core.hpp"

namespace mmalign {

/// One value in a report row. Exact counts stay exact; reals carry the
/// number of decimals used in text output.
struct Cell {
  std::variant<Count, double, long long, std::string, bool> value;
  int decimals = -1;
  // cut to `decimals` instead of rounding
  bool truncate = false;

  static Cell exact(Count v) { return {std::move(v), -1}; }
  static Cell real(double v, int decimals) { return {v, decimals}; }
  static Cell truncated(double v, int decimals) { return {v, decimals, true}; }
  static Cell integer(long long v) { return {v, -1}; }
  static Cell text(std::string v) { return {std::move(v), -1}; }
  static Cell flag(bool v) { return {v, -1}; }

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

struct Column {
  std::string name;
  // which evaluator produced the column
  std::string source;
};

/// Structured command output, rendered as whitespace-separated text or JSON.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  // print a '#'-prefixed column header in text mode
  bool text_header = false;
  // leading input columns left out of text rows (JSON always has them)
  std::size_t text_skip = 0;

  std::string to_text() const;
  // {"command": ..., "inputs": {...}, "columns": [...], "rows": [{...}, ...]}
  nlohmann::ordered_json to_json() const;
};

// a(l,l,l) for {1,2}^3 and for the classical {0,1}^3 - 0, l = 1..max.
Report table4_report(unsigned max);

// Exact and asymptotic a(l,l,l) for {1,2}^3, l = 1..max, with relative error
// |exact - approx| / approx. Text cuts the reals to 2 and 3 decimals.
Report table5_report(unsigned max);

// a(l,...,l) for l = 1..max.
Report diagonal_report(const StepSet& s, unsigned max);

/// Result of the cross-evaluator equality checks.
struct VerifyResult {
  Report report;
  bool passed = true;
};

// For every exact catalog formula and every supported N <= max_dimension:
// closed form, generating-function coefficient and multinomial sum against
// the count table, on all length tuples with entries <= max (diagonal
// formulas: l = 1..max on the diagonal).
VerifyResult verify_catalog(unsigned max, std::size_t max_dimension = 3);

// Generating function and multinomial sum against the count table on every
// multi-index of the box.
VerifyResult verify_step_set(const StepSet& s, const LengthTuple& box);

}  // namespace mmalign
