#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmalign/bigint.hpp"
#include "mmalign/core.hpp"

namespace mmalign {

enum class FormulaId {
  comp_all,
  comp_12,
  comp_ge2,
  comp_odd,
  comp_boundedM_asym,
  delannoy_powers,
  delannoy_trinomial,
  delannoy_asym,
  star,
  starstar,
  whitney_exact,
  whitney_asym,
  halfopen_exact,
  halfopen_asym,
  box13_exact,
  slowinski,
  dyadic_sum,
  griggs_asym,
  andrews,
  duchi_diag,
  box12_exact,
  box12_asym,
  unitcube3_growth,
};

/// Catalog metadata for one closed form or approximation.
struct FormulaInfo {
  FormulaId id;
  std::string_view name;
  // step-set expression; "N" stands for the dimension, "M" for the part bound
  std::string_view step_set;
  std::size_t min_dimension;
  std::size_t max_dimension;  // 0: any
  bool diagonal_only;
  bool exact;
  std::string_view label;
};

const std::vector<FormulaInfo>& formula_catalog();
const FormulaInfo& formula_info(FormulaId id);
// throws UnknownFormula
FormulaId formula_from_name(std::string_view name);
std::string_view formula_name(FormulaId id);
// The step set whose counts the formula describes. M is only used by
// comp_boundedM_asym.
StepSet formula_step_set(FormulaId id, std::size_t dimension, unsigned bound_m = 0);

/// A floating approximation, tagged with the formula and inputs it came from.
///
/// log_value is always finite for positive results; value overflows to
/// infinity for very long diagonals, in which case log_value carries the
/// magnitude.
struct ApproxValue {
  FormulaId id;
  std::vector<unsigned> inputs;
  double value;
  double log_value;

  // value = mantissa * 10^exponent with 1 <= mantissa < 10
  std::pair<double, long> mantissa_exponent() const;
};

/// Constants of the diagonal asymptotic for S = {1,2}^N.
struct AsymptoticConstants {
  unsigned dimension;
  double phi;
  double a;
  double h;
  double b0;
};

AsymptoticConstants asymptotic_constants(unsigned dimension);

// --- N = 1 -----------------------------------------------------------------

// comp_all: 2^(l-1); comp_12: F(l+1); comp_ge2: F(l-1); comp_odd: F(l).
// Returns 1 at l = 0 for every id.
Count comp_closed(FormulaId id, unsigned l);
Count fibonacci(unsigned n);
// the real X > 1 with 1/X + ... + 1/X^M = 1 (X = 1 for M = 1)
double bounded_composition_root(unsigned m);
ApproxValue comp_bounded_asym(unsigned l, unsigned m);

// --- N = 2 -----------------------------------------------------------------

enum class DelannoyVariant { powers, trinomial };

Count delannoy_exact(unsigned l1, unsigned l2, DelannoyVariant variant);
ApproxValue delannoy_asym(unsigned l1, unsigned l2);
Count star(unsigned l1, unsigned l2);
Count starstar(unsigned l1, unsigned l2);
Count whitney_exact(unsigned l1, unsigned l2);
ApproxValue whitney_asym(unsigned l);
Count halfopen_exact(unsigned l1, unsigned l2);
ApproxValue halfopen_asym(unsigned l);
Count box13_exact(unsigned l1, unsigned l2);

// --- general N -------------------------------------------------------------

/// An integer obtained by rounding an exactly summed convergent series.
struct SeriesEvaluation {
  Count value;
  // distance of the truncated partial sum from value
  double residual;
  unsigned terms;
};

Count slowinski(const LengthTuple& l);
SeriesEvaluation dyadic_sum(const LengthTuple& l);
ApproxValue griggs_asym(unsigned l, unsigned n);
Count andrews(const LengthTuple& l);
SeriesEvaluation duchi_diag(unsigned l, unsigned n);
Count box12_exact(const LengthTuple& l);
ApproxValue box12_asym(unsigned l, unsigned n);
double unitcube3_growth();

// --- dispatch --------------------------------------------------------------

// Evaluates an exact formula on a length tuple. Throws DomainError on an
// arity or domain violation and UnknownFormula for approximations.
Count evaluate_exact(FormulaId id, const LengthTuple& l);
// Evaluates an approximation; diagonal formulas read l from the (equal)
// lengths and N from the dimension. bound_m is the part bound M of
// comp_boundedM_asym.
ApproxValue evaluate_approx(FormulaId id, const LengthTuple& l, unsigned bound_m = 0);

}  // namespace mmalign
