#include <algorithm>
#include <cmath>

#include "mmalign/dsl.hpp"
#include "mmalign/errors.hpp"
#include "mmalign/formulas.hpp"

namespace mmalign {

const std::vector<FormulaInfo>& formula_catalog() {
  using F = FormulaId;
  static const std::vector<FormulaInfo> catalog = {
      {F::comp_all, "comp_all", "prod(natpos)", 1, 1, false, true, "compositions into positive parts"},
      {F::comp_12, "comp_12", "prod([1,2])", 1, 1, false, true, "compositions into parts 1 and 2"},
      {F::comp_ge2, "comp_ge2", "prod(ge(2))", 1, 1, false, true, "compositions into parts >= 2"},
      {F::comp_odd, "comp_odd", "prod(odd)", 1, 1, false, true, "compositions into odd parts"},
      {F::comp_boundedM_asym, "comp_boundedM_asym", "prod([1..M])", 1, 1, false, false,
       "compositions into parts 1..M, dominant-root asymptotic"},
      {F::delannoy_powers, "delannoy_powers", "unit(2)", 2, 2, false, true, "Delannoy numbers, powers-of-two sum"},
      {F::delannoy_trinomial, "delannoy_trinomial", "unit(2)", 2, 2, false, true,
       "Delannoy numbers, trinomial sum"},
      {F::delannoy_asym, "delannoy_asym", "unit(2)", 2, 2, false, false, "Delannoy numbers, saddle-point form"},
      {F::star, "star", "{(1,1),(1,2),(2,1)}", 2, 2, false, true, "match/expand/squash, binomial sum"},
      {F::starstar, "starstar", "{(1,1),(1,2),(2,1)}", 2, 2, false, true,
       "match/expand/squash, inclusion/exclusion"},
      {F::whitney_exact, "whitney_exact", "prod([1,2],[1,2])", 2, 2, false, true, "steps {1,2}^2, exact"},
      {F::whitney_asym, "whitney_asym", "prod([1,2],[1,2])", 2, 2, true, false,
       "steps {1,2}^2 diagonal (fence-poset Whitney numbers)"},
      {F::halfopen_exact, "halfopen_exact", "halfopen2", 2, 2, false, true, "steps x >= 1, y >= 0, exact"},
      {F::halfopen_asym, "halfopen_asym", "halfopen2", 2, 2, true, false, "steps x >= 1, y >= 0, diagonal"},
      {F::box13_exact, "box13_exact", "box(1..3,2)", 2, 2, false, true, "steps {1,2,3}^2, exact"},
      {F::slowinski, "slowinski", "unit(N)", 1, 0, false, true, "classical alignments, inclusion/exclusion"},
      {F::dyadic_sum, "dyadic_sum", "unit(N)", 1, 0, false, true, "classical alignments, dyadic series"},
      {F::griggs_asym, "griggs_asym", "unit(N)", 1, 0, true, false, "classical alignments, diagonal"},
      {F::andrews, "andrews", "natpos(N)", 1, 0, false, true, "vector compositions"},
      {F::duchi_diag, "duchi_diag", "natpos(N)", 1, 0, true, true,
       "vector compositions, diagonal dyadic series"},
      {F::box12_exact, "box12_exact", "box(1..2,N)", 1, 0, false, true, "steps {1,2}^N, exact"},
      {F::box12_asym, "box12_asym", "box(1..2,N)", 1, 0, true, false, "steps {1,2}^N, diagonal"},
      {F::unitcube3_growth, "unitcube3_growth", "unit(3)", 3, 3, true, false,
       "classical alignments of three sequences, diagonal growth rate"},
  };
  return catalog;
}

const FormulaInfo& formula_info(FormulaId id) {
  const auto& catalog = formula_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(), [id](const FormulaInfo& f) { return f.id == id; });
  if (it == catalog.end()) throw UnknownFormula("formula id out of range");
  return *it;
}

std::string_view formula_name(FormulaId id) { return formula_info(id).name; }

FormulaId formula_from_name(std::string_view name) {
  for (const auto& f : formula_catalog()) {
    if (f.name == name) return f.id;
  }
  throw UnknownFormula("unknown formula '" + std::string(name) + "'");
}

StepSet formula_step_set(FormulaId id, std::size_t dimension, unsigned bound_m) {
  const auto& info = formula_info(id);
  if (dimension < info.min_dimension || (info.max_dimension != 0 && dimension > info.max_dimension)) {
    throw DomainError(std::string(info.name) + " is not defined for N = " + std::to_string(dimension));
  }
  if (id == FormulaId::comp_boundedM_asym) {
    if (bound_m == 0) throw DomainError("comp_boundedM_asym needs a part bound M >= 1");
    std::vector<unsigned> parts;
    for (unsigned v = 1; v <= bound_m; ++v) parts.push_back(v);
    return StepSet::product({BaseSet::finite(std::move(parts))});
  }
  std::string text(info.step_set);
  if (const auto pos = text.find('N'); pos != std::string::npos) {
    text.replace(pos, 1, std::to_string(dimension));
  }
  return parse_step_set(text);
}

namespace {

void require_arity(const FormulaInfo& info, const LengthTuple& l) {
  const auto n = l.dimension();
  if (n < info.min_dimension || (info.max_dimension != 0 && n > info.max_dimension)) {
    throw DomainError(std::string(info.name) + " is not defined for N = " + std::to_string(n));
  }
  if (info.diagonal_only && !l.is_diagonal()) {
    throw DomainError(std::string(info.name) + " is a diagonal formula; lengths must be equal");
  }
}

}  // namespace

Count evaluate_exact(FormulaId id, const LengthTuple& l) {
  const auto& info = formula_info(id);
  if (!info.exact) throw UnknownFormula(std::string(info.name) + " is an approximation, not an exact formula");
  require_arity(info, l);
  switch (id) {
    case FormulaId::comp_all:
    case FormulaId::comp_12:
    case FormulaId::comp_ge2:
    case FormulaId::comp_odd:
      return comp_closed(id, l[0]);
    case FormulaId::delannoy_powers:
      return delannoy_exact(l[0], l[1], DelannoyVariant::powers);
    case FormulaId::delannoy_trinomial:
      return delannoy_exact(l[0], l[1], DelannoyVariant::trinomial);
    case FormulaId::star:
      return star(l[0], l[1]);
    case FormulaId::starstar:
      return starstar(l[0], l[1]);
    case FormulaId::whitney_exact:
      return whitney_exact(l[0], l[1]);
    case FormulaId::halfopen_exact:
      return halfopen_exact(l[0], l[1]);
    case FormulaId::box13_exact:
      return box13_exact(l[0], l[1]);
    case FormulaId::slowinski:
      return slowinski(l);
    case FormulaId::dyadic_sum:
      return dyadic_sum(l).value;
    case FormulaId::andrews:
      return andrews(l);
    case FormulaId::duchi_diag:
      return duchi_diag(l[0], static_cast<unsigned>(l.dimension())).value;
    case FormulaId::box12_exact:
      return box12_exact(l);
    default:
      break;
  }
  throw UnknownFormula(std::string(info.name) + " has no exact evaluator");
}

ApproxValue evaluate_approx(FormulaId id, const LengthTuple& l, unsigned bound_m) {
  const auto& info = formula_info(id);
  if (info.exact) throw UnknownFormula(std::string(info.name) + " is exact; use the formula verb");
  if (id == FormulaId::unitcube3_growth) {
    const double d = unitcube3_growth();
    return {id, {}, d, std::log(d)};
  }
  require_arity(info, l);
  const auto n = static_cast<unsigned>(l.dimension());
  switch (id) {
    case FormulaId::comp_boundedM_asym:
      return comp_bounded_asym(l[0], bound_m);
    case FormulaId::delannoy_asym:
      return delannoy_asym(l[0], l[1]);
    case FormulaId::whitney_asym:
      return whitney_asym(l[0]);
    case FormulaId::halfopen_asym:
      return halfopen_asym(l[0]);
    case FormulaId::griggs_asym:
      return griggs_asym(l[0], n);
    case FormulaId::box12_asym:
      return box12_asym(l[0], n);
    default:
      break;
  }
  throw UnknownFormula(std::string(info.name) + " has no approximate evaluator");
}

}  // namespace mmalign
