#include <algorithm>
#include <limits>

#include "internal.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"

namespace mmalign {

Count compositions_with_parts(const BaseSet& base, unsigned l, unsigned k) {
  if (k == 0) return l == 0 ? 1 : 0;
  if (base.kind() == BaseSet::Kind::at_least && base.threshold() == 0) {
    // weak compositions
    return binomial(static_cast<long>(l) + k - 1, static_cast<long>(k) - 1);
  }
  if (base.kind() == BaseSet::Kind::at_least && base.threshold() == 1) {
    return binomial(static_cast<long>(l) - 1, static_cast<long>(k) - 1);
  }
  const auto parts = base.members_upto(l);
  // ways[n] = compositions of n into j parts, advanced one part at a time
  std::vector<Count> ways(l + 1, Count(0));
  ways[0] = 1;
  for (unsigned j = 0; j < k; ++j) {
    std::vector<Count> next(l + 1, Count(0));
    for (unsigned n = 0; n <= l; ++n) {
      if (ways[n] == 0) continue;
      for (auto p : parts) {
        if (n + p > l) break;
        next[n + p] += ways[n];
      }
    }
    ways = std::move(next);
  }
  return ways[l];
}

Count count_independent(const std::vector<BaseSet>& bases, const LengthTuple& l) {
  if (bases.size() != l.dimension()) {
    throw DimensionMismatch(std::to_string(bases.size()) + " base sets for lengths (" + l.to_string() + ")");
  }
  // a base without 0 caps the number of parts at l_i / min(base)
  unsigned max_parts = std::numeric_limits<unsigned>::max();
  bool bounded = false;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].contains_zero()) continue;
    bounded = true;
    const auto smallest = bases[i].min_element();
    max_parts = std::min(max_parts, smallest ? l[i] / *smallest : 0u);
  }
  if (!bounded) throw UnboundedParts("every base set contains 0; the number of parts is unbounded");

  Count total = 0;
  for (unsigned k = 0; k <= max_parts; ++k) {
    Count term = 1;
    for (std::size_t i = 0; i < bases.size() && term != 0; ++i) term *= compositions_with_parts(bases[i], l[i], k);
    total += term;
  }
  return total;
}

Count matrix_compositions(std::size_t rows, unsigned n) {
  if (rows == 0) throw DomainError("matrix compositions need at least one row");
  const auto box = LengthTuple::diagonal(rows, n);
  const auto table = default_table_cache().get(StepSet::all_positive(rows), box);
  const BoxIndex cells(box);
  Count total = 0;
  std::vector<unsigned> m(rows, 0);
  do {
    unsigned sum = 0;
    for (auto v : m) sum += v;
    if (sum == n) total += table->at(LengthTuple(m));
  } while (cells.next(m));
  return total;
}

Rational prob_sum(const StepSet& s, unsigned k, const LengthTuple& l) {
  detail::require_dimension(s, l);
  if (!s.is_finite()) {
    throw InfiniteStepSet("uniform distribution on the infinite step set " + s.to_string() + " is undefined");
  }
  const auto size = s.members().size();
  if (size == 0 && k > 0) throw DomainError("uniform distribution on the empty step set is undefined");
  Count denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), size, k);
  Rational p(count_with_parts(s, l, k), denominator);
  p.canonicalize();
  return p;
}

}  // namespace mmalign
