#include "internal.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"

namespace mmalign {

namespace {

struct Enumerator {
  const CountTable& table;
  std::vector<std::size_t> offsets;
  std::vector<StepVector> path;
  std::vector<AlignmentMatrix> out;

  // Emits every column sequence for residual m. The number of alignments
  // starting with column s equals a(m - s), so zero entries prune dead ends.
  void walk(std::vector<unsigned>& m, std::size_t flat) {
    if (flat == 0) {
      out.push_back(AlignmentMatrix::from_columns(m.size(), path));
      return;
    }
    for (std::size_t i = 0; i < table.steps().size(); ++i) {
      const auto& step = table.steps()[i];
      if (!step_fits(m, step) || table.at_flat(flat - offsets[i]) == 0) continue;
      for (std::size_t j = 0; j < m.size(); ++j) m[j] -= step[j];
      path.push_back(step);
      walk(m, flat - offsets[i]);
      path.pop_back();
      for (std::size_t j = 0; j < m.size(); ++j) m[j] += step[j];
    }
  }
};

}  // namespace

std::vector<AlignmentMatrix> enumerate(const StepSet& s, const LengthTuple& l, unsigned long cap) {
  detail::require_dimension(s, l);
  const auto table = default_table_cache().get(s, l);
  const Count total = table->at(l);
  if (total > cap) throw EnumerationCapExceeded(total, Count(cap));

  Enumerator e{*table, {}, {}, {}};
  for (const auto& step : table->steps()) e.offsets.push_back(table->index().offset(step));
  e.out.reserve(total.get_ui());
  std::vector<unsigned> m = l.values();
  e.walk(m, table->index().flat(l));
  return std::move(e.out);
}

}  // namespace mmalign
