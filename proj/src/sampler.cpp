#include <algorithm>

#include "internal.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"

namespace mmalign {

Sampler::Sampler(const StepSet& s, const LengthTuple& l, std::uint64_t seed)
    : table_(default_table_cache().get(s, l)), lengths_(l), rng_(gmp_randinit_mt) {
  if (table_->at(l) == 0) {
    throw NoAlignmentExists("no " + s.to_string() + "-alignment of lengths (" + l.to_string() + ") exists");
  }
  rng_.seed(Count(static_cast<unsigned long>(seed)));
}

AlignmentMatrix Sampler::next() {
  const auto& index = table_->index();
  const auto& steps = table_->steps();
  std::vector<unsigned> m = lengths_.values();
  std::size_t flat = index.flat(m);
  std::vector<StepVector> columns;
  while (flat != 0) {
    const Count draw = rng_.get_z_range(table_->at_flat(flat));
    Count cumulative = 0;
    const StepVector* chosen = nullptr;
    for (const auto& step : steps) {
      if (!step_fits(m, step)) continue;
      const std::size_t prev = flat - index.offset(step);
      cumulative += table_->at_flat(prev);
      if (draw < cumulative) {
        chosen = &step;
        flat = prev;
        break;
      }
    }
    // the cumulative weights sum to a(m), so some step is always chosen
    for (std::size_t j = 0; j < m.size(); ++j) m[j] -= (*chosen)[j];
    columns.push_back(*chosen);
  }
  std::reverse(columns.begin(), columns.end());
  return AlignmentMatrix::from_columns(lengths_.dimension(), columns);
}

AlignmentMatrix sample_uniform(const StepSet& s, const LengthTuple& l, std::uint64_t seed) {
  detail::require_dimension(s, l);
  return Sampler(s, l, seed).next();
}

}  // namespace mmalign
