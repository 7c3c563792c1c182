#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"

namespace mmalign {

unsigned MultiplicityVector::parts() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
}

Count MultiplicityVector::multinomial() const { return mmalign::multinomial(multiplicities); }

namespace {

struct MultiplicitySearch {
  std::vector<StepVector> steps;
  std::vector<unsigned> r;
  std::vector<MultiplicityVector> out;

  void walk(std::size_t i, std::vector<unsigned>& rest, unsigned parts_left) {
    if (i == steps.size()) {
      if (parts_left == 0 && std::all_of(rest.begin(), rest.end(), [](unsigned v) { return v == 0; })) {
        out.push_back({steps, r});
      }
      return;
    }
    const auto& s = steps[i];
    unsigned copies = 0;
    while (true) {
      r[i] = copies;
      walk(i + 1, rest, parts_left);
      if (parts_left == 0 || !step_fits(rest, s)) break;
      for (std::size_t j = 0; j < s.size(); ++j) rest[j] -= s[j];
      --parts_left;
      ++copies;
    }
    for (std::size_t j = 0; j < s.size(); ++j) rest[j] += s[j] * copies;
    r[i] = 0;
  }
};

}  // namespace

std::vector<MultiplicityVector> multiplicity_vectors(const StepSet& s, const LengthTuple& l, unsigned k) {
  detail::require_dimension(s, l);
  MultiplicitySearch search{s.materialize(l), {}, {}};
  search.r.assign(search.steps.size(), 0);
  std::vector<unsigned> rest = l.values();
  search.walk(0, rest, k);
  return std::move(search.out);
}

MultinomialTable MultinomialTable::compute(const StepSet& s, const LengthTuple& box) {
  detail::require_dimension(s, box);
  MultinomialTable table;
  table.index_ = BoxIndex(box);
  // each column has entry sum >= 1
  table.max_parts_ = box.total();
  const std::size_t width = table.max_parts_ + 1;
  table.values_.assign(table.index_.size() * width, Count(0));
  table.values_[0] = 1;

  std::vector<std::vector<unsigned>> cells(table.index_.size());
  {
    std::vector<unsigned> m(box.dimension(), 0);
    std::size_t flat = 0;
    do {
      cells[flat++] = m;
    } while (table.index_.next(m));
  }

  std::vector<std::vector<Count>> choose(width, std::vector<Count>(width));
  for (unsigned n = 0; n < width; ++n) {
    for (unsigned k = 0; k <= n; ++k) choose[n][k] = binomial(n, k);
  }

  Count weight;
  for (const auto& step : s.materialize(box)) {
    const std::size_t offset = table.index_.offset(step);
    // Descending order: a cell is read before any of its own sources add
    // copies of this step into it, so every cell is extended from its value
    // over the previous steps only.
    for (std::size_t flat = table.index_.size(); flat-- > 0;) {
      const auto& m = cells[flat];
      for (unsigned k = 0; k < width; ++k) {
        const Count& source = table.values_[flat * width + k];
        if (source == 0) continue;
        std::vector<unsigned> target = m;
        std::size_t target_flat = flat;
        for (unsigned r = 1; k + r < width; ++r) {
          bool fits = true;
          for (std::size_t j = 0; j < step.size(); ++j) {
            target[j] += step[j];
            fits = fits && target[j] <= box[j];
          }
          if (!fits) break;
          target_flat += offset;
          weight = source * choose[k + r][r];
          table.values_[target_flat * width + k + r] += weight;
        }
      }
    }
  }
  return table;
}

const Count& MultinomialTable::at(const LengthTuple& m, unsigned k) const {
  if (!box().dominates(m) || k > max_parts_) {
    throw DomainError("query (" + m.to_string() + "; " + std::to_string(k) + ") lies outside the multinomial table");
  }
  return values_[index_.flat(m) * (max_parts_ + 1) + k];
}

Count MultinomialTable::total(const LengthTuple& m) const {
  Count sum = 0;
  for (unsigned k = 0; k <= max_parts_; ++k) sum += at(m, k);
  return sum;
}

Count count_multinomial(const StepSet& s, const LengthTuple& l) { return MultinomialTable::compute(s, l).total(l); }

}  // namespace mmalign
