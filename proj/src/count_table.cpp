#include <algorithm>

#include "internal.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"

namespace mmalign {

namespace detail {

void require_dimension(const StepSet& s, const LengthTuple& l) {
  if (s.dimension() != l.dimension()) {
    throw DimensionMismatch("lengths " + l.to_string() + " have dimension " + std::to_string(l.dimension()) +
                            " but step set " + s.to_string() + " has dimension " + std::to_string(s.dimension()));
  }
}

}  // namespace detail

CountTable CountTable::compute(const StepSet& s, const LengthTuple& box) {
  detail::require_dimension(s, box);
  CountTable table;
  table.index_ = BoxIndex(box);
  table.steps_ = s.materialize(box);
  table.values_.assign(table.index_.size(), Count(0));

  std::vector<std::size_t> offsets;
  offsets.reserve(table.steps_.size());
  for (const auto& step : table.steps_) offsets.push_back(table.index_.offset(step));

  std::vector<unsigned> m(box.dimension(), 0);
  table.values_[0] = 1;
  std::size_t flat = 0;
  while (table.index_.next(m)) {
    ++flat;
    Count& cell = table.values_[flat];
    for (std::size_t i = 0; i < table.steps_.size(); ++i) {
      if (step_fits(m, table.steps_[i])) cell += table.values_[flat - offsets[i]];
    }
  }
  return table;
}

const Count& CountTable::at(const LengthTuple& m) const {
  if (!box().dominates(m)) {
    throw DomainError("multi-index " + m.to_string() + " lies outside the table box " + box().to_string());
  }
  return values_[index_.flat(m)];
}

std::shared_ptr<const CountTable> TableCache::get(const StepSet& s, const LengthTuple& l) {
  detail::require_dimension(s, l);
  const std::string key = s.to_string();
  std::lock_guard<std::mutex> lock(mutex_);
  auto& bucket = tables_[key];
  for (const auto& table : bucket) {
    if (table->box().dominates(l)) return table;
  }
  auto table = std::make_shared<const CountTable>(CountTable::compute(s, l));
  // tables dominated by the new one are no longer useful
  std::erase_if(bucket, [&](const auto& t) { return l.dominates(t->box()); });
  bucket.push_back(table);
  return table;
}

void TableCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  tables_.clear();
}

std::size_t TableCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::size_t n = 0;
  for (const auto& [key, bucket] : tables_) n += bucket.size();
  return n;
}

TableCache& default_table_cache() {
  static TableCache cache;
  return cache;
}

Count count(const StepSet& s, const LengthTuple& l) { return default_table_cache().get(s, l)->at(l); }

PartsTable PartsTable::compute(const StepSet& s, const LengthTuple& box, unsigned max_parts) {
  detail::require_dimension(s, box);
  PartsTable table;
  table.index_ = BoxIndex(box);
  const auto steps = s.materialize(box);
  std::vector<std::size_t> offsets;
  for (const auto& step : steps) offsets.push_back(table.index_.offset(step));

  table.layers_.assign(max_parts + 1, std::vector<Count>(table.index_.size(), Count(0)));
  table.layers_[0][0] = 1;
  for (unsigned k = 1; k <= max_parts; ++k) {
    const auto& prev = table.layers_[k - 1];
    auto& layer = table.layers_[k];
    std::vector<unsigned> m(box.dimension(), 0);
    std::size_t flat = 0;
    while (table.index_.next(m)) {
      ++flat;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (step_fits(m, steps[i])) layer[flat] += prev[flat - offsets[i]];
      }
    }
  }
  return table;
}

const Count& PartsTable::at(const LengthTuple& m, unsigned k) const {
  if (!box().dominates(m) || k > max_parts()) {
    throw DomainError("query (" + m.to_string() + "; " + std::to_string(k) + ") lies outside the parts table");
  }
  return layers_[k][index_.flat(m)];
}

Count count_with_parts(const StepSet& s, const LengthTuple& l, unsigned k) {
  detail::require_dimension(s, l);
  // every column has entry sum >= 1
  if (k > l.total()) return 0;
  return PartsTable::compute(s, l, k).at(l, k);
}

std::vector<Count> parts_distribution(const StepSet& s, const LengthTuple& l) {
  const auto table = PartsTable::compute(s, l, l.total());
  std::vector<Count> out;
  out.reserve(l.total() + 1);
  for (unsigned k = 0; k <= l.total(); ++k) out.push_back(table.at(l, k));
  return out;
}

}  // namespace mmalign
