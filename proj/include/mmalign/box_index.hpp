#pragma once

#include <cstddef>
#include <vector>

#include "mmalign/core.hpp"

namespace mmalign {

/// Row-major flat addressing of the multi-indices 0 <= m <= box.
///
/// Flat order coincides with lexicographic order, so m - s always precedes m
/// for a non-zero step s.
class BoxIndex {
 public:
  BoxIndex() = default;
  explicit BoxIndex(const LengthTuple& box);

  const LengthTuple& box() const { return box_; }
  std::size_t dimension() const { return box_.dimension(); }
  std::size_t size() const { return size_; }

  std::size_t flat(const std::vector<unsigned>& m) const;
  std::size_t flat(const LengthTuple& m) const { return flat(m.values()); }
  // m - s lives at flat(m) - offset(s) whenever s <= m
  std::size_t offset(const StepVector& s) const { return flat(s); }
  std::vector<unsigned> unflatten(std::size_t flat) const;

  // advances m to the next multi-index in flat order; false after the last
  bool next(std::vector<unsigned>& m) const;

  friend bool operator==(const BoxIndex&, const BoxIndex&) = default;

 private:
  LengthTuple box_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

inline bool step_fits(const std::vector<unsigned>& m, const StepVector& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > m[i]) return false;
  }
  return true;
}

}  // namespace mmalign
