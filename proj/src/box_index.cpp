#include "mmalign/box_index.hpp"

#include "mmalign/errors.hpp"

namespace mmalign {

BoxIndex::BoxIndex(const LengthTuple& box) : box_(box), strides_(box.dimension(), 1) {
  size_ = 1;
  for (std::size_t i = box.dimension(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(box[i]) + 1;
  }
}

std::size_t BoxIndex::flat(const std::vector<unsigned>& m) const {
  if (m.size() != dimension()) throw DimensionMismatch("multi-index dimension does not match the box");
  std::size_t out = 0;
  for (std::size_t i = 0; i < m.size(); ++i) out += strides_[i] * m[i];
  return out;
}

std::vector<unsigned> BoxIndex::unflatten(std::size_t flat) const {
  std::vector<unsigned> m(dimension());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = static_cast<unsigned>(flat / strides_[i]);
    flat %= strides_[i];
  }
  return m;
}

bool BoxIndex::next(std::vector<unsigned>& m) const {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] < box_[i]) {
      ++m[i];
      return true;
    }
    m[i] = 0;
  }
  return false;
}

}  // namespace mmalign
