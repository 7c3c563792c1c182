#pragma once

#include <vector>

#include "mmalign/bigint.hpp"
#include "mmalign/box_index.hpp"
#include "mmalign/core.hpp"

namespace mmalign {

/// A multivariate power series with exact coefficients, truncated to a box.
///
/// Any monomial exceeding the box in some coordinate is dropped as soon as it
/// is produced.
class SeriesBox {
 public:
  explicit SeriesBox(const LengthTuple& box);

  // 1 at the origin, 0 elsewhere
  static SeriesBox one(const LengthTuple& box);
  // sum of z^s over the given steps, truncated
  static SeriesBox monomial_sum(const LengthTuple& box, const std::vector<StepVector>& steps);

  const LengthTuple& box() const { return index_.box(); }
  const BoxIndex& index() const { return index_; }
  const Count& coeff(const LengthTuple& m) const;
  const Count& coeff_flat(std::size_t flat) const { return coeffs_[flat]; }
  bool is_zero() const;

  SeriesBox& operator+=(const SeriesBox& other);
  // truncated product with a sparse polynomial given by its support
  SeriesBox times(const std::vector<StepVector>& support) const;

  friend bool operator==(const SeriesBox&, const SeriesBox&) = default;

 private:
  BoxIndex index_;
  std::vector<Count> coeffs_;
};

// Coefficients of 1 / (1 - P(z)) with P(z) = sum over s in S of z^s, as the
// truncated sum of the powers P^k, k = 0 .. l_1 + ... + l_N.
SeriesBox series_coefficients(const StepSet& s, const LengthTuple& box);

// Coefficients of P(z)^k.
SeriesBox fixed_k_coefficients(const StepSet& s, const LengthTuple& box, unsigned k);

}  // namespace mmalign
