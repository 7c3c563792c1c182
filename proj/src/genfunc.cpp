#include "mmalign/genfunc.hpp"

#include <algorithm>

#include "internal.hpp"
#include "mmalign/errors.hpp"

namespace mmalign {

SeriesBox::SeriesBox(const LengthTuple& box) : index_(box), coeffs_(index_.size(), Count(0)) {}

SeriesBox SeriesBox::one(const LengthTuple& box) {
  SeriesBox out(box);
  out.coeffs_[0] = 1;
  return out;
}

SeriesBox SeriesBox::monomial_sum(const LengthTuple& box, const std::vector<StepVector>& steps) {
  SeriesBox out(box);
  for (const auto& s : steps) {
    if (box.fits(s)) out.coeffs_[out.index_.flat(s)] += 1;
  }
  return out;
}

const Count& SeriesBox::coeff(const LengthTuple& m) const {
  if (!box().dominates(m)) throw DomainError("coefficient " + m.to_string() + " lies outside the series box");
  return coeffs_[index_.flat(m)];
}

bool SeriesBox::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Count& c) { return c == 0; });
}

SeriesBox& SeriesBox::operator+=(const SeriesBox& other) {
  if (other.box() != box()) throw DimensionMismatch("adding series over different boxes");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SeriesBox SeriesBox::times(const std::vector<StepVector>& support) const {
  SeriesBox out(box());
  std::vector<unsigned> m(box().dimension(), 0);
  std::size_t flat = 0;
  do {
    const Count& c = coeffs_[flat];
    if (c != 0) {
      for (const auto& s : support) {
        bool inside = true;
        for (std::size_t j = 0; j < s.size() && inside; ++j) inside = m[j] + s[j] <= box()[j];
        if (inside) out.coeffs_[flat + index_.offset(s)] += c;
      }
    }
    ++flat;
  } while (index_.next(m));
  return out;
}

SeriesBox series_coefficients(const StepSet& s, const LengthTuple& box) {
  detail::require_dimension(s, box);
  const auto support = s.materialize(box);
  SeriesBox power = SeriesBox::one(box);
  SeriesBox sum = power;
  // every step raises the total degree by at least 1
  for (unsigned k = 1; k <= box.total(); ++k) {
    power = power.times(support);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

SeriesBox fixed_k_coefficients(const StepSet& s, const LengthTuple& box, unsigned k) {
  detail::require_dimension(s, box);
  const auto support = s.materialize(box);
  SeriesBox power = SeriesBox::one(box);
  for (unsigned j = 0; j < k; ++j) {
    power = power.times(support);
    if (power.is_zero()) break;
  }
  return power;
}

}  // namespace mmalign
