#pragma once

#include <gmpxx.h>

#include <string>

namespace mmalign {

// Exact non-negative counts. Signed intermediate sums (inclusion/exclusion)
// use the same type.
using Count = mpz_class;
using Rational = mpq_class;

// C(n, k), zero unless 0 <= k <= n. Negative n is allowed and yields zero.
Count binomial(long n, long k);

// k! / (r_1! ... r_t!) for k = sum r_i.
template <class Range>
Count multinomial(const Range& parts) {
  Count result = 1;
  long total = 0;
  for (auto r : parts) {
    total += static_cast<long>(r);
    result *= binomial(total, static_cast<long>(r));
  }
  return result;
}

inline std::string to_decimal(const Count& value) { return value.get_str(10); }

// Nearest integer to q, ties away from zero.
Count round_nearest(const Rational& q);

}  // namespace mmalign
