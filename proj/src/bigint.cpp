#include "mmalign/bigint.hpp"

namespace mmalign {

Count binomial(long n, long k) {
  Count result;
  if (n < 0 || k < 0 || k > n) {
    return result;
  }
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Count round_nearest(const Rational& q) {
  // floor(q + 1/2) for q >= 0, mirrored for q < 0
  Rational shifted = abs(q) + Rational(1, 2);
  Count result;
  mpz_fdiv_q(result.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return sgn(q) < 0 ? Count(-result) : result;
}

}  // namespace mmalign
