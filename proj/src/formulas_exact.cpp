#include <algorithm>
#include <functional>

#include "mmalign/errors.hpp"
#include "mmalign/formulas.hpp"

namespace mmalign {

namespace {

long as_long(unsigned v) { return static_cast<long>(v); }

Count power_of_two(unsigned e) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

// Weak compositions of n into m parts; the empty composition exists only for n = 0.
Count weak_compositions(unsigned n, long m) {
  if (m <= 0) return (m == 0 && n == 0) ? 1 : 0;
  return binomial(as_long(n) + m - 1, as_long(n));
}

// Compositions of l into k parts from {1, 2, 3}: i parts equal 3 and
// l - k - 2i parts equal 2 among the remaining k - i.
Count parts_upto_three(unsigned k, unsigned l) {
  Count sum = 0;
  for (long i = 0; i <= as_long(k); ++i) {
    sum += binomial(as_long(k), i) * binomial(as_long(k) - i, as_long(l) - as_long(k) - 2 * i);
  }
  return sum;
}

// Sum over mu >= 0 of term(mu) for a series of non-negative rationals whose
// value is an integer. Beyond `monotone_from` the terms are positive with
// non-increasing ratio q, so once q <= 3/4 the tail after mu is at most
// term(mu + 1) / (1 - q).
SeriesEvaluation sum_to_integer(const std::function<Rational(unsigned)>& term, unsigned monotone_from) {
  const Rational tolerance("1/1000000000000");
  const Rational three_quarters(3, 4);
  Rational partial = 0;
  Rational current = term(0);
  for (unsigned mu = 0;; ++mu) {
    partial += current;
    Rational next = term(mu + 1);
    if (mu >= monotone_from && current > 0) {
      const Rational ratio = next / current;
      if (ratio <= three_quarters) {
        const Rational tail_bound = next / (Rational(1) - ratio);
        if (tail_bound < tolerance) {
          SeriesEvaluation out;
          out.value = round_nearest(partial);
          out.residual = Rational(abs(partial - Rational(out.value))).get_d();
          out.terms = mu + 1;
          return out;
        }
      }
    }
    current = std::move(next);
  }
}

}  // namespace

Count fibonacci(unsigned n) {
  Count a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    Count t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Count comp_closed(FormulaId id, unsigned l) {
  if (l == 0) {
    switch (id) {
      case FormulaId::comp_all:
      case FormulaId::comp_12:
      case FormulaId::comp_ge2:
      case FormulaId::comp_odd:
        return 1;
      default:
        break;
    }
  }
  switch (id) {
    case FormulaId::comp_all:
      return power_of_two(l - 1);
    case FormulaId::comp_12:
      return fibonacci(l + 1);
    case FormulaId::comp_ge2:
      return fibonacci(l - 1);
    case FormulaId::comp_odd:
      return fibonacci(l);
    default:
      throw UnknownFormula(std::string(formula_name(id)) + " is not a composition closed form");
  }
}

Count delannoy_exact(unsigned l1, unsigned l2, DelannoyVariant variant) {
  Count sum = 0;
  const unsigned top = std::min(l1, l2);
  for (unsigned d = 0; d <= top; ++d) {
    if (variant == DelannoyVariant::powers) {
      sum += power_of_two(d) * binomial(l1, d) * binomial(l2, d);
    } else {
      // (l1 + l2 - d)! / (d! (l1 - d)! (l2 - d)!)
      const long n = as_long(l1) + as_long(l2) - d;
      sum += binomial(n, d) * binomial(n - d, as_long(l1) - d);
    }
  }
  return sum;
}

Count star(unsigned l1, unsigned l2) {
  Count sum = 0;
  for (long k = 0; k <= as_long(l1); ++k) {
    sum += binomial(k, 2 * k - as_long(l1)) * binomial(2 * k - as_long(l1), as_long(l2) - k);
  }
  return sum;
}

Count starstar(unsigned l1, unsigned l2) {
  const long hi = std::min(l1, l2);
  const long lo = (std::max(l1, l2) + 1) / 2;
  Count sum = 0;
  for (long k = lo; k <= hi; ++k) {
    // inclusion/exclusion over columns forced to (2,2)
    for (long j = 0; j <= k; ++j) {
      Count term = binomial(k, j) * binomial(k - j, as_long(l1) - k - j) * binomial(k - j, as_long(l2) - k - j);
      if (j % 2) {
        sum -= term;
      } else {
        sum += term;
      }
    }
  }
  return sum;
}

Count whitney_exact(unsigned l1, unsigned l2) {
  // row i of a k-column alignment holds l_i - k entries equal to 2
  Count sum = 0;
  const long top = std::min(l1, l2);
  for (long k = 0; k <= top; ++k) sum += binomial(k, as_long(l1) - k) * binomial(k, as_long(l2) - k);
  return sum;
}

Count halfopen_exact(unsigned l1, unsigned l2) {
  if (l1 == 0 && l2 == 0) return 1;
  Count sum = 0;
  for (long k = 1; k <= as_long(l1); ++k) {
    sum += binomial(as_long(l1) - 1, k - 1) * binomial(as_long(l2) + k - 1, k - 1);
  }
  return sum;
}

Count box13_exact(unsigned l1, unsigned l2) {
  Count sum = 0;
  const unsigned top = std::min(l1, l2);
  for (unsigned k = 0; k <= top; ++k) sum += parts_upto_three(k, l1) * parts_upto_three(k, l2);
  return sum;
}

Count slowinski(const LengthTuple& l) {
  if (l.dimension() == 0) throw DomainError("slowinski needs N >= 1");
  Count sum = 0;
  for (long k = l.max(); k <= as_long(l.total()); ++k) {
    for (long j = 0; j <= k; ++j) {
      Count term = binomial(k, j);
      for (std::size_t i = 0; i < l.dimension() && term != 0; ++i) term *= binomial(k - j, l[i]);
      if (j % 2) {
        sum -= term;
      } else {
        sum += term;
      }
    }
  }
  return sum;
}

SeriesEvaluation dyadic_sum(const LengthTuple& l) {
  if (l.dimension() == 0) throw DomainError("dyadic_sum needs N >= 1");
  return sum_to_integer(
      [&](unsigned mu) {
        Count numerator = 1;
        for (std::size_t i = 0; i < l.dimension(); ++i) numerator *= binomial(mu, l[i]);
        Rational t(numerator, power_of_two(mu + 1));
        t.canonicalize();
        return t;
      },
      l.max());
}

Count andrews(const LengthTuple& l) {
  if (l.dimension() == 0) throw DomainError("andrews needs N >= 1");
  Count sum = 0;
  for (long k = 0; k <= as_long(l.total()); ++k) {
    for (long i = 0; i <= k; ++i) {
      Count term = binomial(k, i);
      for (std::size_t j = 0; j < l.dimension() && term != 0; ++j) term *= weak_compositions(l[j], k - i);
      if (i % 2) {
        sum -= term;
      } else {
        sum += term;
      }
    }
  }
  return sum;
}

SeriesEvaluation duchi_diag(unsigned l, unsigned n) {
  if (l == 0) throw DomainError("duchi_diag is stated for l >= 1");
  if (n == 0) throw DomainError("duchi_diag needs N >= 1");
  // C(mu, l)^N 2^(l - mu - 2)
  return sum_to_integer(
      [&](unsigned mu) {
        Count numerator;
        mpz_pow_ui(numerator.get_mpz_t(), binomial(mu, l).get_mpz_t(), n);
        Rational t;
        if (l >= mu + 2) {
          t = Rational(numerator * power_of_two(l - mu - 2));
        } else {
          t = Rational(numerator, power_of_two(mu + 2 - l));
          t.canonicalize();
        }
        return t;
      },
      l);
}

Count box12_exact(const LengthTuple& l) {
  if (l.dimension() == 0) throw DomainError("box12_exact needs N >= 1");
  Count sum = 0;
  // row i of a k-column alignment holds l_i - k entries equal to 2
  for (long k = 0; k <= as_long(l.max()); ++k) {
    Count term = 1;
    for (std::size_t i = 0; i < l.dimension() && term != 0; ++i) term *= binomial(k, as_long(l[i]) - k);
    sum += term;
  }
  return sum;
}

}  // namespace mmalign
