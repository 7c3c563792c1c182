#include <cmath>
#include <numbers>

#include "mmalign/errors.hpp"
#include "mmalign/formulas.hpp"

namespace mmalign {

namespace {

using std::numbers::pi;

// beyond this exponent direct powers risk overflow; switch to logarithms
constexpr double kDirectExponentLimit = 600.0;

ApproxValue from_log(FormulaId id, std::vector<unsigned> inputs, double log_value) {
  return {id, std::move(inputs), std::exp(log_value), log_value};
}

ApproxValue from_direct(FormulaId id, std::vector<unsigned> inputs, double value) {
  return {id, std::move(inputs), value, std::log(value)};
}

void require_positive(unsigned l, std::string_view what) {
  if (l == 0) throw DomainError(std::string(what) + " is undefined at l = 0");
}

}  // namespace

std::pair<double, long> ApproxValue::mantissa_exponent() const {
  const double log10_value = log_value / std::numbers::ln10;
  const double exponent = std::floor(log10_value);
  return {std::pow(10.0, log10_value - exponent), static_cast<long>(exponent)};
}

AsymptoticConstants asymptotic_constants(unsigned dimension) {
  if (dimension == 0) throw DomainError("asymptotic constants need N >= 1");
  const double n = dimension;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  AsymptoticConstants c;
  c.dimension = dimension;
  c.phi = phi;
  c.a = -std::pow(phi, n - 1) * std::pow(1 + phi, n - 1) * (1 + 2 * phi);
  c.h = n * std::pow(phi / (1 + 3 * phi + 2 * phi * phi), n - 1);
  c.b0 = 1.0 / (-phi * c.a * std::sqrt(std::pow(2 * pi, n - 1) * c.h));
  return c;
}

double bounded_composition_root(unsigned m) {
  if (m == 0) throw DomainError("the part bound M must be at least 1");
  if (m == 1) return 1.0;
  // g(X) = 1/X + ... + 1/X^M - 1 is decreasing, g(1) = M - 1 > 0, g(2) < 0
  auto g = [m](double x) {
    double sum = 0, p = 1;
    for (unsigned j = 0; j < m; ++j) {
      p /= x;
      sum += p;
    }
    return sum - 1.0;
  };
  double lo = 1.0, hi = 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ApproxValue comp_bounded_asym(unsigned l, unsigned m) {
  require_positive(l, "comp_boundedM_asym");
  const double root = bounded_composition_root(m);
  const double sigma = 1.0 / root;
  double derivative = 0, p = 1;  // G'(sigma) = sum j sigma^(j-1)
  for (unsigned j = 1; j <= m; ++j) {
    derivative += j * p;
    p *= sigma;
  }
  if (l + 1.0 > kDirectExponentLimit) {
    return from_log(FormulaId::comp_boundedM_asym, {l, m}, (l + 1.0) * std::log(root) - std::log(derivative));
  }
  return from_direct(FormulaId::comp_boundedM_asym, {l, m}, std::pow(root, l + 1.0) / derivative);
}

ApproxValue delannoy_asym(unsigned l1, unsigned l2) {
  if (l1 == 0 || l2 == 0) throw DomainError("delannoy_asym needs both lengths >= 1");
  const double a = l1, b = l2;
  const double r = std::hypot(a, b);
  if (a + b > kDirectExponentLimit) {
    return from_log(FormulaId::delannoy_asym, {l1, l2}, a * std::log((r + b) / a) + b * std::log((r + a) / b));
  }
  return from_direct(FormulaId::delannoy_asym, {l1, l2}, std::pow((r + b) / a, a) * std::pow((r + a) / b, b));
}

ApproxValue whitney_asym(unsigned l) {
  require_positive(l, "whitney_asym");
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double factor = std::sqrt(3.0 + 7.0 / std::sqrt(5.0));
  const double scale = std::sqrt(8.0 * pi * l);
  if (2.0 * l > kDirectExponentLimit) {
    return from_log(FormulaId::whitney_asym, {l}, std::log(factor) + 2.0 * l * std::log(golden) - std::log(scale));
  }
  return from_direct(FormulaId::whitney_asym, {l}, factor * std::pow(golden, 2.0 * l) / scale);
}

ApproxValue halfopen_asym(unsigned l) {
  require_positive(l, "halfopen_asym");
  const double base = 3.0 + 2.0 * std::sqrt(2.0);
  const double scale = 4.0 * std::sqrt(pi * l);
  if (l > kDirectExponentLimit) {
    return from_log(FormulaId::halfopen_asym, {l}, 0.25 * std::log(2.0) + l * std::log(base) - std::log(scale));
  }
  return from_direct(FormulaId::halfopen_asym, {l}, std::pow(2.0, 0.25) * std::pow(base, l) / scale);
}

ApproxValue griggs_asym(unsigned l, unsigned n) {
  require_positive(l, "griggs_asym");
  if (n == 0) throw DomainError("griggs_asym needs N >= 1");
  const double nn = n;
  const double c = std::pow(2.0, 1.0 / nn) - 1.0;
  const double denominator =
      c * std::pow(2.0, (nn * nn - 1.0) / (2.0 * nn)) * std::sqrt(nn * std::pow(pi * l, nn - 1.0));
  if (nn * l > kDirectExponentLimit) {
    return from_log(FormulaId::griggs_asym, {l, n}, -nn * l * std::log(c) - std::log(denominator));
  }
  return from_direct(FormulaId::griggs_asym, {l, n}, std::pow(c, -nn * l) / denominator);
}

ApproxValue box12_asym(unsigned l, unsigned n) {
  require_positive(l, "box12_asym");
  const auto c = asymptotic_constants(n);
  const double nn = n;
  if (nn * l > kDirectExponentLimit) {
    return from_log(FormulaId::box12_asym, {l, n},
                    -nn * l * std::log(c.phi) + std::log(c.b0) + (1.0 - nn) / 2.0 * std::log(l));
  }
  return from_direct(FormulaId::box12_asym, {l, n},
                     std::pow(c.phi, -nn * l) * c.b0 * std::pow(static_cast<double>(l), (1.0 - nn) / 2.0));
}

double unitcube3_growth() { return 12.0 * std::cbrt(4.0) + 15.0 * std::cbrt(2.0) + 19.0; }

}  // namespace mmalign
