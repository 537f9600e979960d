#include "geogrundy/bounds.hpp"

#include <stdexcept>

namespace geogrundy {

std::int64_t binomial2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

std::int64_t binomial4(std::int64_t k) { return k < 4 ? 0 : k * (k - 1) * (k - 2) * (k - 3) / 24; }

std::int64_t floor(const Rational& r) {
  const auto q = r.numerator() / r.denominator();  // denominator > 0
  return r.numerator() % r.denominator() < 0 ? q - 1 : q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

IncidenceBudget incidence_budget(int n, Criterion c) {
  if (c != Criterion::Crossing && c != Criterion::Intersection)
    throw std::invalid_argument("incidence_budget: Crossing or Intersection only");
  IncidenceBudget b{n, c, 0, binomial4(n)};
  if (c == Criterion::Intersection) b.m = static_cast<std::int64_t>(n) * binomial2(n - 1);
  return b;
}

std::int64_t lcr_formula(int n) {
  if (n < 3) throw std::invalid_argument("lcr_formula: n must be at least 3");
  if (n == 8) return 4;
  if (n == 14) return 15;
  const std::int64_t k = n;
  switch (n % 3) {
    case 0: return (k - 3) * (k - 3) / 9;
    case 1: return (k - 1) * (k - 4) / 9;
    default: return (k - 2) * (k - 2) / 9 - (k - 2) / 6;
  }
}

std::int64_t counting_upper_bound(int n, Criterion c) {
  if (n < 4) throw std::invalid_argument("counting_upper_bound: n must be at least 4");
  const std::int64_t k = n;
  switch (c) {
    case Criterion::Crossing:
    case Criterion::Intersection: {
      // At most n singleton classes; colour gamma - i needs gamma - i - 1
      // adjacent pairs per edge. For Crossing m = 0, so m + cr = cr.
      const auto b = incidence_budget(n, c);
      const std::int64_t budget = b.m + b.cr;
      std::int64_t gamma = 1;
      while (binomial2(gamma + 1) + binomial2(gamma + 1 - k) <= budget) ++gamma;
      return gamma;
    }
    case Criterion::Disjointness: {
      const std::int64_t singles = k / 2;
      return (binomial2(k) - singles) / 2 + singles;
    }
    case Criterion::NonCrossing:
      return floor(Rational(k * (k + 5), 4) - 3);
  }
  return 0;
}

std::int64_t triangle_color_count(int n) {
  const std::int64_t k = n;
  switch (n % 6) {
    case 1:
    case 3: return (k - 1) * k / 6;
    case 0:
    case 2: return (k + 1) * k / 6;
    case 4: return (k * k + k + 4) / 6;
    default: return (k * k - k + 16) / 6;
  }
}

Rational lower_bound_formula(int n, Criterion c, Setting setting) {
  if (n < 4) throw std::invalid_argument("lower_bound_formula: n must be at least 4");
  const std::int64_t k = n;
  switch (c) {
    case Criterion::Intersection:
    case Criterion::Crossing:
      if (setting == Setting::General) return Rational(k * k / 400);
      if (c == Criterion::Intersection) return Rational(k * k, 8) + Rational(k, 4);
      {
        std::int64_t m = 1;
        while (2 * m <= k) m *= 2;
        return Rational(m * m - 16, 12);
      }
    case Criterion::Disjointness:
      return Rational((k - 3) * (k - 1), 8);
    case Criterion::NonCrossing:
      return Rational(triangle_color_count(n));
  }
  return Rational(0);
}

}  // namespace geogrundy
