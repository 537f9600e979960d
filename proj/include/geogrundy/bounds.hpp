#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "geogrundy/conflict.hpp"

namespace geogrundy {

using Rational = boost::rational<std::int64_t>;

enum class Setting { Convex, General };

std::int64_t binomial2(std::int64_t k);  // C(k, 2), 0 for k < 2
std::int64_t binomial4(std::int64_t k);  // C(k, 4), 0 for k < 4

std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);

/// Endpoint and crossing incidences of the convex complete graph.
struct IncidenceBudget {
  int n = 0;
  Criterion criterion = Criterion::Intersection;
  std::int64_t m = 0;   // pairs meeting at a shared endpoint that count as adjacent
  std::int64_t cr = 0;  // crossing pairs, C(n, 4) in convex position
};

IncidenceBudget incidence_budget(int n, Criterion c);

/// Rectilinear local crossing number of K_n (closed form with the n = 8 and
/// n = 14 exceptions).
std::int64_t lcr_formula(int n);

/// Largest colour count a complete colouring can reach by incidence
/// counting. Crossing and Intersection assume convex position.
std::int64_t counting_upper_bound(int n, Criterion c);

/// The construction lower bound for the criterion and setting, exact.
Rational lower_bound_formula(int n, Criterion c, Setting setting);

/// k + |F| for the triangle colouring of K_n, by residue of n mod 6.
std::int64_t triangle_color_count(int n);

}  // namespace geogrundy
