#include "doctest.h"
#include "geogrundy/bounds.hpp"
#include "support.hpp"

using namespace geogrundy;
using testing_support::choose2;

TEST_CASE("binomials and rounding") {
  CHECK(binomial2(1) == 0);
  CHECK(binomial2(8) == 28);
  CHECK(binomial4(3) == 0);
  CHECK(binomial4(8) == 70);
  CHECK(ceil(Rational(195, 8)) == 25);
  CHECK(floor(Rational(195, 8)) == 24);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(6)) == 6);
}

TEST_CASE("incidence budgets") {
  const auto in = incidence_budget(8, Criterion::Intersection);
  CHECK(in.m == 8 * choose2(7));
  CHECK(in.cr == 70);
  const auto cr = incidence_budget(8, Criterion::Crossing);
  CHECK(cr.m == 0);
  CHECK(cr.cr == 70);
}

TEST_CASE("lcr spot checks") {
  CHECK(lcr_formula(8) == 4);
  CHECK(lcr_formula(14) == 15);
  CHECK(lcr_formula(9) == 4);
  CHECK(lcr_formula(10) == 6);
  CHECK(lcr_formula(11) == 9 - 1);  // (n-2)^2/9 - floor((n-2)/6)
}

TEST_CASE("maximum crossings on an edge is at least lcr for generated drawings") {
  for (int n = 4; n <= 20; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      CHECK(max_edge_degree(build_conflict_graph(gen_general(n, seed), Criterion::Crossing)) >= lcr_formula(n));
    CHECK(max_edge_degree(build_conflict_graph(gen_convex(n), Criterion::Crossing)) >= lcr_formula(n));
  }
}

TEST_CASE("counting upper bound examples") {
  CHECK(counting_upper_bound(8, Criterion::NonCrossing) == 23);
  CHECK(counting_upper_bound(8, Criterion::Crossing) == 11);
  CHECK(counting_upper_bound(8, Criterion::Disjointness) == 16);
}

TEST_CASE("counting upper bound against a direct search") {
  for (int n = 4; n <= 60; ++n) {
    for (auto c : {Criterion::Crossing, Criterion::Intersection}) {
      const std::int64_t budget = (c == Criterion::Intersection ? n * choose2(n - 1) : 0) + binomial4(n);
      std::int64_t gamma = 0;
      for (std::int64_t g = 1; g < 10'000; ++g)
        if (choose2(g) + choose2(g - n) <= budget) gamma = g;
      CHECK(counting_upper_bound(n, c) == gamma);
    }
    const std::int64_t half = n / 2;
    CHECK(counting_upper_bound(n, Criterion::Disjointness) == (choose2(n) - half) / 2 + half);
    CHECK(counting_upper_bound(n, Criterion::NonCrossing) == floor(Rational(n * (n + 5), 4)) - 3);
  }
}

TEST_CASE("lower bound formulas") {
  CHECK(lower_bound_formula(16, Criterion::Intersection, Setting::Convex) == Rational(36));
  CHECK(lower_bound_formula(13, Criterion::Intersection, Setting::Convex) == Rational(195, 8));
  CHECK(lower_bound_formula(80, Criterion::Crossing, Setting::General) == Rational(16));
  CHECK(lower_bound_formula(99, Criterion::Intersection, Setting::General) == Rational(24));
  CHECK(lower_bound_formula(16, Criterion::Crossing, Setting::Convex) == Rational(20));
  CHECK(lower_bound_formula(20, Criterion::Crossing, Setting::Convex) == Rational(20));
  CHECK(lower_bound_formula(9, Criterion::Disjointness, Setting::General) == Rational(6));
  CHECK(lower_bound_formula(8, Criterion::Disjointness, Setting::General) == Rational(35, 8));
  CHECK(lower_bound_formula(7, Criterion::NonCrossing, Setting::General) == Rational(7));
}

TEST_CASE("triangle colour counts by residue") {
  // Triangles plus leave edges, from the leave sizes alone.
  for (int n = 3; n <= 100; ++n) {
    const std::int64_t leave = n % 6 == 1 || n % 6 == 3 ? 0 : n % 6 == 0 || n % 6 == 2 ? n / 2 : n % 6 == 4 ? n / 2 + 1 : 4;
    CHECK(triangle_color_count(n) == (choose2(n) - leave) / 3 + leave);
  }
  CHECK(triangle_color_count(7) == 7);
  CHECK(triangle_color_count(12) == 26);
  CHECK(triangle_color_count(10) == 19);
  CHECK(triangle_color_count(11) == 21);
}
