#include "doctest.h"

#include "scv/families.hpp"
#include "scv/formal_series.hpp"

using namespace scv;

TEST_SUITE("formal_series") {
  TEST_CASE("series arithmetic") {
    const ExactSeries one_minus_t{Rational(1), Rational(-1)};
    ExactSeries geometric(6, Rational(1));
    const ExactSeries product = series_multiply(one_minus_t, geometric, 5);
    CHECK(product[0] == 1);
    for (int i = 1; i <= 5; ++i) CHECK(product[i] == 0);
    const ExactSeries theta = series_theta(ExactSeries{Rational(3), Rational(2), Rational(5)});
    CHECK(theta == ExactSeries{Rational(0), Rational(2), Rational(10)});
    const ExactSeries composed = series_compose(geometric, ExactSeries{Rational(0), Rational(2)}, 3);
    CHECK(composed == ExactSeries{Rational(1), Rational(2), Rational(4), Rational(8)});
  }

  TEST_CASE("quadratic transformation holds to order 12") {
    for (const Rational& c : {Rational(1, 3), Rational(1, 4), Rational(1, 6), Rational(1, 2)}) {
      for (const Rational& a1 : {Rational(0), Rational(1), Rational(-7, 3), Rational(33, 4), Rational(5, 11)}) {
        CHECK(is_zero(quadratic_transformation_defect(c, a1, 12)));
      }
    }
  }

  TEST_CASE("quadratic transformation detects a wrong parameter") {
    const ExactSeries defect = quadratic_transformation_defect(Rational(1, 3), Rational(1), 12);
    CHECK(is_zero(defect));
    ExactSeries f = series_F(Rational(1), {Rational(1, 2), Rational(1, 3), Rational(2, 3)}, 12);
    const ExactSeries g = series_F(Rational(1), {Rational(1, 2), Rational(1, 4), Rational(3, 4)}, 12);
    CHECK(f != g);
  }

  TEST_CASE("geometric Clausen identity holds to order 12") {
    for (const Rational& c : {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6)}) {
      CHECK(is_zero(geometric_clausen_defect(c, 12)));
    }
  }

  TEST_CASE("truncation tail identity for p <= 13") {
    for (Family f : all_families) {
      for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        for (bool three : {false, true}) {
          const auto b = three ? three_parameter_b(f) : two_parameter_b(f);
          CHECK(is_zero(truncation_tail_defect(b, Rational(4), p)));
          CHECK(is_zero(truncation_tail_defect(b, Rational(-5, 7), p)));
        }
      }
    }
  }
}
