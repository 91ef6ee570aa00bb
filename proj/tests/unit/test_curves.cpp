#include "doctest.h"

#include <cmath>

#include "scv/curves.hpp"
#include "scv/errors.hpp"

using namespace scv;

namespace {

// #E(F_q) by enumerating (x, y) on the long Weierstrass model, plus infinity.
std::int64_t brute_force_trace(const CurveInstance& c) {
  const FiniteField& f = c.field;
  std::uint64_t points = 1;
  for (std::uint64_t i = 0; i < f.q(); ++i) {
    const FqElem x = f.element_at(i);
    const FqElem rhs = f.add(f.mul(f.mul(x, x), f.add(x, c.a2)), f.add(f.mul(c.a4, x), c.a6));
    for (std::uint64_t j = 0; j < f.q(); ++j) {
      const FqElem y = f.element_at(j);
      const FqElem lhs = f.add(f.mul(y, y), f.mul(y, f.add(f.mul(c.a1, x), c.a3)));
      if (lhs == rhs) ++points;
    }
  }
  return static_cast<std::int64_t>(f.q() + 1) - static_cast<std::int64_t>(points);
}

std::vector<FiniteField> small_fields() {
  std::vector<FiniteField> out;
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    out.push_back(FiniteField::prime(p));
  }
  out.push_back(FiniteField::quadratic(5));
  out.push_back(FiniteField::quadratic(7));
  return out;
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("build_curve examples") {
    const FiniteField f5 = FiniteField::prime(5);
    const CurveInstance c = build_curve(Family::D2, f5, f5.from_int(2));
    CHECK_FALSE(c.discriminant == f5.zero());
    CHECK(trace_of_frobenius(c) == -2);
    CHECK(trace_of_frobenius(build_curve(Family::D2, f5, f5.from_int(-1))) == -2);
    const FiniteField f7 = FiniteField::prime(7);
    CHECK_THROWS_AS(build_curve(Family::D2, f7, f7.one()), InvalidT);
    CHECK_THROWS_AS(build_curve(Family::D2, f7, f7.zero()), InvalidT);
    const FiniteField f3 = FiniteField::prime(3);
    CHECK_THROWS_AS(build_curve(Family::D6, f3, f3.from_int(2)), PreconditionViolation);
  }

  TEST_CASE("character-sum count matches brute force and the Hasse bound") {
    for (const FiniteField& field : small_fields()) {
      if (field.q() > 49) continue;
      for (Family f : all_families) {
        for (std::uint64_t i = 0; i < field.q(); ++i) {
          const FqElem t = field.element_at(i);
          try {
            const CurveInstance c = build_curve(f, field, t);
            const std::int64_t a = trace_of_frobenius(c);
            CHECK(a == brute_force_trace(c));
            CHECK(static_cast<double>(a * a) <= 4.0 * static_cast<double>(field.q()));
          } catch (const InvalidT&) {
          } catch (const BadReduction&) {
          }
        }
      }
    }
  }

  TEST_CASE("is_ordinary and Deuring examples") {
    const FiniteField f5 = FiniteField::prime(5);
    const CurveInstance c = build_curve(Family::D2, f5, f5.from_int(2));
    CHECK(is_ordinary(c, -2));
    CHECK_FALSE(is_ordinary(c, 0));
    CHECK_THROWS_AS(is_ordinary(c, 5), InternalError);
    CHECK(ordinary_via_deuring(-6, 5));
    CHECK(ordinary_via_deuring(-8, 3));
    CHECK_FALSE(ordinary_via_deuring(-1, 7));
    CHECK_THROWS_AS(ordinary_via_deuring(10, 5), PreconditionViolation);
  }

  TEST_CASE("unit_root examples") {
    CHECK(unit_root(-2, 5, PrimeModulus(5, 2)).value() == 13);
    CHECK(unit_root(-2, 5, PrimeModulus(5, 1)).value() == 3);
    CHECK_THROWS_AS(unit_root(0, 5, PrimeModulus(5, 2)), Supersingular);
    CHECK_THROWS_AS(unit_root(10, 25, PrimeModulus(5, 2)), Supersingular);
  }

  TEST_CASE("unit roots solve the characteristic polynomial and are stable") {
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 101u, 997u}) {
      const auto bound = static_cast<std::int64_t>(2 * std::sqrt(static_cast<double>(p)));
      for (std::int64_t a = -bound; a <= bound; ++a) {
        if (a % static_cast<std::int64_t>(p) == 0) continue;
        const PrimeModulus m3(p, 3);
        const Residue u = unit_root(a, p, m3);
        CHECK(u * u - Residue(a, m3) * u + Residue(static_cast<std::int64_t>(p), m3) == Residue(0, m3));
        CHECK(u.is_unit());
        CHECK(u.reduce_to(2) == unit_root(a, p, PrimeModulus(p, 2)));
        CHECK(u * (Residue(static_cast<std::int64_t>(p), m3) * u.inverse()) == Residue(static_cast<std::int64_t>(p), m3));
      }
    }
  }

  TEST_CASE("frobenius over F_{p^2} for t in F_p is a_p^2 - 2p") {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
      const FiniteField fp = FiniteField::prime(p);
      const FiniteField fq = FiniteField::quadratic(p);
      const PrimeModulus mod(p, 3);
      for (Family f : all_families) {
        for (std::uint64_t t = 2; t < p; ++t) {
          try {
            const std::int64_t a = trace_of_frobenius(build_curve(f, fp, fp.from_int(static_cast<std::int64_t>(t))));
            const FrobData data = frobenius_over_Fp2(f, fq, fq.from_int(static_cast<std::int64_t>(t)), mod);
            CHECK(data.a_q == a * a - 2 * static_cast<std::int64_t>(p));
            CHECK(data.ordinary == (a % static_cast<std::int64_t>(p) != 0));
            if (data.ordinary) {
              const Residue u = unit_root(a, p, mod);
              CHECK(*data.unit_root == u * u);
            }
          } catch (const BadReduction&) {
          }
        }
      }
      CHECK_THROWS_AS(frobenius_over_Fp2(Family::D2, fp, fp.from_int(2), mod), PreconditionViolation);
    }
  }

  TEST_CASE("frobenius over F_25 at a root of s^2 - 2") {
    const FiniteField f = FiniteField::quadratic(5, 2);
    const FrobData data = frobenius_over_Fp2(Family::D2, f, f.element(0, 1), PrimeModulus(5, 2));
    CHECK(std::abs(data.a_q) <= 10);
    CHECK(data.q == 25);
  }

  TEST_CASE("twist trace identity for all families and q <= 49") {
    CHECK(twist_trace_check(Family::D2, FiniteField::prime(5), FiniteField::prime(5).from_int(2)));
    for (const FiniteField& field : small_fields()) {
      if (field.q() > 49) continue;
      for (Family f : all_families) {
        int checked = 0;
        for (std::uint64_t i = 0; i < field.q(); ++i) {
          const FqElem t = field.element_at(i);
          try {
            const bool holds = twist_trace_check(f, field, t);
            CHECK(holds);
            ++checked;
          } catch (const InvalidT&) {
          } catch (const BadReduction&) {
          }
        }
        CHECK(checked > 0);
      }
    }
    const FiniteField f7 = FiniteField::prime(7);
    CHECK_THROWS(twist_trace_check(Family::D3, f7, f7.zero()));
  }
}
