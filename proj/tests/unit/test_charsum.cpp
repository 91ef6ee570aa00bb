#include "doctest.h"

#include <cmath>
#include <numeric>

#include "scv/charsum.hpp"
#include "scv/curves.hpp"
#include "scv/errors.hpp"

using namespace scv;

namespace {

BigReal tolerance(int exponent) { return pow(BigReal(10, 256), static_cast<long>(exponent)); }

bool near(const BigReal& x, double target, int exponent) {
  return abs(x - BigReal::parse(std::to_string(target), 256)) < tolerance(exponent);
}

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (p % 2 == 1 && is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_SUITE("charsum") {
  TEST_CASE("context tables are consistent") {
    for (const FiniteField& field : {FiniteField::prime(13), FiniteField::quadratic(5)}) {
      const FqContext ctx(field);
      const FiniteField& f = ctx.field();
      for (std::uint64_t k = 0; k < ctx.group_order(); ++k) CHECK(ctx.dlog(f.pow(ctx.generator(), k)) == k);
      CHECK_THROWS_AS(ctx.dlog(f.zero()), PreconditionViolation);
      CHECK(ctx.character(3, f.zero()).norm().is_zero());
    }
  }

  TEST_CASE("gauss_sum examples") {
    const FqContext c5(FiniteField::prime(5));
    const ComplexVal& g0 = gauss_sum(c5, 0);
    CHECK(near(g0.re, -1, -30));
    CHECK(near(g0.im, 0, -30));
    CHECK(near(gauss_sum(c5, 2).magnitude() - sqrt(BigReal(5, 256)), 0, -20));
    const FqContext c7(FiniteField::prime(7));
    CHECK(near(gauss_sum(c7, 3).norm(), 7, -20));
  }

  TEST_CASE("|g(chi)|^2 = q for every nontrivial chi, q <= 361") {
    std::vector<FiniteField> fields;
    for (std::uint64_t p : odd_primes(3, 359)) fields.push_back(FiniteField::prime(p));
    for (std::uint64_t p : odd_primes(3, 19)) fields.push_back(FiniteField::quadratic(p));
    for (const FiniteField& field : fields) {
      const FqContext ctx(field);
      const BigReal q(static_cast<long>(ctx.q()), 128);
      bool all = true;
      for (std::uint64_t j = 1; j < ctx.group_order(); ++j) {
        const BigReal rel = abs(gauss_sum(ctx, static_cast<std::int64_t>(j)).norm() - q) / q;
        all = all && rel.to_double() < 1e-15;
      }
      CHECK_MESSAGE(all, "q=" << ctx.q());
    }
  }

  TEST_CASE("s_d_factor examples") {
    const FqContext c7(FiniteField::prime(7));
    CHECK(near(s_d_factor(c7, 0, 3).re, 1, -30));
    CHECK(near(s_d_factor(c7, 0, 4).re, 1, -30));
    const double mag2 = s_d_factor(c7, 2, 3).norm().to_double();
    const bool pattern = std::abs(mag2 - 1) < 1e-20 || std::abs(mag2 - 7) < 1e-20 || std::abs(mag2 - 1.0 / 7) < 1e-20;
    CHECK(pattern);
    CHECK_THROWS_AS(s_d_factor(c7, 1, 5), PreconditionViolation);
  }

  TEST_CASE("H_q examples") {
    const FqContext c5(FiniteField::prime(5));
    const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    const std::vector<Rational> ones{Rational(1), Rational(1)};
    CHECK(H_q(c5, half, ones, c5.field().from_int(2)).value == -2);
    const FqContext c7(FiniteField::prime(7));
    const Integer v = H_q(c7, two_parameter_b(Family::D3), ones, c7.field().from_int(3)).value;
    CHECK(v * v <= 28);
    CHECK(v == trace_of_frobenius(build_curve(Family::D3, c7.field(), c7.field().from_int(3))));
    CHECK_THROWS_AS(H_q(c7, {Rational(1, 5), Rational(4, 5)}, ones, c7.field().from_int(3)), PreconditionViolation);
  }

  TEST_CASE("H_p at t = 1 is (k_d/p) for p <= 41") {
    FqContextCache cache;
    for (Family f : all_families) {
      for (std::uint64_t p : odd_primes(5, 41)) CHECK_MESSAGE(hp_at_one(cache, f, p), "d=" << degree(f) << " p=" << p);
    }
  }

  TEST_CASE("hp_trace_equality examples") {
    FqContextCache cache;
    const FiniteField f5 = FiniteField::prime(5);
    const FiniteField f7 = FiniteField::prime(7);
    CHECK(hp_trace_equality(cache, Family::D2, f5, f5.from_int(2)));
    CHECK(hp_trace_equality(cache, Family::D6, f7, f7.from_int(3)));
    CHECK_THROWS(hp_trace_equality(cache, Family::D4, f7, f7.zero()));
  }

  TEST_CASE("specialized displays agree with the defining Gauss-sum formula") {
    const std::vector<Rational> ones2{Rational(1), Rational(1)};
    const std::vector<Rational> ones3{Rational(1), Rational(1), Rational(1)};
    for (Family f : all_families) {
      const std::uint64_t M = static_cast<std::uint64_t>(std::lcm(2, degree(f)));
      for (std::uint64_t p : odd_primes(5, 61)) {
        if (p % M != 1) continue;
        const FqContext ctx(FiniteField::prime(p));
        for (std::uint64_t t = 2; t < p; t += 3) {
          const FqElem x = ctx.field().from_int(static_cast<std::int64_t>(t));
          const HqValue two = H_q(ctx, two_parameter_b(f), ones2, x);
          const HqValue three = H_q(ctx, three_parameter_b(f), ones3, x);
          CHECK(round_to_integer(bcm_H_q(ctx, two_parameter_b(f), ones2, x)).value == two.value);
          CHECK(round_to_integer(bcm_H_q(ctx, three_parameter_b(f), ones3, x)).value == three.value);
        }
      }
    }
  }

  TEST_CASE("round_to_integer rejects non-integral values") {
    CHECK(round_to_integer(ComplexVal::from_int(-7, 128)).value == -7);
    ComplexVal off(BigReal::parse("3.25", 128), BigReal(0, 128));
    CHECK_THROWS_AS(round_to_integer(off), NotNearIntegral);
    ComplexVal imaginary(BigReal(3, 128), BigReal::parse("0.01", 128));
    CHECK_THROWS_AS(round_to_integer(imaginary), NotNearIntegral);
  }

  TEST_CASE("mod-p bridge to the truncated series for p <= 37") {
    FqContextCache cache;
    for (Family f : all_families) {
      for (std::uint64_t p : odd_primes(5, 37)) {
        for (bool three : {false, true}) {
          for (std::uint64_t t = 1; t < p; ++t) {
            CHECK_MESSAGE(hp_truncation_bridge(cache, f, three, p, t),
                          "d=" << degree(f) << " p=" << p << " t=" << t << " three=" << three);
          }
        }
      }
    }
  }

  TEST_CASE("clausen_check examples") {
    FqContextCache cache;
    const std::uint64_t t_square = 1 - 4 + 5;  // 1 - t = 4 (mod 5)
    CHECK(clausen_check(cache, 5, Family::D2, t_square));
    CHECK(clausen_check(cache, 7, Family::D3, 1));
    std::uint64_t t_inert = 0;
    for (std::uint64_t t = 2; t < 7; ++t) {
      if (legendre(static_cast<std::int64_t>(1 + 7 - t), 7) == -1) t_inert = t;
    }
    REQUIRE(t_inert != 0);
    CHECK(clausen_check(cache, 7, Family::D4, t_inert));
  }

  TEST_CASE("suite tallies cover every group without escalation") {
    FqContextCache cache;
    const auto tallies = run_charsum_suite(cache, 13, true, 49);
    CHECK(cache.escalations() == 0);
    bool saw_fp2 = false;
    for (const IdentityTally& t : tallies) {
      CHECK_MESSAGE(t.failures == 0, t.identity << " d=" << t.d << " q=" << t.q);
      CHECK(t.cases > 0);
      saw_fp2 = saw_fp2 || t.q == 49;
    }
    CHECK(saw_fp2);
  }
}
