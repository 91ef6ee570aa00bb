#include "doctest.h"

#include "scv/analytic.hpp"
#include "scv/errors.hpp"
#include "scv/verify.hpp"

using namespace scv;

namespace {

const Catalog& catalog() {
  static const Catalog instance = load_default_catalog();
  return instance;
}

constexpr mpfr_prec_t bits = acceptance_bits;

// |x - y| < 2^-e * max(1, |y|)
bool agree(const BigReal& x, const BigReal& y, long e) {
  BigReal scale = abs(y);
  if (scale < BigReal(1, bits)) scale = BigReal(1, bits);
  BigReal bound(1, bits);
  mpfr_mul_2si(bound.get(), bound.get(), -e, MPFR_RNDN);
  return abs(x - y) < bound * scale;
}

const ExampleRecord& by_series(const std::string& label) {
  for (const ExampleRecord& ex : catalog().examples) {
    if (ex.series == label) return ex;
  }
  FAIL("no record for series " << label);
  return catalog().examples.front();
}

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("gamma values and identities") {
    const BigReal pi = BigReal::pi(bits);
    CHECK(agree(gamma_rational(Rational(1), bits), BigReal(1, bits), bits - 4));
    CHECK(agree(gamma_rational(Rational(1, 2), bits), sqrt(pi), bits - 4));
    CHECK(agree(gamma_rational(Rational(1, 3), bits) * gamma_rational(Rational(2, 3), bits),
                BigReal(2, bits) * pi / sqrt(BigReal(3, bits)), bits - 8));
    for (const Rational& x : {Rational(1, 24), Rational(5, 8), Rational(7, 3), Rational(11, 6)}) {
      CHECK(agree(gamma_rational(x + 1, bits), BigReal(x, bits) * gamma_rational(x, bits), bits - 8));
      if (x < 1) {
        CHECK(agree(gamma_rational(x, bits) * gamma_rational(1 - x, bits), pi / sin(pi * BigReal(x, bits)), bits - 8));
      }
    }
    CHECK_THROWS_AS(gamma_rational(Rational(0), bits), PreconditionViolation);
  }

  TEST_CASE("eval_F_real basics") {
    const HGSpec half{QuadSurd(0), {Rational(1, 2), Rational(1, 2)}};
    BigReal at_zero = eval_F_real(half, QuadSurd(0), bits);
    CHECK(at_zero.to_double() == 1.0);
    CHECK((at_zero - BigReal(1, bits)).is_zero());
    CHECK_THROWS_AS(eval_F_real(half, QuadSurd(1), bits), NoConvergence);
    CHECK_THROWS_AS(eval_F_real(half, QuadSurd(Rational(-3, 2)), bits), NoConvergence);
    CHECK_THROWS_AS(eval_F_real(HGSpec{QuadSurd(0), {Rational(3, 2)}}, QuadSurd(Rational(1, 2)), bits),
                    PreconditionViolation);
    const QuadSurd silver(Rational(3), Rational(-2), 2);
    const BigReal v = eval_F_real(HGSpec{QuadSurd(0), {Rational(1, 4), Rational(3, 4)}}, silver, bits);
    CHECK(v.to_double() > 1.0);
  }

  TEST_CASE("eval_F_real matches the exact truncation plus a small tail") {
    const HGSpec spec{QuadSurd(Rational(4)), {Rational(1, 2), Rational(1, 2)}};
    const QuadSurd lambda(Rational(1, 10));
    const QuadSurd exact = exact_trunc_F(spec, lambda, 200);
    const BigReal value = eval_F_real(spec, lambda, bits);
    CHECK(agree(value, BigReal(exact.a(), bits), bits - 8));
  }

  TEST_CASE("precision doubling is stable") {
    const ExampleRecord& ex = catalog().example("A");
    const HGSpec spec{ex.alpha, ex.b};
    const BigReal low = eval_F_real(spec, ex.lambda, bits);
    const BigReal high = eval_F_real(spec, ex.lambda, 2 * bits);
    CHECK(agree(high, low, bits - 8));
    const OmegaSpec omega = OmegaSpec::from_field(catalog().field("Q(sqrt(-3))"));
    CHECK(agree(omega_K(omega, 2 * bits), omega_K(omega, bits), bits - 8));
  }

  TEST_CASE("omega_K for Q(i)") {
    const OmegaSpec spec = OmegaSpec::from_field(CmField{"Q(i)", 4, 1, 4});
    CHECK(spec.chi == std::vector<int>{0, 1, 0, -1});
    const BigReal expected = gamma_rational(Rational(1, 4), bits) /
                             (gamma_rational(Rational(3, 4), bits) * sqrt(BigReal::pi(bits)));
    CHECK(agree(omega_K(spec, bits), expected, bits - 8));
    OmegaSpec broken = spec;
    broken.chi[1] = 2;
    CHECK_THROWS_AS(broken.validate(), PreconditionViolation);
    broken.chi = {0, 1, 0, 1};
    CHECK_THROWS_AS(broken.validate(), PreconditionViolation);
  }

  TEST_CASE("series table residuals below 1e-40 at 256 bits") {
    for (const char* label : {"4.4", "5.4"}) {
      CHECK_MESSAGE(below_threshold(check_table1(by_series(label), bits)), label);
    }
    for (const ExampleRecord& ex : catalog().examples) {
      if (!ex.delta_surd && !ex.delta_product) continue;
      const BigReal r = check_table1(ex, bits);
      CHECK_MESSAGE(below_threshold(r), ex.id << " residual " << r.to_string(6));
    }
  }

  TEST_CASE("a perturbed lambda is detected") {
    const BigReal r = check_table1(by_series("4.4"), bits, Rational(1, 1000));
    CHECK(r > BigReal::parse("1e-6", bits));
    CHECK_THROWS_AS(check_table1(catalog().example("L"), bits), PreconditionViolation);
  }

  TEST_CASE("special values and the Clausen cross-check") {
    for (const SpecialValue& sv : catalog().special_values) {
      const SpecialValueResidual r = check_special_value(catalog(), sv.id, bits);
      CHECK_MESSAGE(below_threshold(r.identity), sv.id << " " << r.identity.to_string(6));
      CHECK_MESSAGE(below_threshold(r.clausen), sv.id << " " << r.clausen.to_string(6));
    }
    CHECK_THROWS_AS(check_special_value(catalog(), "9.9", bits), CatalogError);
  }

  TEST_CASE("eta oracle preconditions and CM vanishing") {
    CHECK_THROWS_AS(eta_ap_oracle(2), PreconditionViolation);
    CHECK_THROWS_AS(eta_ap_oracle(3), PreconditionViolation);
    CHECK_THROWS_AS(eta_ap_oracle(49), PreconditionViolation);
    CHECK_THROWS_AS(eta_ap_oracle(10007), BudgetExceeded);
    CHECK(eta_ap_oracle(7) == -2);
    int zeros = 0;
    for (std::uint64_t p = 7; p < 100; ++p) {
      if (!is_prime(p)) continue;
      const std::int64_t a = eta_ap_oracle(p);
      if (weight3_inadmissibility(Family::D6, Rational(4, 125), p)) continue;
      CHECK((a == 0) == (ap_form(Family::D6, Rational(4, 125), p) == 0));
      zeros += a == 0 ? 1 : 0;
    }
    CHECK(zeros > 0);
  }

  TEST_CASE("analytic suite") {
    const auto all = run_analytic_suite(catalog(), bits);
    CHECK(all.size() >= 21);
    for (const AnalyticCheck& c : all) CHECK_MESSAGE(c.pass, c.id << " " << c.kind);
    const auto only = run_analytic_suite(catalog(), bits, {"5.3"});
    CHECK_FALSE(only.empty());
    for (const AnalyticCheck& c : only) CHECK(c.id == "5.3");
    CHECK_THROWS_AS(run_analytic_suite(catalog(), bits, {"nope"}), CatalogError);
    CHECK_THROWS_AS(run_analytic_suite(catalog(), 64), PreconditionViolation);
  }
}
