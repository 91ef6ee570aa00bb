#include "doctest.h"

#include <random>
#include <variant>

#include "scv/arith.hpp"
#include "scv/errors.hpp"

using namespace scv;

TEST_SUITE("arith") {
  TEST_CASE("primality is exact on small and large inputs") {
    int count = 0;
    for (std::uint64_t n = 0; n < 1000; ++n) count += is_prime(n) ? 1 : 0;
    CHECK(count == 168);
    CHECK(is_prime(4294967291ULL));
    CHECK_FALSE(is_prime(4294967291ULL * 3));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(18446744073709551557ULL));
  }

  TEST_CASE("prime modulus rejects bad inputs") {
    CHECK_THROWS_AS(PrimeModulus(2, 1), PreconditionViolation);
    CHECK_THROWS_AS(PrimeModulus(9, 1), PreconditionViolation);
    CHECK_THROWS_AS(PrimeModulus(7, 0), PreconditionViolation);
    CHECK_THROWS_AS(PrimeModulus(7, 4), PreconditionViolation);
    CHECK(PrimeModulus(7, 3).modulus() == 343);
  }

  TEST_CASE("legendre examples") {
    CHECK(legendre(1, 13) == 1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(Rational(98, 125), 13) == legendre(98 * 125, 13));
  }

  TEST_CASE("legendre is multiplicative for p <= 31") {
    for (std::uint64_t p = 3; p <= 31; p += 2) {
      if (!is_prime(p)) continue;
      for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
        for (std::int64_t b = 1; b < static_cast<std::int64_t>(p); ++b) {
          CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
        }
      }
    }
  }

  TEST_CASE("legendre matches exhaustive squares") {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 29u}) {
      std::vector<bool> square(p, false);
      for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = true;
      for (std::uint64_t a = 1; a < p; ++a) CHECK(legendre(static_cast<std::int64_t>(a), p) == (square[a] ? 1 : -1));
    }
  }

  TEST_CASE("kronecker symbol") {
    CHECK(kronecker(-8, 1) == 1);
    CHECK(kronecker(-8, 3) == 1);
    CHECK(kronecker(-8, 5) == -1);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(-15, 2) == 1);
  }

  TEST_CASE("sqrt_mod_p examples") {
    CHECK(sqrt_mod_p(0, 7).value() == 0);
    CHECK(sqrt_mod_p(2, 7).value() == 3);
    CHECK_THROWS_AS(sqrt_mod_p(3, 7), NonResidue);
  }

  TEST_CASE("hensel_sqrt examples") {
    CHECK(hensel_sqrt(2, 7, 3).value() == 108);
    CHECK(hensel_sqrt(1, 11, 3).value() == 1);
    const std::uint64_t r = hensel_sqrt(4, 5, 2).value();
    CHECK((r == 2 || r == 23));
    CHECK_THROWS_AS(hensel_sqrt(3, 7, 2), NonResidue);
    CHECK_THROWS_AS(hensel_sqrt(7, 7, 2), NonUnit);
  }

  TEST_CASE("hensel lifts square correctly and reduce consistently") {
    for (std::uint64_t p = 3; p < 200; p += 2) {
      if (!is_prime(p)) continue;
      for (std::int64_t a = 1; a < 40; ++a) {
        if (legendre(a, p) != 1) continue;
        const Residue r3 = hensel_sqrt(a, p, 3);
        CHECK(r3 * r3 == Residue(a, r3.modulus()));
        const Residue r2 = hensel_sqrt(a, p, 2);
        const Residue low = r3.reduce_to(2);
        CHECK((low == r2 || low == -r2));
        CHECK(r3.reduce_to(1) == sqrt_mod_p(a, p));
      }
    }
  }

  TEST_CASE("inv_mod examples and property") {
    const PrimeModulus m25(5, 2);
    CHECK(inv_mod(1, m25).value() == 1);
    CHECK(inv_mod(3, m25).value() == 17);
    CHECK_THROWS_AS(inv_mod(5, m25), NonUnit);
    for (std::uint64_t p : {3u, 7u, 13u, 31u}) {
      const PrimeModulus mod(p, 3);
      for (std::uint64_t a = 1; a < mod.modulus(); ++a) {
        if (a % p == 0) continue;
        const Residue x = Residue::from_unsigned(a, mod);
        CHECK((x * x.inverse()).value() == 1);
      }
    }
  }

  TEST_CASE("residue arithmetic") {
    const PrimeModulus mod(7, 2);
    const Residue a(-1, mod);
    CHECK(a.value() == 48);
    CHECK(a.centered() == -1);
    CHECK(Residue(14, mod).valuation() == 1);
    CHECK(Residue(0, mod).valuation() == 2);
    CHECK(Residue(3, mod).pow(42).value() == 1);  // 3 has order dividing 42 mod 49
    CHECK(reduce(Rational(1, 4), PrimeModulus(5, 2)).value() == 19);
    CHECK_THROWS_AS(reduce(Rational(1, 7), mod), NonUnit);
    CHECK_THROWS_AS(Residue(1, mod) + Residue(1, PrimeModulus(7, 3)), ModulusMismatch);
  }

  TEST_CASE("quadratic surds are canonical") {
    CHECK_THROWS_AS(QuadSurd(Rational(3), Rational(-2), 8), PreconditionViolation);
    CHECK(QuadSurd(Rational(1), Rational(0), 5).D() == 1);
    const QuadSurd alpha = parse_surd("3*sqrt(2)+4");
    CHECK(alpha == QuadSurd(Rational(4), Rational(3), 2));
    const QuadSurd lam = parse_surd("(3-2*sqrt(2))/6");
    CHECK(lam == QuadSurd(Rational(1, 2), Rational(-1, 3), 2));
    CHECK((alpha * alpha.conj()).is_rational());
    CHECK((alpha * alpha.conj()).a() == alpha.norm());
    CHECK((alpha / alpha) == QuadSurd(1));
    CHECK_THROWS_AS(parse_surd("sqrt(2)+sqrt(3)"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK(parse_rational("-4/125") == Rational(-4, 125));
  }

  TEST_CASE("rational square-root form") {
    const SquareRootForm f = rational_sqrt_form(Rational(98, 125));
    CHECK(f.radicand == 10);
    CHECK(f.coefficient == Rational(7, 25));
    CHECK(rational_sqrt_form(Rational(4, 9)).radicand == 1);
  }

  TEST_CASE("embed_surd examples") {
    const PrimeModulus m(7, 2);
    const QuadSurd lam = parse_surd("(3-2*sqrt(2))/6");
    const auto split = std::get<SplitPair>(embed_surd(lam, m));
    const Residue r = hensel_sqrt(2, 7, 2);
    CHECK(Residue(6, m) * split.plus == Residue(3, m) - Residue(2, m) * r);
    CHECK(Residue(6, m) * split.minus == Residue(3, m) + Residue(2, m) * r);

    const auto rational = std::get<SplitPair>(embed_surd(QuadSurd(5), m));
    CHECK(rational.plus.value() == 5);
    CHECK(rational.minus.value() == 5);

    const auto inert = std::get<QuadExtResidue>(embed_surd(QuadSurd(Rational(0), Rational(1), 5), m));
    CHECK(inert.c0().value() == 0);
    CHECK(inert.c1().value() == 1);
    CHECK(inert.nonresidue().value() == 5);

    CHECK_THROWS_AS(embed_surd(QuadSurd(Rational(0), Rational(1), 7), m), RamifiedOrNonUnit);
    CHECK_THROWS_AS(embed_surd(QuadSurd(Rational(1, 7)), m), RamifiedOrNonUnit);
  }

  TEST_CASE("embedded conjugates have the right trace and norm") {
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<int> small(-30, 30);
    for (std::uint64_t p : {7u, 17u, 23u, 31u, 41u, 47u}) {
      const PrimeModulus mod(p, 3);
      for (int trial = 0; trial < 20; ++trial) {
        const Rational a(small(rng), 1 + (small(rng) + 30) % 5);
        const Rational b(small(rng) | 1, 1 + (small(rng) + 30) % 3);
        const QuadSurd x(a, b, 2);
        if (x.denominator() % p == 0) continue;
        const auto pair = std::get<SplitPair>(embed_surd(x, mod));
        CHECK(pair.plus + pair.minus == reduce(x.trace(), mod));
        CHECK(pair.plus * pair.minus == reduce(x.norm(), mod));
      }
    }
  }

  TEST_CASE("quadratic extension ring") {
    const PrimeModulus mod(7, 3);
    const Residue n(3, mod);
    const QuadExtResidue s(Residue(0, mod), Residue(1, mod), n);
    CHECK(s * s == QuadExtResidue::scalar(n, n));
    const QuadExtResidue x(Residue(2, mod), Residue(5, mod), n);
    CHECK((x * x.inverse()) == QuadExtResidue::scalar(Residue(1, mod), n));
    CHECK((x * x.conj()).is_scalar());
    CHECK((x * x.conj()).c0() == x.norm());
    CHECK(x.pow(3) == x * x * x);
  }
}
