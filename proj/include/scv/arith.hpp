#pragma once

// Residues mod p^m (m <= 3), quadratic-residue machinery, and the p-adic
// embedding of quadratic surds a + b*sqrt(D).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace scv {

using Integer = mpz_class;
using Rational = mpq_class;

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(std::int64_t a, std::uint64_t p);
int legendre(const Integer& a, std::uint64_t p);
// (num * den / p) for a reduced fraction; 0 when p divides either part.
int legendre(const Rational& x, std::uint64_t p);

// Kronecker symbol (a/n) for n >= 1.
int kronecker(std::int64_t a, std::uint64_t n);

// p-adic valuation; the valuation of 0 is reported as INT32_MAX.
int p_valuation(const Integer& x, std::uint64_t p);
int p_valuation(const Rational& x, std::uint64_t p);

std::uint64_t smallest_nonresidue(std::uint64_t p);

class PrimeModulus {
 public:
  // Throws PreconditionViolation unless p is an odd prime and 1 <= m <= 3.
  PrimeModulus(std::uint64_t p, int m);

  std::uint64_t p() const { return p_; }
  int m() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  PrimeModulus with_power(int m) const { return PrimeModulus(p_, m); }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
  int m_;
  std::uint64_t modulus_;
};

class Residue {
 public:
  Residue(std::int64_t value, const PrimeModulus& mod);
  static Residue from_unsigned(std::uint64_t value, const PrimeModulus& mod);

  std::uint64_t value() const { return value_; }
  const PrimeModulus& modulus() const { return mod_; }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return value_ % mod_.p() != 0; }
  // Exponent of the largest power of p dividing the value, capped at m.
  int valuation() const;
  // Representative in (-p^m/2, p^m/2].
  std::int64_t centered() const;

  Residue inverse() const;  // NonUnit unless is_unit()
  Residue pow(std::uint64_t exp) const;
  // Reduction to a smaller power of the same prime.
  Residue reduce_to(int m) const;

  Residue operator-() const;
  Residue& operator+=(const Residue& rhs);
  Residue& operator-=(const Residue& rhs);
  Residue& operator*=(const Residue& rhs);

  friend Residue operator+(Residue lhs, const Residue& rhs) { return lhs += rhs; }
  friend Residue operator-(Residue lhs, const Residue& rhs) { return lhs -= rhs; }
  friend Residue operator*(Residue lhs, const Residue& rhs) { return lhs *= rhs; }
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void check_same(const Residue& rhs) const;

  std::uint64_t value_;
  PrimeModulus mod_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

// Image of a p-integral rational; NonUnit when p divides the denominator.
Residue reduce(const Rational& x, const PrimeModulus& mod);
Residue reduce(const Integer& x, const PrimeModulus& mod);

Residue inv_mod(std::int64_t a, const PrimeModulus& mod);

// Smallest nonnegative root of a mod p; NonResidue if none exists.
Residue sqrt_mod_p(std::int64_t a, std::uint64_t p);

// Newton lift of sqrt_mod_p(a, p) to p^m.
Residue hensel_sqrt(std::int64_t a, std::uint64_t p, int m);
Residue hensel_sqrt(const Residue& a);

// Exact a + b*sqrt(D), D squarefree; b == 0 forces D == 1.
class QuadSurd {
 public:
  QuadSurd() : QuadSurd(Rational(0)) {}
  QuadSurd(Rational a, Rational b = 0, std::int64_t D = 1);
  QuadSurd(std::int64_t a) : QuadSurd(Rational(a)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t D() const { return D_; }
  bool is_rational() const { return D_ == 1; }

  QuadSurd conj() const { return QuadSurd(a_, -b_, D_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * D_; }
  Rational trace() const { return 2 * a_; }
  // Lowest common multiple of the denominators of a and b.
  Integer denominator() const;

  QuadSurd operator-() const { return QuadSurd(-a_, -b_, D_); }
  QuadSurd& operator+=(const QuadSurd& rhs);
  QuadSurd& operator-=(const QuadSurd& rhs);
  QuadSurd& operator*=(const QuadSurd& rhs);
  QuadSurd& operator/=(const QuadSurd& rhs);

  friend QuadSurd operator+(QuadSurd lhs, const QuadSurd& rhs) { return lhs += rhs; }
  friend QuadSurd operator-(QuadSurd lhs, const QuadSurd& rhs) { return lhs -= rhs; }
  friend QuadSurd operator*(QuadSurd lhs, const QuadSurd& rhs) { return lhs *= rhs; }
  friend QuadSurd operator/(QuadSurd lhs, const QuadSurd& rhs) { return lhs /= rhs; }
  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.D_ == y.D_;
  }

  // Real value with sqrt(D) > 0.
  double to_double() const;
  std::string to_string() const;

 private:
  std::int64_t common_D(const QuadSurd& rhs) const;

  Rational a_;
  Rational b_;
  std::int64_t D_;
};

std::ostream& operator<<(std::ostream& os, const QuadSurd& x);

// Grammar: sums of terms "c", "c*sqrt(D)", "sqrt(D)", "sqrt(D)/k" with
// rational c; "(a)/k" groups are accepted. All radicands must agree.
QuadSurd parse_surd(std::string_view text);
Rational parse_rational(std::string_view text);

bool is_squarefree(std::int64_t n);

// sqrt(x) for a positive rational, written as c * sqrt(D) with D squarefree.
struct SquareRootForm {
  Rational coefficient;
  std::int64_t radicand;
};
SquareRootForm rational_sqrt_form(const Rational& x);

// c0 + c1*s in (Z/p^m)[s]/(s^2 - n), n a nonresidue mod p.
class QuadExtResidue {
 public:
  QuadExtResidue(Residue c0, Residue c1, Residue nonresidue);
  static QuadExtResidue scalar(const Residue& c, const Residue& nonresidue);

  const Residue& c0() const { return c0_; }
  const Residue& c1() const { return c1_; }
  const Residue& nonresidue() const { return n_; }
  const PrimeModulus& modulus() const { return c0_.modulus(); }

  bool is_scalar() const { return c1_.is_zero(); }
  QuadExtResidue conj() const { return QuadExtResidue(c0_, -c1_, n_); }
  Residue norm() const { return c0_ * c0_ - n_ * c1_ * c1_; }
  QuadExtResidue inverse() const;
  QuadExtResidue pow(std::uint64_t exp) const;

  QuadExtResidue operator-() const { return QuadExtResidue(-c0_, -c1_, n_); }
  QuadExtResidue& operator+=(const QuadExtResidue& rhs);
  QuadExtResidue& operator-=(const QuadExtResidue& rhs);
  QuadExtResidue& operator*=(const QuadExtResidue& rhs);
  QuadExtResidue& operator*=(const Residue& rhs);

  friend QuadExtResidue operator+(QuadExtResidue x, const QuadExtResidue& y) { return x += y; }
  friend QuadExtResidue operator-(QuadExtResidue x, const QuadExtResidue& y) { return x -= y; }
  friend QuadExtResidue operator*(QuadExtResidue x, const QuadExtResidue& y) { return x *= y; }
  friend QuadExtResidue operator*(QuadExtResidue x, const Residue& y) { return x *= y; }
  friend QuadExtResidue operator*(const Residue& y, QuadExtResidue x) { return x *= y; }
  friend bool operator==(const QuadExtResidue&, const QuadExtResidue&) = default;

 private:
  void check_same(const QuadExtResidue& rhs) const;

  Residue c0_;
  Residue c1_;
  Residue n_;
};

// Both images of a split surd; plus sends sqrt(D) to hensel_sqrt(D).
struct SplitPair {
  Residue plus;
  Residue minus;
};

using EmbedResult = std::variant<SplitPair, QuadExtResidue>;

// SplitPair when (D/p) = 1 or D = 1, the inert-ring element when (D/p) = -1.
// RamifiedOrNonUnit when p | D or p divides a denominator.
EmbedResult embed_surd(const QuadSurd& x, const PrimeModulus& mod);

// a + b*root, for a chosen square root of D mod p^m.
Residue embed_with_root(const QuadSurd& x, const Residue& sqrt_d);

}  // namespace scv
