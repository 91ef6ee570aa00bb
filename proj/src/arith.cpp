#include "scv/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <climits>
#include <optional>
#include <ostream>

#include "scv/errors.hpp"

namespace scv {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

u64 reduce_signed(i64 value, u64 modulus) {
  const i64 m = static_cast<i64>(modulus);
  i64 r = value % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 mpz_mod_u64(const Integer& x, u64 modulus) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), modulus);
  return r.get_ui();
}

std::optional<u64> inverse_u64(u64 a, u64 modulus) {
  i128 old_r = a, r = modulus;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    const i128 tmp_r = old_r - q * r;
    old_r = r;
    r = tmp_r;
    const i128 tmp_s = old_s - q * s;
    old_s = s;
    s = tmp_s;
  }
  if (old_r != 1) return std::nullopt;
  i128 inv = old_s % static_cast<i128>(modulus);
  if (inv < 0) inv += modulus;
  return static_cast<u64>(inv);
}

u64 pow_u64(u64 p, int m) {
  u64 r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  return r;
}

// Tonelli-Shanks for a nonzero quadratic residue mod an odd prime.
u64 tonelli_shanks(u64 a, u64 p) {
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  const u64 z = smallest_nonresidue(p);
  int m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    int i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : witnesses) {
    if (n % w == 0) return n == w;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 w : witnesses) {
    u64 x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(i64 a, u64 p) {
  if (p < 3 || p % 2 == 0) throw PreconditionViolation("legendre: modulus must be an odd prime");
  const u64 r = reduce_signed(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(const Integer& a, u64 p) {
  if (p < 3 || p % 2 == 0) throw PreconditionViolation("legendre: modulus must be an odd prime");
  const u64 r = mpz_mod_u64(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(const Rational& x, u64 p) {
  return legendre(Integer(x.get_num() * x.get_den()), p);
}

int kronecker(i64 a, u64 n) {
  if (n == 0) throw PreconditionViolation("kronecker: n must be positive");
  return mpz_si_kronecker(static_cast<long>(a), Integer(static_cast<unsigned long>(n)).get_mpz_t());
}

int p_valuation(const Integer& x, u64 p) {
  if (x == 0) return INT_MAX;
  Integer rest;
  Integer prime(static_cast<unsigned long>(p));
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

int p_valuation(const Rational& x, u64 p) {
  if (x == 0) return INT_MAX;
  return p_valuation(Integer(x.get_num()), p) - p_valuation(Integer(x.get_den()), p);
}

u64 smallest_nonresidue(u64 p) {
  for (u64 n = 2; n < p; ++n) {
    if (powmod(n, (p - 1) / 2, p) == p - 1) return n;
  }
  throw PreconditionViolation("smallest_nonresidue: no nonresidue exists");
}

PrimeModulus::PrimeModulus(u64 p, int m) : p_(p), m_(m), modulus_(0) {
  if (p < 3 || !is_prime(p)) throw PreconditionViolation("PrimeModulus: p must be an odd prime");
  if (m < 1 || m > 3) throw PreconditionViolation("PrimeModulus: power must be 1, 2 or 3");
  if (p >= (u64{1} << 20)) throw PreconditionViolation("PrimeModulus: p^3 must fit in 60 bits");
  modulus_ = pow_u64(p, m);
}

Residue::Residue(i64 value, const PrimeModulus& mod)
    : value_(reduce_signed(value, mod.modulus())), mod_(mod) {}

Residue Residue::from_unsigned(u64 value, const PrimeModulus& mod) {
  Residue r(0, mod);
  r.value_ = value % mod.modulus();
  return r;
}

int Residue::valuation() const {
  if (value_ == 0) return mod_.m();
  int v = 0;
  u64 x = value_;
  while (x % mod_.p() == 0) {
    x /= mod_.p();
    ++v;
  }
  return v;
}

i64 Residue::centered() const {
  const u64 m = mod_.modulus();
  return value_ > m / 2 ? static_cast<i64>(value_) - static_cast<i64>(m) : static_cast<i64>(value_);
}

Residue Residue::inverse() const {
  const auto inv = inverse_u64(value_, mod_.modulus());
  if (!inv) throw NonUnit("inverse of a non-unit residue");
  return from_unsigned(*inv, mod_);
}

Residue Residue::pow(u64 exp) const {
  return from_unsigned(powmod(value_, exp, mod_.modulus()), mod_);
}

Residue Residue::reduce_to(int m) const {
  if (m > mod_.m()) throw PreconditionViolation("reduce_to: cannot raise precision");
  const PrimeModulus lower = mod_.with_power(m);
  return from_unsigned(value_ % lower.modulus(), lower);
}

Residue Residue::operator-() const {
  return from_unsigned(value_ == 0 ? 0 : mod_.modulus() - value_, mod_);
}

void Residue::check_same(const Residue& rhs) const {
  if (!(mod_ == rhs.mod_)) throw ModulusMismatch("arithmetic between residues of different moduli");
}

Residue& Residue::operator+=(const Residue& rhs) {
  check_same(rhs);
  value_ += rhs.value_;
  if (value_ >= mod_.modulus()) value_ -= mod_.modulus();
  return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
  check_same(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + mod_.modulus() - rhs.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
  check_same(rhs);
  value_ = mulmod(value_, rhs.value_, mod_.modulus());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus().modulus() << ")";
}

Residue reduce(const Integer& x, const PrimeModulus& mod) {
  return Residue::from_unsigned(mpz_mod_u64(x, mod.modulus()), mod);
}

Residue reduce(const Rational& x, const PrimeModulus& mod) {
  const Integer den(x.get_den());
  if (mpz_mod_u64(den, mod.p()) == 0) throw NonUnit("rational has p in its denominator");
  return reduce(Integer(x.get_num()), mod) * reduce(den, mod).inverse();
}

Residue inv_mod(i64 a, const PrimeModulus& mod) {
  return Residue(a, mod).inverse();
}

Residue sqrt_mod_p(i64 a, u64 p) {
  const PrimeModulus mod(p, 1);
  const u64 r = reduce_signed(a, p);
  if (r == 0) return Residue(0, mod);
  if (legendre(a, p) != 1) throw NonResidue("sqrt_mod_p: argument is a quadratic nonresidue");
  const u64 root = tonelli_shanks(r, p);
  return Residue::from_unsigned(std::min(root, p - root), mod);
}

Residue hensel_sqrt(const Residue& a) {
  const PrimeModulus& mod = a.modulus();
  const u64 p = mod.p();
  const Residue base = sqrt_mod_p(static_cast<i64>(a.value() % p), p);
  if (base.is_zero()) {
    if (mod.m() == 1) return Residue(0, mod);
    throw NonUnit("hensel_sqrt: p divides the argument");
  }
  Residue r = Residue::from_unsigned(base.value(), mod);
  const Residue two(2, mod);
  for (int i = 0; i < mod.m(); ++i) r -= (r * r - a) * (two * r).inverse();
  if (!(r * r == a)) throw InternalError("hensel_sqrt: lift failed");
  return r;
}

Residue hensel_sqrt(i64 a, u64 p, int m) {
  return hensel_sqrt(Residue(a, PrimeModulus(p, m)));
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  u64 x = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
  for (u64 f = 2; f * f <= x; ++f) {
    if (x % f == 0) {
      x /= f;
      if (x % f == 0) return false;
    }
  }
  return true;
}

SquareRootForm rational_sqrt_form(const Rational& x) {
  if (x <= 0) throw PreconditionViolation("rational_sqrt_form: argument must be positive");
  Integer radicand = x.get_num() * x.get_den();
  if (!radicand.fits_slong_p()) throw PreconditionViolation("rational_sqrt_form: argument too large");
  u64 rest = radicand.get_ui();
  u64 square_part = 1;
  for (u64 f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square_part *= f;
    }
  }
  Rational coefficient(Integer(static_cast<unsigned long>(square_part)), Integer(x.get_den()));
  coefficient.canonicalize();
  return {coefficient, static_cast<i64>(rest)};
}

QuadSurd::QuadSurd(Rational a, Rational b, i64 D) : a_(std::move(a)), b_(std::move(b)), D_(D) {
  a_.canonicalize();
  b_.canonicalize();
  if (D_ < 1 || !is_squarefree(D_)) throw PreconditionViolation("QuadSurd: D must be squarefree and >= 1");
  if (D_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) D_ = 1;
}

Integer QuadSurd::denominator() const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  return l;
}

i64 QuadSurd::common_D(const QuadSurd& rhs) const {
  if (D_ == 1) return rhs.D_;
  if (rhs.D_ == 1 || rhs.D_ == D_) return D_;
  throw PreconditionViolation("QuadSurd: operands lie in different quadratic fields");
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& rhs) {
  const i64 D = common_D(rhs);
  *this = QuadSurd(a_ + rhs.a_, b_ + rhs.b_, D);
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& rhs) {
  const i64 D = common_D(rhs);
  *this = QuadSurd(a_ - rhs.a_, b_ - rhs.b_, D);
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& rhs) {
  const i64 D = common_D(rhs);
  *this = QuadSurd(a_ * rhs.a_ + b_ * rhs.b_ * D, a_ * rhs.b_ + b_ * rhs.a_, D);
  return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& rhs) {
  const Rational n = rhs.norm();
  if (n == 0) throw PreconditionViolation("QuadSurd: division by zero");
  *this *= rhs.conj();
  *this = QuadSurd(a_ / n, b_ / n, D_);
  return *this;
}

double QuadSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(D_));
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (a_ != 0) out = a_.get_str();
  Rational mag = abs(b_);
  const bool negative = b_ < 0;
  if (!out.empty()) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + std::to_string(D_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << x.to_string(); }

QuadExtResidue::QuadExtResidue(Residue c0, Residue c1, Residue nonresidue)
    : c0_(std::move(c0)), c1_(std::move(c1)), n_(std::move(nonresidue)) {
  if (!(c0_.modulus() == c1_.modulus()) || !(c0_.modulus() == n_.modulus())) {
    throw ModulusMismatch("QuadExtResidue: components have different moduli");
  }
}

QuadExtResidue QuadExtResidue::scalar(const Residue& c, const Residue& nonresidue) {
  return QuadExtResidue(c, Residue(0, c.modulus()), nonresidue);
}

void QuadExtResidue::check_same(const QuadExtResidue& rhs) const {
  if (!(n_ == rhs.n_)) throw ModulusMismatch("QuadExtResidue: different extension rings");
}

QuadExtResidue QuadExtResidue::inverse() const {
  const Residue inv_norm = norm().inverse();
  return QuadExtResidue(c0_ * inv_norm, -c1_ * inv_norm, n_);
}

QuadExtResidue QuadExtResidue::pow(u64 exp) const {
  QuadExtResidue result = scalar(Residue(1, modulus()), n_);
  QuadExtResidue base = *this;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

QuadExtResidue& QuadExtResidue::operator+=(const QuadExtResidue& rhs) {
  check_same(rhs);
  c0_ += rhs.c0_;
  c1_ += rhs.c1_;
  return *this;
}

QuadExtResidue& QuadExtResidue::operator-=(const QuadExtResidue& rhs) {
  check_same(rhs);
  c0_ -= rhs.c0_;
  c1_ -= rhs.c1_;
  return *this;
}

QuadExtResidue& QuadExtResidue::operator*=(const QuadExtResidue& rhs) {
  check_same(rhs);
  const Residue r0 = c0_ * rhs.c0_ + n_ * c1_ * rhs.c1_;
  const Residue r1 = c0_ * rhs.c1_ + c1_ * rhs.c0_;
  c0_ = r0;
  c1_ = r1;
  return *this;
}

QuadExtResidue& QuadExtResidue::operator*=(const Residue& rhs) {
  c0_ *= rhs;
  c1_ *= rhs;
  return *this;
}

Residue embed_with_root(const QuadSurd& x, const Residue& sqrt_d) {
  const PrimeModulus& mod = sqrt_d.modulus();
  return reduce(x.a(), mod) + reduce(x.b(), mod) * sqrt_d;
}

EmbedResult embed_surd(const QuadSurd& x, const PrimeModulus& mod) {
  const u64 p = mod.p();
  if (mpz_mod_u64(x.denominator(), p) == 0) {
    throw RamifiedOrNonUnit("embed_surd: denominator divisible by p");
  }
  if (x.is_rational()) {
    const Residue v = reduce(x.a(), mod);
    return SplitPair{v, v};
  }
  const int symbol = legendre(x.D(), p);
  if (symbol == 0) throw RamifiedOrNonUnit("embed_surd: p divides the radicand");
  if (symbol == 1) {
    const Residue root = hensel_sqrt(x.D(), p, mod.m());
    return SplitPair{embed_with_root(x, root), embed_with_root(x, -root)};
  }
  return QuadExtResidue(reduce(x.a(), mod), reduce(x.b(), mod), Residue(x.D(), mod));
}

}  // namespace scv
