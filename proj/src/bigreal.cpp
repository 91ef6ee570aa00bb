#include "scv/bigreal.hpp"

#include <algorithm>
#include <vector>

#include "scv/errors.hpp"

namespace scv {

namespace {

mpfr_prec_t wider(const BigReal& x, const BigReal& y) { return std::max(x.precision(), y.precision()); }

void widen(BigReal& x, mpfr_prec_t bits) {
  if (x.precision() < bits) mpfr_prec_round(x.get(), bits, MPFR_RNDN);
}

template <class Op>
BigReal unary(const BigReal& x, Op op) {
  BigReal out(x.precision());
  op(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::pi(mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::parse(const std::string& decimal, mpfr_prec_t bits) {
  BigReal out(bits);
  if (mpfr_set_str(out.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) throw ParseError("BigReal: bad decimal " + decimal);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

Integer BigReal::round() const {
  BigReal rounded(precision());
  mpfr_round(rounded.value_, value_);
  Integer out;
  mpfr_get_z(out.get_mpz_t(), rounded.value_, MPFR_RNDN);
  return out;
}

std::string BigReal::to_string(int digits) const {
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return buffer.data();
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal gamma(const BigReal& x) { return unary(x, mpfr_gamma); }

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(wider(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

ComplexVal ComplexVal::root_of_unity(std::int64_t k, std::int64_t n, mpfr_prec_t bits) {
  if (n <= 0) throw PreconditionViolation("root_of_unity: order must be positive");
  k %= n;
  if (k < 0) k += n;
  // Evaluate at a few guard bits so the result is correctly rounded to `bits`.
  const mpfr_prec_t working = bits + 32;
  BigReal angle = BigReal::pi(working) * BigReal(2 * k, working) / BigReal(static_cast<long>(n), working);
  ComplexVal out(bits);
  BigReal s(working), c(working);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  mpfr_set(out.re.get(), c.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), s.get(), MPFR_RNDN);
  return out;
}

ComplexVal& ComplexVal::operator+=(const ComplexVal& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

ComplexVal& ComplexVal::operator-=(const ComplexVal& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

ComplexVal& ComplexVal::operator*=(const ComplexVal& rhs) {
  BigReal real = re * rhs.re - im * rhs.im;
  BigReal imag = re * rhs.im + im * rhs.re;
  re = std::move(real);
  im = std::move(imag);
  return *this;
}

ComplexVal& ComplexVal::operator*=(const BigReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

ComplexVal& ComplexVal::operator/=(const ComplexVal& rhs) {
  const BigReal n = rhs.norm();
  if (n.is_zero()) throw InternalError("ComplexVal: division by zero");
  *this *= rhs.conj();
  re /= n;
  im /= n;
  return *this;
}

}  // namespace scv
