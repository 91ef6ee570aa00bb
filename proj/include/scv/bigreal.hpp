#pragma once

// Arbitrary-precision reals (an owning wrapper over mpfr_t) and complex
// values built from them.

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "scv/arith.hpp"

namespace scv {

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits = 128);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(const Rational& value, mpfr_prec_t bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal pi(mpfr_prec_t bits);
  static BigReal parse(const std::string& decimal, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal operator-() const;

  friend BigReal operator+(BigReal x, const BigReal& y) { return x += y; }
  friend BigReal operator-(BigReal x, const BigReal& y) { return x -= y; }
  friend BigReal operator*(BigReal x, const BigReal& y) { return x *= y; }
  friend BigReal operator/(BigReal x, const BigReal& y) { return x /= y; }

  friend bool operator<(const BigReal& x, const BigReal& y) { return mpfr_less_p(x.value_, y.value_) != 0; }
  friend bool operator>(const BigReal& x, const BigReal& y) { return y < x; }
  friend bool operator<=(const BigReal& x, const BigReal& y) { return !(y < x); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Nearest integer, ties away from zero.
  Integer round() const;
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);

struct ComplexVal {
  BigReal re;
  BigReal im;

  explicit ComplexVal(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
  ComplexVal(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}
  static ComplexVal from_int(long value, mpfr_prec_t bits) { return {BigReal(value, bits), BigReal(0, bits)}; }
  // exp(2 pi i k / n).
  static ComplexVal root_of_unity(std::int64_t k, std::int64_t n, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return re.precision(); }
  ComplexVal conj() const { return {re, -im}; }
  BigReal norm() const { return re * re + im * im; }
  BigReal magnitude() const { return sqrt(norm()); }

  ComplexVal& operator+=(const ComplexVal& rhs);
  ComplexVal& operator-=(const ComplexVal& rhs);
  ComplexVal& operator*=(const ComplexVal& rhs);
  ComplexVal& operator*=(const BigReal& rhs);
  ComplexVal& operator/=(const ComplexVal& rhs);
  ComplexVal operator-() const { return {-re, -im}; }

  friend ComplexVal operator+(ComplexVal x, const ComplexVal& y) { return x += y; }
  friend ComplexVal operator-(ComplexVal x, const ComplexVal& y) { return x -= y; }
  friend ComplexVal operator*(ComplexVal x, const ComplexVal& y) { return x *= y; }
  friend ComplexVal operator*(ComplexVal x, const BigReal& y) { return x *= y; }
  friend ComplexVal operator/(ComplexVal x, const ComplexVal& y) { return x /= y; }
};

}  // namespace scv
