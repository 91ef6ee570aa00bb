#pragma once

// F_p and F_{p^2} = F_p[s]/(s^2 - n) with n a fixed nonresidue.

#include <cstdint>
#include <memory>
#include <vector>

#include "scv/arith.hpp"

namespace scv {

struct FqElem {
  std::uint32_t a = 0;  // constant part
  std::uint32_t b = 0;  // coefficient of s
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

class FiniteField {
 public:
  static FiniteField prime(std::uint64_t p);
  // F_p[s]/(s^2 - nonresidue); PreconditionViolation unless (nonresidue/p) = -1.
  static FiniteField quadratic(std::uint64_t p, std::uint64_t nonresidue);
  // Quadratic extension with the smallest positive nonresidue.
  static FiniteField quadratic(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t q() const { return degree_ == 1 ? p_ : p_ * p_; }
  std::uint64_t nonresidue() const { return n_; }

  FqElem zero() const { return {}; }
  FqElem one() const { return {1, 0}; }
  FqElem from_int(std::int64_t x) const;
  FqElem from_rational(const Rational& x) const;  // NonUnit if p | denominator
  FqElem element(std::int64_t a, std::int64_t b) const;
  // Enumeration order: index = a + b*p.
  FqElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FqElem& x) const { return x.a + static_cast<std::uint64_t>(x.b) * p_; }
  bool in_prime_field(const FqElem& x) const { return x.b == 0; }

  FqElem add(const FqElem& x, const FqElem& y) const;
  FqElem sub(const FqElem& x, const FqElem& y) const;
  FqElem neg(const FqElem& x) const;
  FqElem mul(const FqElem& x, const FqElem& y) const;
  FqElem inv(const FqElem& x) const;  // PreconditionViolation on zero
  FqElem pow(FqElem x, std::uint64_t exp) const;
  FqElem frobenius(const FqElem& x) const { return pow(x, p_); }

  std::uint64_t norm(const FqElem& x) const;
  // Absolute trace x + x^p (x itself over F_p).
  std::uint64_t trace(const FqElem& x) const;
  // Quadratic character of F_q, through the norm to F_p.
  int quadratic_character(const FqElem& x) const;
  // Quadratic character by Euler's criterion x^((q-1)/2) in F_q.
  int quadratic_character_euler(const FqElem& x) const;

  friend bool operator==(const FiniteField& x, const FiniteField& y) {
    return x.p_ == y.p_ && x.degree_ == y.degree_ && x.n_ == y.n_;
  }

 private:
  FiniteField(std::uint64_t p, int degree, std::uint64_t nonresidue);

  std::uint64_t p_;
  int degree_;
  std::uint64_t n_;
  std::shared_ptr<const std::vector<std::int8_t>> legendre_table_;
};

}  // namespace scv
