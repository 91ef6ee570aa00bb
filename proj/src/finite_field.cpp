#include "scv/finite_field.hpp"

#include "scv/errors.hpp"

namespace scv {

namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

u32 mod_signed(std::int64_t x, u64 p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<u32>(r);
}

}  // namespace

FiniteField::FiniteField(u64 p, int degree, u64 nonresidue) : p_(p), degree_(degree), n_(nonresidue) {
  if (p < 3 || !is_prime(p)) throw PreconditionViolation("FiniteField: p must be an odd prime");
  if (p >= (u64{1} << 31)) throw PreconditionViolation("FiniteField: p too large");
  auto table = std::make_shared<std::vector<std::int8_t>>(p, -1);
  (*table)[0] = 0;
  for (u64 x = 1; x <= p / 2; ++x) (*table)[x * x % p] = 1;
  legendre_table_ = std::move(table);
}

FiniteField FiniteField::prime(u64 p) { return FiniteField(p, 1, 0); }

FiniteField FiniteField::quadratic(u64 p, u64 nonresidue) {
  if (legendre(static_cast<std::int64_t>(nonresidue % p), p) != -1) {
    throw PreconditionViolation("FiniteField: extension generator must be a nonresidue");
  }
  return FiniteField(p, 2, nonresidue % p);
}

FiniteField FiniteField::quadratic(u64 p) { return quadratic(p, smallest_nonresidue(p)); }

FqElem FiniteField::from_int(std::int64_t x) const { return {mod_signed(x, p_), 0}; }

FqElem FiniteField::from_rational(const Rational& x) const {
  return {static_cast<u32>(reduce(x, PrimeModulus(p_, 1)).value()), 0};
}

FqElem FiniteField::element(std::int64_t a, std::int64_t b) const {
  if (degree_ == 1 && mod_signed(b, p_) != 0) throw PreconditionViolation("FiniteField: F_p element with s-part");
  return {mod_signed(a, p_), mod_signed(b, p_)};
}

FqElem FiniteField::element_at(u64 index) const {
  return {static_cast<u32>(index % p_), static_cast<u32>(index / p_)};
}

FqElem FiniteField::add(const FqElem& x, const FqElem& y) const {
  return {static_cast<u32>((u64{x.a} + y.a) % p_), static_cast<u32>((u64{x.b} + y.b) % p_)};
}

FqElem FiniteField::sub(const FqElem& x, const FqElem& y) const {
  return {static_cast<u32>((u64{x.a} + p_ - y.a) % p_), static_cast<u32>((u64{x.b} + p_ - y.b) % p_)};
}

FqElem FiniteField::neg(const FqElem& x) const { return sub(zero(), x); }

FqElem FiniteField::mul(const FqElem& x, const FqElem& y) const {
  if (degree_ == 1) return {static_cast<u32>(u64{x.a} * y.a % p_), 0};
  const u64 bb = u64{x.b} * y.b % p_;
  const u64 a = (u64{x.a} * y.a + n_ * bb) % p_;
  const u64 b = (u64{x.a} * y.b + u64{x.b} * y.a) % p_;
  return {static_cast<u32>(a), static_cast<u32>(b)};
}

u64 FiniteField::norm(const FqElem& x) const {
  if (degree_ == 1) return x.a;
  const u64 bb = u64{x.b} * x.b % p_;
  return (u64{x.a} * x.a + p_ - n_ * bb % p_) % p_;
}

FqElem FiniteField::inv(const FqElem& x) const {
  const u64 nm = norm(x);
  if (nm == 0) throw PreconditionViolation("FiniteField: inverse of zero");
  if (degree_ == 1) return {static_cast<u32>(powmod(x.a, p_ - 2, p_)), 0};
  const u64 inv_norm = powmod(nm, p_ - 2, p_);
  return {static_cast<u32>(u64{x.a} * inv_norm % p_), static_cast<u32>((p_ - x.b) % p_ * inv_norm % p_)};
}

FqElem FiniteField::pow(FqElem x, u64 exp) const {
  FqElem result = one();
  while (exp > 0) {
    if (exp & 1) result = mul(result, x);
    x = mul(x, x);
    exp >>= 1;
  }
  return result;
}

u64 FiniteField::trace(const FqElem& x) const {
  if (degree_ == 1) return x.a;
  const FqElem t = add(x, frobenius(x));
  if (t.b != 0) throw InternalError("FiniteField: trace left the prime field");
  return t.a;
}

int FiniteField::quadratic_character(const FqElem& x) const { return (*legendre_table_)[norm(x)]; }

int FiniteField::quadratic_character_euler(const FqElem& x) const {
  if (x == zero()) return 0;
  const FqElem r = pow(x, (q() - 1) / 2);
  if (r == one()) return 1;
  if (r == from_int(-1)) return -1;
  throw InternalError("FiniteField: Euler criterion gave neither 1 nor -1");
}

}  // namespace scv
