#include "scv/curves.hpp"

#include <cmath>
#include <cstdlib>

#include "scv/errors.hpp"

namespace scv {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct FieldOps {
  const FiniteField& F;
  FqElem c(i64 x) const { return F.from_int(x); }
  FqElem frac(i64 num, i64 den) const { return F.from_rational(Rational(num, den)); }
  FqElem add(const FqElem& x, const FqElem& y) const { return F.add(x, y); }
  FqElem sub(const FqElem& x, const FqElem& y) const { return F.sub(x, y); }
  FqElem mul(const FqElem& x, const FqElem& y) const { return F.mul(x, y); }
};

FqElem discriminant_of(const FieldOps& o, const FqElem& a1, const FqElem& a2, const FqElem& a3, const FqElem& a4,
                       const FqElem& a6) {
  const FqElem b2 = o.add(o.mul(a1, a1), o.mul(o.c(4), a2));
  const FqElem b4 = o.add(o.mul(o.c(2), a4), o.mul(a1, a3));
  const FqElem b6 = o.add(o.mul(a3, a3), o.mul(o.c(4), a6));
  FqElem b8 = o.mul(o.mul(a1, a1), a6);
  b8 = o.add(b8, o.mul(o.c(4), o.mul(a2, a6)));
  b8 = o.sub(b8, o.mul(a1, o.mul(a3, a4)));
  b8 = o.add(b8, o.mul(a2, o.mul(a3, a3)));
  b8 = o.sub(b8, o.mul(a4, a4));
  FqElem disc = o.mul(o.c(-1), o.mul(o.mul(b2, b2), b8));
  disc = o.sub(disc, o.mul(o.c(8), o.mul(b4, o.mul(b4, b4))));
  disc = o.sub(disc, o.mul(o.c(27), o.mul(b6, b6)));
  disc = o.add(disc, o.mul(o.c(9), o.mul(b2, o.mul(b4, b6))));
  return disc;
}

}  // namespace

CurveInstance build_curve(Family f, const FiniteField& field, const FqElem& t) {
  if (field.p() < 5) throw PreconditionViolation("build_curve: p must be at least 5");
  if (t == field.zero() || t == field.one()) throw InvalidT("build_curve: t must not be 0 or 1");
  const FieldOps o{field};
  const FqElem zero = field.zero();
  CurveInstance c{f, field, t, zero, zero, zero, zero, zero, zero, zero, zero, zero};
  switch (f) {
    case Family::D2:
      c.a2 = o.add(o.c(1), t);
      c.a4 = t;
      break;
    case Family::D3:
      c.a1 = o.c(1);
      c.a3 = o.mul(t, o.frac(1, 27));
      break;
    case Family::D4:
      c.a2 = o.c(1);
      c.a4 = o.mul(t, o.frac(1, 4));
      break;
    case Family::D6:
      c.a1 = o.c(1);
      c.a6 = o.mul(t, o.frac(-1, 432));
      break;
  }
  c.discriminant = discriminant_of(o, c.a1, c.a2, c.a3, c.a4, c.a6);
  if (c.discriminant == zero) throw BadReduction("build_curve: singular fiber");
  // (y + (a1 x + a3)/2)^2 = x^3 + (a2 + a1^2/4) x^2 + (a4 + a1 a3/2) x + (a6 + a3^2/4).
  const FqElem quarter = o.frac(1, 4);
  const FqElem half = o.frac(1, 2);
  c.c2 = o.add(c.a2, o.mul(quarter, o.mul(c.a1, c.a1)));
  c.c1 = o.add(c.a4, o.mul(half, o.mul(c.a1, c.a3)));
  c.c0 = o.add(c.a6, o.mul(quarter, o.mul(c.a3, c.a3)));
  return c;
}

std::int64_t trace_of_frobenius(const CurveInstance& curve) {
  const FiniteField& F = curve.field;
  const u64 q = F.q();
  if (q > point_count_budget) throw BudgetExceeded("trace_of_frobenius: field too large for naive counting");
  i64 sum = 0;
  if (F.degree() == 1) {
    const u64 p = F.p();
    const u64 c2 = curve.c2.a, c1 = curve.c1.a, c0 = curve.c0.a;
    for (u64 x = 0; x < p; ++x) {
      const u64 value = (((x + c2) % p * x + c1) % p * x + c0) % p;
      sum += F.quadratic_character(FqElem{static_cast<std::uint32_t>(value), 0});
    }
  } else {
    for (u64 i = 0; i < q; ++i) {
      const FqElem x = F.element_at(i);
      FqElem value = F.add(x, curve.c2);
      value = F.add(F.mul(value, x), curve.c1);
      value = F.add(F.mul(value, x), curve.c0);
      sum += F.quadratic_character(value);
    }
  }
  const i64 a = -sum;
  if (static_cast<double>(a) * static_cast<double>(a) > 4.0 * static_cast<double>(q)) {
    throw InternalError("trace_of_frobenius: Hasse bound violated");
  }
  return a;
}

bool is_ordinary(const CurveInstance& curve, std::int64_t a_q) {
  if (static_cast<double>(a_q) * static_cast<double>(a_q) > 4.0 * static_cast<double>(curve.q())) {
    throw InternalError("is_ordinary: trace outside the Hasse bound");
  }
  return a_q % static_cast<i64>(curve.field.p()) != 0;
}

bool ordinary_via_deuring(std::int64_t n, std::uint64_t p) {
  const int symbol = legendre(n, p);
  if (symbol == 0) throw PreconditionViolation("ordinary_via_deuring: p divides n");
  return symbol == 1;
}

Residue unit_root(std::int64_t a_q, std::uint64_t q, const PrimeModulus& mod) {
  const Residue a(a_q, mod);
  if (!a.is_unit()) throw Supersingular("unit_root: trace divisible by p");
  const Residue qr = Residue::from_unsigned(q % mod.modulus(), mod);
  Residue u = a;
  for (int i = 0; i < 2 * mod.m() + 2; ++i) u = a - qr * u.inverse();
  if (!(u * u - a * u + qr).is_zero()) throw InternalError("unit_root: lift failed to converge");
  return u;
}

FrobData frobenius_data(const CurveInstance& curve, const PrimeModulus& mod) {
  if (mod.p() != curve.field.p()) throw ModulusMismatch("frobenius_data: modulus prime differs from the field");
  const i64 a = trace_of_frobenius(curve);
  FrobData out{a, curve.q(), is_ordinary(curve, a), std::nullopt};
  if (out.ordinary) out.unit_root = unit_root(a, out.q, mod);
  return out;
}

FrobData frobenius_over_Fp2(Family f, const FiniteField& field, const FqElem& t, const PrimeModulus& mod) {
  if (field.degree() != 2) throw PreconditionViolation("frobenius_over_Fp2: field must be quadratic");
  return frobenius_data(build_curve(f, field, t), mod);
}

bool twist_trace_check(Family f, const FiniteField& field, const FqElem& t) {
  if (t == field.zero() || t == field.one()) throw BadReduction("twist_trace_check: degenerate fiber at t or 1 - t");
  const FqElem reflected = field.sub(field.one(), t);
  const i64 lhs = trace_of_frobenius(build_curve(f, field, t));
  const i64 rhs = trace_of_frobenius(build_curve(f, field, reflected));
  const int phi = field.quadratic_character(field.from_int(twist_constant(f)));
  return lhs == phi * rhs;
}

}  // namespace scv
