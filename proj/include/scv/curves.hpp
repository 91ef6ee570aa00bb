#pragma once

// The elliptic curves E_d(t) over F_p and F_{p^2}: construction, point
// counting, ordinarity and unit-root lifting.
//   d = 2: y^2 = x(1 - x)(x - t)
//   d = 3: y^2 + xy + (t/27) y = x^3
//   d = 4: y^2 = x(x^2 + x + t/4)
//   d = 6: y^2 + xy = x^3 - t/432

#include <cstdint>
#include <optional>

#include "scv/arith.hpp"
#include "scv/families.hpp"
#include "scv/finite_field.hpp"

namespace scv {

struct CurveInstance {
  Family family;
  FiniteField field;
  FqElem t;
  // Long Weierstrass coefficients; d = 2 uses the model x -> -x, y^2 = x^3 + (1+t)x^2 + tx.
  FqElem a1, a2, a3, a4, a6;
  FqElem discriminant;
  // y^2 = x^3 + c2 x^2 + c1 x + c0 after completing the square.
  FqElem c2, c1, c0;

  std::uint64_t q() const { return field.q(); }
};

// PreconditionViolation for p < 5; InvalidT for t in {0, 1}; BadReduction when
// the discriminant vanishes.
CurveInstance build_curve(Family f, const FiniteField& field, const FqElem& t);

inline constexpr std::uint64_t point_count_budget = 1'000'000;

// q + 1 - #E(F_q) by summing the quadratic character; BudgetExceeded past the
// budget; InternalError if the Hasse bound fails.
std::int64_t trace_of_frobenius(const CurveInstance& curve);

// a_q not divisible by p.
bool is_ordinary(const CurveInstance& curve, std::int64_t a_q);

// (n/p) = 1; PreconditionViolation when p | n.
bool ordinary_via_deuring(std::int64_t n, std::uint64_t p);

// The root of T^2 - a T + q congruent to a mod p, lifted to p^m.
// Supersingular when p | a.
Residue unit_root(std::int64_t a_q, std::uint64_t q, const PrimeModulus& mod);

struct FrobData {
  std::int64_t a_q;
  std::uint64_t q;
  bool ordinary;
  std::optional<Residue> unit_root;
};

FrobData frobenius_data(const CurveInstance& curve, const PrimeModulus& mod);

// frobenius_data over a quadratic field; PreconditionViolation if the field is prime.
FrobData frobenius_over_Fp2(Family f, const FiniteField& field, const FqElem& t, const PrimeModulus& mod);

// a_q(E_d(t)) = phi_q(k_d) a_q(E_d(1 - t)).
bool twist_trace_check(Family f, const FiniteField& field, const FqElem& t);

}  // namespace scv
