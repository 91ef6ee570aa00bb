#pragma once

// Multiplicative characters of F_q, Gauss sums, the finite hypergeometric
// sums H_q, and the character-sum identities built on them.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "scv/bigreal.hpp"
#include "scv/families.hpp"
#include "scv/finite_field.hpp"

namespace scv {

inline constexpr mpfr_prec_t default_charsum_bits = 128;
inline constexpr mpfr_prec_t max_charsum_bits = 1024;

// Immutable character data of F_q: omega(g^k) = exp(2 pi i k / (q-1)) for the
// first generator g in enumeration order, Psi(x) = exp(2 pi i Tr(x) / p).
class FqContext {
 public:
  explicit FqContext(FiniteField field, mpfr_prec_t bits = default_charsum_bits);

  const FiniteField& field() const { return field_; }
  std::uint64_t p() const { return field_.p(); }
  std::uint64_t q() const { return field_.q(); }
  std::uint64_t group_order() const { return field_.q() - 1; }
  mpfr_prec_t precision() const { return bits_; }
  const FqElem& generator() const { return generator_; }

  // PreconditionViolation on zero.
  std::uint64_t dlog(const FqElem& x) const;
  // exp(2 pi i e / (q-1)).
  const ComplexVal& root(std::int64_t e) const { return roots_[reduce_exponent(e)]; }
  // omega^j(x); zero at x = 0.
  ComplexVal character(std::int64_t j, const FqElem& x) const;
  // g(omega^j) = sum over x != 0 of Psi(x) omega^j(x); g(trivial) = -1.
  const ComplexVal& gauss(std::int64_t j) const { return gauss_[reduce_exponent(j)]; }
  std::uint64_t reduce_exponent(std::int64_t e) const;

 private:
  FiniteField field_;
  mpfr_prec_t bits_;
  FqElem generator_;
  std::vector<std::uint32_t> dlog_;
  std::vector<ComplexVal> roots_;
  std::vector<ComplexVal> gauss_;
};

const ComplexVal& gauss_sum(const FqContext& ctx, std::int64_t j);

// S_d(omega^j) for d in {3, 4, 6}:
//   S_3 = g(chi^3)/g(chi) chi(1/27),  S_4 = g(chi^4)/g(chi^2) chi(1/64),
//   S_6 = g(chi) g(chi^6) / (g(chi^2) g(chi^3)) chi(1/432).
ComplexVal s_d_factor(const FqContext& ctx, std::int64_t j, int d);

enum class HqShape { HalfHalf, TwoParameter, HalfCubed, ThreeParameter };

struct HqDatum {
  HqShape shape;
  Family family;
  std::vector<Rational> alpha;
};

// PreconditionViolation unless alpha is {1/d,(d-1)/d} or {1/2,1/d,(d-1)/d} and beta is all ones.
HqDatum classify_datum(const std::vector<Rational>& alpha, const std::vector<Rational>& beta);
HqDatum two_parameter_datum(Family f);
HqDatum three_parameter_datum(Family f);

struct HqValue {
  Integer value;
  ComplexVal raw;
};

inline constexpr double integrality_tolerance = 1e-6;

// NotNearIntegral unless raw is within the tolerance of a real integer.
HqValue round_to_integer(const ComplexVal& raw);

// Precomputes the summand coefficients of one datum over one field.
class HqEvaluator {
 public:
  HqEvaluator(const FqContext& ctx, HqDatum datum);
  ComplexVal raw(const FqElem& t) const;
  HqValue operator()(const FqElem& t) const { return round_to_integer(raw(t)); }
  const HqDatum& datum() const { return datum_; }

 private:
  const FqContext& ctx_;
  HqDatum datum_;
  bool negate_argument_;
  std::vector<ComplexVal> coeffs_;
};

HqValue H_q(const FqContext& ctx, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
            const FqElem& t);

// The defining Gauss-sum formula for q = 1 mod lcm(denominators):
//   1/(1-q) sum_m prod_j g(m + a_j(q-1)) g(-m - b_j(q-1)) / (g(a_j(q-1)) g(-b_j(q-1))) omega^m((-1)^n t).
ComplexVal bcm_H_q(const FqContext& ctx, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                   const FqElem& t);

// Contexts shared across evaluations, with automatic precision doubling on
// NotNearIntegral; escalations() counts how often that was needed.
class FqContextCache {
 public:
  const FqContext& get(const FiniteField& field, mpfr_prec_t bits = default_charsum_bits);
  HqValue evaluate(const FiniteField& field, const HqDatum& datum, const FqElem& t);
  int escalations() const { return escalations_; }

 private:
  using Key = std::tuple<std::uint64_t, int, std::uint64_t, mpfr_prec_t>;
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<FqContext>> contexts_;
  int escalations_ = 0;
};

// H_p(3; t) against H_p(2; mu)^2 - p (1 - t a square), (k_d/p) H_{p^2}(2; mu) - p
// (1 - t a nonsquare, mu = (1 - sqrt(1 - t))/2 in F_{p^2}), or
// H_p(2; 1/2)^2 - (1 + (k_d/p)) p at t = 1. Both square-root branches must agree.
bool clausen_check(FqContextCache& cache, std::uint64_t p, Family f, std::uint64_t t);

// H_q(t) of the two-parameter datum equals the point-count trace of E_d(t).
bool hp_trace_equality(FqContextCache& cache, Family f, const FiniteField& field, const FqElem& t);

// H_q(t) = phi_q(k_d) H_q(1 - t) for the two-parameter datum.
bool hq_twist_identity(FqContextCache& cache, Family f, const FiniteField& field, const FqElem& t);

// [F_{0,b}]_{p-1}(t) = H_p(t) mod p for the two- or three-parameter datum.
bool hp_truncation_bridge(FqContextCache& cache, Family f, bool three_parameter, std::uint64_t p, std::uint64_t t);

// H_p({1/d,(d-1)/d},{1,1}; 1) = (k_d/p).
bool hp_at_one(FqContextCache& cache, Family f, std::uint64_t p);

struct IdentityTally {
  std::string identity;
  int d;
  std::uint64_t q;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

// Trace equality and twist identity over F_p (5 <= p <= pmax) and, with
// with_fp2, over F_{p^2} for p^2 <= fp2_qmax; H_p(1) and the Clausen identity
// over F_p. Fibers with bad reduction are not counted.
std::vector<IdentityTally> run_charsum_suite(FqContextCache& cache, std::uint64_t pmax, bool with_fp2,
                                             std::uint64_t fp2_qmax = 49);

}  // namespace scv
