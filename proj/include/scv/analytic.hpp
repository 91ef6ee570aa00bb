#pragma once

// Real-analytic checks: hypergeometric series to a certified tolerance, Gamma
// values, Chowla-Selberg periods, the 1/pi series, the special values, and
// the eta-quotient coefficients of the weight-3 CM form.

#include <cstdint>
#include <string>
#include <vector>

#include "scv/bigreal.hpp"
#include "scv/catalog.hpp"
#include "scv/hypergeom.hpp"

namespace scv {

inline constexpr mpfr_prec_t min_analytic_bits = 128;
inline constexpr mpfr_prec_t acceptance_bits = 256;
// Residual threshold 10^-40 for every identity.
inline constexpr int residual_exponent = -40;
inline constexpr std::uint64_t eta_oracle_max_prime = 10'000;

// Value under the real embedding with sqrt(D) > 0.
BigReal real_value(const QuadSurd& x, mpfr_prec_t bits);

// sum (alpha k + 1) a_k lambda^k summed until the tail bound is below eps.
// With every b_i in (0, 1] the a_k are nonincreasing, so the tail after K
// terms is at most |a_K| sum_{k>K} (|alpha| k + 1) |lambda|^k.
// NoConvergence if |lambda| >= 1; PreconditionViolation for b_i outside (0, 1].
BigReal eval_F_real(const HGSpec& spec, const QuadSurd& lambda, const BigReal& eps);
BigReal eval_F_real(const HGSpec& spec, const QuadSurd& lambda, mpfr_prec_t bits);

// Gamma(x) for rational x > 0 (MPFR, correctly rounded at the working precision).
BigReal gamma_rational(const Rational& x, mpfr_prec_t bits);

struct OmegaSpec {
  int D;
  int h;
  int n;
  // chi(j) for j = 0 .. D-1, the Kronecker symbol (-D / j).
  std::vector<int> chi;

  static OmegaSpec from_field(const CmField& field);
  // PreconditionViolation unless chi is a real character mod D with zero sum.
  void validate() const;
};

// pi^(-1/2) prod_{j=1}^{D-1} Gamma(j/D)^(chi(j) n / (4h)).
BigReal omega_K(const OmegaSpec& spec, mpfr_prec_t bits);

BigReal evaluate(const GammaProduct& g, mpfr_prec_t bits);

// |F_{0,b}(lambda) F_{2 alpha,b}(lambda) - delta/pi|; lambda_shift perturbs lambda.
// PreconditionViolation if the record carries no delta.
BigReal check_table1(const ExampleRecord& ex, mpfr_prec_t bits, const Rational& lambda_shift = 0);

struct SpecialValueResidual {
  // |F_{0,b3}(lambda) - factor * Omega_K^2|
  BigReal identity;
  // |F_{0,b2}(lambda)^2 - F_{0,b3}(lambda)|
  BigReal clausen;
};

SpecialValueResidual check_special_value(const Catalog& catalog, const std::string& id, mpfr_prec_t bits);

// (5/p) [q^p] q prod (1 - q^{2n})^3 (1 - q^{6n})^3, by expanding each cube
// with Jacobi's identity and multiplying the two sparse series.
// PreconditionViolation for p < 7 or composite p; BudgetExceeded for p > 10^4.
std::int64_t eta_ap_oracle(std::uint64_t p);

struct AnalyticCheck {
  std::string id;
  std::string kind;
  BigReal residual;
  bool pass;
};

bool below_threshold(const BigReal& residual);

// Series-table rows with a delta and the special values; only filters by id
// (record id, series label or special-value id) when nonempty.
std::vector<AnalyticCheck> run_analytic_suite(const Catalog& catalog, mpfr_prec_t bits,
                                              const std::vector<std::string>& only = {});

}  // namespace scv
