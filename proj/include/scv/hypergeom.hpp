#pragma once

// Truncated hypergeometric series F_{alpha,b}(z) = sum (alpha k + 1) a_k z^k,
// a_k = prod_i (b_i)_k / k!^n, over residue rings and over Q(sqrt D).

#include <cstdint>
#include <vector>

#include "scv/arith.hpp"
#include "scv/families.hpp"

namespace scv {

struct HGSpec {
  QuadSurd alpha;
  std::vector<Rational> b;

  std::size_t n() const { return b.size(); }
  // PreconditionViolation unless n is 2 or 3 and every denominator is in {1,2,3,4,6}.
  void validate() const;
};

enum class CoeffClass { Unit, DivisibleByP_NotP2, DivisibleByP2 };

struct TruncationClass {
  int k;
  CoeffClass cls;
  // (1/2)_k / k! vanishes mod p.
  bool half_zero;
};

// prod (b_i)_k / k!^n mod p^m; p-powers of numerator and denominator are
// tracked separately. NegativeValuation if the rational is not p-integral.
Residue rising_ratio(const std::vector<Rational>& b, int k, const PrimeModulus& mod);

// rising_ratio for k = 0..N, computed incrementally.
std::vector<Residue> series_coefficients(const std::vector<Rational>& b, int N, const PrimeModulus& mod);

// sum_{k<=N} (alpha k + 1) a_k lambda^k; requires N <= p - 1.
Residue trunc_F(const HGSpec& spec, const Residue& alpha, const Residue& lambda, int N);
QuadExtResidue trunc_F(const HGSpec& spec, const QuadExtResidue& alpha, const QuadExtResidue& lambda, int N);

// sum_{k<=N} (alpha k + 1) A_k lambda^k with A_k = sum_j a_j a_{k-j}: the
// truncation of F_{0,b} * F_{2 alpha,b}.
Residue trunc_product_F(const Residue& alpha, const std::vector<Rational>& b, const Residue& lambda, int N);

// r_d / s_d classification of (1/d)_k ((d-1)/d)_k / k!^2 mod p. InvalidD for bad d.
TruncationClass coeff_class(int d, std::uint64_t p, int k);
std::uint64_t r_d(int d, std::uint64_t p);
std::uint64_t s_d(int d, std::uint64_t p);

// Exact oracle over Q(sqrt D).
std::vector<Rational> exact_coefficients(const std::vector<Rational>& b, int N);
QuadSurd exact_trunc_F(const HGSpec& spec, const QuadSurd& lambda, int N);
QuadSurd exact_trunc_product_F(const QuadSurd& alpha, const std::vector<Rational>& b, const QuadSurd& lambda, int N);

// Coefficients in t, mod p^m, of
//   [F_{0,(1/d,(d-1)/d)}]_{p-1}(t) - (k_d/p) [F_{0,(1/d,(d-1)/d)}]_{p-1}(1 - t).
std::vector<Residue> clausen_two_defect(Family f, std::uint64_t p, int m);

// Coefficients in t, mod p^m, of
//   [F_{0,(1/2,1/d,(d-1)/d)}]_{p-1}(t) - (k_d/p) P(u_+) P(u_-),
// P = [F_{0,(1/d,(d-1)/d)}]_{p-1}, u_(+/-) = (1 +/- sqrt(1 - t))/2.
// The product is symmetric in sqrt(1 - t); InternalError if an odd power survives.
std::vector<Residue> clausen_three_defect(Family f, std::uint64_t p, int m);

// The double binomial sum selected by (k_d/p), evaluated at t mod p^m.
Residue binomial_sum_corollary(Family f, const Residue& t);

}  // namespace scv
