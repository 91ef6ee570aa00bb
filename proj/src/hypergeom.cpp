#include "scv/hypergeom.hpp"

#include <algorithm>

#include "scv/errors.hpp"

namespace scv {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct SmallFraction {
  i64 num;
  i64 den;
};

std::vector<SmallFraction> to_small(const std::vector<Rational>& b) {
  std::vector<SmallFraction> out;
  out.reserve(b.size());
  for (const Rational& x : b) {
    if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p()) {
      throw PreconditionViolation("hypergeometric parameter too large");
    }
    out.push_back({x.get_num().get_si(), x.get_den().get_si()});
  }
  return out;
}

// p^val * unit, with val tracked exactly while unit stays a p-adic unit.
class ValuedUnit {
 public:
  explicit ValuedUnit(const PrimeModulus& mod) : mod_(mod), unit_(1, mod) {}

  void multiply(i64 x) { absorb(x, true); }
  void divide(i64 x) { absorb(x, false); }
  bool is_zero() const { return zero_; }
  int valuation() const { return val_; }

  Residue value() const {
    if (zero_) return Residue(0, mod_);
    if (val_ < 0) throw NegativeValuation("coefficient has p in its denominator");
    if (val_ >= mod_.m()) return Residue(0, mod_);
    return Residue::from_unsigned(powmod(mod_.p(), static_cast<u64>(val_), mod_.modulus()), mod_) * unit_;
  }

 private:
  void absorb(i64 x, bool numerator) {
    if (x == 0) {
      if (!numerator) throw PreconditionViolation("division by zero in coefficient recurrence");
      zero_ = true;
      return;
    }
    const i64 p = static_cast<i64>(mod_.p());
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    const Residue r(x, mod_);
    if (numerator) {
      val_ += v;
      unit_ *= r;
    } else {
      val_ -= v;
      unit_ *= r.inverse();
    }
  }

  PrimeModulus mod_;
  Residue unit_;
  int val_ = 0;
  bool zero_ = false;
};

Residue ring_one(const Residue& like) { return Residue(1, like.modulus()); }
QuadExtResidue ring_one(const QuadExtResidue& like) {
  return QuadExtResidue::scalar(Residue(1, like.modulus()), like.nonresidue());
}
Residue ring_zero(const Residue& like) { return Residue(0, like.modulus()); }
QuadExtResidue ring_zero(const QuadExtResidue& like) {
  return QuadExtResidue::scalar(Residue(0, like.modulus()), like.nonresidue());
}

template <class Ring>
Ring weighted_sum(const std::vector<Residue>& coeffs, const Ring& alpha, const Ring& lambda) {
  const PrimeModulus& mod = coeffs.front().modulus();
  const Ring one = ring_one(lambda);
  Ring sum = ring_zero(lambda);
  Ring power = one;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    sum += (alpha * Residue(static_cast<i64>(k), mod) + one) * coeffs[k] * power;
    power *= lambda;
  }
  return sum;
}

void check_truncation(int N, const PrimeModulus& mod) {
  if (N < 0) throw PreconditionViolation("truncation order must be nonnegative");
  if (static_cast<u64>(N) > mod.p() - 1) throw PreconditionViolation("truncation order must be at most p - 1");
}

// C(k, i) mod p^m for 0 <= i <= k <= n.
std::vector<std::vector<Residue>> binomial_table(int n, const PrimeModulus& mod) {
  std::vector<std::vector<Residue>> c;
  c.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<Residue> row(k + 1, Residue(1, mod));
    for (int i = 1; i < k; ++i) row[i] = c[k - 1][i - 1] + c[k - 1][i];
    c.push_back(std::move(row));
  }
  return c;
}

// Coefficients of sum_k a_k (c0 + c1 x)^k as a polynomial in x.
std::vector<Residue> affine_substitute(const std::vector<Residue>& a, const Residue& c0, const Residue& c1) {
  const PrimeModulus& mod = c0.modulus();
  const int n = static_cast<int>(a.size()) - 1;
  const auto binom = binomial_table(n, mod);
  std::vector<Residue> out(a.size(), Residue(0, mod));
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) {
      out[i] += a[k] * binom[k][i] * c0.pow(static_cast<u64>(k - i)) * c1.pow(static_cast<u64>(i));
    }
  }
  return out;
}

std::vector<Residue> multiply(const std::vector<Residue>& x, const std::vector<Residue>& y) {
  const PrimeModulus& mod = x.front().modulus();
  std::vector<Residue> out(x.size() + y.size() - 1, Residue(0, mod));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

void HGSpec::validate() const {
  if (b.size() != 2 && b.size() != 3) throw PreconditionViolation("HGSpec: b must have 2 or 3 entries");
  for (const Rational& x : b) {
    const Integer& den = x.get_den();
    if (den != 1 && den != 2 && den != 3 && den != 4 && den != 6) {
      throw PreconditionViolation("HGSpec: denominators must lie in {1,2,3,4,6}");
    }
  }
}

std::vector<Residue> series_coefficients(const std::vector<Rational>& b, int N, const PrimeModulus& mod) {
  if (N < 0) throw PreconditionViolation("series_coefficients: negative order");
  const auto params = to_small(b);
  const int n = static_cast<int>(params.size());
  std::vector<Residue> out;
  out.reserve(N + 1);
  ValuedUnit state(mod);
  out.push_back(state.value());
  for (int k = 1; k <= N; ++k) {
    for (const SmallFraction& f : params) {
      state.multiply(f.num + (k - 1) * f.den);
      state.divide(f.den);
    }
    for (int i = 0; i < n; ++i) state.divide(k);
    out.push_back(state.value());
  }
  return out;
}

Residue rising_ratio(const std::vector<Rational>& b, int k, const PrimeModulus& mod) {
  return series_coefficients(b, k, mod).back();
}

Residue trunc_F(const HGSpec& spec, const Residue& alpha, const Residue& lambda, int N) {
  spec.validate();
  check_truncation(N, lambda.modulus());
  return weighted_sum(series_coefficients(spec.b, N, lambda.modulus()), alpha, lambda);
}

QuadExtResidue trunc_F(const HGSpec& spec, const QuadExtResidue& alpha, const QuadExtResidue& lambda, int N) {
  spec.validate();
  check_truncation(N, lambda.modulus());
  return weighted_sum(series_coefficients(spec.b, N, lambda.modulus()), alpha, lambda);
}

Residue trunc_product_F(const Residue& alpha, const std::vector<Rational>& b, const Residue& lambda, int N) {
  HGSpec{QuadSurd(0), b}.validate();
  check_truncation(N, lambda.modulus());
  const PrimeModulus& mod = lambda.modulus();
  const auto a = series_coefficients(b, N, mod);
  std::vector<Residue> squared(a.size(), Residue(0, mod));
  for (int k = 0; k <= N; ++k) {
    for (int j = 0; j <= k; ++j) squared[k] += a[j] * a[k - j];
  }
  return weighted_sum(squared, alpha, lambda);
}

u64 r_d(int d, u64 p) {
  family_from_degree(d);
  const u64 ud = static_cast<u64>(d);
  if (p % ud == 0) throw PreconditionViolation("r_d: p must be coprime to d");
  if (p % ud == 1) return (p - 1) / ud;
  if (p % ud == ud - 1) return (p - (ud - 1)) / ud;
  throw PreconditionViolation("r_d: p must be +-1 mod d");
}

u64 s_d(int d, u64 p) {
  family_from_degree(d);
  const u64 ud = static_cast<u64>(d);
  if (p % ud == 0) throw PreconditionViolation("s_d: p must be coprime to d");
  if (p % ud == 1) return ((ud - 1) * p - (ud - 1)) / ud;
  if (p % ud == ud - 1) return ((ud - 1) * p - 1) / ud;
  throw PreconditionViolation("s_d: p must be +-1 mod d");
}

TruncationClass coeff_class(int d, u64 p, int k) {
  family_from_degree(d);
  if (k < 0 || static_cast<u64>(k) > p - 1) throw PreconditionViolation("coeff_class: k must lie in [0, p-1]");
  const u64 r = r_d(d, p);
  const u64 s = s_d(d, p);
  const u64 uk = static_cast<u64>(k);
  TruncationClass out{k, CoeffClass::Unit, false};
  if (uk > s) {
    out.cls = CoeffClass::DivisibleByP2;
  } else if (uk > r) {
    out.cls = CoeffClass::DivisibleByP_NotP2;
  }
  out.half_zero = (p + 1) / 2 <= uk && uk <= p - 1;
  return out;
}

std::vector<Rational> exact_coefficients(const std::vector<Rational>& b, int N) {
  std::vector<Rational> a;
  a.reserve(N + 1);
  a.emplace_back(1);
  const int n = static_cast<int>(b.size());
  for (int k = 1; k <= N; ++k) {
    Rational next = a.back();
    for (const Rational& bi : b) next *= bi + (k - 1);
    for (int i = 0; i < n; ++i) next /= k;
    a.push_back(next);
  }
  return a;
}

QuadSurd exact_trunc_F(const HGSpec& spec, const QuadSurd& lambda, int N) {
  if (N > 500) throw PreconditionViolation("exact_trunc_F: order capped at 500");
  const auto a = exact_coefficients(spec.b, N);
  QuadSurd sum(0);
  QuadSurd power(1);
  for (int k = 0; k <= N; ++k) {
    sum += (spec.alpha * QuadSurd(k) + QuadSurd(1)) * QuadSurd(a[k]) * power;
    power *= lambda;
  }
  return sum;
}

QuadSurd exact_trunc_product_F(const QuadSurd& alpha, const std::vector<Rational>& b, const QuadSurd& lambda, int N) {
  if (N > 500) throw PreconditionViolation("exact_trunc_product_F: order capped at 500");
  const auto a = exact_coefficients(b, N);
  QuadSurd sum(0);
  QuadSurd power(1);
  for (int k = 0; k <= N; ++k) {
    Rational squared = 0;
    for (int j = 0; j <= k; ++j) squared += a[j] * a[k - j];
    sum += (alpha * QuadSurd(k) + QuadSurd(1)) * QuadSurd(squared) * power;
    power *= lambda;
  }
  return sum;
}

std::vector<Residue> clausen_two_defect(Family f, u64 p, int m) {
  const PrimeModulus mod(p, m);
  const int N = static_cast<int>(p - 1);
  const auto a = series_coefficients(two_parameter_b(f), N, mod);
  const auto reflected = affine_substitute(a, Residue(1, mod), Residue(-1, mod));
  const Residue chi(legendre(twist_constant(f), p), mod);
  std::vector<Residue> out;
  out.reserve(a.size());
  for (int i = 0; i <= N; ++i) out.push_back(a[i] - chi * reflected[i]);
  return out;
}

std::vector<Residue> clausen_three_defect(Family f, u64 p, int m) {
  const PrimeModulus mod(p, m);
  const int N = static_cast<int>(p - 1);
  const auto three = series_coefficients(three_parameter_b(f), N, mod);
  const auto two = series_coefficients(two_parameter_b(f), N, mod);
  const Residue half = Residue(2, mod).inverse();
  const auto plus = affine_substitute(two, half, half);
  const auto minus = affine_substitute(two, half, -half);
  const auto product = multiply(plus, minus);
  std::vector<Residue> even;
  for (std::size_t j = 0; j < product.size(); ++j) {
    if (j % 2 == 1) {
      if (!product[j].is_zero()) throw InternalError("clausen_three_defect: odd power of sqrt(1-t) survived");
    } else {
      even.push_back(product[j]);
    }
  }
  const auto in_t = affine_substitute(even, Residue(1, mod), Residue(-1, mod));
  const Residue chi(legendre(twist_constant(f), p), mod);
  std::vector<Residue> out(std::max(three.size(), in_t.size()), Residue(0, mod));
  for (std::size_t i = 0; i < three.size(); ++i) out[i] += three[i];
  for (std::size_t i = 0; i < in_t.size(); ++i) out[i] -= chi * in_t[i];
  return out;
}

Residue binomial_sum_corollary(Family f, const Residue& t) {
  const PrimeModulus& mod = t.modulus();
  const u64 p = mod.p();
  const int N = static_cast<int>(p - 1);
  const auto a = series_coefficients(two_parameter_b(f), N, mod);
  const auto binom = binomial_table(N, mod);
  const Residue half = Residue(2, mod).inverse();
  const Residue one_minus_t = Residue(1, mod) - t;
  const bool odd_branch = legendre(twist_constant(f), p) == 1;
  Residue total(odd_branch ? 0 : 1, mod);
  for (int k = 1; k <= N; ++k) {
    Residue inner(0, mod);
    Residue power(1, mod);
    const int jmax = odd_branch ? (k - 1) / 2 : k / 2;
    for (int j = 0; j <= jmax; ++j) {
      inner += binom[k][odd_branch ? 2 * j + 1 : 2 * j] * power;
      power *= one_minus_t;
    }
    total += a[k] * half.pow(static_cast<u64>(k)) * inner;
  }
  return total;
}

}  // namespace scv
