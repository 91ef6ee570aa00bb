#include "scv/analytic.hpp"

#include <algorithm>

#include "scv/errors.hpp"

namespace scv {

namespace {

constexpr mpfr_prec_t guard_bits = 64;
constexpr long max_series_terms = 1'000'000;

BigReal power_of_two(long exponent, mpfr_prec_t bits) {
  BigReal out(1, bits);
  mpfr_mul_2si(out.get(), out.get(), exponent, MPFR_RNDN);
  return out;
}

BigReal rational_power(const BigReal& base, const Rational& exponent, mpfr_prec_t bits) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) return pow(base, exponent.get_num().get_si());
  return pow(base, BigReal(exponent, bits));
}

bool matches(const std::vector<std::string>& only, std::initializer_list<std::string> labels) {
  if (only.empty()) return true;
  for (const std::string& label : labels) {
    if (!label.empty() && std::find(only.begin(), only.end(), label) != only.end()) return true;
  }
  return false;
}

}  // namespace

BigReal real_value(const QuadSurd& x, mpfr_prec_t bits) {
  BigReal out(x.a(), bits);
  if (!x.is_rational()) out += BigReal(x.b(), bits) * sqrt(BigReal(static_cast<long>(x.D()), bits));
  return out;
}

BigReal eval_F_real(const HGSpec& spec, const QuadSurd& lambda, const BigReal& eps) {
  if (spec.b.empty()) throw PreconditionViolation("eval_F_real: no parameters");
  for (const Rational& b : spec.b) {
    if (b <= 0 || b > 1) throw PreconditionViolation("eval_F_real: parameters must lie in (0, 1]");
  }
  if (eps.sign() <= 0) throw PreconditionViolation("eval_F_real: eps must be positive");
  const mpfr_prec_t bits = std::max<mpfr_prec_t>(eps.precision(), min_analytic_bits) + guard_bits;
  const BigReal lam = real_value(lambda, bits);
  const BigReal r = abs(lam);
  const BigReal one(1, bits);
  if (!(r < one)) throw NoConvergence("eval_F_real: |lambda| >= 1");
  const BigReal alpha = real_value(spec.alpha, bits);
  const BigReal A = abs(alpha);
  const BigReal gap = one - r;

  BigReal sum(0, bits);
  BigReal coeff(1, bits);
  BigReal power(1, bits);
  const long n = static_cast<long>(spec.n());
  for (long k = 0; k < max_series_terms; ++k) {
    sum += (alpha * BigReal(k, bits) + one) * coeff * power;
    for (const Rational& b : spec.b) coeff *= BigReal(Rational(b + k), bits);
    coeff /= pow(BigReal(k + 1, bits), n);
    power *= lam;
    const BigReal M(k + 1, bits);
    const BigReal tail = abs(coeff) * abs(power) * ((A * M + one) / gap + A * r / (gap * gap));
    if (tail < eps) {
      BigReal out(eps.precision());
      mpfr_set(out.get(), sum.get(), MPFR_RNDN);
      return out;
    }
  }
  throw NoConvergence("eval_F_real: term budget exhausted");
}

BigReal eval_F_real(const HGSpec& spec, const QuadSurd& lambda, mpfr_prec_t bits) {
  return eval_F_real(spec, lambda, power_of_two(-static_cast<long>(bits), bits));
}

BigReal gamma_rational(const Rational& x, mpfr_prec_t bits) {
  if (x <= 0) throw PreconditionViolation("gamma_rational: argument must be positive");
  return gamma(BigReal(x, bits));
}

OmegaSpec OmegaSpec::from_field(const CmField& field) {
  OmegaSpec spec{field.D, field.h, field.units, std::vector<int>(static_cast<std::size_t>(field.D), 0)};
  for (int j = 1; j < field.D; ++j) spec.chi[static_cast<std::size_t>(j)] = kronecker(-field.D, static_cast<std::uint64_t>(j));
  spec.validate();
  return spec;
}

void OmegaSpec::validate() const {
  if (D < 3 || h < 1 || n < 1 || chi.size() != static_cast<std::size_t>(D)) {
    throw PreconditionViolation("OmegaSpec: inconsistent (D, h, n, chi)");
  }
  int total = 0;
  for (int value : chi) {
    if (value < -1 || value > 1) throw PreconditionViolation("OmegaSpec: character values must be -1, 0 or 1");
    total += value;
  }
  if (total != 0 || chi[0] != 0) throw PreconditionViolation("OmegaSpec: character sum over a period must vanish");
}

BigReal omega_K(const OmegaSpec& spec, mpfr_prec_t bits) {
  spec.validate();
  const mpfr_prec_t work = bits + guard_bits;
  BigReal out = BigReal(1, work) / sqrt(BigReal::pi(work));
  for (int j = 1; j < spec.D; ++j) {
    const int c = spec.chi[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    out *= rational_power(gamma_rational(Rational(j, spec.D), work), Rational(c * spec.n, 4 * spec.h), work);
  }
  BigReal result(bits);
  mpfr_set(result.get(), out.get(), MPFR_RNDN);
  return result;
}

BigReal evaluate(const GammaProduct& g, mpfr_prec_t bits) {
  BigReal out(g.coefficient, bits);
  for (const auto& [base, exponent] : g.powers) out *= rational_power(BigReal(base, bits), exponent, bits);
  if (g.pi_exponent != 0) out *= pow(BigReal::pi(bits), static_cast<long>(g.pi_exponent));
  for (const auto& [arg, k] : g.gammas) out *= pow(gamma_rational(arg, bits), k);
  return out;
}

BigReal check_table1(const ExampleRecord& ex, mpfr_prec_t bits, const Rational& lambda_shift) {
  if (!ex.delta_surd && !ex.delta_product) throw PreconditionViolation("check_table1: record " + ex.id + " has no delta");
  const mpfr_prec_t work = bits + guard_bits;
  const QuadSurd lambda = ex.lambda + QuadSurd(lambda_shift);
  const BigReal f0 = eval_F_real(HGSpec{QuadSurd(0), ex.b}, lambda, work);
  const BigReal f2 = eval_F_real(HGSpec{ex.alpha * QuadSurd(2), ex.b}, lambda, work);
  const BigReal delta = ex.delta_surd ? real_value(*ex.delta_surd, work) : evaluate(*ex.delta_product, work);
  return abs(f0 * f2 - delta / BigReal::pi(work));
}

SpecialValueResidual check_special_value(const Catalog& catalog, const std::string& id, mpfr_prec_t bits) {
  const SpecialValue& sv = catalog.special_value(id);
  const mpfr_prec_t work = bits + guard_bits;
  const QuadSurd lambda(sv.lambda);
  const BigReal f3 = eval_F_real(HGSpec{QuadSurd(0), sv.b3}, lambda, work);
  const BigReal f2 = eval_F_real(HGSpec{QuadSurd(0), sv.b2}, lambda, work);
  const BigReal omega = omega_K(OmegaSpec::from_field(catalog.field(sv.field)), work);
  return {abs(f3 - evaluate(sv.factor, work) * omega * omega), abs(f2 * f2 - f3)};
}

std::int64_t eta_ap_oracle(std::uint64_t p) {
  if (p < 7 || !is_prime(p)) throw PreconditionViolation("eta_ap_oracle: p must be a prime >= 7");
  if (p > eta_oracle_max_prime) throw BudgetExceeded("eta_ap_oracle: p above 10^4");
  const std::uint64_t N = p - 1;
  // Jacobi: prod (1 - x^n)^3 = sum (-1)^k (2k + 1) x^{k(k+1)/2}, at x = q^2 and x = q^6.
  std::vector<long> cube6(N + 1, 0);
  for (std::uint64_t m = 0; 3 * m * (m + 1) <= N; ++m) cube6[3 * m * (m + 1)] = (m % 2 ? -1 : 1) * static_cast<long>(2 * m + 1);
  Integer coefficient = 0;
  for (std::uint64_t k = 0; k * (k + 1) <= N; ++k) {
    const long term = (k % 2 ? -1 : 1) * static_cast<long>(2 * k + 1);
    coefficient += Integer(term) * cube6[N - k * (k + 1)];
  }
  return legendre(5, p) * coefficient.get_si();
}

bool below_threshold(const BigReal& residual) {
  const BigReal threshold = pow(BigReal(10, residual.precision()), static_cast<long>(residual_exponent));
  return residual < threshold;
}

std::vector<AnalyticCheck> run_analytic_suite(const Catalog& catalog, mpfr_prec_t bits,
                                              const std::vector<std::string>& only) {
  if (bits < min_analytic_bits) throw PreconditionViolation("run_analytic_suite: precision below 128 bits");
  std::vector<AnalyticCheck> out;
  for (const ExampleRecord& ex : catalog.examples) {
    if (!ex.delta_surd && !ex.delta_product) continue;
    if (!matches(only, {ex.id, ex.series})) continue;
    BigReal r = check_table1(ex, bits);
    const bool pass = below_threshold(r);
    out.push_back({ex.series.empty() ? ex.id : ex.series, "table1 " + ex.id, std::move(r), pass});
  }
  for (const SpecialValue& sv : catalog.special_values) {
    if (!matches(only, {sv.id})) continue;
    SpecialValueResidual r = check_special_value(catalog, sv.id, bits);
    const bool identity_pass = below_threshold(r.identity);
    const bool clausen_pass = below_threshold(r.clausen);
    out.push_back({sv.id, "special_value", std::move(r.identity), identity_pass});
    out.push_back({sv.id, "clausen", std::move(r.clausen), clausen_pass});
  }
  if (!only.empty() && out.empty()) throw CatalogError("run_analytic_suite: no identity matches the selection");
  return out;
}

}  // namespace scv
