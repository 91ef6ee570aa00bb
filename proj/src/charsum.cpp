#include "scv/charsum.hpp"

#include <algorithm>
#include <numeric>

#include "scv/curves.hpp"
#include "scv/errors.hpp"
#include "scv/hypergeom.hpp"

namespace scv {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FqElem find_generator(const FiniteField& F) {
  const u64 order = F.q() - 1;
  const auto factors = prime_factors(order);
  for (u64 i = 1; i < F.q(); ++i) {
    const FqElem x = F.element_at(i);
    if (x == F.zero()) continue;
    const bool primitive = std::all_of(factors.begin(), factors.end(),
                                       [&](u64 r) { return !(F.pow(x, order / r) == F.one()); });
    if (primitive) return x;
  }
  throw InternalError("FqContext: no generator found");
}

bool all_ones(const std::vector<Rational>& beta) {
  return std::all_of(beta.begin(), beta.end(), [](const Rational& x) { return x == 1; });
}

Integer lcm_of_denominators(const std::vector<Rational>& xs) {
  Integer out = 1;
  for (const Rational& x : xs) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), x.get_den().get_mpz_t());
  return out;
}

void check_characteristic(const FqContext& ctx, Family f) {
  const u64 p = ctx.p();
  if (p < 3 || (degree(f) % 3 == 0 && p == 3)) throw PreconditionViolation("H_q: p must be coprime to 2d");
}

}  // namespace

FqContext::FqContext(FiniteField field, mpfr_prec_t bits)
    : field_(std::move(field)), bits_(bits), generator_(find_generator(field_)) {
  if (bits < 64) throw PreconditionViolation("FqContext: precision below 64 bits");
  const u64 q = field_.q();
  const u64 p = field_.p();
  const u64 order = q - 1;

  dlog_.assign(q, 0);
  std::vector<std::uint32_t> trace_of_power(order);
  FqElem x = field_.one();
  for (u64 k = 0; k < order; ++k) {
    dlog_[field_.index_of(x)] = static_cast<std::uint32_t>(k);
    trace_of_power[k] = static_cast<std::uint32_t>(field_.trace(x));
    x = field_.mul(x, generator_);
  }
  if (!(x == field_.one())) throw InternalError("FqContext: generator order mismatch");

  roots_.reserve(order);
  for (u64 e = 0; e < order; ++e) roots_.push_back(ComplexVal::root_of_unity(static_cast<i64>(e), static_cast<i64>(order), bits));
  std::vector<ComplexVal> zeta_p;
  zeta_p.reserve(p);
  for (u64 c = 0; c < p; ++c) zeta_p.push_back(ComplexVal::root_of_unity(static_cast<i64>(c), static_cast<i64>(p), bits));

  // g(omega^j) = sum_c zeta_p^c * (sum over k with Tr(g^k) = c of zeta_{q-1}^{jk}).
  gauss_.reserve(order);
  gauss_.push_back(ComplexVal::from_int(-1, bits));
  std::vector<ComplexVal> by_trace(p, ComplexVal(bits));
  for (u64 j = 1; j < order; ++j) {
    for (ComplexVal& s : by_trace) {
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
    }
    u64 e = 0;
    for (u64 k = 0; k < order; ++k) {
      ComplexVal& slot = by_trace[trace_of_power[k]];
      mpfr_add(slot.re.get(), slot.re.get(), roots_[e].re.get(), MPFR_RNDN);
      mpfr_add(slot.im.get(), slot.im.get(), roots_[e].im.get(), MPFR_RNDN);
      e += j;
      if (e >= order) e -= order;
    }
    ComplexVal sum(bits);
    for (u64 c = 0; c < p; ++c) sum += zeta_p[c] * by_trace[c];
    gauss_.push_back(std::move(sum));
  }
}

u64 FqContext::reduce_exponent(std::int64_t e) const {
  const i64 n = static_cast<i64>(group_order());
  i64 r = e % n;
  if (r < 0) r += n;
  return static_cast<u64>(r);
}

u64 FqContext::dlog(const FqElem& x) const {
  if (x == field_.zero()) throw PreconditionViolation("FqContext: discrete log of zero");
  return dlog_[field_.index_of(x)];
}

ComplexVal FqContext::character(std::int64_t j, const FqElem& x) const {
  if (x == field_.zero()) return ComplexVal(bits_);
  const u64 e = mulmod(reduce_exponent(j), dlog(x), group_order());
  return roots_[e];
}

const ComplexVal& gauss_sum(const FqContext& ctx, std::int64_t j) { return ctx.gauss(j); }

ComplexVal s_d_factor(const FqContext& ctx, std::int64_t j, int d) {
  const FiniteField& F = ctx.field();
  switch (d) {
    case 3:
      return ctx.gauss(3 * j) / ctx.gauss(j) * ctx.character(j, F.from_rational(Rational(1, 27)));
    case 4:
      return ctx.gauss(4 * j) / ctx.gauss(2 * j) * ctx.character(j, F.from_rational(Rational(1, 64)));
    case 6:
      return ctx.gauss(j) * ctx.gauss(6 * j) / (ctx.gauss(2 * j) * ctx.gauss(3 * j)) *
             ctx.character(j, F.from_rational(Rational(1, 432)));
    default:
      throw InvalidD("s_d_factor: d must be 3, 4 or 6");
  }
}

HqDatum classify_datum(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  if (alpha.size() != beta.size() || !all_ones(beta)) throw PreconditionViolation("H_q: beta must be all ones");
  std::vector<Rational> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  const Rational half(1, 2);
  if (sorted.size() == 2) {
    for (Family f : all_families) {
      if (sorted == two_parameter_b(f)) return two_parameter_datum(f);
    }
  } else if (sorted.size() == 3) {
    for (Family f : all_families) {
      std::vector<Rational> b = three_parameter_b(f);
      std::sort(b.begin(), b.end());
      if (sorted == b) return three_parameter_datum(f);
    }
  }
  throw PreconditionViolation("H_q: unsupported hypergeometric datum");
}

HqDatum two_parameter_datum(Family f) {
  return {f == Family::D2 ? HqShape::HalfHalf : HqShape::TwoParameter, f, two_parameter_b(f)};
}

HqDatum three_parameter_datum(Family f) {
  return {f == Family::D2 ? HqShape::HalfCubed : HqShape::ThreeParameter, f, three_parameter_b(f)};
}

HqValue round_to_integer(const ComplexVal& raw) {
  const Integer nearest = raw.re.round();
  const BigReal gap = abs(raw.re - BigReal(Rational(nearest), raw.precision()));
  if (gap.to_double() > integrality_tolerance || abs(raw.im).to_double() > integrality_tolerance) {
    throw NotNearIntegral("H_q: value is not near a rational integer at this precision");
  }
  return {nearest, raw};
}

HqEvaluator::HqEvaluator(const FqContext& ctx, HqDatum datum) : ctx_(ctx), datum_(std::move(datum)) {
  check_characteristic(ctx_, datum_.family);
  const i64 order = static_cast<i64>(ctx_.group_order());
  const i64 half = order / 2;
  const mpfr_prec_t bits = ctx_.precision();
  const FiniteField& F = ctx_.field();
  const long q = static_cast<long>(ctx_.q());
  const long phi_minus_one = F.quadratic_character(F.from_int(-1));
  const int d = degree(datum_.family);

  ComplexVal prefactor(bits);
  switch (datum_.shape) {
    case HqShape::HalfHalf:
      prefactor = ComplexVal::from_int(phi_minus_one, bits) / ComplexVal::from_int(q * (1 - q), bits);
      break;
    case HqShape::TwoParameter:
      prefactor = ComplexVal(BigReal(Rational(1, 1 - q), bits), BigReal(0, bits));
      break;
    case HqShape::HalfCubed:
      prefactor = ctx_.gauss(half) * BigReal(Rational(1, q * q * (q - 1)), bits);
      break;
    case HqShape::ThreeParameter:
      prefactor = ctx_.gauss(half) * BigReal(Rational(phi_minus_one, q * (q - 1)), bits);
      break;
  }
  negate_argument_ = datum_.shape == HqShape::HalfCubed || datum_.shape == HqShape::ThreeParameter;

  coeffs_.reserve(static_cast<std::size_t>(order));
  for (i64 k = 0; k < order; ++k) {
    const ComplexVal& twisted = ctx_.gauss(k + half);
    const ComplexVal& inverse = ctx_.gauss(-k);
    ComplexVal c = prefactor;
    switch (datum_.shape) {
      case HqShape::HalfHalf:
        c *= twisted * twisted * inverse * inverse;
        break;
      case HqShape::TwoParameter:
        c *= inverse * inverse * s_d_factor(ctx_, k, d);
        break;
      case HqShape::HalfCubed:
        c *= twisted * twisted * twisted * inverse * inverse * inverse;
        break;
      case HqShape::ThreeParameter:
        c *= twisted * inverse * inverse * inverse * s_d_factor(ctx_, k, d);
        break;
    }
    coeffs_.push_back(std::move(c));
  }
}

ComplexVal HqEvaluator::raw(const FqElem& t) const {
  const FiniteField& F = ctx_.field();
  if (t == F.zero()) throw InvalidT("H_q: t must be nonzero");
  const FqElem argument = negate_argument_ ? F.neg(t) : t;
  const u64 order = ctx_.group_order();
  const u64 step = ctx_.dlog(argument);
  ComplexVal sum(ctx_.precision());
  u64 e = 0;
  for (u64 k = 0; k < order; ++k) {
    sum += coeffs_[k] * ctx_.root(static_cast<i64>(e));
    e = (e + step) % order;
  }
  return sum;
}

HqValue H_q(const FqContext& ctx, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
            const FqElem& t) {
  return HqEvaluator(ctx, classify_datum(alpha, beta))(t);
}

ComplexVal bcm_H_q(const FqContext& ctx, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                   const FqElem& t) {
  if (alpha.size() != beta.size()) throw PreconditionViolation("bcm_H_q: alpha and beta sizes differ");
  std::vector<Rational> all = alpha;
  all.insert(all.end(), beta.begin(), beta.end());
  const u64 order = ctx.group_order();
  const Integer M = lcm_of_denominators(all);
  if (!M.fits_ulong_p() || order % M.get_ui() != 0) throw PreconditionViolation("bcm_H_q: q must be 1 mod the denominators");
  const FiniteField& F = ctx.field();
  if (t == F.zero()) throw InvalidT("bcm_H_q: t must be nonzero");

  auto scaled = [&](const Rational& x) {
    const Rational y = x * static_cast<long>(order);
    return static_cast<i64>(y.get_num().get_si());
  };
  const mpfr_prec_t bits = ctx.precision();
  ComplexVal normalizer = ComplexVal::from_int(1, bits);
  for (std::size_t j = 0; j < alpha.size(); ++j) normalizer *= ctx.gauss(scaled(alpha[j])) * ctx.gauss(-scaled(beta[j]));

  const FqElem argument = alpha.size() % 2 == 1 ? F.neg(t) : t;
  ComplexVal sum(bits);
  for (u64 m = 0; m < order; ++m) {
    const i64 mi = static_cast<i64>(m);
    ComplexVal term = ctx.character(mi, argument);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      term *= ctx.gauss(mi + scaled(alpha[j])) * ctx.gauss(-mi - scaled(beta[j]));
    }
    sum += term;
  }
  sum /= normalizer;
  return sum * BigReal(Rational(1, 1 - static_cast<long>(ctx.q())), bits);
}

const FqContext& FqContextCache::get(const FiniteField& field, mpfr_prec_t bits) {
  const Key key{field.p(), field.degree(), field.nonresidue(), bits};
  std::lock_guard lock(mutex_);
  auto& slot = contexts_[key];
  if (!slot) slot = std::make_unique<FqContext>(field, bits);
  return *slot;
}

HqValue FqContextCache::evaluate(const FiniteField& field, const HqDatum& datum, const FqElem& t) {
  for (mpfr_prec_t bits = default_charsum_bits; bits <= max_charsum_bits; bits *= 2) {
    try {
      return HqEvaluator(get(field, bits), datum)(t);
    } catch (const NotNearIntegral&) {
      std::lock_guard lock(mutex_);
      ++escalations_;
    }
  }
  throw NotNearIntegral("H_q: no integral value up to the precision cap");
}

bool clausen_check(FqContextCache& cache, std::uint64_t p, Family f, std::uint64_t t) {
  if (p <= 3) throw PreconditionViolation("clausen_check: p must exceed 3");
  t %= p;
  if (t == 0) throw InvalidT("clausen_check: t must be nonzero");
  const FiniteField Fp = FiniteField::prime(p);
  const HqDatum two = two_parameter_datum(f);
  const HqDatum three = three_parameter_datum(f);
  const Integer chi = legendre(twist_constant(f), p);
  const Integer P = static_cast<unsigned long>(p);
  const FqElem half = Fp.from_rational(Rational(1, 2));

  const Integer lhs = cache.evaluate(Fp, three, Fp.from_int(static_cast<i64>(t))).value;
  if (t == 1) {
    const Integer h = cache.evaluate(Fp, two, half).value;
    return lhs == h * h - (1 + chi) * P;
  }
  const i64 one_minus_t = static_cast<i64>((1 + p - t) % p);
  if (legendre(one_minus_t, p) == 1) {
    const u64 r = sqrt_mod_p(one_minus_t, p).value();
    for (const u64 root : {r, p - r}) {
      const FqElem mu = Fp.mul(Fp.sub(Fp.one(), Fp.from_int(static_cast<i64>(root))), half);
      const Integer h = cache.evaluate(Fp, two, mu).value;
      if (lhs != h * h - P) return false;
    }
    return true;
  }
  // sqrt(1 - t) = c s in F_p[s]/(s^2 - n) with c^2 = (1 - t)/n.
  const FiniteField Fq = FiniteField::quadratic(p);
  const PrimeModulus mod(p, 1);
  const u64 c = sqrt_mod_p(
      static_cast<i64>((Residue(one_minus_t, mod) * Residue(static_cast<i64>(Fq.nonresidue()), mod).inverse()).value()), p).value();
  const i64 half_value = static_cast<i64>(half.a);
  for (const u64 root : {c, p - c}) {
    const i64 s_part = -static_cast<i64>(mulmod(root, half.a, p));
    const FqElem mu = Fq.element(half_value, s_part);
    const Integer h = cache.evaluate(Fq, two, mu).value;
    if (lhs != chi * h - P) return false;
  }
  return true;
}

bool hp_trace_equality(FqContextCache& cache, Family f, const FiniteField& field, const FqElem& t) {
  const std::int64_t a_q = trace_of_frobenius(build_curve(f, field, t));
  return cache.evaluate(field, two_parameter_datum(f), t).value == a_q;
}

bool hq_twist_identity(FqContextCache& cache, Family f, const FiniteField& field, const FqElem& t) {
  if (t == field.zero() || t == field.one()) throw InvalidT("hq_twist_identity: t must avoid 0 and 1");
  const HqDatum datum = two_parameter_datum(f);
  const Integer lhs = cache.evaluate(field, datum, t).value;
  const Integer rhs = cache.evaluate(field, datum, field.sub(field.one(), t)).value;
  return lhs == field.quadratic_character(field.from_int(twist_constant(f))) * rhs;
}

bool hp_truncation_bridge(FqContextCache& cache, Family f, bool three_parameter, std::uint64_t p, std::uint64_t t) {
  const FiniteField Fp = FiniteField::prime(p);
  const PrimeModulus mod(p, 1);
  const HqDatum datum = three_parameter ? three_parameter_datum(f) : two_parameter_datum(f);
  const Residue lambda = Residue::from_unsigned(t % p, mod);
  const Residue truncated = trunc_F(HGSpec{QuadSurd(0), datum.alpha}, Residue(0, mod), lambda, static_cast<int>(p - 1));
  const Integer h = cache.evaluate(Fp, datum, Fp.from_int(static_cast<i64>(t % p))).value;
  return reduce(h, mod) == truncated;
}

bool hp_at_one(FqContextCache& cache, Family f, std::uint64_t p) {
  const FiniteField Fp = FiniteField::prime(p);
  const Integer h = cache.evaluate(Fp, two_parameter_datum(f), Fp.one()).value;
  return h == legendre(static_cast<i64>(twist_constant(f)), p);
}

namespace {

template <class Check>
IdentityTally tally(std::string identity, Family f, std::uint64_t q, std::uint64_t count, Check&& check) {
  IdentityTally out{std::move(identity), degree(f), q};
  for (std::uint64_t i = 0; i < count; ++i) {
    try {
      if (!check(i)) ++out.failures;
      ++out.cases;
    } catch (const BadReduction&) {
    } catch (const InvalidT&) {
    }
  }
  return out;
}

}  // namespace

std::vector<IdentityTally> run_charsum_suite(FqContextCache& cache, std::uint64_t pmax, bool with_fp2,
                                             std::uint64_t fp2_qmax) {
  std::vector<IdentityTally> out;
  for (std::uint64_t p = 5; p <= pmax; p += 2) {
    if (!is_prime(p)) continue;
    std::vector<FiniteField> fields{FiniteField::prime(p)};
    if (with_fp2 && p * p <= fp2_qmax) fields.push_back(FiniteField::quadratic(p));
    for (Family f : all_families) {
      for (const FiniteField& field : fields) {
        const std::uint64_t q = field.q();
        out.push_back(tally("trace_equality", f, q, q, [&](std::uint64_t i) {
          return hp_trace_equality(cache, f, field, field.element_at(i));
        }));
        out.push_back(tally("twist", f, q, q, [&](std::uint64_t i) {
          return hq_twist_identity(cache, f, field, field.element_at(i));
        }));
        out.push_back(tally("twist_trace", f, q, q, [&](std::uint64_t i) {
          return twist_trace_check(f, field, field.element_at(i));
        }));
      }
      out.push_back(tally("hp_at_one", f, p, 1, [&](std::uint64_t) { return hp_at_one(cache, f, p); }));
      out.push_back(tally("clausen", f, p, p - 1, [&](std::uint64_t i) { return clausen_check(cache, p, f, i + 1); }));
    }
  }
  return out;
}

}  // namespace scv
