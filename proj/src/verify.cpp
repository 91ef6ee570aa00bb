#include "scv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "scv/errors.hpp"
#include "scv/hypergeom.hpp"

namespace scv {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_p_unit(const Rational& x, u64 p) { return x != 0 && p_valuation(x, p) == 0; }

// Both conjugates of x are p-adic units.
bool surd_is_unit(const QuadSurd& x, u64 p) {
  return mpz_divisible_ui_p(x.denominator().get_mpz_t(), p) == 0 && is_p_unit(x.norm(), p);
}

bool uses_half_rule(const ExampleRecord& ex) { return ex.mu_rule == MuRule::HalfMinusSqrt; }

int branch_sign(const std::string& branch) { return branch == "-" ? -1 : 1; }

// The image of sqrt(D) under the branch, or 0 for a rational record.
Residue branch_root(const ExampleRecord& ex, const std::string& branch, const PrimeModulus& mod) {
  const i64 D = ex.surd_radicand();
  if (D == 1) return Residue(0, mod);
  const Residue root = hensel_sqrt(D, mod.p(), mod.m());
  return branch_sign(branch) < 0 ? -root : root;
}

struct EmbeddedRecord {
  Residue alpha;
  Residue lambda;
  std::optional<Residue> sign_symbol;
  // Sign of sqrt(1 - lambda) in the half rule.
  int mu_sign;
};

EmbeddedRecord embed_record(const ExampleRecord& ex, const std::string& branch, const PrimeModulus& mod) {
  const Residue root = branch_root(ex, branch, mod);
  EmbeddedRecord out{embed_with_root(ex.alpha, root), embed_with_root(ex.lambda, root), std::nullopt, 1};
  if (ex.sign_symbol) out.sign_symbol = embed_with_root(*ex.sign_symbol, root);
  if (ex.surd_radicand() == 1) out.mu_sign = branch_sign(branch);
  return out;
}

struct HalfRuleCurve {
  bool split;
  FiniteField field;
  FqElem mu;
};

HalfRuleCurve half_rule_curve(u64 w, u64 p, int sign) {
  const u64 inv2 = (p + 1) / 2;
  if (w % p == 0) throw NonUnit("half rule: 1 - lambda divisible by p");
  if (legendre(static_cast<i64>(w), p) == 1) {
    u64 r = sqrt_mod_p(static_cast<i64>(w), p).value();
    if (sign < 0) r = (p - r) % p;
    FiniteField field = FiniteField::prime(p);
    const FqElem mu = field.from_int(static_cast<i64>(mulmod((1 + p - r) % p, inv2, p)));
    return {true, std::move(field), mu};
  }
  FiniteField field = FiniteField::quadratic(p);
  const u64 n = field.nonresidue();
  const u64 ratio = mulmod(w, powmod(n, p - 2, p), p);
  const u64 c = sqrt_mod_p(static_cast<i64>(ratio), p).value();
  const i64 s_part = -static_cast<i64>(sign) * static_cast<i64>(mulmod(c, inv2, p));
  const FqElem mu = field.element(static_cast<i64>(inv2), s_part);
  return {false, std::move(field), mu};
}

// The point at which the record's curve is evaluated, reduced mod p.
HalfRuleCurve record_curve(const ExampleRecord& ex, const EmbeddedRecord& e, u64 p) {
  if (!uses_half_rule(ex)) {
    FiniteField field = FiniteField::prime(p);
    const FqElem t = field.from_int(static_cast<i64>(e.lambda.value() % p));
    return {true, std::move(field), t};
  }
  const u64 w = (1 + p - e.lambda.value() % p) % p;
  return half_rule_curve(w, p, e.mu_sign);
}

std::optional<std::string> curve_problem(Family f, const HalfRuleCurve& c) {
  try {
    build_curve(f, c.field, c.mu);
  } catch (const InvalidT&) {
    return std::string("degenerate fiber at mu");
  } catch (const BadReduction&) {
    return std::string("bad reduction at mu");
  }
  return std::nullopt;
}

Verdict skip_verdict(const std::string& id, u64 p, int m, std::string reason) {
  Verdict v;
  v.id = id;
  v.p = p;
  v.m = m;
  v.modulus = 0;
  v.branch.clear();
  v.skip_reason = std::move(reason);
  return v;
}

struct BranchOutcome {
  std::string branch;
  std::string case_label;
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  std::string error;
};

Residue record_lhs(const ExampleRecord& ex, const EmbeddedRecord& e, u64 p) {
  const int N = static_cast<int>(p - 1);
  if (ex.congruence_case == CongruenceCase::Win2aSgn) {
    return trunc_F(HGSpec{ex.alpha, ex.b}, e.alpha, e.lambda, N);
  }
  return trunc_product_F(e.alpha, ex.b, e.lambda, N);
}

RhsValue rhs_at(const ExampleRecord& ex, const EmbeddedRecord& e, u64 p, const PrimeModulus& mod) {
  const Residue pr(static_cast<i64>(p), mod);
  switch (ex.congruence_case) {
    case CongruenceCase::PmP: {
      const bool ordinary = legendre(*ex.ordinary_symbol, p) == 1;
      return ordinary ? RhsValue{"ordinary", pr} : RhsValue{"supersingular", -pr};
    }
    case CongruenceCase::PUp2Cases: {
      if (legendre(*ex.ordinary_symbol, p) != 1) return {"supersingular", Residue(0, mod)};
      const u64 w = (1 + p - e.lambda.value() % p) % p;
      const HalfRuleFrobenius hr = half_rule_frobenius(ex.family, w, p, e.mu_sign, mod.m());
      if (!hr.frob.unit_root) throw Supersingular("literal ordinary symbol disagrees with the point count");
      const Residue& u = *hr.frob.unit_root;
      if (hr.split) return {"ordinary-split", pr * u * u};
      const int kd = legendre(static_cast<i64>(twist_constant(ex.family)), p);
      return {"ordinary-inert", Residue(-kd, mod) * pr * u};
    }
    case CongruenceCase::Win2aSgn: {
      const HalfRuleCurve hc = record_curve(ex, e, p);
      const i64 a = trace_of_frobenius(build_curve(ex.family, hc.field, hc.mu));
      const bool ordinary = a % static_cast<i64>(p) != 0;
      const int symbol = legendre(static_cast<i64>(e.sign_symbol->value() % p), p);
      const int sgn = ordinary ? 1 : -1;
      return {ordinary ? "ordinary" : "supersingular", Residue(sgn * symbol, mod) * pr};
    }
  }
  throw InternalError("rhs_value: unknown case");
}

std::vector<BranchOutcome> evaluate_record(const ExampleRecord& ex, u64 p) {
  const PrimeModulus mod(p, working_power);
  std::vector<BranchOutcome> out;
  for (const std::string& branch : branches(ex)) {
    BranchOutcome o;
    o.branch = branch;
    try {
      const EmbeddedRecord e = embed_record(ex, branch, mod);
      o.lhs = record_lhs(ex, e, p);
      RhsValue r = rhs_at(ex, e, p, mod);
      o.case_label = std::move(r.case_label);
      o.rhs = r.value;
    } catch (const Error& err) {
      o.error = err.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

Verdict verdict_from(const ExampleRecord& ex, u64 p, int m, const BranchOutcome& o) {
  Verdict v;
  v.id = ex.id;
  v.p = p;
  v.admissible = true;
  v.m = m;
  v.modulus = PrimeModulus(p, m).modulus();
  v.branch = o.branch;
  v.case_label = o.case_label;
  if (!o.error.empty()) {
    v.note = "error: " + o.error;
    return v;
  }
  v.lhs = o.lhs->reduce_to(m);
  v.rhs = o.rhs->reduce_to(m);
  v.pass = *v.lhs == *v.rhs;
  return v;
}

std::vector<Verdict> verdicts_at(const ExampleRecord& ex, u64 p, int m) {
  if (m < 1 || m > working_power) throw PreconditionViolation("check_example: m must be 1, 2 or 3");
  if (auto reason = inadmissibility(ex, p)) return {skip_verdict(ex.id, p, m, *reason)};
  std::vector<Verdict> out;
  for (const BranchOutcome& o : evaluate_record(ex, p)) out.push_back(verdict_from(ex, p, m, o));
  return out;
}

std::string rational_label(const Rational& x) { return x.get_str(); }

std::string weight3_id(Family f, const Rational& lambda) {
  return "d=" + std::to_string(degree(f)) + " lambda=" + rational_label(lambda);
}

std::string trichotomy_label(const HalfRuleFrobenius& hr) {
  if (!hr.frob.ordinary) return "supersingular";
  return hr.split ? "ordinary-split" : "ordinary-inert";
}

u64 one_minus_mod_p(const Rational& lambda, u64 p) {
  return reduce(Rational(1 - lambda), PrimeModulus(p, 1)).value();
}

// The integer in [-2p, 2p] congruent to x mod p^3.
i64 weil_integer(const Residue& x, u64 p) {
  const i64 c = x.centered();
  const i64 bound = 2 * static_cast<i64>(p);
  if (c < -bound || c > bound) throw AmbiguousRounding("ap_form: no integer of absolute value <= 2p in the class");
  return c;
}

}  // namespace

std::optional<std::string> inadmissibility(const ExampleRecord& ex, u64 p) {
  if (p < 3 || !is_prime(p)) return std::string("not an odd prime");
  if (auto reason = ex.filter.rejects(p)) return reason;
  const i64 D = ex.surd_radicand();
  if (D != 1) {
    if (D % static_cast<i64>(p) == 0) return "ramified in Q(sqrt(" + std::to_string(D) + "))";
    if (legendre(D, p) != 1) return "inert in Q(sqrt(" + std::to_string(D) + "))";
  }
  if (mpz_divisible_ui_p(ex.alpha.denominator().get_mpz_t(), p) != 0) return std::string("alpha not p-integral");
  if (!surd_is_unit(ex.lambda, p)) return std::string("lambda not a p-adic unit");
  if (uses_half_rule(ex) && !surd_is_unit(QuadSurd(1) - ex.lambda, p)) return std::string("1 - lambda not a p-adic unit");
  if (ex.split_symbol && *ex.split_symbol % static_cast<i64>(p) == 0) {
    return std::string("ramified in Q(sqrt(1 - lambda))");
  }
  if (ex.sign_symbol && !surd_is_unit(*ex.sign_symbol, p)) return std::string("sign symbol not a p-adic unit");
  if (p < 5) return std::string("p < 5");
  if (ex.ordinary_symbol && *ex.ordinary_symbol % static_cast<i64>(p) == 0) {
    return std::string("p divides the ordinary symbol");
  }
  const PrimeModulus mod(p, 1);
  for (const std::string& branch : branches(ex)) {
    const EmbeddedRecord e = embed_record(ex, branch, mod);
    if (auto problem = curve_problem(ex.family, record_curve(ex, e, p))) return problem;
  }
  if (ex.require_ordinary && legendre(*ex.ordinary_symbol, p) != 1) {
    return std::string("supersingular; the claim covers ordinary primes");
  }
  return std::nullopt;
}

std::vector<u64> admissible_primes(const ExampleRecord& ex, u64 pmax) {
  if (pmax > max_sweep_prime) throw PreconditionViolation("admissible_primes: pmax above 10^4");
  std::vector<u64> out;
  for (u64 p = 3; p <= pmax; p += 2) {
    if (is_prime(p) && !inadmissibility(ex, p)) out.push_back(p);
  }
  return out;
}

std::vector<std::string> branches(const ExampleRecord& ex) {
  if (ex.surd_radicand() != 1 || uses_half_rule(ex)) return {"+", "-"};
  return {"+"};
}

RhsValue rhs_value(const ExampleRecord& ex, u64 p, int m, const std::string& branch) {
  if (auto reason = inadmissibility(ex, p)) throw PreconditionViolation("rhs_value: p inadmissible: " + *reason);
  const PrimeModulus mod(p, working_power);
  RhsValue r = rhs_at(ex, embed_record(ex, branch, mod), p, mod);
  return {r.case_label, r.value.reduce_to(m)};
}

std::vector<Verdict> check_example(const ExampleRecord& ex, u64 p, int m) { return verdicts_at(ex, p, m); }

std::vector<Verdict> check_win2a(const ExampleRecord& ex, u64 p, int m) {
  if (ex.congruence_case != CongruenceCase::Win2aSgn) throw PreconditionViolation("check_win2a: record is not win2a_sgn");
  return verdicts_at(ex, p, m);
}

HalfRuleFrobenius half_rule_frobenius(Family f, u64 w, u64 p, int sign, int m) {
  HalfRuleCurve c = half_rule_curve(w % p, p, sign);
  const PrimeModulus mod(p, m);
  FrobData frob = c.split ? frobenius_data(build_curve(f, c.field, c.mu), mod) : frobenius_over_Fp2(f, c.field, c.mu, mod);
  return {c.split, std::move(c.field), c.mu, std::move(frob)};
}

std::optional<std::string> weight3_inadmissibility(Family f, const Rational& lambda, u64 p) {
  if (p < 3 || !is_prime(p)) return std::string("not an odd prime");
  if (!is_p_unit(lambda, p)) return std::string("lambda not a p-adic unit");
  if (!is_p_unit(Rational(1 - lambda), p)) return std::string("1 - lambda not a p-adic unit");
  if (p < 5) return std::string("p < 5");
  if ((2 * degree(f)) % static_cast<int>(p) == 0) return std::string("p divides 2d");
  return curve_problem(f, half_rule_curve(one_minus_mod_p(lambda, p), p, 1));
}


Verdict check_win2b(Family f, const Rational& lambda, u64 p, int m) {
  const std::string id = "win2b " + weight3_id(f, lambda);
  if (m < 1 || m > working_power) throw PreconditionViolation("check_win2b: m must be 1, 2 or 3");
  if (auto reason = weight3_inadmissibility(f, lambda, p)) return skip_verdict(id, p, m, *reason);
  const PrimeModulus mod(p, working_power);
  const HGSpec spec{QuadSurd(0), three_parameter_b(f)};
  const Residue lhs = trunc_F(spec, Residue(0, mod), reduce(lambda, mod), static_cast<int>(p - 1));
  const HalfRuleFrobenius hr = half_rule_frobenius(f, one_minus_mod_p(lambda, p), p, 1);
  Residue rhs(0, mod);
  if (hr.frob.unit_root) {
    const Residue& u = *hr.frob.unit_root;
    const int kd = legendre(static_cast<i64>(twist_constant(f)), p);
    rhs = hr.split ? u * u : Residue(kd, mod) * u;
  }
  Verdict v;
  v.id = id;
  v.p = p;
  v.admissible = true;
  v.m = m;
  v.modulus = PrimeModulus(p, m).modulus();
  v.case_label = trichotomy_label(hr);
  v.lhs = lhs.reduce_to(m);
  v.rhs = rhs.reduce_to(m);
  v.pass = *v.lhs == *v.rhs;
  return v;
}

std::int64_t ap_form(Family f, const Rational& lambda, u64 p) {
  if (auto reason = weight3_inadmissibility(f, lambda, p)) throw PreconditionViolation("ap_form: " + *reason);
  const u64 w1 = one_minus_mod_p(lambda, p);
  const HalfRuleFrobenius minus = half_rule_frobenius(f, w1, p, 1);
  if (!minus.frob.ordinary) return 0;
  const PrimeModulus mod(p, working_power);
  Residue w = *minus.frob.unit_root;
  if (minus.split) {
    const HalfRuleFrobenius plus = half_rule_frobenius(f, w1, p, -1);
    if (!plus.frob.unit_root) throw InternalError("ap_form: twisted curve changed ordinarity");
    w *= *plus.frob.unit_root;
  }
  const Residue p2(static_cast<i64>(p * p), mod);
  const int kd = legendre(static_cast<i64>(twist_constant(f)), p);
  return weil_integer(Residue(kd, mod) * (w + p2 * w.inverse()), p);
}

std::int64_t ap_form_direct(Family f, const Rational& lambda, u64 p) {
  if (auto reason = weight3_inadmissibility(f, lambda, p)) throw PreconditionViolation("ap_form: " + *reason);
  const HalfRuleCurve c = half_rule_curve(one_minus_mod_p(lambda, p), p, 1);
  const i64 a = trace_of_frobenius(build_curve(f, c.field, c.mu));
  if (a % static_cast<i64>(p) == 0) return 0;
  if (c.split) return a * a - 2 * static_cast<i64>(p);
  return legendre(static_cast<i64>(twist_constant(f)), p) * a;
}

Verdict check_cor12(const Weight3Case& c, u64 p) {
  const int m = 2;
  if (auto reason = weight3_inadmissibility(c.family, c.lambda, p)) return skip_verdict(c.name, p, m, *reason);
  if (p < 7) return skip_verdict(c.name, p, m, "p < 7");
  const PrimeModulus mod(p, m);
  const HGSpec spec{QuadSurd(0), three_parameter_b(c.family)};
  Verdict v;
  v.id = c.name;
  v.p = p;
  v.admissible = true;
  v.m = m;
  v.modulus = mod.modulus();
  v.case_label = trichotomy_label(half_rule_frobenius(c.family, one_minus_mod_p(c.lambda, p), p, 1));
  v.lhs = trunc_F(spec, Residue(0, mod), reduce(c.lambda, mod), static_cast<int>(p - 1));
  v.rhs = Residue(ap_form(c.family, c.lambda, p), mod);
  v.pass = *v.lhs == *v.rhs;
  return v;
}

Verdict weight3_bridge(FqContextCache& cache, const Weight3Case& c, u64 p) {
  const int m = working_power;
  if (auto reason = weight3_inadmissibility(c.family, c.lambda, p)) return skip_verdict(c.name, p, m, *reason);
  if (p < 7) return skip_verdict(c.name, p, m, "p < 7");
  const PrimeModulus mod(p, m);
  const FiniteField field = FiniteField::prime(p);
  const HqValue h = cache.evaluate(field, three_parameter_datum(c.family), field.from_rational(c.lambda));
  const i64 correction = static_cast<i64>(legendre(c.cm_discriminant, p) * legendre(Rational(1 - c.lambda), p)) *
                         static_cast<i64>(p);
  const i64 lhs = h.value.get_si() - correction;
  const i64 rhs = ap_form(c.family, c.lambda, p);
  Verdict v;
  v.id = c.name;
  v.p = p;
  v.admissible = true;
  v.m = m;
  v.modulus = mod.modulus();
  v.case_label = trichotomy_label(half_rule_frobenius(c.family, one_minus_mod_p(c.lambda, p), p, 1));
  v.lhs = Residue(lhs, mod);
  v.rhs = Residue(rhs, mod);
  v.pass = lhs == rhs;
  v.note = "H_p - correction = " + std::to_string(lhs) + ", a_p = " + std::to_string(rhs);
  return v;
}

std::vector<DeuringCheck> deuring_checks(const ExampleRecord& ex, u64 p) {
  std::vector<DeuringCheck> out;
  if (!ex.ordinary_symbol || inadmissibility(ex, p)) return out;
  const bool predicted = ordinary_via_deuring(*ex.ordinary_symbol, p);
  const PrimeModulus mod(p, 1);
  for (const std::string& branch : branches(ex)) {
    const HalfRuleCurve c = record_curve(ex, embed_record(ex, branch, mod), p);
    const CurveInstance curve = build_curve(ex.family, c.field, c.mu);
    const bool counted = is_ordinary(curve, trace_of_frobenius(curve));
    out.push_back({ex.id, p, branch, predicted, counted});
  }
  return out;
}

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::AllPass: return "all_pass";
    case Expectation::SomeFailure: return "some_failure";
    case Expectation::Unclaimed: return "unclaimed";
  }
  return "?";
}

bool Report::ok() const {
  const bool claims_ok = std::all_of(claims.begin(), claims.end(), [](const ClaimSummary& c) { return c.satisfied; });
  const bool no_errors = std::none_of(verdicts.begin(), verdicts.end(),
                                      [](const Verdict& v) { return v.note.rfind("error:", 0) == 0; });
  return claims_ok && no_errors && asymmetries.empty() && deuring_mismatches.empty();
}

std::vector<std::string> expand_ids(const Catalog& catalog, const std::string& spec) {
  std::vector<std::string> all;
  for (const ExampleRecord& ex : catalog.examples) all.push_back(ex.id);
  if (spec.empty() || spec == "all") return all;
  auto position = [&](const std::string& id) {
    const auto it = std::find(all.begin(), all.end(), id);
    if (it == all.end()) throw CatalogError("unknown example id '" + id + "'");
    return static_cast<std::size_t>(it - all.begin());
  };
  std::vector<std::string> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw CatalogError("empty example id in '" + spec + "'");
    const std::size_t dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(all[position(item)]);
      continue;
    }
    const std::size_t first = position(item.substr(0, dash));
    const std::size_t last = position(item.substr(dash + 1));
    if (first > last) throw CatalogError("reversed example range '" + item + "'");
    for (std::size_t i = first; i <= last; ++i) out.push_back(all[i]);
  }
  return out;
}

namespace {

Expectation expectation_for(const ExampleRecord& ex, int m, bool expect_fail) {
  if (expect_fail) return Expectation::SomeFailure;
  if (m == 2) return ex.has_claim(Claim::P2) ? Expectation::AllPass : Expectation::Unclaimed;
  if (ex.has_claim(Claim::P3)) return Expectation::AllPass;
  if (ex.has_claim(Claim::P3Negative)) return Expectation::SomeFailure;
  return Expectation::Unclaimed;
}

struct TaskResult {
  std::vector<Verdict> verdicts;
  std::vector<DeuringCheck> deuring;
};

TaskResult run_task(const ExampleRecord& ex, u64 p, const std::vector<int>& powers) {
  TaskResult out;
  if (auto reason = inadmissibility(ex, p)) {
    for (int m : powers) out.verdicts.push_back(skip_verdict(ex.id, p, m, *reason));
    return out;
  }
  const std::vector<BranchOutcome> outcomes = evaluate_record(ex, p);
  for (int m : powers) {
    for (const BranchOutcome& o : outcomes) out.verdicts.push_back(verdict_from(ex, p, m, o));
  }
  out.deuring = deuring_checks(ex, p);
  return out;
}

}  // namespace

Report run_sweep(const Catalog& catalog, const SweepConfig& config) {
  if (config.pmax > max_sweep_prime) throw PreconditionViolation("run_sweep: pmax above 10^4");
  std::vector<int> powers = config.powers;
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  if (powers.empty()) throw PreconditionViolation("run_sweep: no powers requested");
  for (int m : powers) {
    if (m != 2 && m != 3) throw PreconditionViolation("run_sweep: powers must be 2 or 3");
  }
  const std::vector<std::string> ids = config.ids.empty() ? expand_ids(catalog, "all") : config.ids;
  std::vector<const ExampleRecord*> records;
  for (const std::string& id : ids) records.push_back(&catalog.example(id));
  std::vector<u64> primes;
  for (u64 p = 3; p <= config.pmax; p += 2) {
    if (is_prime(p)) primes.push_back(p);
  }

  const std::size_t task_count = records.size() * primes.size();
  std::vector<TaskResult> results(task_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < task_count; i = next++) {
      results[i] = run_task(*records[i / primes.size()], primes[i % primes.size()], powers);
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  Report report;
  report.catalog_version = catalog.version;
  report.config = config;
  report.config.powers = powers;
  report.config.ids = ids;
  std::map<std::pair<std::string, int>, ClaimSummary> summaries;
  for (const ExampleRecord* ex : records) {
    for (int m : powers) {
      ClaimSummary s;
      s.id = ex->id;
      s.m = m;
      s.expectation = expectation_for(*ex, m, config.expect_fail);
      summaries[{ex->id, m}] = std::move(s);
    }
  }
  for (TaskResult& r : results) {
    std::map<int, std::vector<bool>> passes;
    for (Verdict& v : r.verdicts) {
      if (!v.admissible) {
        ++report.skipped;
      } else {
        v.pass ? ++report.passed : ++report.failed;
        ClaimSummary& s = summaries[{v.id, v.m}];
        ++s.checked;
        if (!v.pass) {
          ++s.failed;
          if (s.failing_primes.empty() || s.failing_primes.back() != v.p) s.failing_primes.push_back(v.p);
        }
        passes[v.m].push_back(v.pass);
      }
      report.verdicts.push_back(std::move(v));
    }
    for (const auto& [m, flags] : passes) {
      if (std::adjacent_find(flags.begin(), flags.end(), std::not_equal_to<>()) != flags.end()) {
        const Verdict& first = report.verdicts.back();
        report.asymmetries.push_back(first.id + " p=" + std::to_string(first.p) + " m=" + std::to_string(m));
      }
    }
    report.deuring_checked += r.deuring.size();
    for (const DeuringCheck& d : r.deuring) {
      if (d.predicted != d.counted) report.deuring_mismatches.push_back(d);
    }
  }
  for (const ExampleRecord* ex : records) {
    for (int m : powers) {
      ClaimSummary s = summaries[{ex->id, m}];
      s.satisfied = s.expectation == Expectation::SomeFailure ? s.failed > 0 : s.failed == 0;
      report.claims.push_back(std::move(s));
    }
  }
  return report;
}

}  // namespace scv
