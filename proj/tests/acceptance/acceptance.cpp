#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "scv/analytic.hpp"
#include "scv/catalog.hpp"
#include "scv/charsum.hpp"
#include "scv/errors.hpp"
#include "scv/hypergeom.hpp"
#include "scv/verify.hpp"

using namespace scv;

namespace {

constexpr double sweep_budget_seconds = 300.0;
constexpr double analytic_budget_seconds = 30.0;
constexpr mpfr_prec_t analytic_bits = 256;
constexpr const char* analytic_tolerance = "1e-40";
constexpr int oracle_instances = 200;
constexpr int corollary_trials = 10;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  std::vector<std::string> problems;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

const Catalog& catalog() {
  static const Catalog instance = load_default_catalog();
  return instance;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Report sweep(const std::string& ids, std::uint64_t pmax, std::vector<int> powers) {
  SweepConfig config;
  config.ids = expand_ids(catalog(), ids);
  config.pmax = pmax;
  config.powers = std::move(powers);
  config.threads = workers();
  return run_sweep(catalog(), config);
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::size_t failures_for(const Report& r, const std::string& id, int m) {
  std::size_t n = 0;
  for (const Verdict& v : r.verdicts) n += (v.id == id && v.m == m && v.admissible && !v.pass) ? 1 : 0;
  return n;
}

std::size_t checked_for(const Report& r, const std::string& id, int m) {
  std::size_t n = 0;
  for (const Verdict& v : r.verdicts) n += (v.id == id && v.m == m && v.admissible) ? 1 : 0;
  return n;
}

Residue image(const QuadSurd& x, const Residue& root) {
  if (x.is_rational()) return reduce(x.a(), root.modulus());
  return reduce(x.a(), root.modulus()) + reduce(x.b(), root.modulus()) * root;
}

void sweep_a_to_k(Outcome& o) {
  const Report r = sweep("A-K", 149, {2});
  o.detail << r.passed << " checks, " << r.failed << " failures, " << r.asymmetries.size() << " asymmetries";
  o.require(r.failed == 0, "failures present");
  o.require(r.asymmetries.empty(), "branch asymmetry");
  o.require(r.passed > 0, "nothing checked");
}

void win2a_records(Outcome& o) {
  const Report r = sweep("L-O", 149, {2, 3});
  o.detail << r.passed << " checks, " << r.failed << " failures";
  o.require(r.failed == 0, "failures present");
  for (const std::string id : {"L", "M", "N", "O"}) {
    for (int m : {2, 3}) o.require(checked_for(r, id, m) > 0, id + " unchecked at m=" + std::to_string(m));
  }
}

void cube_positives_and_negatives(Outcome& o) {
  const Report pq = sweep("P,Q", 99, {3});
  for (const std::string id : {"P", "Q"}) {
    o.require(checked_for(pq, id, 3) > 0, id + " unchecked");
    o.require(failures_for(pq, id, 3) == 0, id + " fails mod p^3");
  }
  const Report af = sweep("A-F", 149, {3});
  for (const std::string id : {"A", "B", "C", "D", "E"}) {
    const std::size_t f = failures_for(af, id, 3);
    o.detail << id << ":" << f << " ";
    o.require(f >= 1, id + " never fails mod p^3");
  }
  const std::size_t f = failures_for(af, "F", 3);
  o.detail << "F:" << f << " of " << checked_for(af, "F", 3);
  o.require(checked_for(af, "F", 3) > 0, "F unchecked");
  o.require(f == 0, "F fails mod p^3");
}

void weight_three(Outcome& o) {
  std::size_t win2b = 0;
  std::size_t cor12 = 0;
  std::size_t eta = 0;
  for (const Weight3Case& c : catalog().weight3) {
    for (std::uint64_t p : primes_between(3, 99)) {
      const Verdict w = check_win2b(c.family, c.lambda, p, 2);
      if (w.admissible) {
        ++win2b;
        o.require(w.pass, "trichotomy " + c.name + " p=" + std::to_string(p));
      }
      const Verdict k = check_cor12(c, p);
      if (k.admissible) {
        ++cor12;
        o.require(k.pass, "cor12 " + c.name + " p=" + std::to_string(p));
      }
      if (c.eta_oracle && p >= 7 && !weight3_inadmissibility(c.family, c.lambda, p) &&
          ap_form(c.family, c.lambda, p) % static_cast<std::int64_t>(p) != 0) {
        ++eta;
        o.require(ap_form(c.family, c.lambda, p) == eta_ap_oracle(p), "eta " + std::to_string(p));
      }
    }
  }
  o.detail << catalog().weight3.size() << " cases, " << win2b << " trichotomy, " << cor12 << " a_p, " << eta << " eta";
  o.require(catalog().weight3.size() == 5, "expected five weight-3 cases");
  o.require(eta > 0, "no eta comparisons");
}

void charsum_suite(Outcome& o) {
  FqContextCache cache;
  const auto tallies = run_charsum_suite(cache, 41, true, 49);
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool saw25 = false;
  bool saw49 = false;
  for (const IdentityTally& t : tallies) {
    cases += t.cases;
    failures += t.failures;
    saw25 = saw25 || t.q == 25;
    saw49 = saw49 || t.q == 49;
  }
  o.detail << cases << " cases, " << failures << " failures, " << cache.escalations() << " escalations";
  o.require(failures == 0, "identity failures");
  o.require(cache.escalations() == 0, "rounding escalations");
  o.require(saw25 && saw49, "F_25 / F_49 missing");
}

void polynomial_congruences(Outcome& o) {
  std::size_t coefficients = 0;
  for (Family f : all_families) {
    for (std::uint64_t p : primes_between(5, 23)) {
      for (const Residue& c : clausen_two_defect(f, p, 2)) {
        ++coefficients;
        o.require(c.is_zero(), "reflection defect d=" + std::to_string(degree(f)) + " p=" + std::to_string(p));
      }
      for (const Residue& c : clausen_three_defect(f, p, 2)) {
        ++coefficients;
        o.require(c.is_zero(), "square defect d=" + std::to_string(degree(f)) + " p=" + std::to_string(p));
      }
    }
  }
  std::mt19937_64 rng(13);
  std::size_t corollary = 0;
  for (Family f : all_families) {
    for (std::uint64_t p : primes_between(5, 37)) {
      const PrimeModulus mod(p, 2);
      std::uniform_int_distribution<std::uint64_t> pick(1, mod.modulus() - 1);
      for (int trials = 0; trials < corollary_trials;) {
        const Residue t = Residue::from_unsigned(pick(rng), mod);
        if (!t.is_unit() || t.value() == 1) continue;
        ++corollary;
        o.require(binomial_sum_corollary(f, t).is_zero(), "corollary d=" + std::to_string(degree(f)));
        ++trials;
      }
    }
  }
  o.detail << coefficients << " coefficients, " << corollary << " corollary instances";
}

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(7);
  const auto primes = primes_between(5, 61);
  std::uniform_int_distribution<std::size_t> pick_p(0, primes.size() - 1);
  std::uniform_int_distribution<int> pick_f(0, 3);
  std::uniform_int_distribution<int> pick_m(1, 3);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 30);
  constexpr std::int64_t D = 2;
  int checked = 0;
  while (checked < oracle_instances) {
    const std::uint64_t p = primes[pick_p(rng)];
    const Family f = all_families[pick_f(rng)];
    if (degree(f) % p == 0) continue;
    const bool three = (rng() & 1) != 0;
    const bool surd = (rng() % 3) == 0;
    if (surd && legendre(D, p) != 1) continue;
    const QuadSurd alpha(Rational(num(rng), den(rng)), surd ? Rational(num(rng), den(rng)) : Rational(0), surd ? D : 1);
    const QuadSurd lambda(Rational(num(rng), den(rng)), surd ? Rational(num(rng), den(rng)) : Rational(0), surd ? D : 1);
    if (alpha.denominator() % p == 0 || lambda.denominator() % p == 0) continue;
    const PrimeModulus mod(p, pick_m(rng));
    const Residue root = surd ? hensel_sqrt(D, p, mod.m()) : Residue(1, mod);
    const HGSpec spec{alpha, three ? three_parameter_b(f) : two_parameter_b(f)};
    const int N = static_cast<int>(p - 1);
    const Residue modular = trunc_F(spec, image(alpha, root), image(lambda, root), N);
    o.require(modular == image(exact_trunc_F(spec, lambda, N), root), "trunc_F mismatch p=" + std::to_string(p));
    ++checked;
  }
  std::size_t classes = 0;
  for (Family f : all_families) {
    const int d = degree(f);
    for (std::uint64_t p : primes_between(3, 37)) {
      if (static_cast<std::uint64_t>(d) % p == 0) continue;
      const int N = static_cast<int>(p - 1);
      const auto exact = exact_coefficients(two_parameter_b(f), N);
      for (int k = 0; k <= N; ++k) {
        const TruncationClass c = coeff_class(d, p, k);
        const int expected = c.cls == CoeffClass::Unit ? 0 : c.cls == CoeffClass::DivisibleByP_NotP2 ? 1 : 2;
        o.require(expected == std::min(p_valuation(exact[k], p), 2), "coeff_class d=" + std::to_string(d));
        ++classes;
      }
    }
  }
  o.detail << checked << " oracle instances, " << classes << " coefficient classes";
}

void analytic_suite(Outcome& o) {
  const auto checks = run_analytic_suite(catalog(), analytic_bits);
  const BigReal tolerance = BigReal::parse(analytic_tolerance, analytic_bits);
  BigReal worst(0, analytic_bits);
  for (const AnalyticCheck& c : checks) {
    o.require(c.pass && c.residual < tolerance, "identity " + c.id + " " + c.kind);
    if (worst < c.residual) worst = c.residual;
  }
  o.detail << checks.size() << " identities, worst residual " << worst.to_string(3);
  o.require(!checks.empty(), "no identities");
}

void deuring(Outcome& o) {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (const ExampleRecord& ex : catalog().examples) {
    for (std::uint64_t p : primes_between(3, 199)) {
      for (const DeuringCheck& d : deuring_checks(ex, p)) {
        ++checked;
        if (d.predicted != d.counted) ++mismatches;
      }
    }
  }
  o.detail << checked << " checks, " << mismatches << " mismatches";
  o.require(mismatches == 0, "mismatches present");
  o.require(checked > 0, "nothing checked");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    void (*body)(Outcome&);
    double budget_seconds;
  };
  constexpr double no_budget = 0.0;
  const std::vector<Criterion> criteria{
      {1, "A-K mod p^2 for p < 150, both embeddings", sweep_a_to_k, sweep_budget_seconds},
      {2, "L-O mod p^2 and p^3 for p < 150", win2a_records, no_budget},
      {3, "P,Q mod p^3 for p < 100; A-E fail and F holds mod p^3 for p < 150", cube_positives_and_negatives, no_budget},
      {4, "weight-3 trichotomy, a_p truncation and eta coefficients for p < 100", weight_three, no_budget},
      {5, "character-sum identities for q <= 41 and q in {25, 49}", charsum_suite, no_budget},
      {6, "Clausen polynomial congruences p <= 23, binomial corollary p <= 37", polynomial_congruences, no_budget},
      {7, "exact-oracle equivalence and coefficient classes", oracle_equivalence, no_budget},
      {8, "analytic identities below 1e-40 at 256 bits", analytic_suite, analytic_budget_seconds},
      {9, "Deuring consistency for p < 200", deuring, no_budget},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > no_budget) o.require(seconds < c.budget_seconds, "over time budget");
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << o.detail.str()
         << "] (" << std::fixed;
    line.precision(2);
    line << seconds << " s)";
    for (const std::string& problem : o.problems) line << "\n    " << problem;
    std::cout << line.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << std::endl;
  return failed == 0 ? 0 : 1;
}
