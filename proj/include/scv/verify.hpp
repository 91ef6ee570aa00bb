#pragma once

// Congruence checks for catalog records: admissibility, right-hand sides,
// per-branch verdicts, the weight-3 coefficient a_p(f), and prime sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scv/arith.hpp"
#include "scv/catalog.hpp"
#include "scv/charsum.hpp"
#include "scv/curves.hpp"

namespace scv {

// Every p-adic quantity is computed mod p^3 and reduced afterwards.
inline constexpr int working_power = 3;
inline constexpr std::uint64_t max_sweep_prime = 10'000;

struct Verdict {
  std::string id;
  std::uint64_t p = 0;
  bool admissible = false;
  std::string skip_reason;
  std::string case_label;
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  int m = 0;
  std::uint64_t modulus = 0;
  bool pass = false;
  // "+" or "-" for the image of sqrt(D) (or of sqrt(1 - lambda) for the
  // half rule); "+" alone for a rational record; empty for a skip.
  std::string branch = "+";
  std::string note;
};

// Why p is not admissible for the record, or nullopt.
std::optional<std::string> inadmissibility(const ExampleRecord& ex, std::uint64_t p);
std::vector<std::uint64_t> admissible_primes(const ExampleRecord& ex, std::uint64_t pmax);

// The branches checked for a record: {"+", "-"} when a square root is
// embedded, {"+"} otherwise.
std::vector<std::string> branches(const ExampleRecord& ex);

struct RhsValue {
  std::string case_label;
  Residue value;
};

// Right-hand side of the record's congruence at p mod p^m under one branch.
RhsValue rhs_value(const ExampleRecord& ex, std::uint64_t p, int m, const std::string& branch = "+");

// One verdict per branch; a single skip verdict when p is inadmissible.
std::vector<Verdict> check_example(const ExampleRecord& ex, std::uint64_t p, int m);
// check_example for single-series (win2a_sgn) records.
std::vector<Verdict> check_win2a(const ExampleRecord& ex, std::uint64_t p, int m);

// [F_{0,(1/2,1/d,(d-1)/d)}]_{p-1}(lambda) against 0 / u^2 / (k_d/p) U.
Verdict check_win2b(Family f, const Rational& lambda, std::uint64_t p, int m);

// Frobenius data of E_d(mu), mu = (1 - sqrt(w))/2 for a unit w mod p; over F_p
// when w is a square, over F_{p^2} otherwise. sign flips the square root.
struct HalfRuleFrobenius {
  bool split;
  FiniteField field;
  FqElem mu;
  FrobData frob;
};
HalfRuleFrobenius half_rule_frobenius(Family f, std::uint64_t w, std::uint64_t p, int sign, int m = working_power);

// a_p of the weight-3 form attached to (d, lambda): the integer in [-2p, 2p]
// congruent to (k_d/p)(w + p^2/w) mod p^3, w = u_+ u_- (split) or U (inert).
// AmbiguousRounding if no such integer exists.
std::int64_t ap_form(Family f, const Rational& lambda, std::uint64_t p);
// Independent route: a_p(E_-)^2 - 2p (split) or (k_d/p) a_{p^2} (inert).
std::int64_t ap_form_direct(Family f, const Rational& lambda, std::uint64_t p);

// Skip reason for the weight-3 checks at p, or nullopt.
std::optional<std::string> weight3_inadmissibility(Family f, const Rational& lambda, std::uint64_t p);

// [F_{0,b}]_{p-1}(lambda) = ap_form mod p^2.
Verdict check_cor12(const Weight3Case& c, std::uint64_t p);

// H_p(3; lambda) - (K/p)((1 - lambda)/p) p = ap_form exactly.
Verdict weight3_bridge(FqContextCache& cache, const Weight3Case& c, std::uint64_t p);

struct DeuringCheck {
  std::string id;
  std::uint64_t p;
  std::string branch;
  bool predicted;
  bool counted;
};

// Literal ordinary symbol against point-count ordinarity, per branch. Empty
// when the record has no literal symbol or p is inadmissible.
std::vector<DeuringCheck> deuring_checks(const ExampleRecord& ex, std::uint64_t p);

struct SweepConfig {
  std::vector<std::string> ids;
  std::uint64_t pmax = 150;
  std::vector<int> powers{2};
  unsigned threads = 1;
  // Every (record, power) is expected to fail at least once.
  bool expect_fail = false;
};

enum class Expectation { AllPass, SomeFailure, Unclaimed };
std::string to_string(Expectation e);

struct ClaimSummary {
  std::string id;
  int m;
  Expectation expectation;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::uint64_t> failing_primes;
  bool satisfied = false;
};

struct Report {
  int catalog_version = 0;
  SweepConfig config;
  std::vector<Verdict> verdicts;
  std::vector<ClaimSummary> claims;
  std::vector<std::string> asymmetries;
  std::vector<DeuringCheck> deuring_mismatches;
  std::size_t deuring_checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool ok() const;
};

// Ids in catalog order: "A-K", "P,Q", "all". CatalogError for unknown ids.
std::vector<std::string> expand_ids(const Catalog& catalog, const std::string& spec);

// Verdicts for every prime 3 <= p <= pmax (skips included), ordered by
// (id, p, m, branch). PreconditionViolation for pmax > 10^4 or a power
// outside {2, 3}.
Report run_sweep(const Catalog& catalog, const SweepConfig& config);

}  // namespace scv
