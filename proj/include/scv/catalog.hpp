#pragma once

// The example catalog: every congruence record, the weight-3 cases, the
// special values and the CM fields they use, loaded from YAML.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scv/arith.hpp"
#include "scv/families.hpp"

namespace scv {

enum class MuRule { EqualLambda, HalfMinusSqrt };
enum class CongruenceCase { PmP, PUp2Cases, Win2aSgn };
enum class Claim { P2, P3, P3Negative };

std::string to_string(MuRule r);
std::string to_string(CongruenceCase c);
std::string to_string(Claim c);

struct PrimeFilter {
  std::uint64_t min_prime = 5;
  std::optional<std::uint64_t> residue_modulus;
  std::vector<std::uint64_t> residue_classes;
  std::vector<std::uint64_t> excluded;

  // Reason the prime fails the filter, or nullopt if it passes.
  std::optional<std::string> rejects(std::uint64_t p) const;
};

// base^exponent factors, pi^k, Gamma(r)^k and a rational coefficient.
struct GammaProduct {
  Rational coefficient = 1;
  std::vector<std::pair<Rational, Rational>> powers;
  int pi_exponent = 0;
  std::vector<std::pair<Rational, long>> gammas;
};

// Grammar: factor {'*' factor}; factor := rational | rational '^(' rational ')'
// | 'pi' ['^(' int ')'] | 'Gamma(' rational ')' ['^' int] | 'sqrt(' int ')'.
GammaProduct parse_gamma_product(std::string_view text);

struct ExampleRecord {
  std::string id;
  std::string series;
  CongruenceCase congruence_case = CongruenceCase::PmP;
  Family family = Family::D2;
  std::vector<Rational> b;
  QuadSurd alpha;
  QuadSurd lambda;
  MuRule mu_rule = MuRule::EqualLambda;
  std::optional<int> level;
  // Literal Legendre argument n of the ordinarity condition (n/p) = 1.
  std::optional<std::int64_t> ordinary_symbol;
  // Literal Legendre argument of the ((1 - lambda)/p) condition.
  std::optional<std::int64_t> split_symbol;
  std::optional<QuadSurd> sign_symbol;
  std::set<Claim> claims;
  PrimeFilter filter;
  bool require_ordinary = false;
  std::optional<QuadSurd> delta_surd;
  std::optional<GammaProduct> delta_product;
  std::string delta_text;
  std::string note;

  bool has_claim(Claim c) const { return claims.count(c) != 0; }
  // D of the quadratic field carrying alpha and lambda (1 if both rational).
  std::int64_t surd_radicand() const;
};

struct Weight3Case {
  std::string name;
  Family family = Family::D2;
  Rational lambda;
  std::int64_t cm_discriminant = 0;
  bool eta_oracle = false;
};

struct CmField {
  std::string name;
  int D = 0;
  int h = 0;
  int units = 0;
};

struct SpecialValue {
  std::string id;
  std::vector<Rational> b3;
  std::vector<Rational> b2;
  Rational lambda;
  GammaProduct factor;
  std::string factor_text;
  std::string field;
};

struct Catalog {
  int version = 0;
  std::vector<CmField> fields;
  std::vector<ExampleRecord> examples;
  std::vector<Weight3Case> weight3;
  std::vector<SpecialValue> special_values;

  // CatalogError if absent.
  const ExampleRecord& example(std::string_view id) const;
  const Weight3Case& weight3_case(std::string_view name) const;
  const CmField& field(std::string_view name) const;
  const SpecialValue& special_value(std::string_view id) const;
};

std::string_view embedded_catalog_text();

// CatalogError or ParseError on malformed input; the result is validated.
Catalog parse_catalog(std::string_view yaml_text);
Catalog load_catalog_file(const std::filesystem::path& path);
// The file named by SCV_CATALOG if set, else the embedded catalog.
Catalog load_default_catalog();

// Structural checks: unique ids, HGSpec shape, case/field consistency,
// surd radicands agreeing, fields referenced by special values present.
void validate(const Catalog& catalog);

}  // namespace scv
