#include "scv/catalog.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "scv/errors.hpp"

namespace scv {

namespace {

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

std::vector<std::string> split_factors(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) {
      out.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(trim(current));
  return out;
}

// "(x)" or "x" after a '^'.
std::string exponent_text(std::string_view rest, std::string_view whole) {
  if (rest.empty() || rest.front() != '^') throw ParseError("gamma product: expected '^' in '" + std::string(whole) + "'");
  rest.remove_prefix(1);
  if (!rest.empty() && rest.front() == '(') {
    if (rest.back() != ')') throw ParseError("gamma product: unbalanced exponent in '" + std::string(whole) + "'");
    return std::string(rest.substr(1, rest.size() - 2));
  }
  return std::string(rest);
}

long integer_exponent(const std::string& text, std::string_view whole) {
  const Rational r = parse_rational(text);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ParseError("gamma product: integer exponent expected in '" + std::string(whole) + "'");
  return r.get_num().get_si();
}

std::string required_string(const YAML::Node& node, const char* key, const std::string& where) {
  const YAML::Node value = node[key];
  if (!value) throw CatalogError(where + ": missing field '" + key + "'");
  return value.as<std::string>();
}

std::vector<Rational> rational_list(const YAML::Node& node, const std::string& where) {
  if (!node || !node.IsSequence()) throw CatalogError(where + ": expected a list of rationals");
  std::vector<Rational> out;
  for (const auto& item : node) out.push_back(parse_rational(item.as<std::string>()));
  return out;
}

std::vector<std::uint64_t> integer_list(const YAML::Node& node) {
  std::vector<std::uint64_t> out;
  if (!node) return out;
  for (const auto& item : node) out.push_back(item.as<std::uint64_t>());
  return out;
}

CongruenceCase parse_case(const std::string& s, const std::string& where) {
  if (s == "pm_p") return CongruenceCase::PmP;
  if (s == "p_up2_cases") return CongruenceCase::PUp2Cases;
  if (s == "win2a_sgn") return CongruenceCase::Win2aSgn;
  throw CatalogError(where + ": unknown case '" + s + "'");
}

MuRule parse_mu_rule(const std::string& s, const std::string& where) {
  if (s == "equal_lambda") return MuRule::EqualLambda;
  if (s == "half_minus_sqrt") return MuRule::HalfMinusSqrt;
  throw CatalogError(where + ": unknown mu_rule '" + s + "'");
}

Claim parse_claim(const std::string& s, const std::string& where) {
  if (s == "p2") return Claim::P2;
  if (s == "p3") return Claim::P3;
  if (s == "p3_negative") return Claim::P3Negative;
  throw CatalogError(where + ": unknown claim '" + s + "'");
}

PrimeFilter parse_filter(const YAML::Node& node) {
  PrimeFilter f;
  if (!node) return f;
  if (node["min_prime"]) f.min_prime = node["min_prime"].as<std::uint64_t>();
  if (node["residue_modulus"]) f.residue_modulus = node["residue_modulus"].as<std::uint64_t>();
  f.residue_classes = integer_list(node["residue_classes"]);
  f.excluded = integer_list(node["excluded"]);
  return f;
}

ExampleRecord parse_example(const YAML::Node& node) {
  ExampleRecord ex;
  ex.id = required_string(node, "id", "example");
  const std::string where = "example " + ex.id;
  if (node["series"]) ex.series = node["series"].as<std::string>();
  ex.congruence_case = parse_case(required_string(node, "case", where), where);
  if (!node["d"]) throw CatalogError(where + ": missing field 'd'");
  ex.family = family_from_degree(node["d"].as<int>());
  ex.b = rational_list(node["b"], where);
  ex.alpha = parse_surd(required_string(node, "alpha", where));
  ex.lambda = parse_surd(required_string(node, "lambda", where));
  ex.mu_rule = parse_mu_rule(required_string(node, "mu_rule", where), where);
  if (node["level"]) ex.level = node["level"].as<int>();
  if (node["ordinary_symbol"]) ex.ordinary_symbol = node["ordinary_symbol"].as<std::int64_t>();
  if (node["split_symbol"]) ex.split_symbol = node["split_symbol"].as<std::int64_t>();
  if (node["sign_symbol"]) ex.sign_symbol = parse_surd(node["sign_symbol"].as<std::string>());
  if (!node["claims"]) throw CatalogError(where + ": missing field 'claims'");
  for (const auto& c : node["claims"]) ex.claims.insert(parse_claim(c.as<std::string>(), where));
  ex.filter = parse_filter(node["filters"]);
  if (node["require_ordinary"]) ex.require_ordinary = node["require_ordinary"].as<bool>();
  if (node["delta_surd"]) {
    ex.delta_text = node["delta_surd"].as<std::string>();
    ex.delta_surd = parse_surd(ex.delta_text);
  }
  if (node["delta_product"]) {
    ex.delta_text = node["delta_product"].as<std::string>();
    ex.delta_product = parse_gamma_product(ex.delta_text);
  }
  if (node["note"]) ex.note = node["note"].as<std::string>();
  return ex;
}

template <class T, class Key>
const T& find_by(const std::vector<T>& items, std::string_view key, Key T::*member, const char* what) {
  for (const T& item : items) {
    if (item.*member == key) return item;
  }
  throw CatalogError(std::string("catalog: no ") + what + " named '" + std::string(key) + "'");
}

}  // namespace

std::string to_string(MuRule r) { return r == MuRule::EqualLambda ? "equal_lambda" : "half_minus_sqrt"; }

std::string to_string(CongruenceCase c) {
  switch (c) {
    case CongruenceCase::PmP: return "pm_p";
    case CongruenceCase::PUp2Cases: return "p_up2_cases";
    case CongruenceCase::Win2aSgn: return "win2a_sgn";
  }
  return "?";
}

std::string to_string(Claim c) {
  switch (c) {
    case Claim::P2: return "p2";
    case Claim::P3: return "p3";
    case Claim::P3Negative: return "p3_negative";
  }
  return "?";
}

std::optional<std::string> PrimeFilter::rejects(std::uint64_t p) const {
  if (p < min_prime) return "below minimum prime " + std::to_string(min_prime);
  if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) return "excluded prime";
  if (residue_modulus) {
    const std::uint64_t r = p % *residue_modulus;
    if (std::find(residue_classes.begin(), residue_classes.end(), r) == residue_classes.end()) {
      return "inadmissible class " + std::to_string(r) + " mod " + std::to_string(*residue_modulus);
    }
  }
  return std::nullopt;
}

GammaProduct parse_gamma_product(std::string_view text) {
  GammaProduct out;
  for (const std::string& factor : split_factors(text)) {
    if (factor.empty()) throw ParseError("gamma product: empty factor in '" + std::string(text) + "'");
    std::string_view f = factor;
    if (f.substr(0, 2) == "pi") {
      out.pi_exponent += f.size() == 2 ? 1 : static_cast<int>(integer_exponent(exponent_text(f.substr(2), f), f));
    } else if (f.substr(0, 6) == "Gamma(") {
      const std::size_t close = f.find(')');
      if (close == std::string_view::npos) throw ParseError("gamma product: unclosed Gamma in '" + factor + "'");
      const Rational arg = parse_rational(f.substr(6, close - 6));
      if (arg <= 0) throw ParseError("gamma product: Gamma argument must be positive");
      const std::string_view rest = f.substr(close + 1);
      const long k = rest.empty() ? 1 : integer_exponent(exponent_text(rest, f), f);
      out.gammas.emplace_back(arg, k);
    } else if (f.substr(0, 5) == "sqrt(") {
      if (f.back() != ')') throw ParseError("gamma product: unclosed sqrt in '" + factor + "'");
      out.powers.emplace_back(parse_rational(f.substr(5, f.size() - 6)), Rational(1, 2));
    } else {
      const std::size_t caret = f.find('^');
      if (caret == std::string_view::npos) {
        out.coefficient *= parse_rational(f);
      } else {
        const Rational base = parse_rational(f.substr(0, caret));
        if (base <= 0) throw ParseError("gamma product: power base must be positive");
        out.powers.emplace_back(base, parse_rational(exponent_text(f.substr(caret), f)));
      }
    }
  }
  return out;
}

std::int64_t ExampleRecord::surd_radicand() const { return alpha.D() != 1 ? alpha.D() : lambda.D(); }

const ExampleRecord& Catalog::example(std::string_view id) const {
  return find_by(examples, id, &ExampleRecord::id, "example");
}

const Weight3Case& Catalog::weight3_case(std::string_view name) const {
  return find_by(weight3, name, &Weight3Case::name, "weight-3 case");
}

const CmField& Catalog::field(std::string_view name) const { return find_by(fields, name, &CmField::name, "field"); }

const SpecialValue& Catalog::special_value(std::string_view id) const {
  return find_by(special_values, id, &SpecialValue::id, "special value");
}

namespace {

// The list under key; an absent key is an empty list.
YAML::Node sequence(const YAML::Node& root, const char* key) {
  const YAML::Node node = root[key];
  if (node && !node.IsNull() && !node.IsSequence()) throw CatalogError(std::string("catalog: ") + key + " must be a list");
  return node;
}

}  // namespace

Catalog parse_catalog(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw CatalogError(std::string("catalog: YAML error: ") + e.what());
  }
  Catalog catalog;
  try {
    if (!root.IsMap()) throw CatalogError("catalog: top level must be a mapping");
    if (!root["version"]) throw CatalogError("catalog: missing version");
    catalog.version = root["version"].as<int>();
    for (const auto& f : sequence(root, "fields")) {
      catalog.fields.push_back({f["name"].as<std::string>(), f["D"].as<int>(), f["h"].as<int>(), f["units"].as<int>()});
    }
    for (const auto& e : sequence(root, "examples")) catalog.examples.push_back(parse_example(e));
    for (const auto& w : sequence(root, "weight3")) {
      Weight3Case c;
      c.name = required_string(w, "name", "weight3");
      c.family = family_from_degree(w["d"].as<int>());
      c.lambda = parse_rational(required_string(w, "lambda", "weight3 " + c.name));
      c.cm_discriminant = w["cm_discriminant"].as<std::int64_t>();
      if (w["eta_oracle"]) c.eta_oracle = w["eta_oracle"].as<bool>();
      catalog.weight3.push_back(std::move(c));
    }
    for (const auto& s : sequence(root, "special_values")) {
      SpecialValue v;
      v.id = required_string(s, "id", "special value");
      const std::string where = "special value " + v.id;
      v.b3 = rational_list(s["b3"], where);
      v.b2 = rational_list(s["b2"], where);
      v.lambda = parse_rational(required_string(s, "lambda", where));
      v.factor_text = required_string(s, "factor", where);
      v.factor = parse_gamma_product(v.factor_text);
      v.field = required_string(s, "field", where);
      catalog.special_values.push_back(std::move(v));
    }
  } catch (const YAML::Exception& e) {
    throw CatalogError(std::string("catalog: bad field: ") + e.what());
  }
  validate(catalog);
  return catalog;
}

Catalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("catalog: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

Catalog load_default_catalog() {
  if (const char* env = std::getenv("SCV_CATALOG"); env != nullptr && *env != '\0') return load_catalog_file(env);
  return parse_catalog(embedded_catalog_text());
}

void validate(const Catalog& catalog) {
  std::set<std::string> ids;
  for (const ExampleRecord& ex : catalog.examples) {
    const std::string where = "example " + ex.id;
    if (!ids.insert(ex.id).second) throw CatalogError(where + ": duplicate id");
    const bool two = ex.congruence_case == CongruenceCase::PmP;
    const std::vector<Rational> expected = two ? two_parameter_b(ex.family) : three_parameter_b(ex.family);
    if (ex.b != expected) throw CatalogError(where + ": b does not match d and case");
    if (ex.alpha.D() != 1 && ex.lambda.D() != 1 && ex.alpha.D() != ex.lambda.D()) {
      throw CatalogError(where + ": alpha and lambda lie in different quadratic fields");
    }
    if (ex.sign_symbol && ex.sign_symbol->D() != 1 && ex.sign_symbol->D() != ex.surd_radicand()) {
      throw CatalogError(where + ": sign symbol lies in a different quadratic field");
    }
    if (ex.claims.empty()) throw CatalogError(where + ": no claims");
    switch (ex.congruence_case) {
      case CongruenceCase::PmP:
        if (ex.mu_rule != MuRule::EqualLambda || !ex.ordinary_symbol) {
          throw CatalogError(where + ": pm_p needs mu_rule equal_lambda and an ordinary symbol");
        }
        break;
      case CongruenceCase::PUp2Cases: {
        if (ex.mu_rule != MuRule::HalfMinusSqrt || !ex.ordinary_symbol || !ex.split_symbol) {
          throw CatalogError(where + ": p_up2_cases needs half_minus_sqrt, ordinary and split symbols");
        }
        if (!ex.lambda.is_rational()) throw CatalogError(where + ": p_up2_cases needs a rational lambda");
        const SquareRootForm form = rational_sqrt_form(1 - ex.lambda.a());
        if (form.radicand != *ex.split_symbol) throw CatalogError(where + ": split symbol is not the radicand of 1 - lambda");
        break;
      }
      case CongruenceCase::Win2aSgn:
        if (ex.mu_rule != MuRule::HalfMinusSqrt || !ex.sign_symbol) {
          throw CatalogError(where + ": win2a_sgn needs half_minus_sqrt and a sign symbol");
        }
        break;
    }
    if (ex.filter.residue_modulus && ex.filter.residue_classes.empty()) {
      throw CatalogError(where + ": residue filter without classes");
    }
  }
  for (const SpecialValue& v : catalog.special_values) {
    catalog.field(v.field);
    if (v.b3.size() != 3 || v.b2.size() != 2) throw CatalogError("special value " + v.id + ": bad parameter lists");
  }
  for (const CmField& f : catalog.fields) {
    if (f.D <= 0 || f.h <= 0 || f.units <= 0) throw CatalogError("field " + f.name + ": bad invariants");
  }
}

}  // namespace scv
