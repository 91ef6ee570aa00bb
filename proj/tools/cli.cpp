#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "scv/analytic.hpp"
#include "scv/catalog.hpp"
#include "scv/charsum.hpp"
#include "scv/errors.hpp"
#include "scv/report.hpp"
#include "scv/verify.hpp"

namespace scv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Catalog load_catalog(const CliConfig& config) {
  return config.catalog_path.empty() ? load_default_catalog() : load_catalog_file(config.catalog_path);
}

std::vector<int> parse_powers(const std::string& text) {
  if (text == "2") return {2};
  if (text == "3") return {3};
  if (text == "2,3" || text == "3,2") return {2, 3};
  throw UsageError("--mod must be 2, 3 or 2,3");
}

unsigned thread_count(const CliConfig& config) {
  if (config.parallel > 0) return config.parallel;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Writes to --out when given, else to the command's stream.
int emit(const CliConfig& config, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
  if (config.out.empty()) {
    writer(out);
    return exit_ok;
  }
  std::ofstream file(config.out);
  if (!file) throw UsageError("cannot open " + config.out + " for writing");
  writer(file);
  return exit_ok;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (const Rational& x : xs) out += (out.empty() ? "" : ", ") + x.get_str();
  return "[" + out + "]";
}

std::string claims_text(const ExampleRecord& ex) {
  std::string out;
  for (Claim c : ex.claims) out += (out.empty() ? "" : ",") + to_string(c);
  return out;
}

void show_record(std::ostream& out, const ExampleRecord& ex) {
  out << "id: " << ex.id << '\n';
  if (!ex.series.empty()) out << "series: " << ex.series << '\n';
  out << "case: " << to_string(ex.congruence_case) << '\n'
      << "d: " << degree(ex.family) << '\n'
      << "b: " << join(ex.b) << '\n'
      << "alpha: " << ex.alpha << '\n'
      << "lambda: " << ex.lambda << '\n'
      << "mu_rule: " << to_string(ex.mu_rule) << '\n';
  if (ex.level) out << "level: " << *ex.level << '\n';
  if (ex.ordinary_symbol) out << "ordinary_symbol: " << *ex.ordinary_symbol << '\n';
  if (ex.split_symbol) out << "split_symbol: " << *ex.split_symbol << '\n';
  if (ex.sign_symbol) out << "sign_symbol: " << *ex.sign_symbol << '\n';
  out << "claims: " << claims_text(ex) << '\n';
  out << "filters: min_prime " << ex.filter.min_prime;
  if (ex.filter.residue_modulus) {
    out << ", p mod " << *ex.filter.residue_modulus << " in {";
    for (std::size_t i = 0; i < ex.filter.residue_classes.size(); ++i) {
      out << (i ? ", " : "") << ex.filter.residue_classes[i];
    }
    out << '}';
  }
  for (std::uint64_t p : ex.filter.excluded) out << ", p != " << p;
  out << '\n';
  if (ex.require_ordinary) out << "require_ordinary: true\n";
  if (!ex.delta_text.empty()) out << "delta: " << ex.delta_text << '\n';
  if (!ex.note.empty()) out << "note: " << ex.note << '\n';
}

}  // namespace

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream&) {
  if (config.pmax > max_sweep_prime) throw UsageError("--pmax must be at most 10000");
  const Catalog catalog = load_catalog(config);
  SweepConfig sweep;
  sweep.ids = expand_ids(catalog, config.examples);
  sweep.pmax = config.pmax;
  sweep.powers = parse_powers(config.mod);
  sweep.threads = thread_count(config);
  sweep.expect_fail = config.expect_fail;
  const ReportFormat format = parse_format(config.format);
  const Report report = run_sweep(catalog, sweep);
  emit(config, out, [&](std::ostream& os) { write_sweep(os, report, format); });
  return report.ok() ? exit_ok : exit_check_failed;
}

int cmd_charsum(const CliConfig& config, std::ostream& out, std::ostream&) {
  if (config.pmax > 1000) throw UsageError("charsum --pmax must be at most 1000");
  const ReportFormat format = parse_format(config.format);
  FqContextCache cache;
  const std::vector<IdentityTally> tallies = run_charsum_suite(cache, config.pmax, config.with_fp2, config.fp2_qmax);
  emit(config, out, [&](std::ostream& os) { write_charsum(os, tallies, cache.escalations(), format); });
  const bool ok = std::all_of(tallies.begin(), tallies.end(), [](const IdentityTally& t) { return t.failures == 0; });
  return ok ? exit_ok : exit_check_failed;
}

int cmd_analytic(const CliConfig& config, std::ostream& out, std::ostream&) {
  if (config.precision < min_analytic_bits) throw UsageError("--precision must be at least 128 bits");
  const ReportFormat format = parse_format(config.format);
  const Catalog catalog = load_catalog(config);
  const auto bits = static_cast<mpfr_prec_t>(config.precision);
  const std::vector<AnalyticCheck> checks = run_analytic_suite(catalog, bits, config.only);
  emit(config, out, [&](std::ostream& os) { write_analytic(os, checks, bits, format); });
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const AnalyticCheck& c) { return c.pass; });
  return ok ? exit_ok : exit_check_failed;
}

int cmd_catalog(const CliConfig& config, std::ostream& out, std::ostream&) {
  const Catalog catalog = load_catalog(config);
  if (config.catalog_action == "validate") {
    validate(catalog);
    out << "catalog version " << catalog.version << ": " << catalog.examples.size() << " examples, "
        << catalog.weight3.size() << " weight-3 cases, " << catalog.special_values.size() << " special values, "
        << catalog.fields.size() << " fields: valid\n";
    for (const ExampleRecord& ex : catalog.examples) {
      if (!ex.note.empty()) out << "note " << ex.id << ": " << ex.note << '\n';
    }
    return exit_ok;
  }
  if (config.catalog_action == "list") {
    for (const ExampleRecord& ex : catalog.examples) {
      out << ex.id << '\t' << (ex.series.empty() ? "-" : ex.series) << '\t' << to_string(ex.congruence_case)
          << "\td=" << degree(ex.family) << "\tlambda=" << ex.lambda << "\tclaims=" << claims_text(ex) << '\n';
    }
    for (const Weight3Case& c : catalog.weight3) {
      out << c.name << "\tweight3\td=" << degree(c.family) << "\tlambda=" << c.lambda.get_str()
          << "\tK=" << c.cm_discriminant << '\n';
    }
    for (const SpecialValue& sv : catalog.special_values) {
      out << sv.id << "\tspecial\tb=" << join(sv.b3) << "\tlambda=" << sv.lambda.get_str() << "\tfield=" << sv.field
          << '\n';
    }
    return exit_ok;
  }
  if (config.catalog_action == "show") {
    bool found = false;
    for (const ExampleRecord& ex : catalog.examples) {
      if (ex.id != config.catalog_target && ex.series != config.catalog_target) continue;
      if (found) out << '\n';
      show_record(out, ex);
      found = true;
    }
    for (const SpecialValue& sv : catalog.special_values) {
      if (sv.id != config.catalog_target) continue;
      if (found) out << '\n';
      out << "special value: " << sv.id << "\nb3: " << join(sv.b3) << "\nb2: " << join(sv.b2)
          << "\nlambda: " << sv.lambda.get_str() << "\nfactor: " << sv.factor_text << "\nfield: " << sv.field << '\n';
      found = true;
    }
    if (!found) throw CatalogError("no catalog entry '" + config.catalog_target + "'");
    return exit_ok;
  }
  throw UsageError("catalog needs list, validate or show <id>");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Supercongruence verification toolkit", "scverify"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "Sweep catalog congruences over primes");
  verify->add_option("--examples", config.examples, "Ids, ranges or 'all' (e.g. A-K or P,Q)");
  verify->add_option("--pmax", config.pmax, "Largest prime")->check(CLI::Range(std::uint64_t{2}, max_sweep_prime));
  verify->add_option("--mod", config.mod, "Powers of p: 2, 3 or 2,3");
  verify->add_flag("--expect-fail", config.expect_fail, "Expect at least one failure per record and power");

  CLI::App* charsum = app.add_subcommand("charsum", "Character-sum identity suite");
  charsum->add_option("--pmax", config.pmax, "Largest prime")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000}));
  charsum->add_flag("--with-fp2", config.with_fp2, "Include F_{p^2} contexts");
  charsum->add_option("--fp2-qmax", config.fp2_qmax, "Largest p^2 with --with-fp2");

  CLI::App* analytic = app.add_subcommand("analytic", "Real-analytic identities");
  analytic->add_option("--precision", config.precision, "Working precision in bits (>= 128)");
  analytic->add_option("--only", config.only, "Restrict to these ids or series labels")->delimiter(',');

  CLI::App* catalog = app.add_subcommand("catalog", "Inspect the catalog");
  catalog->add_option("action", config.catalog_action, "list, validate or show")
      ->required()
      ->check(CLI::IsMember({"list", "validate", "show"}));
  catalog->add_option("target", config.catalog_target, "Record id or series label for show");

  for (CLI::App* sub : {verify, charsum, analytic, catalog}) {
    sub->add_option("--catalog", config.catalog_path, "Catalog YAML file (overrides SCV_CATALOG)");
    sub->add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", config.out, "Write the report to this file");
    sub->add_option("--parallel", config.parallel, "Worker threads (0 = hardware concurrency)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (charsum->parsed()) return cmd_charsum(config, out, err);
    if (analytic->parsed()) return cmd_analytic(config, out, err);
    if (config.catalog_action == "show" && config.catalog_target.empty()) throw UsageError("catalog show needs an id");
    return cmd_catalog(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CatalogError& e) {
    err << "catalog error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "catalog error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PreconditionViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace scv::cli
