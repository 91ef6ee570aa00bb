#include "scv/report.hpp"

#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "scv/errors.hpp"

namespace scv {

namespace {

using nlohmann::ordered_json;

constexpr int residual_digits = 6;

ordered_json residue_json(const std::optional<Residue>& r) {
  if (!r) return nullptr;
  return r->value();
}

std::string residue_text(const std::optional<Residue>& r) { return r ? std::to_string(r->value()) : ""; }

std::string truncated(const std::string& s) {
  return s.size() <= table_digits ? s : s.substr(0, table_digits) + "...";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["type"] = "verdict";
  j["id"] = v.id;
  j["p"] = v.p;
  j["m"] = v.m;
  j["branch"] = v.branch;
  j["admissible"] = v.admissible;
  j["skip_reason"] = v.skip_reason;
  j["case"] = v.case_label;
  j["lhs"] = residue_json(v.lhs);
  j["rhs"] = residue_json(v.rhs);
  j["modulus"] = v.modulus;
  j["pass"] = v.pass;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

ordered_json claim_json(const ClaimSummary& c) {
  ordered_json j;
  j["id"] = c.id;
  j["m"] = c.m;
  j["expectation"] = to_string(c.expectation);
  j["checked"] = c.checked;
  j["failed"] = c.failed;
  j["failing_primes"] = c.failing_primes;
  j["satisfied"] = c.satisfied;
  return j;
}

ordered_json deuring_json(const DeuringCheck& d) {
  ordered_json j;
  j["id"] = d.id;
  j["p"] = d.p;
  j["branch"] = d.branch;
  j["predicted_ordinary"] = d.predicted;
  j["counted_ordinary"] = d.counted;
  return j;
}

void write_sweep_json(std::ostream& os, const Report& r) {
  ordered_json header;
  header["type"] = "header";
  header["catalog_version"] = r.catalog_version;
  header["ids"] = r.config.ids;
  header["pmax"] = r.config.pmax;
  header["powers"] = r.config.powers;
  header["expect_fail"] = r.config.expect_fail;
  os << header.dump() << '\n';
  for (const Verdict& v : r.verdicts) os << verdict_json(v).dump() << '\n';
  ordered_json summary;
  summary["type"] = "summary";
  summary["passed"] = r.passed;
  summary["failed"] = r.failed;
  summary["skipped"] = r.skipped;
  summary["claims"] = ordered_json::array();
  for (const ClaimSummary& c : r.claims) summary["claims"].push_back(claim_json(c));
  summary["asymmetries"] = r.asymmetries;
  summary["deuring_checked"] = r.deuring_checked;
  summary["deuring_mismatches"] = ordered_json::array();
  for (const DeuringCheck& d : r.deuring_mismatches) summary["deuring_mismatches"].push_back(deuring_json(d));
  summary["ok"] = r.ok();
  os << summary.dump() << '\n';
}

void write_sweep_csv(std::ostream& os, const Report& r) {
  os << "id,p,branch,case,lhs,rhs,modulus,pass,skip_reason\n";
  for (const Verdict& v : r.verdicts) {
    os << csv_field(v.id) << ',' << v.p << ',' << v.branch << ',' << csv_field(v.case_label) << ','
       << residue_text(v.lhs) << ',' << residue_text(v.rhs) << ',' << (v.admissible ? std::to_string(v.modulus) : "")
       << ',' << (v.admissible ? (v.pass ? "true" : "false") : "") << ',' << csv_field(v.skip_reason) << '\n';
  }
}

void write_sweep_table(std::ostream& os, const Report& r) {
  os << std::left << std::setw(5) << "id" << std::setw(7) << "p" << std::setw(3) << "m" << std::setw(4) << "br"
     << std::setw(16) << "case" << std::setw(16) << "lhs" << std::setw(16) << "rhs" << std::setw(10) << "modulus"
     << "result\n";
  for (const Verdict& v : r.verdicts) {
    os << std::setw(5) << v.id << std::setw(7) << v.p << std::setw(3) << v.m << std::setw(4) << v.branch;
    if (!v.admissible) {
      os << "skip: " << v.skip_reason << '\n';
      continue;
    }
    os << std::setw(16) << v.case_label << std::setw(16) << truncated(residue_text(v.lhs)) << std::setw(16)
       << truncated(residue_text(v.rhs)) << std::setw(10) << v.modulus << (v.pass ? "pass" : "FAIL");
    if (!v.note.empty()) os << "  " << v.note;
    os << '\n';
  }
  os << '\n';
  for (const ClaimSummary& c : r.claims) {
    os << c.id << " mod p^" << c.m << ": " << to_string(c.expectation) << ", " << c.checked << " checked, " << c.failed
       << " failed -> " << (c.satisfied ? "satisfied" : "NOT SATISFIED") << '\n';
  }
  os << "passed " << r.passed << ", failed " << r.failed << ", skipped " << r.skipped << ", branch asymmetries "
     << r.asymmetries.size() << ", Deuring mismatches " << r.deuring_mismatches.size() << " of "
     << r.deuring_checked << '\n';
  os << (r.ok() ? "OK" : "NOT OK") << '\n';
}

bool all_pass(const std::vector<AnalyticCheck>& checks) {
  for (const AnalyticCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

bool all_pass(const std::vector<IdentityTally>& tallies) {
  for (const IdentityTally& t : tallies) {
    if (t.failures != 0) return false;
  }
  return true;
}

}  // namespace

ReportFormat parse_format(const std::string& text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "table") return ReportFormat::Table;
  throw PreconditionViolation("unknown report format '" + text + "'");
}

void write_sweep(std::ostream& os, const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: write_sweep_json(os, report); break;
    case ReportFormat::Csv: write_sweep_csv(os, report); break;
    case ReportFormat::Table: write_sweep_table(os, report); break;
  }
}

void write_analytic(std::ostream& os, const std::vector<AnalyticCheck>& checks, mpfr_prec_t bits, ReportFormat format) {
  const std::string threshold = "1e" + std::to_string(residual_exponent);
  switch (format) {
    case ReportFormat::Json: {
      ordered_json header;
      header["type"] = "header";
      header["precision_bits"] = bits;
      header["threshold"] = threshold;
      os << header.dump() << '\n';
      for (const AnalyticCheck& c : checks) {
        ordered_json j;
        j["type"] = "identity";
        j["id"] = c.id;
        j["kind"] = c.kind;
        j["residual"] = c.residual.to_string(residual_digits);
        j["pass"] = c.pass;
        os << j.dump() << '\n';
      }
      ordered_json summary;
      summary["type"] = "summary";
      summary["checks"] = checks.size();
      summary["ok"] = all_pass(checks);
      os << summary.dump() << '\n';
      break;
    }
    case ReportFormat::Csv:
      os << "id,kind,residual,pass\n";
      for (const AnalyticCheck& c : checks) {
        os << csv_field(c.id) << ',' << csv_field(c.kind) << ',' << c.residual.to_string(residual_digits) << ','
           << (c.pass ? "true" : "false") << '\n';
      }
      break;
    case ReportFormat::Table:
      os << std::left << std::setw(8) << "id" << std::setw(16) << "kind" << std::setw(16) << "residual" << "result\n";
      for (const AnalyticCheck& c : checks) {
        os << std::setw(8) << c.id << std::setw(16) << c.kind << std::setw(16) << c.residual.to_string(residual_digits)
           << (c.pass ? "pass" : "FAIL") << '\n';
      }
      os << checks.size() << " identities at " << bits << " bits, threshold " << threshold << ": "
         << (all_pass(checks) ? "OK" : "NOT OK") << '\n';
      break;
  }
}

void write_charsum(std::ostream& os, const std::vector<IdentityTally>& tallies, int escalations, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      for (const IdentityTally& t : tallies) {
        ordered_json j;
        j["type"] = "identity";
        j["identity"] = t.identity;
        j["d"] = t.d;
        j["q"] = t.q;
        j["cases"] = t.cases;
        j["failures"] = t.failures;
        os << j.dump() << '\n';
      }
      ordered_json summary;
      summary["type"] = "summary";
      summary["groups"] = tallies.size();
      summary["precision_escalations"] = escalations;
      summary["ok"] = all_pass(tallies);
      os << summary.dump() << '\n';
      break;
    }
    case ReportFormat::Csv:
      os << "identity,d,q,cases,failures\n";
      for (const IdentityTally& t : tallies) {
        os << t.identity << ',' << t.d << ',' << t.q << ',' << t.cases << ',' << t.failures << '\n';
      }
      break;
    case ReportFormat::Table: {
      std::uint64_t cases = 0;
      std::uint64_t failures = 0;
      os << std::left << std::setw(16) << "identity" << std::setw(4) << "d" << std::setw(6) << "q" << std::setw(8)
         << "cases" << "failures\n";
      for (const IdentityTally& t : tallies) {
        os << std::setw(16) << t.identity << std::setw(4) << t.d << std::setw(6) << t.q << std::setw(8) << t.cases
           << t.failures << '\n';
        cases += t.cases;
        failures += t.failures;
      }
      os << cases << " cases, " << failures << " failures, " << escalations << " precision escalations: "
         << (failures == 0 ? "OK" : "NOT OK") << '\n';
      break;
    }
  }
}

}  // namespace scv
