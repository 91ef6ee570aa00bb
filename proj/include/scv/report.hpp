#pragma once

// Serialization of sweep, analytic and character-sum results as JSON lines,
// CSV or a human-readable table. Output depends only on the results, never
// on thread count or wall time.

#include <iosfwd>
#include <string>
#include <vector>

#include "scv/analytic.hpp"
#include "scv/charsum.hpp"
#include "scv/verify.hpp"

namespace scv {

enum class ReportFormat { Json, Csv, Table };

// PreconditionViolation unless text is json, csv or table.
ReportFormat parse_format(const std::string& text);

inline constexpr std::size_t table_digits = 12;

void write_sweep(std::ostream& os, const Report& report, ReportFormat format);
void write_analytic(std::ostream& os, const std::vector<AnalyticCheck>& checks, mpfr_prec_t bits, ReportFormat format);
void write_charsum(std::ostream& os, const std::vector<IdentityTally>& tallies, int escalations, ReportFormat format);

}  // namespace scv
