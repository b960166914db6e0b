#pragma once

// Flat report schema shared by the CSV and JSON outputs: one row per
// executed check, fixed column order, 17 significant digits so parsing an
// emitted file recovers every double bit-exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "fracineq/harness.hpp"

namespace fracineq {

// check_id,f_name,a,b,alpha,lambda,x,y,delta,C,branch,lhs,rhs,margin,quad_error,verdict
extern const char* const kCsvHeader;

// %.17g; empty string for fields a row does not use.
std::string format_double(double v);

std::string csv_row(const CheckResult& r);

// Once-per-run register of formula discrepancies the workbench corrects or
// flags, emitted as '# note:' lines above the header.
const std::vector<std::string>& discrepancy_notes();

void write_csv(std::ostream& out, const SuiteReport& report, bool with_notes = true);

// JSON object with the same keys as the CSV columns, in the same order.
std::string json_object(const CheckResult& r);

}  // namespace fracineq
