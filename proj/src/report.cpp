#include "fracineq/report.hpp"

#include <cstdio>
#include <ostream>

namespace fracineq {

const char* const kCsvHeader =
    "check_id,f_name,a,b,alpha,lambda,x,y,delta,C,branch,lhs,rhs,margin,quad_error,verdict";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

bool uses_weight_params(const CheckResult& r) { return r.check_id != "hh"; }

std::string opt_field(const CheckResult& r, bool present, double v) {
    return present && uses_weight_params(r) ? format_double(v) : std::string();
}

}  // namespace

std::string csv_row(const CheckResult& r) {
    const IneqParams& p = r.params;
    std::string row;
    row.reserve(256);
    row += r.check_id;
    row += ',';
    row += r.f_name;
    row += ',';
    row += format_double(p.interval.a);
    row += ',';
    row += format_double(p.interval.b);
    row += ',';
    row += format_double(p.alpha);
    row += ',';
    row += opt_field(r, true, p.lambda);
    row += ',';
    row += opt_field(r, true, p.x);
    row += ',';
    row += opt_field(r, p.y.has_value(), p.y.value_or(0.0));
    row += ',';
    row += opt_field(r, p.delta.has_value(), p.delta.value_or(0.0));
    row += ',';
    row += opt_field(r, true, p.c_point());
    row += ',';
    if (r.branch) row += to_string(*r.branch);
    row += ',';
    row += format_double(r.lhs);
    row += ',';
    row += format_double(r.rhs);
    row += ',';
    row += format_double(r.margin);
    row += ',';
    row += format_double(r.quad_error);
    row += ',';
    row += to_string(r.verdict);
    return row;
}

const std::vector<std::string>& discrepancy_notes() {
    static const std::vector<std::string> notes = {
        "# note: the geometric mean G(a,b) is computed as sqrt(a*b); the printed "
        "definition (a+b)/2 would coincide with A(a,b) and degenerate every mean chain.",
        "# note: cor-half-frac and cor-34 use the left-side weights f(sqrt(ab))/2 + "
        "(f(a)+f(b))/4, the weights the lambda=1/2 reduction produces (they sum to 1).",
        "# note: cor-simpson-frac and cor-33 carry + in front of the bracketed "
        "dt-integrals, the sign the lambda=1/3 reduction produces.",
        "# note: the log-mean proposition's displayed left side is the identically "
        "zero combination for ln; it is checked as a zero identity plus bound "
        "nonnegativity.",
    };
    return notes;
}

void write_csv(std::ostream& out, const SuiteReport& report, bool with_notes) {
    if (with_notes)
        for (const auto& note : discrepancy_notes()) out << note << '\n';
    out << kCsvHeader << '\n';
    for (const auto& row : report.rows) out << csv_row(row) << '\n';
}

std::string json_object(const CheckResult& r) {
    const IneqParams& p = r.params;
    auto str = [](const std::string& s) { return '"' + s + '"'; };
    auto num_or_null = [&](bool present, double v) {
        return present ? format_double(v) : std::string("null");
    };
    std::string j = "{";
    j += "\"check_id\":" + str(r.check_id);
    j += ",\"f_name\":" + str(r.f_name);
    j += ",\"a\":" + format_double(p.interval.a);
    j += ",\"b\":" + format_double(p.interval.b);
    j += ",\"alpha\":" + format_double(p.alpha);
    j += ",\"lambda\":" + num_or_null(uses_weight_params(r), p.lambda);
    j += ",\"x\":" + num_or_null(uses_weight_params(r), p.x);
    j += ",\"y\":" + num_or_null(p.y.has_value() && uses_weight_params(r), p.y.value_or(0.0));
    j += ",\"delta\":" +
         num_or_null(p.delta.has_value() && uses_weight_params(r), p.delta.value_or(0.0));
    j += ",\"C\":" + num_or_null(uses_weight_params(r), p.c_point());
    j += ",\"branch\":" + (r.branch ? str(to_string(*r.branch)) : std::string("null"));
    j += ",\"lhs\":" + format_double(r.lhs);
    j += ",\"rhs\":" + format_double(r.rhs);
    j += ",\"margin\":" + format_double(r.margin);
    j += ",\"quad_error\":" + format_double(r.quad_error);
    j += ",\"verdict\":" + str(std::string(to_string(r.verdict)));
    j += "}";
    return j;
}

}  // namespace fracineq
