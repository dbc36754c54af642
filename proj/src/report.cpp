#include "lgmk/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lgmk {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, v);
  return buf;
}

namespace {

// Round-trips through the fixed formatting; non-finite values become strings.
nlohmann::ordered_json num(double v) {
  if (!std::isfinite(v)) return format_real(v);
  return nlohmann::ordered_json::parse(format_real(v));
}

const char* normalization_name(Normalization n) {
  return n == Normalization::constant_term ? "constant_term" : "two_pi_i";
}

}  // namespace

nlohmann::ordered_json to_json(const GammaReport& r) {
  nlohmann::ordered_json j;
  j["pair"] = r.pair;
  j["cycle"] = to_string(r.cycle);
  j["sheaf"] = to_string(r.sheaf);
  j["phi"] = r.phi;
  j["z"] = num(r.z);
  j["t"] = num(r.t);
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["abs_err"] = num(r.abs_err);
  j["rel_err"] = num(r.rel_err);
  j["tolerance"] = num(r.tolerance);
  j["truncation"] = r.truncation;
  if (r.exact_match) j["exact_match"] = *r.exact_match;
  j["rhs_tail"] = num(r.rhs_tail);
  j["quad"] = r.quad_digest;
  j["quad_error"] = num(r.quad_error);
  j["quad_flagged"] = r.quad_flagged;
  j["normalization"] = normalization_name(r.normalization);
  if (!r.phase.empty()) j["phase"] = r.phase;
  j["passed"] = r.passed;
  j["precision"] = kReportDigits;
  return j;
}

std::string to_csv(const std::vector<GammaReport>& reports) {
  std::ostringstream os;
  os << "pair,cycle,sheaf,phi,z,t,lhs,rhs,abs_err,rel_err,truncation,exact_match,quad_error,passed,precision\n";
  for (const auto& r : reports) {
    os << r.pair << ',' << to_string(r.cycle) << ',' << to_string(r.sheaf) << ',' << r.phi << ','
       << format_real(r.z) << ',' << format_real(r.t) << ',' << format_real(r.lhs) << ',' << format_real(r.rhs)
       << ',' << format_real(r.abs_err) << ',' << format_real(r.rel_err) << ',' << r.truncation << ','
       << (r.exact_match ? (*r.exact_match ? "true" : "false") : "") << ',' << format_real(r.quad_error) << ','
       << (r.passed ? "true" : "false") << ',' << kReportDigits << '\n';
  }
  return os.str();
}

}  // namespace lgmk
