#include "cycloschur/report.hpp"

#include <json.hpp>

#include <ostream>

namespace cycloschur {

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.instance.n;
  j["r"] = rep.instance.r;
  auto xs = nlohmann::ordered_json::array();
  for (const auto& q : rep.instance.x_values) xs.push_back(q.str());
  j["x"] = std::move(xs);
  j["xi"] = rep.instance.xi.str();
  j["backend"] =
      rep.instance.backend == BackendKind::exact ? "exact" : "float";
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["equal"] = rep.equal;
  j["observed_sign"] = rep.observed_sign;
  j["elapsed_ms"] = rep.elapsed_ms;
  if (rep.printed_form_computed) {
    j["lhs_printed"] = rep.lhs_printed;
    j["equal_printed"] = rep.equal_printed;
  }
  return j.dump();
}

std::string reserialize_report_json(const std::string& json_text) {
  return nlohmann::ordered_json::parse(json_text).dump();
}

void print_report_text(std::ostream& os, const VerificationReport& rep) {
  os << "n=" << rep.instance.n << " r=" << rep.instance.r;
  if (rep.instance.symbolic) {
    os << " x=symbolic xi=symbolic";
  } else {
    os << " x=[";
    for (size_t i = 0; i < rep.instance.x_values.size(); ++i) {
      if (i) os << ",";
      os << rep.instance.x_values[i];
    }
    os << "] xi=" << rep.instance.xi;
  }
  os << " backend="
     << (rep.instance.backend == BackendKind::exact ? "exact" : "float")
     << "\n";
  os << "lhs = " << rep.lhs << "\n";
  os << "rhs = " << rep.rhs << "\n";
  os << "equal = " << (rep.equal ? "true" : "false") << "\n";
  os << "observed_sign = " << rep.observed_sign
     << " (printed sign = " << rep.expected_sign << ")\n";
  for (const auto& d : rep.diagnostics) os << "  " << d << "\n";
  if (rep.printed_form_computed) {
    os << "lhs_printed = " << rep.lhs_printed << "\n";
    os << "equal_printed = " << (rep.equal_printed ? "true" : "false")
       << "\n";
  }
  os << "elapsed_ms = " << rep.elapsed_ms << "\n";
}

}  // namespace cycloschur
