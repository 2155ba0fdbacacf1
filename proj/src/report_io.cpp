#include "rpbell/report_io.hpp"

#include <sstream>

namespace rpbell {

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["identity"] = identity_name(report.id);
  Json params = Json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  j["params"] = params;
  j["passed"] = report.passed;
  if (report.first_discrepancy) {
    Json d;
    d["location"] = report.first_discrepancy->location;
    d["lhs"] = report.first_discrepancy->lhs;
    d["rhs"] = report.first_discrepancy->rhs;
    j["first_discrepancy"] = d;
  } else {
    j["first_discrepancy"] = nullptr;
  }
  return j;
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& report : reports) arr.push_back(report_to_json(report));
  return arr;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "identity_id,params,passed,discrepancy_location\n";
  for (const auto& report : reports) {
    os << identity_name(report.id) << "," << csv_quote(report.params_str()) << ","
       << (report.passed ? "true" : "false") << ","
       << (report.first_discrepancy ? csv_quote(report.first_discrepancy->location) : "")
       << "\n";
  }
  return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& report : reports) {
    os << identity_name(report.id) << " " << report.params_str() << " "
       << (report.passed ? "PASS" : "FAIL");
    if (report.first_discrepancy) {
      os << " at " << report.first_discrepancy->location << ": lhs="
         << report.first_discrepancy->lhs << " rhs=" << report.first_discrepancy->rhs;
    }
    os << "\n";
  }
  return os.str();
}

Json root_certificate_to_json(const RootCertificate& cert) {
  Json j;
  j["degree"] = cert.degree;
  j["distinct_real_negative_roots"] = cert.distinct_real_negative_roots;
  j["squarefree_degree"] = cert.squarefree_degree;
  j["all_real_negative"] = cert.all_real_negative;
  return j;
}

Json max_index_report_to_json(const MaxIndexReport& report) {
  Json j;
  j["n"] = report.n;
  j["r"] = report.r.str();
  j["max_index"] = report.max_index;
  j["darroch_center"] = report.darroch_center.str();
  j["within_one"] = report.within_one;
  j["on_boundary"] = report.on_boundary;
  return j;
}

Json make_envelope(const std::string& command, Json params, Json result,
                   const std::string& status) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  j["status"] = status;
  return j;
}

}  // namespace rpbell
