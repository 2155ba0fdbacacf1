#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rpbell/analysis.hpp"
#include "rpbell/report.hpp"

namespace rpbell {

// All JSON uses insertion-ordered objects and carries big integers and
// rationals as decimal / "p/q" strings, so a parse-and-redump round trip
// is byte-identical and no value is ever squeezed through a double.
using Json = nlohmann::ordered_json;

Json report_to_json(const VerificationReport& report);
Json reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

Json root_certificate_to_json(const RootCertificate& cert);
Json max_index_report_to_json(const MaxIndexReport& report);

// The CLI output envelope: command, echoed params, payload, status.
Json make_envelope(const std::string& command, Json params, Json result,
                   const std::string& status);

}  // namespace rpbell
