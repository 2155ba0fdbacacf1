// rpbell: exact computation of restricted Stirling numbers and Bell
// polynomials, identity verification suites, and analytic certificates.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage or domain error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpbell/analysis.hpp"
#include "rpbell/bell.hpp"
#include "rpbell/identities.hpp"
#include "rpbell/oracle.hpp"
#include "rpbell/report_io.hpp"
#include "rpbell/restriction.hpp"
#include "rpbell/stirling.hpp"

namespace {

using rpbell::ExactInt;
using rpbell::ExactRational;
using rpbell::Json;
using rpbell::RestrictionVector;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

rpbell::OracleLimits oracle_limits_from_env() {
  rpbell::OracleLimits limits;
  if (const char* guard = std::getenv("RPBELL_ENUM_GUARD")) {
    limits.count_guard = std::atoi(guard);
    limits.enumerate_guard = std::atoi(guard);
  }
  return limits;
}

std::string join_coeffs(const std::vector<ExactInt>& coeffs) {
  std::string out = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += coeffs[i].str();
  }
  out += "]";
  return out;
}

Json coeffs_to_json(const std::vector<ExactInt>& coeffs) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(c.str());
  return arr;
}

struct StirlingArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  std::string r_csv;
  std::string format = "text";
};

int run_stirling(const StirlingArgs& args) {
  ExactInt value(0);
  if (args.kind == "s2") {
    value = rpbell::stirling2(args.n, args.k);
  } else if (args.kind == "s1u") {
    value = rpbell::stirling1_unsigned(args.n, args.k);
  } else if (args.kind == "s2r" || args.kind == "s1r") {
    if (args.r_csv.empty()) throw std::invalid_argument("--r is required for r-Stirling kinds");
    RestrictionVector rv = RestrictionVector::parse(args.r_csv);
    if (rv.p() != 1) throw std::invalid_argument("--kind s2r/s1r takes a single r value");
    value = args.kind == "s2r" ? rpbell::r_stirling2(args.n, args.k, rv.last())
                               : rpbell::r_stirling1_unsigned(args.n, args.k, rv.last());
  } else if (args.kind == "rp") {
    if (args.r_csv.empty()) throw std::invalid_argument("--r is required for --kind rp");
    RestrictionVector rv = RestrictionVector::parse(args.r_csv);
    value = rpbell::rp_stirling2(args.n, args.k, rv);
  } else {
    throw std::invalid_argument("unknown --kind: " + args.kind);
  }

  if (args.format == "json") {
    Json params;
    params["kind"] = args.kind;
    params["n"] = std::to_string(args.n);
    params["k"] = std::to_string(args.k);
    if (!args.r_csv.empty()) params["r"] = RestrictionVector::parse(args.r_csv).str();
    Json result;
    result["value"] = value.str();
    std::cout << rpbell::make_envelope("stirling", params, result, "value").dump() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kExitOk;
}

struct BellArgs {
  int n = 0;
  std::string r_csv;
  bool tilde = false;
  std::string at;
  std::string format = "text";
};

int run_bell(const BellArgs& args) {
  RestrictionVector rv = RestrictionVector::parse(args.r_csv);
  rpbell::IntPolynomial poly =
      args.tilde ? rpbell::bell_tilde(args.n, rv).poly() : rpbell::bell_poly(args.n, rv).poly();

  std::optional<ExactRational> value;
  if (!args.at.empty()) value = poly.eval(ExactRational::parse(args.at));

  if (args.format == "json") {
    Json params;
    params["n"] = std::to_string(args.n);
    params["r"] = rv.str();
    params["tilde"] = args.tilde;
    if (!args.at.empty()) params["at"] = ExactRational::parse(args.at).str();
    Json result;
    if (value) {
      result["value"] = value->str();
    } else {
      result["coefficients"] = coeffs_to_json(poly.coeffs());
    }
    std::cout << rpbell::make_envelope("bell", params, result, "value").dump() << "\n";
  } else if (value) {
    std::cout << value->str() << "\n";
  } else {
    std::cout << join_coeffs(poly.coeffs()) << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  rpbell::SuiteOptions options;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  std::vector<rpbell::VerificationReport> reports = rpbell::run_suite(args.suite, args.options);
  size_t failed = 0;
  for (const auto& report : reports) {
    if (!report.passed) ++failed;
  }

  if (args.format == "json") {
    Json params;
    params["suite"] = args.suite;
    params["max_n"] = std::to_string(args.options.max_n);
    params["max_m"] = std::to_string(args.options.max_m);
    params["max_r"] = std::to_string(args.options.max_r);
    params["order"] = std::to_string(args.options.order);
    Json result;
    result["reports"] = rpbell::reports_to_json(reports);
    result["total"] = reports.size();
    result["failed"] = failed;
    std::cout << rpbell::make_envelope("verify", params, result,
                                       failed == 0 ? "pass" : "fail")
                     .dump()
              << "\n";
  } else if (args.format == "csv") {
    std::cout << rpbell::reports_to_csv(reports);
  } else {
    std::cout << rpbell::reports_to_text(reports);
    std::cout << (failed == 0 ? "PASS" : "FAIL") << " " << reports.size() - failed << "/"
              << reports.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

struct CountArgs {
  int n = 0;
  std::string r_csv;
  int k = -1;
  std::string format = "text";
};

int run_count(const CountArgs& args) {
  RestrictionVector rv = RestrictionVector::parse(args.r_csv);
  rpbell::PartitionSpec spec = rpbell::PartitionSpec::of(
      args.n, rv, args.k >= 0 ? std::optional<int>(args.k) : std::nullopt);
  ExactInt value = rpbell::count_partitions(spec, oracle_limits_from_env());

  if (args.format == "json") {
    Json params;
    params["n"] = std::to_string(args.n);
    params["r"] = rv.str();
    if (args.k >= 0) params["k"] = std::to_string(args.k);
    Json result;
    result["value"] = value.str();
    std::cout << rpbell::make_envelope("count", params, result, "value").dump() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kExitOk;
}

struct AnalyzeArgs {
  std::string what;
  int n = 0;
  std::string r_csv;
  std::string format = "json";
};

int run_analyze(const AnalyzeArgs& args) {
  RestrictionVector rv = RestrictionVector::parse(args.r_csv);
  Json params;
  params["what"] = args.what;
  params["n"] = std::to_string(args.n);
  params["r"] = rv.str();

  Json result;
  std::string text;
  if (args.what == "roots") {
    rpbell::RootCertificate cert =
        rpbell::certify_real_negative_roots(rpbell::bell_poly(args.n, rv).poly());
    result = rpbell::root_certificate_to_json(cert);
    text = std::string("all_real_negative=") + (cert.all_real_negative ? "true" : "false");
  } else if (args.what == "logconcave") {
    const std::vector<ExactInt> row = rpbell::bell_poly(args.n, rv).poly().coeffs();
    bool ok = rpbell::check_strong_log_concavity(row) && rpbell::check_newton_inequality(row);
    result["strongly_log_concave"] = ok;
    text = ok ? "true" : "false";
  } else if (args.what == "maxindex") {
    rpbell::MaxIndexReport report = rpbell::max_index_report(args.n, rv);
    result = rpbell::max_index_report_to_json(report);
    text = "K=" + std::to_string(report.max_index) + " center=" + report.darroch_center.str() +
           " within_one=" + (report.within_one ? "true" : "false");
  } else {
    throw std::invalid_argument("unknown --what: " + args.what);
  }

  if (args.format == "text") {
    std::cout << text << "\n";
  } else {
    std::cout << rpbell::make_envelope("analyze", params, result, "value").dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact restricted Stirling / Bell polynomial toolkit"};
  app.require_subcommand(1);

  StirlingArgs stirling_args;
  CLI::App* stirling = app.add_subcommand("stirling", "Compute one Stirling number");
  stirling->add_option("--kind", stirling_args.kind, "s2, s1u, s2r, s1r, or rp")
      ->required()
      ->check(CLI::IsMember({"s2", "s1u", "s2r", "s1r", "rp"}));
  stirling->add_option("--n", stirling_args.n)->required();
  stirling->add_option("--k", stirling_args.k)->required();
  stirling->add_option("--r", stirling_args.r_csv, "comma-separated restriction sizes");
  stirling->add_option("--format", stirling_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  BellArgs bell_args;
  CLI::App* bell = app.add_subcommand("bell", "Bell polynomial coefficients or evaluation");
  bell->add_option("--n", bell_args.n)->required();
  bell->add_option("--r", bell_args.r_csv, "comma-separated restriction sizes")->required();
  bell->add_flag("--tilde", bell_args.tilde, "use the tilde variant");
  bell->add_option("--at", bell_args.at, "evaluate at a rational p/q");
  bell->add_option("--format", bell_args.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run an identity verification suite");
  verify->add_option("--suite", verify_args.suite)
      ->required()
      ->check(CLI::IsMember(rpbell::suite_names()));
  verify->add_option("--max-n", verify_args.options.max_n);
  verify->add_option("--max-m", verify_args.options.max_m);
  verify->add_option("--max-r", verify_args.options.max_r);
  verify->add_option("--order", verify_args.options.order, "series truncation order");
  verify->add_option("--format", verify_args.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "Brute-force partition count (guarded; RPBELL_ENUM_GUARD overrides)");
  count->add_option("--n", count_args.n)->required();
  count->add_option("--r", count_args.r_csv, "comma-separated restriction sizes")->required();
  count->add_option("--k", count_args.k, "exact block count (default: any)");
  count->add_option("--format", count_args.format)->check(CLI::IsMember({"text", "json"}));

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Certificates for one Bell polynomial");
  analyze->add_option("--what", analyze_args.what)
      ->required()
      ->check(CLI::IsMember({"roots", "logconcave", "maxindex"}));
  analyze->add_option("--n", analyze_args.n)->required();
  analyze->add_option("--r", analyze_args.r_csv, "comma-separated restriction sizes")
      ->required();
  analyze->add_option("--format", analyze_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stirling->parsed()) return run_stirling(stirling_args);
    if (bell->parsed()) return run_bell(bell_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (count->parsed()) return run_count(count_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
