// Acceptance suite: every check is exact; one line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rpbell/analysis.hpp"
#include "rpbell/bell.hpp"
#include "rpbell/identities.hpp"
#include "rpbell/oracle.hpp"
#include "rpbell/restriction.hpp"
#include "rpbell/stirling.hpp"

namespace {

using rpbell::ExactInt;
using rpbell::PartitionSpec;
using rpbell::RestrictionVector;
using rpbell::SuiteOptions;

// p <= 3, |r| <= 5 throughout.
const int kMaxTotal = 5;

bool run_reports(const std::vector<rpbell::VerificationReport>& reports, std::string& detail,
                 size_t& checks) {
  checks += reports.size();
  for (const auto& report : reports) {
    if (!report.passed) {
      std::ostringstream os;
      os << rpbell::identity_name(report.id) << " " << report.params_str() << " at "
         << report.first_discrepancy->location << ": lhs=" << report.first_discrepancy->lhs
         << " rhs=" << report.first_discrepancy->rhs;
      detail = os.str();
      return false;
    }
  }
  return true;
}

bool criterion1_oracle_equivalence(std::string& detail, size_t& checks) {
  for (const auto& r : rpbell::restriction_grid(kMaxTotal)) {
    for (int n = r.total(); n <= 10; ++n) {
      auto oracle = rpbell::count_partitions_by_blocks(PartitionSpec::of(n, r));
      for (int k = 0; k <= n; ++k) {
        ExactInt direct = rpbell::rp_stirling2(n, k, r);
        ExactInt reduced = rpbell::rp_stirling2_via_reduction(n, k, r);
        ++checks;
        if (direct != oracle[static_cast<size_t>(k)] || direct != reduced) {
          std::ostringstream os;
          os << "n=" << n << " k=" << k << " r=" << r.str() << ": direct=" << direct.str()
             << " reduction=" << reduced.str()
             << " oracle=" << oracle[static_cast<size_t>(k)].str();
          detail = os.str();
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion2_identity_suites(std::string& detail, size_t& checks) {
  SuiteOptions wide{6, 6, kMaxTotal, 8};
  SuiteOptions scalar{6, 6, 3, 0};
  return run_reports(rpbell::run_suite("t3", wide), detail, checks) &&
         run_reports(rpbell::run_suite("t4", wide), detail, checks) &&
         run_reports(rpbell::run_suite("t6", wide), detail, checks) &&
         run_reports(rpbell::run_suite("cor-t6", wide), detail, checks) &&
         run_reports(rpbell::run_suite("spivey", scalar), detail, checks) &&
         run_reports(rpbell::run_suite("carlitz", scalar), detail, checks);
}

bool criterion3_generating_functions(std::string& detail, size_t& checks) {
  SuiteOptions dobinski{6, 0, kMaxTotal, 0};  // order defaults to deg + 10
  if (!run_reports(rpbell::run_suite("dobinski", dobinski), detail, checks)) return false;
  std::vector<rpbell::VerificationReport> ogf;
  for (int r = 0; r <= kMaxTotal; ++r) {
    for (int k = 0; k <= 3; ++k) ogf.push_back(rpbell::verify_ogf_r(k, r, 12));
  }
  for (const auto& r : rpbell::restriction_grid(kMaxTotal)) {
    for (int k = 0; k <= 3; ++k) ogf.push_back(rpbell::verify_ogf_rp(k, r, 12));
    for (const auto& z :
         {rpbell::ExactRational(0), rpbell::ExactRational(1), rpbell::ExactRational(1, 2),
          rpbell::ExactRational(2), rpbell::ExactRational(-1)}) {
      ogf.push_back(rpbell::verify_ogf_tilde(z, r, 12));
    }
  }
  return run_reports(ogf, detail, checks);
}

bool criterion4_real_negative_roots(std::string& detail, size_t& checks) {
  for (const auto& r : rpbell::restriction_grid(kMaxTotal)) {
    for (int n = 0; n <= 10; ++n) {
      rpbell::RootCertificate cert =
          rpbell::certify_real_negative_roots(rpbell::bell_poly(n, r).poly());
      ++checks;
      if (!cert.all_real_negative) {
        detail = "n=" + std::to_string(n) + " r=" + r.str() + ": " +
                 std::to_string(cert.distinct_real_negative_roots) + " of " +
                 std::to_string(cert.squarefree_degree) + " roots certified negative";
        return false;
      }
    }
  }
  return true;
}

bool criterion5_log_concavity(std::string& detail, size_t& checks) {
  for (const auto& r : rpbell::restriction_grid(kMaxTotal)) {
    for (int n = 0; n <= 10; ++n) {
      const std::vector<ExactInt> row = rpbell::bell_poly(n, r).poly().coeffs();
      ++checks;
      if (!rpbell::check_newton_inequality(row)) {
        detail = "Newton fails at n=" + std::to_string(n) + " r=" + r.str();
        return false;
      }
      if (!rpbell::check_strong_log_concavity(row)) {
        detail = "strict log-concavity fails at n=" + std::to_string(n) + " r=" + r.str();
        return false;
      }
    }
  }
  return true;
}

bool criterion6_darroch(std::string& detail, size_t& checks) {
  int boundary_cases = 0;
  for (const auto& r : rpbell::restriction_grid(kMaxTotal)) {
    for (int n = 0; n <= 12; ++n) {
      rpbell::MaxIndexReport report = rpbell::max_index_report(n, r);
      ++checks;
      if (report.on_boundary) {
        ++boundary_cases;
        std::cerr << "  [note] exact boundary at n=" << n << " r=" << r.str()
                  << " (K=" << report.max_index << ", center=" << report.darroch_center.str()
                  << ")\n";
        continue;
      }
      if (!report.within_one) {
        detail = "violation at n=" + std::to_string(n) + " r=" + r.str() + ": K=" +
                 std::to_string(report.max_index) + " center=" + report.darroch_center.str();
        return false;
      }
    }
  }
  detail = std::to_string(boundary_cases) + " boundary cases";
  return true;
}

bool criterion7_cross_construction(std::string& detail, size_t& checks) {
  for (const auto& r : rpbell::restriction_grid(kMaxTotal)) {
    rpbell::BellPolynomial iterated = rpbell::bell_poly(0, r);
    for (int n = 0; n <= 8; ++n) {
      const rpbell::IntPolynomial direct = rpbell::bell_poly(n, r).poly();
      rpbell::IntPolynomial falling(rpbell::to_falling_basis(rpbell::poly_P(n, r)));
      ++checks;
      if (!(direct == iterated.poly() && direct == falling)) {
        detail = "routes disagree at n=" + std::to_string(n) + " r=" + r.str();
        return false;
      }
      iterated = rpbell::bell_next(iterated);
    }
  }
  return true;
}

bool criterion8_classical_reductions(std::string& detail, size_t& checks) {
  const std::pair<int, long> bell_values[] = {{3, 5}, {5, 52}, {6, 203}};
  for (auto [n, expected] : bell_values) {
    ++checks;
    ExactInt counted = rpbell::count_partitions(PartitionSpec{n, {}, std::nullopt});
    if (counted != ExactInt(expected)) {
      detail = "Bell(" + std::to_string(n) + ") = " + counted.str();
      return false;
    }
    // r = (1) reproduces the classical values: B_{n-1}(1; (1)) = Bell(n).
    if (rpbell::bell_poly(n - 1, RestrictionVector{1}).value_at_one() != ExactInt(expected)) {
      detail = "bell_poly reduction at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      ++checks;
      ExactInt classical = rpbell::stirling2(n, k);
      if (rpbell::r_stirling2(n, k, 0) != classical ||
          (n >= 1 && rpbell::r_stirling2(n, k, 1) != classical) ||
          (n >= 1 && rpbell::rp_stirling2(n, k, RestrictionVector{1}) != classical)) {
        detail = "r in {0,1} reduction fails at n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::string&, size_t&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence of both algorithms (n <= 10, |r| <= 5)",
       criterion1_oracle_equivalence},
      {2, "identity suites T3/T4/T6/corollary/Spivey/Carlitz (n, m <= 6)",
       criterion2_identity_suites},
      {3, "generating functions: Dobinski and all three OGFs", criterion3_generating_functions},
      {4, "real negative roots certified by Sturm chains (n <= 10)",
       criterion4_real_negative_roots},
      {5, "Newton inequality and strict log-concavity of all rows", criterion5_log_concavity},
      {6, "Darroch maximizing-index bound (n <= 12)", criterion6_darroch},
      {7, "cross-construction agreement of the three Bell routes (n <= 8)",
       criterion7_cross_construction},
      {8, "classical reductions at r in {0, 1}", criterion8_classical_reductions},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    size_t checks = 0;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail, checks);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.name << " (" << checks << " checks, " << ms << " ms";
    if (!detail.empty()) std::cout << "; " << detail;
    std::cout << ")" << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
