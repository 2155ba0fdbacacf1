#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rpbell {

enum class IdentityId {
  T3a,
  T3b,
  C1,
  T4a,
  T4b,
  T6a,
  T6b,
  T6c,
  CorT6_1,
  CorT6_2,
  CorT6_3,
  Spivey,
  SpiveyR,
  Carlitz1,
  Carlitz2,
  OGF_r,
  OGF_rp,
  OGF_tilde,
  Dobinski,
  Eq2,
  Eq8,
};

const char* identity_name(IdentityId id);

struct Discrepancy {
  std::string location;  // e.g. "z^3", "t^5", "value"
  std::string lhs;
  std::string rhs;
};

// Outcome of one identity check at one parameter point. passed is true
// exactly when no discrepancy was found.
struct VerificationReport {
  IdentityId id;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = false;
  std::optional<Discrepancy> first_discrepancy;

  std::string params_str() const;  // "n=1 m=2 r=(2,2)"
};

}  // namespace rpbell
