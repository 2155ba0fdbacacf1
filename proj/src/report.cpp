#include "rpbell/report.hpp"

#include <sstream>

namespace rpbell {

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::T3a: return "T3a";
    case IdentityId::T3b: return "T3b";
    case IdentityId::C1: return "C1";
    case IdentityId::T4a: return "T4a";
    case IdentityId::T4b: return "T4b";
    case IdentityId::T6a: return "T6a";
    case IdentityId::T6b: return "T6b";
    case IdentityId::T6c: return "T6c";
    case IdentityId::CorT6_1: return "CorT6_1";
    case IdentityId::CorT6_2: return "CorT6_2";
    case IdentityId::CorT6_3: return "CorT6_3";
    case IdentityId::Spivey: return "Spivey";
    case IdentityId::SpiveyR: return "SpiveyR";
    case IdentityId::Carlitz1: return "Carlitz1";
    case IdentityId::Carlitz2: return "Carlitz2";
    case IdentityId::OGF_r: return "OGF_r";
    case IdentityId::OGF_rp: return "OGF_rp";
    case IdentityId::OGF_tilde: return "OGF_tilde";
    case IdentityId::Dobinski: return "Dobinski";
    case IdentityId::Eq2: return "Eq2";
    case IdentityId::Eq8: return "Eq8";
  }
  return "?";
}

std::string VerificationReport::params_str() const {
  std::ostringstream os;
  for (size_t i = 0; i < params.size(); ++i) {
    os << (i ? " " : "") << params[i].first << "=" << params[i].second;
  }
  return os.str();
}

}  // namespace rpbell
