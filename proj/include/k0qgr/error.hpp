#pragma once

#include <stdexcept>
#include <string>

namespace k0qgr {

enum class Errc {
  // input validation (domain errors)
  NonPositiveDegree,
  GMin,
  PairingBroken,
  GcdNotOne,
  NegativeExponent,
  NotPositive,
  Parse,
  // internal certification failures
  FactorizationAmbiguous,
  CertificationFailed,
  NotPrimitive,
  NoConvergence,
  SearchExhausted,
  MultiplicityNegative,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NonPositiveDegree: return "NonPositiveDegree";
    case Errc::GMin: return "GMin";
    case Errc::PairingBroken: return "PairingBroken";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::NotPositive: return "NotPositive";
    case Errc::Parse: return "Parse";
    case Errc::FactorizationAmbiguous: return "FactorizationAmbiguous";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::MultiplicityNegative: return "MultiplicityNegative";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for failures caused by the caller's input rather than by a broken
  /// internal certificate.
  bool is_domain() const noexcept {
    switch (code_) {
      case Errc::NonPositiveDegree:
      case Errc::GMin:
      case Errc::PairingBroken:
      case Errc::GcdNotOne:
      case Errc::NegativeExponent:
      case Errc::NotPositive:
      case Errc::Parse:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
};

}  // namespace k0qgr
