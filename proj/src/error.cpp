#include "bruhat/error.hpp"

#include <algorithm>
#include <sstream>

namespace bruhat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCartan: return "InvalidCartan";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotPositiveRoot: return "NotPositiveRoot";
    case ErrorKind::DatumMismatch: return "DatumMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotADescent: return "NotADescent";
    case ErrorKind::NotPReduced: return "NotPReduced";
    case ErrorKind::NotDownward: return "NotDownward";
    case ErrorKind::ParabolicMismatch: return "ParabolicMismatch";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::NotNoncompact: return "NotNoncompact";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::NoOpenNode: return "NoOpenNode";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom;
  if (alpha >= 0) os << " alpha=" << alpha + 1;
  if (node >= 0) os << " node=" << node;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

void normalize(Violations& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& what, Violations violations)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      violations_(std::move(violations)) {}

}  // namespace bruhat
