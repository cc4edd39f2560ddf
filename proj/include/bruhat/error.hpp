#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

enum class ErrorKind {
  InvalidCartan,
  InvalidTwist,
  InvalidLattice,
  NotARoot,
  NotPositiveRoot,
  DatumMismatch,
  NotReduced,
  NotADescent,
  NotPReduced,
  NotDownward,
  ParabolicMismatch,
  Unreachable,
  NotNoncompact,
  NotReal,
  NoOpenNode,
  ParseError,
  AxiomViolation,
  Mismatch,
};

std::string_view to_string(ErrorKind kind);

/// One failed axiom or property instance reported by a checker.
///
/// `alpha` is a 0-based simple-root index or -1; `node` is a node id or -1.
struct Violation {
  std::string axiom;
  int alpha = -1;
  int node = -1;
  std::string detail;

  auto operator<=>(const Violation&) const = default;
  bool operator==(const Violation&) const = default;

  /// Single-line rendering; simple-root indices are printed 1-based.
  std::string to_string() const;
};

using Violations = std::vector<Violation>;

/// Sorts and removes duplicates so checker output is order-independent.
void normalize(Violations& v);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  Error(ErrorKind kind, const std::string& what, Violations violations);

  ErrorKind kind() const noexcept { return kind_; }
  const Violations& violations() const noexcept { return violations_; }

 private:
  ErrorKind kind_;
  Violations violations_;
};

}  // namespace bruhat
