#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

enum class CheckKind { structure, axiom, property, note };

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::structure: return "structure";
    case CheckKind::axiom: return "axiom";
    case CheckKind::property: return "property";
    case CheckKind::note: return "note";
  }
  return "?";
}

/// One verified condition. A failing check always carries a witness (the
/// first violating tuple in scan order). Advisory checks never gate ok().
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
  std::string detail;
  CheckKind kind = CheckKind::axiom;
  bool exhaustive = true;
  bool advisory = false;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass && !c.advisory) return false;
    return true;
  }
  bool exhaustive() const {
    for (const auto& c : checks)
      if (!c.exhaustive) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass && !c.advisory) return &c;
    return nullptr;
  }

  Check& add(std::string name, CheckKind kind = CheckKind::axiom) {
    checks.push_back(Check{std::move(name), true, "", "", kind, true, false});
    return checks.back();
  }
  /// Convenience: record `cond` under `name`, with `witness` kept on failure.
  Check& check(std::string name, bool cond, std::string witness = "",
               CheckKind kind = CheckKind::axiom) {
    Check& c = add(std::move(name), kind);
    c.pass = cond;
    if (!cond) c.witness = std::move(witness);
    return c;
  }
  void absorb(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
      checks.push_back(c);
      checks.back().name = prefix + c.name;
    }
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or axiomatically invalid input where validity was a precondition.
struct StructureError : Error {
  using Error::Error;
};

/// A configured resource bound was exceeded; never a silent truncation.
struct BudgetError : Error {
  using Error::Error;
};

/// A condition the theory guarantees failed to hold; reaching it is a bug.
struct InconsistencyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

/// Reference to an element/point/object name that was never declared.
struct UndeclaredError : ParseError {
  using ParseError::ParseError;
};

}  // namespace ortho
