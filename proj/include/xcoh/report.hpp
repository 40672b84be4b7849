#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xcoh {

using Elem = std::uint32_t;
inline constexpr Elem kNone = ~Elem{0};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string detail;
};

// Validators never throw; they collect violations up to a cap.
struct ValidationReport {
  std::string subject;
  std::vector<Violation> violations;
  std::size_t checked = 0;
  std::size_t cap = 16;
  std::size_t total_failures = 0;

  bool ok() const { return total_failures == 0; }

  void fail(std::string axiom, std::vector<Elem> witness, std::string detail = {}) {
    ++total_failures;
    if (violations.size() < cap)
      violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

  // Record one check; returns cond so it can be used inline.
  bool expect(bool cond, const char* axiom, std::vector<Elem> witness = {}) {
    ++checked;
    if (!cond) fail(axiom, std::move(witness));
    return cond;
  }

  void merge(const ValidationReport& o) {
    checked += o.checked;
    for (const auto& v : o.violations) {
      ++total_failures;
      if (violations.size() < cap) violations.push_back(v);
    }
    total_failures += o.total_failures - o.violations.size();
  }

  std::string summary() const {
    std::string s = subject + ": " + (ok() ? "ok" : "FAILED") + " (" +
                    std::to_string(checked) + " checks, " + std::to_string(total_failures) +
                    " failures)";
    for (const auto& v : violations) {
      s += "\n  " + v.axiom + " [";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        s += (i ? "," : "") + std::to_string(v.witness[i]);
      s += "]";
      if (!v.detail.empty()) s += " " + v.detail;
    }
    return s;
  }
};

struct InvalidGroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NormalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xcoh
