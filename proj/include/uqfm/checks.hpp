#pragma once
/// \file checks.hpp
/// The verification registry: every algebraic invariant the library
/// guarantees appears here as one named check.  Checks are grouped into
/// suites, carry the display label of the equation they verify, and return
/// PASS/FAIL/WARN together with the first nonzero residual entry on failure.
///
/// Every check runs its computation in the exact symbolic model and, where
/// meaningful, repeats it in the exact numeric model at the configured
/// evaluation point and in the finite-dimensional modules selected by
/// `spins`.  WARN is reserved for the two documented fallbacks (rewriting
/// budget exhaustion in the word algebra and in the spectral centrality
/// check); in the shipped configuration neither triggers.

#include <functional>
#include <string>
#include <vector>

#include "uqfm/scalars.hpp"

namespace uqfm {

enum class CheckStatus { PASS, FAIL, WARN };

inline const char* to_cstr(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS: return "PASS";
    case CheckStatus::FAIL: return "FAIL";
    case CheckStatus::WARN: return "WARN";
  }
  return "FAIL";
}

struct CheckOptions {
  std::vector<int> spins{0, 1, 2};  // modules used by module-level checks
  Rat q_half{5, 7};                 // numeric evaluation point for p
};

struct CheckResult {
  CheckStatus status = CheckStatus::PASS;
  std::string residual;  // first nonzero residual entry, rendered
};

struct CheckDef {
  std::string id;           // unique, dot-separated, sorted for output
  std::string anchor;       // display label of the verified statement
  std::string suite;        // one of suite_names() (except "all")
  std::string description;  // one line, includes discrepancy notes
  std::function<CheckResult(const CheckOptions&)> run;
};

struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;
  std::string status;            // PASS | FAIL | WARN
  std::string residual_summary;  // empty unless FAIL/WARN
  long long millis = 0;
};

/// All registered checks, sorted by id (ids are unique).
const std::vector<CheckDef>& all_checks();

/// Valid suite selectors, "all" last.
const std::vector<std::string>& suite_names();

/// Run the checks belonging to the selected suites (deterministic id order).
/// The numeric model evaluates at p = opt.q_half.  `progress` (optional) is
/// invoked after each check; with fail_fast the run stops after the first
/// FAIL.
std::vector<CheckRecord> run_checks(
    const std::vector<std::string>& suites, const CheckOptions& opt,
    bool fail_fast = false,
    const std::function<void(const CheckRecord&)>& progress = {});

}  // namespace uqfm
