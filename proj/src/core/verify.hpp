#pragma once

#include <string_view>
#include <vector>

#include "core/report.hpp"
#include "core/tableaux.hpp"

namespace skewtab {

struct VerifyOptions {
  // Largest n swept; <= 0 picks the per-suite default (12 for
  // formula-vs-determinant checks, 9 for enumeration-backed ones, which
  // stay capped at their defaults regardless).
  int max_n = 0;
  unsigned enum_cap = kDefaultEnumCap;
};

// suite is one of: arith, conjugate, prop1, characters, closed-forms, all.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& options = {});

const std::vector<std::string>& suite_names();

}  // namespace skewtab
