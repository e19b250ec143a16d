#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/exact.hpp"

namespace skewtab {

struct VerificationFailure {
  std::string identity;
  std::string input;
  std::string lhs;
  std::string rhs;
};

// Pass/fail record for identities checked over a parameter grid. At most
// kMaxRecordedFailures witnesses are kept; failures_total counts them all,
// so passed() is exact regardless of truncation.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxRecordedFailures = 50;

  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void record(const std::string& identity, const std::string& input,
              const Int& lhs, const Int& rhs);
  void record(const std::string& identity, const std::string& input,
              const Rat& lhs, const Rat& rhs);
  // For existence-style checks where there is no lhs/rhs pair.
  void require(const std::string& identity, const std::string& input, bool ok,
               const std::string& detail = "");
  void merge(const VerificationReport& other);

  bool passed() const { return failures_total_ == 0; }
  long cases_run() const { return cases_run_; }
  long failures_total() const { return failures_total_; }
  const std::vector<VerificationFailure>& failures() const { return failures_; }
  const std::string& suite() const { return suite_; }
  long elapsed_ms() const { return elapsed_ms_; }
  void set_elapsed_ms(long ms) { elapsed_ms_ = ms; }

  std::string to_json(int indent = 2) const;

 private:
  void add_failure(VerificationFailure f);

  std::string suite_;
  long cases_run_ = 0;
  long failures_total_ = 0;
  std::vector<VerificationFailure> failures_;
  long elapsed_ms_ = 0;
};

}  // namespace skewtab
