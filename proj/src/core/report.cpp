#include "core/report.hpp"

#include <json.hpp>

namespace skewtab {

void VerificationReport::record(const std::string& identity, const std::string& input,
                                const Int& lhs, const Int& rhs) {
  ++cases_run_;
  if (lhs != rhs)
    add_failure({identity, input, to_string(lhs), to_string(rhs)});
}

void VerificationReport::record(const std::string& identity, const std::string& input,
                                const Rat& lhs, const Rat& rhs) {
  ++cases_run_;
  if (lhs != rhs)
    add_failure({identity, input, to_string(lhs), to_string(rhs)});
}

void VerificationReport::require(const std::string& identity, const std::string& input,
                                 bool ok, const std::string& detail) {
  ++cases_run_;
  if (!ok) add_failure({identity, input, detail.empty() ? "unsatisfied" : detail, "required"});
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_run_ += other.cases_run_;
  failures_total_ += other.failures_total_;
  for (const auto& f : other.failures_) {
    if (failures_.size() >= kMaxRecordedFailures) break;
    failures_.push_back(f);
  }
  elapsed_ms_ += other.elapsed_ms_;
}

void VerificationReport::add_failure(VerificationFailure f) {
  ++failures_total_;
  if (failures_.size() < kMaxRecordedFailures) failures_.push_back(std::move(f));
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["cases_run"] = cases_run_;
  j["failures_total"] = failures_total_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : failures_) {
    arr.push_back({{"identity", f.identity},
                   {"input", f.input},
                   {"lhs", f.lhs},
                   {"rhs", f.rhs}});
  }
  j["failures"] = arr;
  j["elapsed_ms"] = elapsed_ms_;
  return j.dump(indent);
}

}  // namespace skewtab
