#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"

namespace refeul {

struct NRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool operator==(const NRange&) const = default;
};

/// Outcome of one identity check. A witness is present exactly when the
/// check failed.
class VerificationReport {
 public:
  static VerificationReport pass(std::string name, NRange range, double timing_ms = 0.0);
  static VerificationReport fail(std::string name, NRange range, nlohmann::json witness, double timing_ms = 0.0);

  const std::string& check_name() const { return check_name_; }
  NRange n_range() const { return n_range_; }
  bool passed() const { return !witness_.has_value(); }
  const std::optional<nlohmann::json>& witness() const { return witness_; }
  double timing_ms() const { return timing_ms_; }
  void set_timing_ms(double ms) { timing_ms_ = ms; }

 private:
  VerificationReport(std::string name, NRange range, std::optional<nlohmann::json> witness, double ms)
      : check_name_(std::move(name)), n_range_(range), witness_(std::move(witness)), timing_ms_(ms) {}

  std::string check_name_;
  NRange n_range_;
  std::optional<nlohmann::json> witness_;
  double timing_ms_ = 0.0;
};

/// {"check_name", "n_range": [lo, hi], "passed", "witness"?, "timing_ms"}
nlohmann::json to_json(const VerificationReport& r);
/// Throws std::invalid_argument on schema violations, including a witness
/// that disagrees with "passed".
VerificationReport report_from_json(const nlohmann::json& j);

/// "PASS name n=lo..hi (t ms)" plus the witness on failure.
std::string to_text(const VerificationReport& r);

}  // namespace refeul
