#include "refeul/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace refeul {

VerificationReport VerificationReport::pass(std::string name, NRange range, double timing_ms) {
  return {std::move(name), range, std::nullopt, timing_ms};
}

VerificationReport VerificationReport::fail(std::string name, NRange range, nlohmann::json witness,
                                            double timing_ms) {
  if (witness.is_null()) witness = nlohmann::json::object();
  return {std::move(name), range, std::move(witness), timing_ms};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {
      {"check_name", r.check_name()},
      {"n_range", {r.n_range().lo, r.n_range().hi}},
      {"passed", r.passed()},
  };
  if (r.witness()) j["witness"] = *r.witness();
  j["timing_ms"] = r.timing_ms();
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("report must be an object");
  try {
    auto name = j.at("check_name").get<std::string>();
    const auto& range = j.at("n_range");
    if (!range.is_array() || range.size() != 2) throw std::invalid_argument("n_range must be [lo, hi]");
    NRange nr{range[0].get<std::size_t>(), range[1].get<std::size_t>()};
    const bool passed = j.at("passed").get<bool>();
    const double ms = j.value("timing_ms", 0.0);
    const bool has_witness = j.contains("witness");
    if (passed == has_witness) throw std::invalid_argument("witness must be present iff passed is false");
    return passed ? VerificationReport::pass(std::move(name), nr, ms)
                  : VerificationReport::fail(std::move(name), nr, j.at("witness"), ms);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const VerificationReport& r) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1f", r.timing_ms());
  std::string out = std::string(r.passed() ? "PASS " : "FAIL ") + r.check_name() + " n=" +
                    std::to_string(r.n_range().lo) + ".." + std::to_string(r.n_range().hi) + " (" + timing + " ms)";
  if (r.witness()) out += "\n  witness: " + r.witness()->dump();
  return out;
}

}  // namespace refeul
