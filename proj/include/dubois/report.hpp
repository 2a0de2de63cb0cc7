#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dubois/birational.hpp"
#include "dubois/frobenius.hpp"
#include "dubois/gsnc.hpp"
#include "dubois/polynomial.hpp"

namespace dubois::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct BatteryOptions {
  std::size_t n = 5;
  std::vector<std::uint64_t> primes;
  /// Empty means every generic-projection case.
  std::vector<std::string> cases;
  /// Sheet count for case 0; defaults to n + 1.
  std::optional<std::size_t> case0_sheets;
  std::uint64_t floor = 0;
  unsigned workers = 0;
};

struct BatteryRow {
  std::string label;
  std::string citation;
  /// Set when the case was not run (n below its minimum).
  std::optional<std::string> skipped;

  std::string polynomial;
  std::vector<std::string> factors;
  /// Per prime, the AND over factors.
  std::vector<FedderVerdict> verdicts;
  ScanConclusion conclusion;
  std::uint64_t multiplicity_at_origin = 0;
  SlcObstruction obstruction;
  std::string du_bois_evidence;
  bool du_bois_yes = false;
  gsnc::SlcEvidence slc_evidence = gsnc::SlcEvidence::Unknown;
};

struct BatterySummary {
  std::size_t cases_run = 0;
  std::size_t cases_skipped = 0;
  bool all_pass = true;
  std::size_t not_slc = 0;
  std::size_t du_bois_yes = 0;
  std::size_t slc_yes = 0;
  std::vector<std::pair<std::string, std::uint64_t>> failures;  // (case, prime)
};

struct BatteryReport {
  BatteryOptions options;
  std::vector<BatteryRow> rows;  // in catalog order
  BatterySummary summary;
};

/// Runs the Fedder scan (factor by factor over the disjoint-variable split),
/// the multiplicity at the origin, the slc obstruction and the evidence
/// combinators for each requested case. (case, factor, prime) cells run
/// concurrently; assembly order is fixed.
BatteryReport run_battery(const BatteryOptions& options);

Json to_json(const BatteryReport& report);
std::string to_text(const BatteryReport& report);

struct FedderInput {
  std::string poly_text;
  std::vector<std::string> variables;
  std::string prime_spec;
};

Json to_json(const FedderScanReport& report, const FedderInput& input, const ScanOptions& options);
std::string to_text(const FedderScanReport& report, const std::vector<std::string>& variables);

Json to_json(const MultiplicityReport& report, const std::string& poly_text,
             const std::vector<std::string>& variables);
Json to_json(const SlcObstruction& obstruction, const Point& point, const std::string& poly_text,
             const std::vector<std::string>& variables);

std::string to_string(SlcVerdict verdict);
std::string to_string(const Rational& q);
std::string point_to_string(const Point& point);

/// Canonical byte form: two-space indent plus trailing newline.
std::string dump(const Json& j);

}  // namespace dubois::report
