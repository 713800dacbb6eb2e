#pragma once

// sigma(q) reports: density sigma/q^2 against its limit, and the slack in
// the global inequality
//
//   q = 3 (mod 4):  |sigma - 825/65536 q^2| < 138 q^(3/2) + 235 q
//   q = 1 (mod 4):  |sigma - 953/32768 q^2| < 2518 q^(3/2) + 2623 q
//
// JSON and CSV renderings share one number formatter, so shared fields
// carry identical text.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mna/assoc.hpp"
#include "mna/field.hpp"

namespace mna {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// 953/32768 for q = 1 (mod 4), 825/65536 for q = 3 (mod 4).
Rational density_limit(std::uint64_t q);

/// The limit rounded to 6 significant digits.
double limit_display(Rational r);

/// Right-hand side of the global inequality.
double global_bound(std::uint64_t q);

struct SigmaReport {
  std::uint32_t q = 0;
  int mod4 = 0;
  std::uint64_t sigma_set_size = 0;
  std::uint64_t sigma = 0;
  std::string sigma_count_method;
  double density = 0;
  double limit = 0;
  double abs_gap = 0;      // |density - limit|, from the exact limit
  double bound_slack = 0;  // global_bound - |sigma - limit q^2|
  double seconds = 0;      // wall time; zeroed for byte-stable output
  std::optional<std::uint64_t> seed;
  /// Set when the row could not be computed; numeric fields are then unset.
  std::optional<std::string> error;
};

/// Fills every derived field from (q, sigma, method).
SigmaReport make_sigma_report(std::uint32_t q, std::uint64_t sigma, Method m, double seconds);

/// Counts sigma(q) with method m (D uses the character tables) and times it.
SigmaReport count_sigma(const Field& F, Method m, int jobs = 0);

/// Shortest round-trip rendering used by both JSON and CSV.
std::string format_number(double x);

nlohmann::ordered_json to_json(const SigmaReport& r);

/// q,mod4,sigma,sigma_count_method,density,limit,abs_gap,bound_slack,seconds
std::string csv_header();
std::string to_csv_row(const SigmaReport& r);

/// One row per q, sorted by q; errors are recorded in-row.
std::vector<SigmaReport> density_table(std::vector<std::uint64_t> qs, Method m = Method::D,
                                       int jobs = 0);

}  // namespace mna
