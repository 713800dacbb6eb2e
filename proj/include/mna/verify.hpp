#pragma once

// Invariant suites over every odd prime power up to a bound.
//
//   bijection   |Sigma| formula, Psi and Phi mutually inverse
//   symmetry    isomorphism/opposite identities, solution transports,
//               class symmetries on Sigma and on S
//   methods     A, B, Bscaled, C, D agree; frozen sigma values
//   charset     character tables against the full scan
//   weil        the character-sum bound on seeded random square-free lists
//   thm31       slice lists square-free at admissible c, root set, counts
//   slices      per-slice bounds at admissible c
//   partitions  the parts of T and their symmetries

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mna {

struct CheckResult {
  std::string name;
  std::uint32_t q = 0;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint32_t qmax = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failures() const;
};

const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

/// sigma(q) computed once by a triple scan and frozen.
const std::vector<std::pair<std::uint32_t, std::uint64_t>>& frozen_sigma();

/// Throws Error for an unknown suite name.
SuiteResult run_suite(std::string_view name, std::uint32_t qmax, int jobs = 0,
                      std::uint64_t seed = 1);

nlohmann::ordered_json to_json(const CheckResult& c);
nlohmann::ordered_json to_json(const SuiteResult& s);

}  // namespace mna
