#pragma once

// Random search for maximally nonassociative Q_{a,b}.
//
// (a, b) is drawn uniformly from (F_q \ {0, 1})^2 and kept if it lies in
// Sigma (about one draw in four), which is exactly uniform on Sigma. Each
// Sigma sample counts as one attempt and is tested with Bscaled, then
// confirmed with C. The generator is std::mt19937_64 seeded with the user
// seed; bounded draws use rejection on the raw 64-bit output, so the
// sample sequence does not depend on the standard library.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "mna/field.hpp"
#include "mna/quasigroup.hpp"

namespace mna {

/// Uniform integer in [0, n) from raw generator output.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

/// Uniform element of Sigma; nullopt if Sigma is empty.
std::optional<SigmaPair> sample_sigma(const Field& F, std::mt19937_64& rng);

struct SearchCertificate {
  std::uint32_t q = 0;
  SigmaPair pair;
  std::vector<std::string> methods_passed;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
};

/// First MNA pair within max_attempts Sigma samples, or nullopt.
std::optional<SearchCertificate> search(const Field& F, std::uint64_t seed,
                                        std::uint64_t max_attempts);

nlohmann::ordered_json to_json(const SearchCertificate& c);

/// Parses and re-verifies with Bscaled; throws Error if the pair is not
/// in Sigma or is not maximally nonassociative.
SearchCertificate load_certificate(const nlohmann::json& j);

struct SearchStats {
  std::uint32_t q = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double frequency() const { return samples ? static_cast<double>(hits) / samples : 0.0; }
};

/// MNA frequency over a fixed number of Sigma samples (Bscaled decider).
SearchStats search_statistics(const Field& F, std::uint64_t seed, std::uint64_t samples);

}  // namespace mna
