#include "mna/search.hpp"

#include <limits>

#include "mna/assoc.hpp"
#include "mna/errors.hpp"

namespace mna {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::optional<SigmaPair> sample_sigma(const Field& F, std::mt19937_64& rng) {
  if (sigma_size(F.order()) == 0) return std::nullopt;
  const std::uint64_t span = F.order() - 2;
  for (;;) {
    const Elem a{static_cast<std::uint32_t>(2 + bounded_draw(rng, span))};
    const Elem b{static_cast<std::uint32_t>(2 + bounded_draw(rng, span))};
    if (is_sigma_pair(F, a, b)) return SigmaPair{a, b};
  }
}

std::optional<SearchCertificate> search(const Field& F, std::uint64_t seed,
                                        std::uint64_t max_attempts) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const auto pr = sample_sigma(F, rng);
    if (!pr) return std::nullopt;
    if (!is_mna_Bscaled(F, *pr)) continue;
    if (!is_mna_C(F, *pr))
      throw Error("search: Bscaled and C disagree on (" + std::to_string(pr->a.code) + "," +
                  std::to_string(pr->b.code) + ")");
    return SearchCertificate{F.order(), *pr, {"Bscaled", "C"}, seed, attempt};
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const SearchCertificate& c) {
  nlohmann::ordered_json j;
  j["q"] = c.q;
  j["a"] = c.pair.a.code;
  j["b"] = c.pair.b.code;
  j["methods_passed"] = c.methods_passed;
  j["seed"] = c.seed;
  j["attempts"] = c.attempts;
  return j;
}

SearchCertificate load_certificate(const nlohmann::json& j) {
  SearchCertificate c;
  try {
    c.q = j.at("q").get<std::uint32_t>();
    c.pair = {Elem{j.at("a").get<std::uint32_t>()}, Elem{j.at("b").get<std::uint32_t>()}};
    c.methods_passed = j.at("methods_passed").get<std::vector<std::string>>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.attempts = j.at("attempts").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("certificate: ") + e.what());
  }
  const Field F(c.q);
  if (c.pair.a.code >= F.order() || c.pair.b.code >= F.order() || !is_sigma_pair(F, c.pair))
    throw NotInSigma("certificate: pair is not in Sigma");
  if (!is_mna_Bscaled(F, c.pair))
    throw Error("certificate: pair is not maximally nonassociative");
  return c;
}

SearchStats search_statistics(const Field& F, std::uint64_t seed, std::uint64_t samples) {
  SearchStats s{F.order(), seed, 0, 0};
  std::mt19937_64 rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto pr = sample_sigma(F, rng);
    if (!pr) break;
    ++s.samples;
    if (is_mna_Bscaled(F, *pr)) ++s.hits;
  }
  return s;
}

}  // namespace mna
