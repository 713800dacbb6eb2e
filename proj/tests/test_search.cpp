#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "mna/assoc.hpp"
#include "mna/errors.hpp"
#include "mna/search.hpp"

namespace mna {
namespace {

TEST(Search, BoundedDrawStaysInRange) {
  std::mt19937_64 rng(1);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto x = bounded_draw(rng, 7);
    ASSERT_LT(x, 7u);
    ++hist[x];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(bounded_draw(rng, 1), 0u);
}

TEST(Search, SamplesLieInSigmaAndAreUniform) {
  const Field F(13);
  std::mt19937_64 rng(42);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> hist;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const auto pr = sample_sigma(F, rng);
    ASSERT_TRUE(pr.has_value());
    ASSERT_TRUE(is_sigma_pair(F, *pr));
    ++hist[{pr->a.code, pr->b.code}];
  }
  ASSERT_EQ(hist.size(), 20u);
  // Chi-square with 19 degrees of freedom; 43.8 is the 0.999 quantile.
  double chi2 = 0;
  for (const auto& [k, c] : hist) chi2 += (c - n / 20.0) * (c - n / 20.0) / (n / 20.0);
  EXPECT_LT(chi2, 43.8);
}

TEST(Search, EmptySigmaGivesNothing) {
  const Field F(5);
  std::mt19937_64 rng(1);
  EXPECT_FALSE(sample_sigma(F, rng).has_value());
  EXPECT_FALSE(search(F, 1, 100).has_value());
}

TEST(Search, DeterministicForASeed) {
  const Field F(29);
  const auto a = search(F, 7, 1000), b = search(F, 7, 1000);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->pair, b->pair);
  EXPECT_EQ(a->attempts, b->attempts);
  EXPECT_TRUE(is_mna_C(F, a->pair));
  EXPECT_EQ(a->methods_passed, (std::vector<std::string>{"Bscaled", "C"}));
}

TEST(Search, ExhaustsWhenNoPairExists) {
  EXPECT_FALSE(search(Field(11), 3, 200).has_value());
}

TEST(Search, CertificateRoundTrip) {
  const Field F(13);
  const auto c = search(F, 5, 1000);
  ASSERT_TRUE(c.has_value());
  const auto j = nlohmann::json::parse(to_json(*c).dump());
  const auto back = load_certificate(j);
  EXPECT_EQ(back.q, 13u);
  EXPECT_EQ(back.pair, c->pair);
  EXPECT_EQ(back.seed, 5u);
  EXPECT_EQ(back.attempts, c->attempts);
}

TEST(Search, LoadRejectsBadCertificates) {
  nlohmann::json j = {{"q", 13}, {"a", 2}, {"b", 11}, {"methods_passed", {"Bscaled", "C"}},
                      {"seed", 1}, {"attempts", 1}};
  ASSERT_TRUE(is_sigma_pair(Field(13), Elem{2}, Elem{11}));
  EXPECT_THROW(load_certificate(j), Error);
  j["b"] = 3;  // chi(2 * 3) = -1 mod 13
  EXPECT_THROW(load_certificate(j), NotInSigma);
  j["b"] = 40;
  EXPECT_THROW(load_certificate(j), NotInSigma);
  j.erase("seed");
  EXPECT_THROW(load_certificate(j), Error);
}

TEST(Search, StatisticsTrackTheMnaFraction) {
  const Field F(61);
  const auto s = search_statistics(F, 9, 4000);
  EXPECT_EQ(s.samples, 4000u);
  const double p = static_cast<double>(sigma_count(F, Method::C)) / sigma_size(61);
  EXPECT_NEAR(s.frequency(), p, 4 * std::sqrt(p * (1 - p) / 4000));
}

}  // namespace
}  // namespace mna
