#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mna/errors.hpp"
#include "mna/field.hpp"
#include "oracle_fixtures.hpp"

namespace mna {
namespace {

TEST(PrimePowers, FactorAndList) {
  EXPECT_EQ(factor_prime_power(243).p, 3u);
  EXPECT_EQ(factor_prime_power(243).k, 5u);
  EXPECT_EQ(factor_prime_power(12).k, 0u);
  EXPECT_FALSE(is_odd_prime_power(1));
  EXPECT_FALSE(is_odd_prime_power(8));
  EXPECT_TRUE(is_odd_prime_power(3));
  const std::vector<std::uint32_t> want{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29};
  EXPECT_EQ(odd_prime_powers(1, 30), want);
}

TEST(Field, RejectsBadOrders) {
  for (std::uint64_t q : {0, 1, 2, 4, 6, 15, 16, 21, 1024})
    EXPECT_THROW(Field{q}, NotOddPrimePower) << q;
  EXPECT_THROW(Field{1594323}, TooLarge);  // 3^13 > 2^20
}

TEST(Field, ModulusMatchesOracle) {
  for (const auto& row : testing::oracle_rows()) {
    const Field F(row.q);
    const auto m = F.modulus();
    EXPECT_EQ(std::vector<std::uint32_t>(m.begin(), m.end()), row.modulus) << row.q;
  }
}

TEST(Field, CubicModulusIsLeastRootFreeCubic) {
  // A cubic over F_p is irreducible iff it has no root in F_p.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::vector<std::uint32_t> want;
    for (std::uint32_t c0 = 0; c0 < p && want.empty(); ++c0)
      for (std::uint32_t c1 = 0; c1 < p && want.empty(); ++c1)
        for (std::uint32_t c2 = 0; c2 < p && want.empty(); ++c2) {
          bool root = false;
          for (std::uint32_t x = 0; x < p; ++x)
            root = root || (c0 + c1 * x + c2 * x * x + x * x * x) % p == 0;
          if (!root) want = {c0, c1, c2, 1};
        }
    const Field F(p * p * p);
    const auto m = F.modulus();
    EXPECT_EQ(std::vector<std::uint32_t>(m.begin(), m.end()), want) << p;
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, Exhaustive) {
  const Field F(GetParam());
  const std::uint32_t q = F.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    const Elem u{a};
    EXPECT_EQ(F.add(u, F.neg(u)), F.zero());
    EXPECT_EQ(F.mul(u, F.one()), u);
    if (a != 0) {
      EXPECT_EQ(F.mul(u, F.inv(u)), F.one());
    }
    EXPECT_EQ(F.pow(u, q), u);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Elem v{b};
      EXPECT_EQ(F.add(u, v), F.add(v, u));
      EXPECT_EQ(F.mul(u, v), F.mul(v, u));
      EXPECT_EQ(F.chi(F.mul(u, v)), F.chi(u) * F.chi(v));
      EXPECT_EQ(F.add(F.sub(u, v), v), u);
    }
  }
}

TEST_P(FieldAxioms, SampledAssociativityAndDistributivity) {
  const Field F(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int n = 0; n < 2000; ++n) {
    const Elem u{static_cast<std::uint32_t>(rng() % F.order())};
    const Elem v{static_cast<std::uint32_t>(rng() % F.order())};
    const Elem w{static_cast<std::uint32_t>(rng() % F.order())};
    EXPECT_EQ(F.mul(F.mul(u, v), w), F.mul(u, F.mul(v, w)));
    EXPECT_EQ(F.add(F.add(u, v), w), F.add(u, F.add(v, w)));
    EXPECT_EQ(F.mul(u, F.add(v, w)), F.add(F.mul(u, v), F.mul(u, w)));
  }
}

TEST_P(FieldAxioms, CharacterAndSquares) {
  const Field F(GetParam());
  const std::uint32_t q = F.order();
  EXPECT_EQ(F.chi(F.zero()), 0);
  EXPECT_EQ(F.nonzero_squares().size(), (q - 1) / 2);
  EXPECT_EQ(F.chi(F.neg(F.one())), q % 4 == 1 ? 1 : -1);
  EXPECT_EQ(F.chi(F.least_nonsquare()), -1);
  for (std::uint32_t c = 1; c < F.least_nonsquare().code; ++c) EXPECT_EQ(F.chi(Elem{c}), 1);
  std::set<std::uint32_t> seen;
  Elem g = F.one();
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    seen.insert(g.code);
    g = F.mul(g, F.generator());
  }
  EXPECT_EQ(seen.size(), q - 1);
  for (std::uint32_t a = 1; a < q; ++a)
    EXPECT_EQ(F.chi(Elem{a}), F.pow(Elem{a}, (q - 1) / 2) == F.one() ? 1 : -1);
}

TEST_P(FieldAxioms, DigitsAndPrimeSubfield) {
  const Field F(GetParam());
  for (std::uint32_t a = 0; a < F.order(); ++a) {
    const auto d = F.digits(Elem{a});
    EXPECT_EQ(d.size(), F.degree());
    EXPECT_EQ(F.from_digits(d), Elem{a});
  }
  const auto p = static_cast<std::int64_t>(F.characteristic());
  for (std::int64_t n = -2 * p; n < 2 * p; ++n)
    EXPECT_EQ(F.from_int(n).code, static_cast<std::uint32_t>(((n % p) + p) % p));
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms,
                         ::testing::Values(3u, 5u, 7u, 9u, 25u, 27u, 49u, 81u, 121u, 125u));

TEST(Field, InverseOfZeroThrows) {
  const Field F(25);
  EXPECT_THROW(F.inv(F.zero()), DivisionByZero);
  EXPECT_THROW(F.div(F.one(), F.zero()), DivisionByZero);
}

TEST(Field, LargeOrdersConstruct) {
  const Field F(10007);
  EXPECT_EQ(F.nonzero_squares().size(), 5003u);
  const Field G(3 * 3 * 3 * 3 * 3 * 3 * 3);  // 2187
  EXPECT_EQ(G.degree(), 7u);
  const Elem u{1234};
  EXPECT_EQ(G.mul(u, G.inv(u)), G.one());
}

}  // namespace
}  // namespace mna
