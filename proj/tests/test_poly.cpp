#include <gtest/gtest.h>

#include <random>

#include "mna/errors.hpp"
#include "mna/poly.hpp"

namespace mna {
namespace {

Poly ints(const Field& F, std::initializer_list<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(F.from_int(x));
  return Poly(std::move(v));
}

Poly random_poly(const Field& F, int degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.order())};
  c.back() = Elem{static_cast<std::uint32_t>(1 + rng() % (F.order() - 1))};
  return Poly(std::move(c));
}

TEST(Poly, TrimAndDegree) {
  const Field F(7);
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ(ints(F, {1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(ints(F, {0, 7}).is_zero());
  EXPECT_TRUE(ints(F, {8}).is_one());
}

TEST(Poly, DivisionIdentity) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {5u, 9u, 27u}) {
    const Field F(q);
    for (int n = 0; n < 200; ++n) {
      const Poly a = random_poly(F, static_cast<int>(rng() % 9), rng);
      const Poly b = random_poly(F, static_cast<int>(rng() % 5), rng);
      const auto [quo, rem] = poly::divmod(F, a, b);
      EXPECT_LT(rem.degree(), b.degree());
      EXPECT_EQ(poly::add(F, poly::mul(F, quo, b), rem), a);
    }
  }
  const Field F(5);
  EXPECT_THROW(poly::divmod(F, ints(F, {1, 1}), Poly{}), DivisionByZero);
}

TEST(Poly, GcdAndDerivative) {
  const Field F(7);
  // (x - 1)(x - 2) and (x - 1)(x - 3)
  const Poly a = poly::mul(F, ints(F, {-1, 1}), ints(F, {-2, 1}));
  const Poly b = poly::mul(F, ints(F, {-1, 1}), ints(F, {-3, 1}));
  EXPECT_EQ(poly::gcd(F, a, b), ints(F, {-1, 1}));
  EXPECT_EQ(poly::derivative(F, ints(F, {3, 2, 5, 1})), ints(F, {2, 10, 3}));
  // x^7 has zero derivative in characteristic 7.
  EXPECT_TRUE(poly::derivative(F, ints(F, {0, 0, 0, 0, 0, 0, 0, 1})).is_zero());
  EXPECT_EQ(poly::eval(F, ints(F, {1, 1, 1}), Elem{2}), Elem{0});
}

TEST(Factorize, KnownCases) {
  const Field F3(3);
  const auto f = factorize(F3, ints(F3, {1, 0, 1}));  // x^2 + 1 irreducible over F_3
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].multiplicity, 1u);
  EXPECT_TRUE(is_irreducible(F3, ints(F3, {1, 0, 1})));

  const Field F5(5);
  const auto g = factorize(F5, ints(F5, {1, 0, 1}));  // (x - 2)(x - 3)
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].poly, ints(F5, {-3, 1}));
  EXPECT_EQ(g.factors[1].poly, ints(F5, {-2, 1}));

  // x^5 - x splits into the five linear factors.
  const auto h = factorize(F5, ints(F5, {0, -1, 0, 0, 0, 1}));
  EXPECT_EQ(h.factors.size(), 5u);

  // (x + 1)^5 = x^5 + 1 in characteristic 5.
  const auto k = factorize(F5, ints(F5, {1, 0, 0, 0, 0, 1}));
  ASSERT_EQ(k.factors.size(), 1u);
  EXPECT_EQ(k.factors[0].multiplicity, 5u);

  // Scalar: 3 (x - 1)^2 (x^2 + 2), x^2 + 2 irreducible mod 5.
  const Poly p = poly::scale(
      F5, poly::mul(F5, poly::mul(F5, ints(F5, {-1, 1}), ints(F5, {-1, 1})), ints(F5, {2, 0, 1})),
      Elem{3});
  const auto pf = factorize(F5, p);
  EXPECT_EQ(pf.unit, Elem{3});
  ASSERT_EQ(pf.factors.size(), 2u);
  EXPECT_EQ(pf.factors[0].multiplicity, 2u);
  EXPECT_EQ(pf.factors[1].poly, ints(F5, {2, 0, 1}));

  EXPECT_THROW(factorize(F5, Poly{}), ZeroPolynomial);
  EXPECT_TRUE(factorize(F5, ints(F5, {4})).factors.empty());
}

TEST(Factorize, RoundTripOnRandomInputs) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 25u, 27u, 31u}) {
    const Field F(q);
    std::mt19937_64 rng(q);
    for (int n = 0; n < 500; ++n) {
      // Products of small random factors exercise repeated factors.
      Poly p = random_poly(F, static_cast<int>(rng() % 4), rng);
      const int extra = static_cast<int>(rng() % 3);
      for (int i = 0; i < extra; ++i) p = poly::mul(F, p, random_poly(F, 1 + static_cast<int>(rng() % 3), rng));
      const auto fac = factorize(F, p);
      ASSERT_EQ(expand(F, fac), p) << q;
      for (const auto& f : fac.factors) {
        EXPECT_EQ(f.poly.lead(), F.one());
        EXPECT_TRUE(is_irreducible(F, f.poly)) << q;
      }
    }
  }
}

TEST(Factorize, DeterministicAcrossCalls) {
  const Field F(49);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    const Poly p = random_poly(F, 6, rng);
    const auto a = factorize(F, p), b = factorize(F, p);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].poly, b.factors[i].poly);
  }
}

TEST(Irreducible, CountsMatchNecklaceFormula) {
  // Monic irreducible quadratics over F_q: (q^2 - q) / 2.
  for (std::uint32_t q : {3u, 5u, 9u}) {
    const Field F(q);
    std::uint32_t n = 0;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        if (is_irreducible(F, Poly{Elem{a}, Elem{b}, F.one()})) ++n;
    EXPECT_EQ(n, (q * q - q) / 2) << q;
  }
}

}  // namespace
}  // namespace mna
