#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mna/errors.hpp"
#include "mna/weil.hpp"

namespace mna {
namespace {

Poly ints(const Field& F, std::initializer_list<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(F.from_int(x));
  return Poly(std::move(v));
}

TEST(SquareFree, Witnesses) {
  const Field F(7);
  const Poly x = ints(F, {0, 1}), xm1 = ints(F, {-1, 1});
  EXPECT_TRUE(is_squarefree_list(F, {x, xm1}).square_free);

  auto r = is_squarefree_list(F, {x, xm1, poly::mul(F, x, xm1)});
  EXPECT_FALSE(r.square_free);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 1, 2}));

  r = is_squarefree_list(F, {xm1, poly::mul(F, x, x)});
  EXPECT_FALSE(r.square_free);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{1}));

  r = is_squarefree_list(F, {x, ints(F, {3})});  // a constant is a square over the closure
  EXPECT_FALSE(r.square_free);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{1}));

  // x^2 + 1 is irreducible over F_7 but a product with itself is a square.
  const Poly q = ints(F, {1, 0, 1});
  r = is_squarefree_list(F, {q, poly::scale(F, q, Elem{3})});
  EXPECT_FALSE(r.square_free);

  EXPECT_THROW(is_squarefree_list(F, {x, Poly{}}), ZeroPolynomial);
}

TEST(SquareFree, InvariantUnderPermutationAndSquareScaling) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {5u, 9u, 13u}) {
    const Field F(q);
    for (int n = 0; n < 200; ++n) {
      std::vector<Poly> list;
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) {
        std::vector<Elem> c(1 + 1 + rng() % 2);
        for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % q)};
        c.back() = F.one();
        list.emplace_back(std::move(c));
      }
      const bool base = is_squarefree_list(F, list).square_free;
      auto perm = list;
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(is_squarefree_list(F, perm).square_free, base);
      const Elem s = F.nonzero_squares()[rng() % F.nonzero_squares().size()];
      auto scaled = list;
      scaled[0] = poly::scale(F, scaled[0], s);
      EXPECT_EQ(is_squarefree_list(F, scaled).square_free, base);
    }
  }
}

TEST(SignPattern, CountsAndBound) {
  const Field F(7);
  EXPECT_EQ(count_sign_pattern(F, {{ints(F, {0, 1}), 1}}), 3u);
  EXPECT_EQ(count_sign_pattern(F, {{ints(F, {0, 1}), -1}}), 3u);
  // Squares mod 7 are {1, 2, 4}; only x = 2 has x and x - 1 both square.
  EXPECT_EQ(count_sign_pattern(F, {{ints(F, {0, 1}), 1}, {ints(F, {-1, 1}), 1}}), 1u);
  const auto chk = check_sign_pattern(F, {{ints(F, {0, 1}), 1}, {ints(F, {-1, 1}), 1}});
  EXPECT_TRUE(chk.square_free);
  EXPECT_DOUBLE_EQ(chk.expected, 7.0 / 4);
  EXPECT_DOUBLE_EQ(chk.radius, (std::sqrt(7.0) + 1));
  EXPECT_TRUE(chk.within_bound);
}

TEST(Admissibility, SpecialValuesFail) {
  const Field F(101);
  for (std::int64_t c : {-1, 0, 1, 2}) {
    const auto a = check_admissible(F, F.from_int(c));
    EXPECT_FALSE(a.admissible);
    EXPECT_EQ(a.failed.front(), Condition::SpecialValues);
  }
  EXPECT_FALSE(check_admissible(F, F.inv(F.from_int(2))).admissible);
  // 10^2 = -1 mod 101
  const auto i = check_admissible(F, Elem{10});
  EXPECT_NE(std::find(i.failed.begin(), i.failed.end(), Condition::MinusOneRoot), i.failed.end());
  const auto t = check_admissible(F, F.div(F.from_int(2), F.from_int(3)));
  EXPECT_NE(std::find(t.failed.begin(), t.failed.end(), Condition::ThirdsValues), t.failed.end());
}

TEST(Admissibility, ThirdsSkippedInCharacteristicThree) {
  const Field F(243);
  for (std::uint32_t c = 0; c < F.order(); ++c) {
    const auto a = check_admissible(F, Elem{c});
    EXPECT_EQ(std::count(a.failed.begin(), a.failed.end(), Condition::ThirdsValues), 0);
  }
}

TEST(Admissibility, ConditionNamesAreDistinct) {
  std::vector<std::string_view> names;
  for (std::size_t i = 0; i < kConditionCount; ++i)
    names.push_back(condition_name(static_cast<Condition>(i)));
  std::sort(names.begin(), names.end());
  EXPECT_EQ(std::unique(names.begin(), names.end()), names.end());
}

TEST(SliceLists, ShapeAndRootSet) {
  const Field F(101);
  const Elem c{7};
  const auto polys = slice_polys(F, c);
  ASSERT_EQ(polys.size(), 15u);
  int total = 0;
  for (const auto& p : polys) total += p.degree();
  EXPECT_EQ(total, 21);  // 7 linear, g1 g3 f1..f4 quadratic, g2 g4 linear
  EXPECT_EQ(polys[8], ints(F, {49 - 14, 1}));        // g2(x, 7) = x + 35
  EXPECT_EQ(polys[13], ints(F, {-49, 56, -1}));      // f3(x, 7)
  ASSERT_TRUE(check_admissible(F, c).admissible);
  EXPECT_EQ(root_set(F, c).size(), 7u);
}

TEST(SliceLists, SquareFreeAtAdmissibleParameters) {
  for (std::uint32_t q : {23u, 27u, 49u, 61u, 81u, 97u}) {
    const Field F(q);
    const auto rep = verify_slice_lists(F);
    EXPECT_TRUE(rep.ok()) << q;
    EXPECT_GT(rep.admissible, 0u) << q;
    if (q % 4 == 3) {
      EXPECT_EQ(rep.square_pairs, (q - 3) / 4) << q;
    }
  }
}

TEST(SliceLists, SerialAndParallelAgree) {
  const Field F(125);
  const auto a = verify_slice_lists(F, 1), b = verify_slice_lists(F, 3);
  EXPECT_EQ(a.admissible, b.admissible);
  EXPECT_EQ(a.squares_inadmissible, b.squares_inadmissible);
  EXPECT_EQ(a.three_quadratic_only.size(), b.three_quadratic_only.size());
}

}  // namespace
}  // namespace mna
