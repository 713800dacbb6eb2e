#include "mna/weil.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include <omp.h>

#include "mna/errors.hpp"

namespace mna {
namespace {

// Growable GF(2) vector.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) {
    if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
    w_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void flip(std::size_t i) {
    if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
    w_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }
  bool test(std::size_t i) const {
    return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1);
  }
  void operator^=(const Bits& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size() * 64; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Integer-coefficient polynomial (constant first) evaluated at c.
Elem eval_int(const Field& F, std::initializer_list<std::int64_t> coeffs, Elem c) {
  Elem acc{};
  for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it)
    acc = F.add(F.mul(acc, c), F.from_int(*it));
  return acc;
}

bool any_root(const Field& F, std::initializer_list<std::initializer_list<std::int64_t>> polys,
              Elem c) {
  for (const auto& p : polys)
    if (eval_int(F, p, c).code == 0) return true;
  return false;
}

// c equals num/den for one of the listed fractions.
bool equals_fraction(const Field& F, Elem c,
                     std::initializer_list<std::pair<std::int64_t, std::int64_t>> fracs) {
  for (auto [num, den] : fracs) {
    const Elem d = F.from_int(den);
    if (d.code == 0) continue;
    if (c == F.div(F.from_int(num), d)) return true;
  }
  return false;
}

bool fails(const Field& F, Elem c, Condition cond) {
  switch (cond) {
    case Condition::SpecialValues:
      return equals_fraction(F, c, {{-1, 1}, {0, 1}, {1, 1}, {1, 2}, {2, 1}});
    case Condition::UnitQuadratics:
      return any_root(F, {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}}, c);
    case Condition::ThreeQuadratic:
      return any_root(F, {{1, -3, 1}}, c);
    case Condition::ThirdsValues:
      if (F.characteristic() == 3) return false;
      return equals_fraction(
          F, c, {{-1, 3}, {-3, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}, {4, 3}, {3, 4}});
    case Condition::ThreeThreeQuadratics:
      return any_root(F, {{3, -3, 1}, {1, -3, 3}}, c);
    case Condition::CubicsA:
      return any_root(F, {{-1, 0, 1, 1}, {-1, -1, 0, 1}}, c);
    case Condition::MinusOneRoot:
      return any_root(F, {{1, 0, 1}}, c);
    case Condition::TwoTwoQuadratics:
      return any_root(F, {{2, -2, 1}, {1, -2, 2}}, c);
    case Condition::CubicsB:
      return any_root(F, {{-1, 2, -1, 1}, {-1, 1, -2, 1}}, c);
    case Condition::CubicsC:
      return any_root(F, {{-1, 3, -2, 1}, {-1, 2, -3, 1}}, c);
  }
  return false;
}

struct SliceTally {
  std::uint64_t admissible = 0, not_square_free = 0, root_set_wrong_size = 0;
  std::uint64_t double_roots = 0, root_set_hits = 0, shared_f_roots = 0;
  std::uint64_t square_pairs = 0, square_pairs_inadmissible = 0;
  std::uint64_t squares = 0, squares_inadmissible = 0;
};

// Positions in slice_polys().
constexpr std::size_t kG1 = 7, kG3 = 9, kF1 = 11;

void examine_slice(const Field& F, Elem c, SliceTally& t,
                   std::vector<std::pair<Elem, bool>>& three_only) {
  const Elem one = F.one();
  const auto adm = check_admissible(F, c);
  const bool c_square = F.chi(c) == 1 && c != one;
  if (c_square) {
    ++t.squares;
    if (!adm.admissible) ++t.squares_inadmissible;
  }
  if (F.chi(c) == 1 && F.chi(F.sub(one, c)) == 1) {
    ++t.square_pairs;
    if (!adm.admissible) ++t.square_pairs_inadmissible;
  }
  if (!adm.admissible) {
    if (adm.failed.size() == 1 && adm.failed[0] == Condition::ThreeQuadratic)
      three_only.emplace_back(c, is_squarefree_list(F, slice_polys(F, c)).square_free);
    return;
  }
  ++t.admissible;
  const auto polys = slice_polys(F, c);
  if (!is_squarefree_list(F, polys).square_free) ++t.not_square_free;
  const auto roots = root_set(F, c);
  if (roots.size() != 7) ++t.root_set_wrong_size;

  const std::array<std::size_t, 6> checked{kG1, kG3, kF1, kF1 + 1, kF1 + 2, kF1 + 3};
  for (std::size_t idx : checked) {
    const Poly& p = polys[idx];
    if (poly::gcd(F, p, poly::derivative(F, p)).degree() > 0) ++t.double_roots;
    for (Elem r : roots)
      if (poly::eval(F, p, r).code == 0) ++t.root_set_hits;
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (poly::gcd(F, polys[kF1 + i], polys[kF1 + j]).degree() > 0) ++t.shared_f_roots;
}

}  // namespace

SquareFreeResult is_squarefree_list(const Field& F, const std::vector<Poly>& polys) {
  std::vector<Poly> irreducibles;
  std::vector<Bits> rows(polys.size()), combos(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    combos[i].set(i);
    for (const auto& fac : factorize(F, polys[i]).factors) {
      if (fac.multiplicity % 2 == 0) continue;
      auto it = std::find(irreducibles.begin(), irreducibles.end(), fac.poly);
      std::size_t col = static_cast<std::size_t>(it - irreducibles.begin());
      if (it == irreducibles.end()) irreducibles.push_back(fac.poly);
      rows[i].flip(col);
    }
  }
  // Gaussian elimination over GF(2); a row reduced to zero is a dependency.
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < irreducibles.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && rows[r].test(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot && rows[r].test(col)) {
        rows[r] ^= rows[pivot];
        combos[r] ^= combos[pivot];
      }
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].none()) return {false, combos[r].indices()};
  return {true, {}};
}

std::uint64_t count_sign_pattern(const Field& F, const std::vector<PolySpec>& specs) {
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a < F.order(); ++a) {
    bool match = true;
    for (const auto& s : specs) {
      if (F.chi(poly::eval(F, s.poly, Elem{a})) != s.sign) {
        match = false;
        break;
      }
    }
    if (match) ++n;
  }
  return n;
}

SignPatternCheck check_sign_pattern(const Field& F, const std::vector<PolySpec>& specs) {
  SignPatternCheck out;
  out.count = count_sign_pattern(F, specs);
  std::vector<Poly> polys;
  int total_degree = 0;
  for (const auto& s : specs) {
    polys.push_back(s.poly);
    total_degree += s.poly.degree();
  }
  out.square_free = is_squarefree_list(F, polys).square_free;
  const double q = F.order();
  out.expected = std::ldexp(q, -static_cast<int>(specs.size()));
  out.radius = (std::sqrt(q) + 1) * total_degree / 2;
  out.within_bound =
      !out.square_free || std::abs(static_cast<double>(out.count) - out.expected) < out.radius;
  return out;
}

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::SpecialValues: return "special_values";
    case Condition::UnitQuadratics: return "unit_quadratics";
    case Condition::ThreeQuadratic: return "three_quadratic";
    case Condition::ThirdsValues: return "thirds_values";
    case Condition::ThreeThreeQuadratics: return "three_three_quadratics";
    case Condition::CubicsA: return "cubics_a";
    case Condition::MinusOneRoot: return "minus_one_root";
    case Condition::TwoTwoQuadratics: return "two_two_quadratics";
    case Condition::CubicsB: return "cubics_b";
    case Condition::CubicsC: return "cubics_c";
  }
  return "?";
}

Admissibility check_admissible(const Field& F, Elem c) {
  Admissibility out;
  for (std::size_t i = 0; i < kConditionCount; ++i) {
    const auto cond = static_cast<Condition>(i);
    if (fails(F, c, cond)) out.failed.push_back(cond);
  }
  out.admissible = out.failed.empty();
  return out;
}

std::vector<Poly> slice_polys(const Field& F, Elem c) {
  const Elem one = F.one(), zero = F.zero();
  const Elem cc = F.mul(c, c);
  const Elem two = F.from_int(2);
  auto lin = [](Elem c0, Elem c1) { return Poly{c0, c1}; };
  auto quad = [](Elem c0, Elem c1, Elem c2) { return Poly{c0, c1, c2}; };
  return {
      lin(zero, one),                                       // x
      lin(F.neg(one), one),                                 // x - 1
      lin(F.neg(c), one),                                   // x - c
      lin(F.sub(F.neg(one), c), one),                       // x - 1 - c
      lin(F.sub(one, c), one),                              // x + 1 - c
      lin(F.neg(c), F.sub(one, c)),                         // (1 - c)x - c
      lin(F.neg(c), F.add(one, c)),                         // (1 + c)x - c
      quad(c, F.neg(two), one),                             // g1
      lin(F.sub(cc, F.mul(two, c)), one),                   // g2
      quad(c, F.neg(F.mul(two, c)), one),                   // g3
      lin(cc, F.sub(one, F.mul(two, c))),                   // g4
      quad(cc, F.neg(F.add(c, one)), one),                  // f1
      quad(F.sub(cc, c), F.neg(c), one),                    // f2
      quad(F.neg(cc), F.add(cc, c), F.neg(one)),            // f3
      quad(F.neg(cc), c, F.sub(c, one)),                    // f4
  };
}

std::vector<Elem> root_set(const Field& F, Elem c) {
  const Elem one = F.one();
  std::vector<Elem> r{c, F.add(c, one), F.sub(c, one),
                      F.mul(c, F.sub(F.from_int(2), c))};
  auto push_quotient = [&](Elem num, Elem den) {
    if (den.code != 0) r.push_back(F.div(num, den));
  };
  push_quotient(c, F.sub(one, c));
  push_quotient(c, F.add(one, c));
  push_quotient(F.mul(c, c), F.sub(F.add(c, c), one));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

SliceListReport verify_slice_lists(const Field& F, int jobs) {
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const std::int64_t q = F.order();
  std::vector<SliceTally> tallies(static_cast<std::size_t>(q));
  std::vector<std::vector<std::pair<Elem, bool>>> three(static_cast<std::size_t>(q));
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t c = 0; c < q; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    examine_slice(F, Elem{static_cast<std::uint32_t>(c)}, tallies[idx], three[idx]);
  }
  SliceListReport rep;
  rep.q = F.order();
  for (std::size_t c = 0; c < tallies.size(); ++c) {
    const auto& t = tallies[c];
    rep.admissible += t.admissible;
    rep.not_square_free += t.not_square_free;
    rep.root_set_wrong_size += t.root_set_wrong_size;
    rep.double_roots += t.double_roots;
    rep.root_set_hits += t.root_set_hits;
    rep.shared_f_roots += t.shared_f_roots;
    rep.square_pairs += t.square_pairs;
    rep.square_pairs_inadmissible += t.square_pairs_inadmissible;
    rep.squares += t.squares;
    rep.squares_inadmissible += t.squares_inadmissible;
    for (const auto& e : three[c]) rep.three_quadratic_only.push_back(e);
  }
  return rep;
}

}  // namespace mna
