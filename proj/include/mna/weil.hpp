#pragma once

// Square-free polynomial lists, sign-pattern counts and the character-sum
// bound
//
//     |N - q / 2^k| < (sqrt(q) + 1) D / 2
//
// for N = #{alpha : chi(p_i(alpha)) = eps_i for all i}, valid whenever the
// list p_1..p_k (total degree D) is square-free. Also: the admissibility
// conditions on a slice parameter c under which the fifteen slice
// polynomials in x are square-free.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mna/field.hpp"
#include "mna/poly.hpp"

namespace mna {

struct PolySpec {
  Poly poly;
  int sign = 1;  // required chi value, -1 or +1
};

struct SquareFreeResult {
  bool square_free = false;
  /// On failure: 0-based indices of a nonempty sublist whose product is a
  /// square over the algebraic closure.
  std::vector<std::size_t> witness;
};

/// Exact: a polynomial is a square over the closure iff every irreducible
/// multiplicity over F_q is even. Throws ZeroPolynomial.
SquareFreeResult is_squarefree_list(const Field& F, const std::vector<Poly>& polys);

/// Scan of alpha over F_q.
std::uint64_t count_sign_pattern(const Field& F, const std::vector<PolySpec>& specs);

struct SignPatternCheck {
  std::uint64_t count = 0;
  double expected = 0;  // q / 2^k
  double radius = 0;    // (sqrt(q) + 1) D / 2
  bool square_free = false;
  /// |count - expected| < radius; always true when not square-free (the
  /// bound makes no claim there).
  bool within_bound = false;
};

SignPatternCheck check_sign_pattern(const Field& F, const std::vector<PolySpec>& specs);

/// The ten admissibility conditions on c, in order.
enum class Condition : std::uint8_t {
  SpecialValues,        // c not in {-1, 0, 1, 1/2, 2}
  UnitQuadratics,       // c not a root of x^2 +- x +- 1
  ThreeQuadratic,       // x^2 - 3x + 1
  ThirdsValues,         // c not in {-1/3, -3, 2/3, 3/2, 1/3, 3, 4/3, 3/4}; skipped in char 3
  ThreeThreeQuadratics, // x^2 - 3x + 3, 3x^2 - 3x + 1
  CubicsA,              // x^3 + x^2 - 1, x^3 - x - 1
  MinusOneRoot,         // x^2 + 1
  TwoTwoQuadratics,     // x^2 - 2x + 2, 2x^2 - 2x + 1
  CubicsB,              // x^3 - x^2 + 2x - 1, x^3 - 2x^2 + x - 1
  CubicsC,              // x^3 - 2x^2 + 3x - 1, x^3 - 3x^2 + 2x - 1
};
inline constexpr std::size_t kConditionCount = 10;

std::string_view condition_name(Condition c);

struct Admissibility {
  bool admissible = false;
  std::vector<Condition> failed;
};

Admissibility check_admissible(const Field& F, Elem c);

/// x, x-1, x-c, x-1-c, x+1-c, (1-c)x-c, (1+c)x-c, g1..g4(x, c), f1..f4(x, c).
std::vector<Poly> slice_polys(const Field& F, Elem c);

/// {c, c+1, c-1, c/(1-c), c/(1+c), c(2-c), c^2/(2c-1)} as a set (quotients
/// with a zero denominator are skipped).
std::vector<Elem> root_set(const Field& F, Elem c);

struct SliceListReport {
  std::uint32_t q = 0;
  std::uint64_t admissible = 0;
  std::uint64_t not_square_free = 0;       // admissible c whose list is not square-free
  std::uint64_t root_set_wrong_size = 0;   // admissible c with |root set| != 7
  std::uint64_t double_roots = 0;          // f1..f4, g1, g3 with a repeated root
  std::uint64_t root_set_hits = 0;         // element of the root set is a root of g1, g3, f1..f4
  std::uint64_t shared_f_roots = 0;        // f_i, f_j sharing a root
  /// #{c : chi(c) = chi(1-c) = 1}, and how many of those are inadmissible.
  std::uint64_t square_pairs = 0;
  std::uint64_t square_pairs_inadmissible = 0;
  /// Squares c not in {0, 1}, and how many are inadmissible.
  std::uint64_t squares = 0;
  std::uint64_t squares_inadmissible = 0;
  /// c failing only ThreeQuadratic, with whether the list is square-free
  /// there (reported, not asserted).
  std::vector<std::pair<Elem, bool>> three_quadratic_only;

  bool ok() const {
    return not_square_free == 0 && root_set_wrong_size == 0 && double_roots == 0 &&
           root_set_hits == 0 && shared_f_roots == 0;
  }
};

/// Square-freeness of slice_polys(c) at every admissible c, plus the root
/// set size and the pairwise root conditions. OpenMP-parallel over c.
SliceListReport verify_slice_lists(const Field& F, int jobs = 0);

}  // namespace mna
