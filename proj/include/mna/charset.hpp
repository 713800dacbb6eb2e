#pragma once

// Characterization of the parameter side through S.
//
// For (x, y) in S the class sets S_ij^rs (images of the Sigma classes under
// (a, b) -> (a/b, (1-a)/(1-b))) are described by prescribed quadratic
// characters of a handful of polynomials in x and y:
//
//   f1 = x^2 + y^2 - xy - x     g1 = x^2 + y - 2x
//   f2 = x^2 + y^2 - xy - y     g2 = y^2 + x - 2y
//   f3 = xy^2 + xy - x^2 - y^2  g3 = x^2 + y - 2xy
//   f4 = x^2y + xy - x^2 - y^2  g4 = y^2 + x - 2xy
//
// together with linear forms such as 1 - x, x - y and y + 1 - x. The tables
// differ for q = 1 and q = 3 (mod 4). A condition chi(expr) = +-1 is false
// whenever expr vanishes. The descriptions are valid off the exceptional
// locus {y = x - 1, x^2 - x - 1 = 0} and its mirror {x = y - 1,
// y^2 - y - 1 = 0}; pairs on it are treated as non-MNA by the counter.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mna/assoc.hpp"
#include "mna/field.hpp"
#include "mna/quasigroup.hpp"

namespace mna {

/// Pointwise evaluation of the characterizing polynomials.
namespace charpoly {
Elem f1(const Field& F, Elem x, Elem y);
Elem f2(const Field& F, Elem x, Elem y);
Elem f3(const Field& F, Elem x, Elem y);
Elem f4(const Field& F, Elem x, Elem y);
Elem g1(const Field& F, Elem x, Elem y);
Elem g2(const Field& F, Elem x, Elem y);
Elem g3(const Field& F, Elem x, Elem y);
Elem g4(const Field& F, Elem x, Elem y);
}  // namespace charpoly

/// Characters of every quantity the membership tables consult at one point.
struct PointChars {
  int x_minus_y = 0;     // chi(x - y)
  int one_minus_x = 0;   // chi(1 - x)
  int one_minus_y = 0;   // chi(1 - y)
  int y_plus_1_minus_x = 0;   // chi(y + 1 - x)
  int x_plus_1_minus_y = 0;   // chi(x + 1 - y)
  int y_plus_xy_minus_x = 0;  // chi(y + xy - x)
  int x_plus_xy_minus_y = 0;  // chi(x + xy - y)
  std::array<int, 4> f{};
  std::array<int, 4> g{};
  int minus_one = 0;  // chi(-1)
};

PointChars point_chars(const Field& F, Elem x, Elem y);

/// False exactly on the exceptional locus.
bool regular_locus(const Field& F, Elem x, Elem y);

/// Nonempty classes at a regular point, from its characters.
ClassMask s_class_mask(const PointChars& pc);

/// Throws ExceptionalPair off the regular locus, NotInS if sp is not in S.
ClassMask s_class_mask(const Field& F, SPair sp);
bool s_class_member(const Field& F, SPair sp, ClassIndex cls);

/// True iff (x, y) lies in the union of all S_ij^rs; exceptional pairs
/// count as members. Precondition: (x, y) in S.
bool in_union(const Field& F, Elem x, Elem y);

/// Number of (x, y) in S outside every S_ij^rs. OpenMP-parallel over the
/// y coordinate; jobs <= 0 uses the runtime default.
std::uint64_t sigma_count_D(const Field& F, int jobs = 0);

namespace serial {
std::uint64_t sigma_count_D(const Field& F);
}  // namespace serial

/// Pairs of S off the regular locus.
std::vector<SPair> exceptional_pairs(const Field& F);

/// Sign vector rho with rho_j = chi(x - y) * chi(f_j). Encoded as a 4-bit
/// index: bit (3 - (j-1)) set iff rho_j = -1, so index 0 is (1, 1, 1, 1)
/// and index 1 is (1, 1, 1, -1).
using RhoIndex = unsigned;
constexpr RhoIndex rho_index(int r1, int r2, int r3, int r4) {
  return ((r1 < 0) << 3) | ((r2 < 0) << 2) | ((r3 < 0) << 1) | (r4 < 0);
}

/// Sizes of T = S minus the union, and of the parts it splits into.
///
/// q = 3 (mod 4): T0 = {chi(y-x) = 1}, split by (chi(1-x), chi(1-y)) into
///   T11 = (1,1), T1m = (-1,-1), T2 = (-1,1); the primed parts are the same
///   with x and y exchanged (so T0' = {chi(y-x) = -1}).
/// q = 1 (mod 4): with e = chi(x-y), T1 = {chi(1-x) = chi(1-y) = -e},
///   T2 = {chi(1-x) = e, chi(1-y) = -e}, T2' = {chi(1-x) = -e, chi(1-y) = e};
///   R(rho) splits T (and T1, T2) by rho_j = e chi(f_j).
struct TPartitionReport {
  std::uint32_t q = 0;
  int mod4 = 0;
  std::uint64_t s_size = 0;
  std::uint64_t t_size = 0;
  std::uint64_t exceptional = 0;

  // q = 3 (mod 4)
  std::uint64_t t0 = 0, t0p = 0;
  std::uint64_t t11 = 0, t1m = 0, t2 = 0;
  std::uint64_t t11p = 0, t1mp = 0, t2p = 0;

  // q = 1 (mod 4); t2 and t2p above are reused.
  std::uint64_t t1 = 0;
  std::array<std::uint64_t, 16> r{}, r1{}, r2{};
  /// Points of T where some f_j vanishes (outside every R(rho)).
  std::uint64_t r_uncovered = 0;

  /// Invariant violations found while building the report; empty on success.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

TPartitionReport t_partition(const Field& F);

struct SliceCount {
  std::string part;  // "T2", "T1,1" (q = 3 mod 4) or "T1", "T2" (q = 1 mod 4)
  std::uint64_t count = 0;
  double expected = 0;  // density * q
  double radius = 0;    // allowed deviation
  bool within = false;
};

struct SliceReport {
  Elem c;
  bool admissible = false;  // bounds are asserted only when true
  std::array<SliceCount, 2> counts;
  /// True if not admissible, or if both counts are within their radius.
  bool holds() const {
    return !admissible || (counts[0].within && counts[1].within);
  }
};

/// Exact slice counts at y = c. Preconditions: c a nonzero square, c != 1,
/// and chi(1 - c) = 1 when q = 3 (mod 4); otherwise throws BadSliceParam.
SliceReport slice_counters(const Field& F, Elem c);

/// Every valid c in ascending order. OpenMP-parallel over c.
std::vector<SliceReport> all_slices(const Field& F, int jobs = 0);

}  // namespace mna
