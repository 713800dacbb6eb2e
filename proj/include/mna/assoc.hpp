#pragma once

// Deciding maximal nonassociativity of Q_{a,b}.
//
// Q_{a,b} is maximally nonassociative iff (u, v) = (0, 0) is the only
// solution of the associativity equation
//
//     psi(psi(u) - v) = psi(-v) + psi(u - v - psi(-v)).
//
// Nonzero solutions are labelled by a class (i, j, r, s): each bit is 0 iff
// the corresponding quantity u, -v, psi(u) - v, u - v - psi(-v) is a square.
// Four deciders are provided and cross-check each other:
//   A        scan all q^3 triples of the Cayley table;
//   B        scan all (u, v) != (0, 0);
//   Bscaled  scan only scaling representatives u in {1, zeta} (and u = 0);
//   C        solve the linear equation each class reduces to.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mna/field.hpp"
#include "mna/quasigroup.hpp"

namespace mna {

struct ClassIndex {
  std::uint8_t i = 0;
  std::uint8_t j = 0;
  std::uint8_t r = 0;
  std::uint8_t s = 0;

  constexpr unsigned index() const { return (i << 3) | (j << 2) | (r << 1) | s; }
  static constexpr ClassIndex from_index(unsigned n) {
    return {static_cast<std::uint8_t>((n >> 3) & 1), static_cast<std::uint8_t>((n >> 2) & 1),
            static_cast<std::uint8_t>((n >> 1) & 1), static_cast<std::uint8_t>(n & 1)};
  }
  friend constexpr bool operator==(ClassIndex, ClassIndex) = default;
};

/// Bit ClassIndex::index() is set iff that class is nonempty.
using ClassMask = std::uint16_t;

constexpr bool mask_has(ClassMask m, ClassIndex c) { return (m >> c.index()) & 1u; }

bool assoc_eq_holds(const Field& f, SigmaPair pr, Elem u, Elem v);

/// Class of (u, v); nullopt if any of the four classifying quantities is 0.
std::optional<ClassIndex> classify(const Field& f, SigmaPair pr, Elem u, Elem v);

struct Solution {
  Elem u;
  Elem v;
  ClassIndex cls;
};

/// All (u, v) != (0, 0) solving the associativity equation, each with its
/// class, in ascending (code(u), code(v)).
std::vector<Solution> solutions_E(const Field& f, SigmaPair pr);

/// Nonempty classes according to the full scan.
ClassMask class_mask_E(const Field& f, SigmaPair pr);
/// Nonempty classes according to the per-class linear solve.
ClassMask class_mask_C(const Field& f, SigmaPair pr);

enum class Method { A, B, Bscaled, C, D };

std::string_view method_name(Method m);
/// Accepts "A", "B", "Bscaled", "C", "D".
std::optional<Method> parse_method(std::string_view s);

/// Largest q each method accepts in sigma_count.
std::uint32_t method_limit(Method m);

/// Throws TooLarge for q > 64 unless allow_large.
bool is_mna_A(const Field& f, SigmaPair pr, bool allow_large = false);
bool is_mna_B(const Field& f, SigmaPair pr);
bool is_mna_Bscaled(const Field& f, SigmaPair pr);
bool is_mna_C(const Field& f, SigmaPair pr);
bool is_mna(const Field& f, SigmaPair pr, Method m);

/// Number of (a, b) in Sigma with Q_{a,b} maximally nonassociative, using
/// one of A, B, Bscaled, C. OpenMP-parallel over Sigma; jobs <= 0 uses the
/// runtime default. Throws TooLarge if q exceeds method_limit(m).
std::uint64_t sigma_count(const Field& f, Method m, int jobs = 0);

namespace serial {
/// Single-threaded reference for sigma_count.
std::uint64_t sigma_count(const Field& f, Method m);
}  // namespace serial

}  // namespace mna
