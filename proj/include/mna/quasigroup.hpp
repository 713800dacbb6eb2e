#pragma once

// Quadratic orthomorphisms psi_{a,b}, the quasigroups Q_{a,b} they induce,
// the parameter set Sigma and the square-pair set S, and the bijection
// Sigma -> S, (a, b) -> (a/b, (1-a)/(1-b)) with its inverse.

#include <cstdint>
#include <optional>
#include <vector>

#include "mna/field.hpp"

namespace mna {

/// (a, b) with a, b not in {0, 1}, a != b, ab and (1-a)(1-b) squares.
struct SigmaPair {
  Elem a;
  Elem b;

  friend constexpr auto operator<=>(const SigmaPair&, const SigmaPair&) = default;
};

/// (x, y) with x, y nonzero squares, x != y, neither equal to 1.
struct SPair {
  Elem x;
  Elem y;

  friend constexpr auto operator<=>(const SPair&, const SPair&) = default;
};

bool is_sigma_pair(const Field& f, Elem a, Elem b);
inline bool is_sigma_pair(const Field& f, SigmaPair pr) { return is_sigma_pair(f, pr.a, pr.b); }
bool is_s_pair(const Field& f, Elem x, Elem y);
inline bool is_s_pair(const Field& f, SPair sp) { return is_s_pair(f, sp.x, sp.y); }

/// (q^2 - 8q + 15) / 4.
std::uint64_t sigma_size(std::uint64_t q);

/// a*u if u is a square (or zero), b*u otherwise.
inline Elem psi(const Field& f, SigmaPair pr, Elem u) {
  return f.mul(f.chi(u) >= 0 ? pr.a : pr.b, u);
}

/// u * v = u + psi(v - u).
inline Elem qmul(const Field& f, SigmaPair pr, Elem u, Elem v) {
  return f.add(u, psi(f, pr, f.sub(v, u)));
}

/// Throws NotInSigma.
SPair psi_map(const Field& f, SigmaPair pr);
/// Throws NotInS.
SigmaPair phi_map(const Field& f, SPair sp);

/// Ascending (code(a), code(b)).
std::vector<SigmaPair> enumerate_sigma(const Field& f);
/// Ascending (code(x), code(y)).
std::vector<SPair> enumerate_s(const Field& f);

/// Q_{a,b} over a borrowed field. The Cayley table is materialized only for
/// q <= kMaxTableOrder; above that lookups evaluate the operation directly.
class Quasigroup {
 public:
  static constexpr std::uint32_t kMaxTableOrder = 512;

  Quasigroup(const Field& f, SigmaPair pr);

  const Field& field() const { return *field_; }
  SigmaPair params() const { return params_; }
  bool has_table() const { return !table_.empty(); }

  Elem operator()(Elem u, Elem v) const {
    if (!table_.empty()) return Elem{table_[std::size_t{u.code} * q_ + v.code]};
    return qmul(*field_, params_, u, v);
  }

  /// Every row and every column is a permutation.
  bool is_latin() const;
  bool is_idempotent() const;

 private:
  const Field* field_;
  SigmaPair params_;
  std::uint32_t q_;
  std::vector<std::uint32_t> table_;
};

/// psi and u -> psi(u) - u are both permutations of F_q.
bool is_orthomorphism(const Field& f, SigmaPair pr);

/// A failing (u, v) for one of the structural identities.
struct Witness {
  Elem u;
  Elem v;
};

struct SymmetryReport {
  bool isomorphism_holds = false;
  bool opposite_holds = false;
  std::optional<Witness> isomorphism_failure;
  std::optional<Witness> opposite_failure;
};

/// (i) u -> u*zeta maps Q_{a,b} onto Q_{b,a};
/// (ii) the opposite of Q_{a,b} is Q_{1-a,1-b} (q = 1 mod 4) or
/// Q_{1-b,1-a} (q = 3 mod 4). Both checked on every (u, v).
SymmetryReport opposite_and_iso_checks(const Field& f, SigmaPair pr, Elem zeta);
inline SymmetryReport opposite_and_iso_checks(const Field& f, SigmaPair pr) {
  return opposite_and_iso_checks(f, pr, f.least_nonsquare());
}

}  // namespace mna
