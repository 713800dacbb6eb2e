#pragma once

// Fully materialized finite fields F_q, q an odd prime power.
//
// Elements are canonical integer codes in [0, q). For q = p^k the element
// c_0 + c_1 t + ... + c_{k-1} t^{k-1} (mod the field modulus) has code
// sum c_i p^i, so the prime subfield occupies codes 0..p-1 and the code of
// an integer n is n mod p. The modulus is the least monic irreducible of
// degree k when coefficient tuples (c_0, c_1, ..., c_{k-1}) are compared
// lexicographically, which makes codes reproducible across builds.
//
// Construction is O(q k^2); afterwards every operation is a table lookup or
// a handful of integer ops, and the object is immutable.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace mna {

struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Throws NotOddPrimePower, or TooLarge above kMaxOrder.
  explicit Field(std::uint64_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  bool is_prime_field() const { return k_ == 1; }
  /// Monic modulus, constant term first (length degree() + 1). For prime
  /// fields this is the polynomial x.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;

  Elem add(Elem u, Elem v) const {
    if (k_ == 1) {
      std::uint32_t s = u.code + v.code;
      return Elem{s >= p_ ? s - p_ : s};
    }
    return add_digits(u, v);
  }
  Elem neg(Elem u) const {
    if (k_ == 1) return Elem{u.code == 0 ? 0 : p_ - u.code};
    return neg_digits(u);
  }
  Elem sub(Elem u, Elem v) const { return add(u, neg(v)); }
  Elem mul(Elem u, Elem v) const {
    if (k_ == 1)
      return Elem{static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(u.code) * v.code % p_)};
    if (u.code == 0 || v.code == 0) return zero();
    std::uint32_t e = log_[u.code] + log_[v.code];
    if (e >= q_ - 1) e -= q_ - 1;
    return Elem{exp_[e]};
  }
  /// Throws DivisionByZero for u = 0.
  Elem inv(Elem u) const;
  Elem div(Elem u, Elem v) const { return mul(u, inv(v)); }
  Elem pow(Elem u, std::uint64_t n) const;

  /// Quadratic character extended by chi(0) = 0.
  int chi(Elem u) const { return chi_[u.code]; }
  bool is_nonzero_square(Elem u) const { return chi_[u.code] == 1; }

  /// Fixed primitive element (least code that generates F_q^*).
  Elem generator() const { return Elem{exp_[1]}; }
  /// Least nonsquare by code.
  Elem least_nonsquare() const { return least_nonsquare_; }
  /// Nonzero squares in ascending code order.
  std::span<const Elem> nonzero_squares() const { return squares_; }

  /// Base-p digits of an element (length degree()).
  std::vector<std::uint32_t> digits(Elem u) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

 private:
  Elem add_digits(Elem u, Elem v) const;
  Elem neg_digits(Elem u) const;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i < k
  std::vector<std::uint32_t> exp_;    // exp_[i] = g^i, i < q - 1
  std::vector<std::uint32_t> log_;    // log_[g^i] = i, log_[0] unused
  std::vector<std::int8_t> chi_;
  std::vector<Elem> squares_;
  Elem least_nonsquare_{};
};

/// Factor q as p^k with p prime; returns {0, 0} if q is not a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
};
PrimePower factor_prime_power(std::uint64_t q);

bool is_odd_prime_power(std::uint64_t q);

/// All odd prime powers in [lo, hi], ascending.
std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi);

inline Field make_field(std::uint64_t q) { return Field(q); }

}  // namespace mna
