#pragma once

// Univariate polynomials over F_q and their factorization into monic
// irreducibles (square-free decomposition, distinct-degree splitting,
// Cantor-Zassenhaus equal-degree splitting with a fixed-seed generator).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mna/field.hpp"

namespace mna {

/// Coefficients constant term first; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Elem c) { return Poly{c}; }
  /// x - r
  static Poly root_factor(const Field& F, Elem r) { return Poly{F.neg(r), F.one()}; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].code == 1; }
  Elem lead() const { return c_.empty() ? Elem{} : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  std::span<const Elem> coeffs() const { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

namespace poly {
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem c);
/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Field& F, Poly a, Poly b);
Poly derivative(const Field& F, const Poly& a);
/// base^e mod m.
Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m);
Elem eval(const Field& F, const Poly& a, Elem x);
}  // namespace poly

struct Factor {
  Poly poly;  // monic irreducible
  unsigned multiplicity = 0;
};

struct Factorization {
  Elem unit;
  std::vector<Factor> factors;  // distinct, sorted by (degree, coefficients)
};

/// Throws ZeroPolynomial.
Factorization factorize(const Field& F, const Poly& p);

/// unit * prod factor^multiplicity.
Poly expand(const Field& F, const Factorization& fac);

/// Rabin's test; constants are not irreducible.
bool is_irreducible(const Field& F, const Poly& p);

}  // namespace mna
