#include "mna/field.hpp"

#include <algorithm>
#include <string>

#include "mna/errors.hpp"

namespace mna {
namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a modulo a monic b, coefficients in F_p.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
  const std::size_t nb = b.size();
  while (a.size() >= nb) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - nb;
      for (std::size_t i = 0; i < nb; ++i) {
        const std::uint64_t t = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_zero(const Coeffs& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    Coeffs div(d + 1, 0);
    div[d] = 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t m = n;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(m % p);
        m /= p;
      }
      if (is_zero(poly_rem(f, div, p))) return false;
    }
  }
  return true;
}

// Least monic irreducible of degree k, comparing (c_0, ..., c_{k-1})
// lexicographically: c_0 is the most significant position.
Coeffs least_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  Coeffs f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t m = n;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Multiplication of codes via polynomial arithmetic; only used while the
// log tables are being built.
class SlowArith {
 public:
  SlowArith(std::uint32_t p, std::uint32_t k, Coeffs modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {}

  std::uint32_t mul(std::uint32_t u, std::uint32_t v) const {
    if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t{u} * v % p_);
    Coeffs a = split(u), b = split(v);
    Coeffs prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    }
    prod = poly_rem(std::move(prod), modulus_, p_);
    prod.resize(k_, 0);
    return join(prod);
  }

  std::uint32_t pow(std::uint32_t u, std::uint64_t n) const {
    std::uint32_t r = 1;
    while (n) {
      if (n & 1) r = mul(r, u);
      u = mul(u, u);
      n >>= 1;
    }
    return r;
  }

 private:
  Coeffs split(std::uint32_t u) const {
    Coeffs d(k_);
    for (auto& c : d) {
      c = u % p_;
      u /= p_;
    }
    return d;
  }
  std::uint32_t join(const Coeffs& d) const {
    std::uint32_t u = 0;
    for (std::uint32_t i = k_; i-- > 0;) u = u * p_ + d[i];
    return u;
  }

  std::uint32_t p_, k_;
  Coeffs modulus_;
};

}  // namespace

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) return {};
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d != 0) continue;
    std::uint32_t k = 0;
    while (q % d == 0) {
      q /= d;
      ++k;
    }
    if (q != 1) return {};
    return {d, k};
  }
  return {q, 1};
}

bool is_odd_prime_power(std::uint64_t q) {
  const auto pp = factor_prime_power(q);
  return pp.k > 0 && pp.p != 2;
}

std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = std::max<std::uint32_t>(lo, 3); q <= hi; ++q)
    if (is_odd_prime_power(q)) out.push_back(q);
  return out;
}

Field::Field(std::uint64_t q) {
  const auto pp = factor_prime_power(q);
  if (q < 3 || pp.k == 0 || pp.p == 2)
    throw NotOddPrimePower("q = " + std::to_string(q) + " is not an odd prime power");
  if (q > kMaxOrder)
    throw TooLarge("q = " + std::to_string(q) + " exceeds the field size ceiling 2^20");

  q_ = static_cast<std::uint32_t>(q);
  p_ = static_cast<std::uint32_t>(pp.p);
  k_ = pp.k;
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = least_irreducible(p_, k_);
  }
  pow_p_.resize(k_);
  for (std::uint32_t i = 0, v = 1; i < k_; ++i, v *= p_) pow_p_[i] = v;

  const SlowArith slow(p_, k_, modulus_);
  const auto factors = prime_factors(q_ - 1);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow.pow(cand, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow.mul(x, g);
  }

  // Squares are marked by enumeration, not by Euler's criterion.
  chi_.assign(q_, -1);
  chi_[0] = 0;
  for (std::uint32_t u = 1; u < q_; ++u) chi_[mul(Elem{u}, Elem{u}).code] = 1;
  for (std::uint32_t u = 1; u < q_; ++u) {
    if (chi_[u] == 1) squares_.push_back(Elem{u});
  }
  for (std::uint32_t u = 1; u < q_; ++u) {
    if (chi_[u] == -1) {
      least_nonsquare_ = Elem{u};
      break;
    }
  }
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::inv(Elem u) const {
  if (u.code == 0) throw DivisionByZero("inverse of zero");
  const std::uint32_t l = log_[u.code];
  return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem Field::pow(Elem u, std::uint64_t n) const {
  if (n == 0) return one();
  if (u.code == 0) return zero();
  const std::uint64_t e = (std::uint64_t{log_[u.code]} * (n % (q_ - 1))) % (q_ - 1);
  return Elem{exp_[e]};
}

std::vector<std::uint32_t> Field::digits(Elem u) const {
  std::vector<std::uint32_t> d(k_);
  std::uint32_t c = u.code;
  for (auto& x : d) {
    x = c % p_;
    c /= p_;
  }
  return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  std::uint32_t c = 0;
  for (std::size_t i = digits.size(); i-- > 0;) c = c * p_ + digits[i] % p_;
  return Elem{c};
}

Elem Field::add_digits(Elem u, Elem v) const {
  std::uint32_t a = u.code, b = v.code, out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return Elem{out};
}

Elem Field::neg_digits(Elem u) const {
  std::uint32_t a = u.code, out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
    a /= p_;
  }
  return Elem{out};
}

}  // namespace mna
