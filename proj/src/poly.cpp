#include "mna/poly.hpp"

#include <algorithm>
#include <random>

#include "mna/errors.hpp"

namespace mna {
namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elem> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elem> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<Elem> c(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].code == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(ac[i], bc[j]));
  }
  return Poly(std::move(c));
}

Poly scale(const Field& F, const Poly& a, Elem s) {
  std::vector<Elem> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = F.mul(x, s);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t nb = bc.size();
  const Elem lead_inv = F.inv(b.lead());
  std::vector<Elem> q(r.size() - nb + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Elem t = F.mul(r[k + nb - 1], lead_inv);
    q[k] = t;
    if (t.code == 0) continue;
    for (std::size_t i = 0; i < nb; ++i) r[k + i] = F.sub(r[k + i], F.mul(t, bc[i]));
  }
  r.resize(nb - 1);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  const auto ac = a.coeffs();
  if (ac.size() <= 1) return {};
  std::vector<Elem> c(ac.size() - 1);
  for (std::size_t i = 1; i < ac.size(); ++i) c[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), ac[i]);
  return Poly(std::move(c));
}

Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
  Poly result = rem(F, Poly{F.one()}, m);
  base = rem(F, base, m);
  while (e) {
    if (e & 1) result = rem(F, mul(F, result, base), m);
    e >>= 1;
    if (e) base = rem(F, mul(F, base, base), m);
  }
  return result;
}

Elem eval(const Field& F, const Poly& a, Elem x) {
  Elem acc{};
  const auto ac = a.coeffs();
  for (std::size_t i = ac.size(); i-- > 0;) acc = F.add(F.mul(acc, x), ac[i]);
  return acc;
}

}  // namespace poly

namespace {

using namespace poly;

Poly x_poly(const Field& F) { return Poly{F.zero(), F.one()}; }

// g(x)^(1/p) for g whose exponents are all multiples of p.
Poly pth_root(const Field& F, const Poly& g) {
  const std::uint32_t p = F.characteristic();
  // a^(1/p) = a^(p^(k-1)) in F_{p^k}.
  std::uint64_t root_exp = 1;
  for (std::uint32_t i = 1; i < F.degree(); ++i) root_exp *= p;
  const auto gc = g.coeffs();
  std::vector<Elem> c(gc.size() / p + 1);
  for (std::size_t i = 0; i < gc.size(); i += p) c[i / p] = F.pow(gc[i], root_exp);
  return Poly(std::move(c));
}

// Monic square-free parts with multiplicities.
void squarefree_decompose(const Field& F, const Poly& f, unsigned mult, std::vector<Factor>& out) {
  Poly c = gcd(F, f, derivative(F, f));
  Poly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(F, w, c);
    Poly fac = divmod(F, w, y).first;
    if (fac.degree() > 0) out.push_back({monic(F, fac), i * mult});
    w = std::move(y);
    c = divmod(F, c, w).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(F, pth_root(F, c), mult * F.characteristic(), out);
}

// Square-free monic f -> (product of its degree-d irreducibles, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Field& F, Poly f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = x_poly(F);
  Poly h = rem(F, x, f);
  unsigned d = 1;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    h = powmod(F, h, F.order(), f);
    Poly g = gcd(F, f, sub(F, h, x));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(F, f, g).first;
      h = rem(F, h, f);
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// r^((q^d - 1) / 2) mod f, as (r * r^q * ... * r^(q^(d-1)))^((q-1)/2).
Poly half_power(const Field& F, const Poly& r, unsigned d, const Poly& f) {
  Poly acc = rem(F, r, f);
  Poly frob = acc;
  for (unsigned i = 1; i < d; ++i) {
    frob = powmod(F, frob, F.order(), f);
    acc = rem(F, mul(F, acc, frob), f);
  }
  return powmod(F, acc, (F.order() - 1) / 2, f);
}

void equal_degree(const Field& F, const Poly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const unsigned count = static_cast<unsigned>(f.degree()) / d;
  std::vector<Poly> parts{f};
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.order() - 1);
  while (parts.size() < count) {
    std::vector<Elem> rc(static_cast<std::size_t>(f.degree()));
    for (auto& c : rc) c = Elem{coeff(rng)};
    const Poly r(std::move(rc));
    if (r.degree() <= 0) continue;
    const Poly g = sub(F, half_power(F, r, d, f), Poly{F.one()});
    std::vector<Poly> next;
    for (const auto& u : parts) {
      if (u.degree() == static_cast<int>(d)) {
        next.push_back(u);
        continue;
      }
      Poly h = gcd(F, u, g);
      if (h.degree() > 0 && h.degree() < u.degree()) {
        next.push_back(divmod(F, u, h).first);
        next.push_back(std::move(h));
      } else {
        next.push_back(u);
      }
    }
    parts = std::move(next);
  }
  for (auto& u : parts) out.push_back(monic(F, u));
}

bool coeff_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ac = a.coeffs(), bc = b.coeffs();
  return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

}  // namespace

Factorization factorize(const Field& F, const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("factorize: zero polynomial");
  Factorization fac;
  fac.unit = p.lead();
  if (p.degree() == 0) return fac;
  std::mt19937_64 rng(0x6d6e615f66616374ULL);
  std::vector<Factor> sqf;
  squarefree_decompose(F, monic(F, p), 1, sqf);
  for (const auto& part : sqf) {
    for (const auto& [prod, d] : distinct_degree(F, part.poly)) {
      std::vector<Poly> irr;
      equal_degree(F, prod, d, rng, irr);
      for (auto& g : irr) fac.factors.push_back({std::move(g), part.multiplicity});
    }
  }
  // Equal irreducibles can surface from different square-free layers only
  // in characteristic-p recursion; merge them.
  std::sort(fac.factors.begin(), fac.factors.end(),
            [](const Factor& a, const Factor& b) { return coeff_less(a.poly, b.poly); });
  std::vector<Factor> merged;
  for (auto& f : fac.factors) {
    if (!merged.empty() && merged.back().poly == f.poly)
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(std::move(f));
  }
  fac.factors = std::move(merged);
  return fac;
}

Poly expand(const Field& F, const Factorization& fac) {
  Poly acc{fac.unit};
  for (const auto& f : fac.factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = mul(F, acc, f.poly);
  return acc;
}

bool is_irreducible(const Field& F, const Poly& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  const Poly f = monic(F, p);
  const unsigned n = static_cast<unsigned>(f.degree());
  const Poly x = x_poly(F);
  // x^(q^n) = x mod f, and gcd(x^(q^(n/r)) - x, f) = 1 for primes r | n.
  std::vector<Poly> frob{rem(F, x, f)};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(powmod(F, frob.back(), F.order(), f));
  if (!sub(F, frob[n], rem(F, x, f)).is_zero()) return false;
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (unsigned s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    if (gcd(F, f, sub(F, frob[n / r], x)).degree() != 0) return false;
  }
  return true;
}

}  // namespace mna
