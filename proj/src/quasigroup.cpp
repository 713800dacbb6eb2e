#include "mna/quasigroup.hpp"

#include "mna/errors.hpp"

namespace mna {

bool is_sigma_pair(const Field& f, Elem a, Elem b) {
  const Elem one = f.one();
  if (a.code <= 1 || b.code <= 1 || a == b) return false;
  return f.chi(f.mul(a, b)) == 1 && f.chi(f.mul(f.sub(one, a), f.sub(one, b))) == 1;
}

bool is_s_pair(const Field& f, Elem x, Elem y) {
  return x != y && x.code > 1 && y.code > 1 && f.chi(x) == 1 && f.chi(y) == 1;
}

std::uint64_t sigma_size(std::uint64_t q) {
  if (q < 5) return 0;
  return (q * q - 8 * q + 15) / 4;
}

SPair psi_map(const Field& f, SigmaPair pr) {
  if (!is_sigma_pair(f, pr)) throw NotInSigma("psi_map: pair is not in Sigma");
  const Elem one = f.one();
  return {f.div(pr.a, pr.b), f.div(f.sub(one, pr.a), f.sub(one, pr.b))};
}

SigmaPair phi_map(const Field& f, SPair sp) {
  if (!is_s_pair(f, sp)) throw NotInS("phi_map: pair is not in S");
  const Elem one = f.one();
  const Elem d = f.inv(f.sub(sp.x, sp.y));
  const Elem b = f.mul(f.sub(one, sp.y), d);
  return {f.mul(sp.x, b), b};
}

std::vector<SigmaPair> enumerate_sigma(const Field& f) {
  std::vector<SigmaPair> out;
  out.reserve(sigma_size(f.order()));
  for (std::uint32_t a = 2; a < f.order(); ++a)
    for (std::uint32_t b = 2; b < f.order(); ++b)
      if (is_sigma_pair(f, Elem{a}, Elem{b})) out.push_back({Elem{a}, Elem{b}});
  return out;
}

std::vector<SPair> enumerate_s(const Field& f) {
  std::vector<SPair> out;
  out.reserve(sigma_size(f.order()));
  const auto sq = f.nonzero_squares();
  for (Elem x : sq)
    for (Elem y : sq)
      if (is_s_pair(f, x, y)) out.push_back({x, y});
  return out;
}

Quasigroup::Quasigroup(const Field& f, SigmaPair pr)
    : field_(&f), params_(pr), q_(f.order()) {
  if (q_ > kMaxTableOrder) return;
  table_.resize(std::size_t{q_} * q_);
  for (std::uint32_t u = 0; u < q_; ++u)
    for (std::uint32_t v = 0; v < q_; ++v)
      table_[std::size_t{u} * q_ + v] = qmul(f, pr, Elem{u}, Elem{v}).code;
}

bool Quasigroup::is_latin() const {
  std::vector<std::uint32_t> seen(q_, 0);
  std::uint32_t stamp = 0;
  for (std::uint32_t u = 0; u < q_; ++u) {
    ++stamp;
    for (std::uint32_t v = 0; v < q_; ++v) {
      auto& s = seen[(*this)(Elem{u}, Elem{v}).code];
      if (s == stamp) return false;
      s = stamp;
    }
    ++stamp;
    for (std::uint32_t v = 0; v < q_; ++v) {
      auto& s = seen[(*this)(Elem{v}, Elem{u}).code];
      if (s == stamp) return false;
      s = stamp;
    }
  }
  return true;
}

bool Quasigroup::is_idempotent() const {
  for (std::uint32_t u = 0; u < q_; ++u)
    if ((*this)(Elem{u}, Elem{u}) != Elem{u}) return false;
  return true;
}

bool is_orthomorphism(const Field& f, SigmaPair pr) {
  const std::uint32_t q = f.order();
  std::vector<bool> image(q, false), diff(q, false);
  for (std::uint32_t u = 0; u < q; ++u) {
    const Elem w = psi(f, pr, Elem{u});
    const Elem d = f.sub(w, Elem{u});
    if (image[w.code] || diff[d.code]) return false;
    image[w.code] = true;
    diff[d.code] = true;
  }
  return true;
}

SymmetryReport opposite_and_iso_checks(const Field& f, SigmaPair pr, Elem zeta) {
  const Elem one = f.one();
  const SigmaPair swapped{pr.b, pr.a};
  const bool minus_one_square = f.chi(f.neg(one)) == 1;
  const SigmaPair opposite = minus_one_square
                                 ? SigmaPair{f.sub(one, pr.a), f.sub(one, pr.b)}
                                 : SigmaPair{f.sub(one, pr.b), f.sub(one, pr.a)};
  SymmetryReport rep;
  for (std::uint32_t uc = 0; uc < f.order(); ++uc) {
    for (std::uint32_t vc = 0; vc < f.order(); ++vc) {
      const Elem u{uc}, v{vc};
      if (!rep.isomorphism_failure) {
        const Elem lhs = f.mul(qmul(f, pr, u, v), zeta);
        const Elem rhs = qmul(f, swapped, f.mul(u, zeta), f.mul(v, zeta));
        if (lhs != rhs) rep.isomorphism_failure = Witness{u, v};
      }
      if (!rep.opposite_failure) {
        if (qmul(f, pr, v, u) != qmul(f, opposite, u, v)) rep.opposite_failure = Witness{u, v};
      }
    }
  }
  rep.isomorphism_holds = !rep.isomorphism_failure;
  rep.opposite_holds = !rep.opposite_failure;
  return rep;
}

}  // namespace mna
