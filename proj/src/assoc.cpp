#include "mna/assoc.hpp"

#include <cassert>
#include <string>

#include <omp.h>

#include "mna/errors.hpp"

namespace mna {
namespace {

constexpr std::uint32_t kMaxOrderA = 27;
constexpr std::uint32_t kMaxOrderTriples = 64;
constexpr std::uint32_t kMaxOrderB = 243;
constexpr std::uint32_t kMaxOrderBscaled = 4096;

std::uint8_t bit_of(int chi) { return chi == 1 ? 0 : 1; }

void check_limit(const Field& f, Method m) {
  if (f.order() > method_limit(m))
    throw TooLarge("method " + std::string(method_name(m)) + " is limited to q <= " +
                   std::to_string(method_limit(m)));
}

}  // namespace

bool assoc_eq_holds(const Field& f, SigmaPair pr, Elem u, Elem v) {
  const Elem mv = f.neg(v);
  const Elem psi_mv = psi(f, pr, mv);
  const Elem lhs = psi(f, pr, f.sub(psi(f, pr, u), v));
  const Elem rhs = f.add(psi_mv, psi(f, pr, f.sub(f.sub(u, v), psi_mv)));
  const bool holds = lhs == rhs;
#ifndef NDEBUG
  const Elem zero = f.zero();
  assert(holds == (qmul(f, pr, v, qmul(f, pr, zero, u)) == qmul(f, pr, qmul(f, pr, v, zero), u)));
#endif
  return holds;
}

std::optional<ClassIndex> classify(const Field& f, SigmaPair pr, Elem u, Elem v) {
  const int cu = f.chi(u);
  const int cmv = f.chi(f.neg(v));
  const int cr = f.chi(f.sub(psi(f, pr, u), v));
  const int cs = f.chi(f.sub(f.sub(u, v), psi(f, pr, f.neg(v))));
  if (cu == 0 || cmv == 0 || cr == 0 || cs == 0) return std::nullopt;
  return ClassIndex{bit_of(cu), bit_of(cmv), bit_of(cr), bit_of(cs)};
}

std::vector<Solution> solutions_E(const Field& f, SigmaPair pr) {
  std::vector<Solution> out;
  for (std::uint32_t uc = 0; uc < f.order(); ++uc) {
    for (std::uint32_t vc = 0; vc < f.order(); ++vc) {
      if (uc == 0 && vc == 0) continue;
      const Elem u{uc}, v{vc};
      if (!assoc_eq_holds(f, pr, u, v)) continue;
      const auto cls = classify(f, pr, u, v);
      // Nonzero solutions never have a vanishing classifying quantity.
      if (!cls) throw Error("solution with a vanishing classifying quantity");
      out.push_back({u, v, *cls});
    }
  }
  return out;
}

ClassMask class_mask_E(const Field& f, SigmaPair pr) {
  ClassMask m = 0;
  for (const auto& s : solutions_E(f, pr)) m |= ClassMask(1u << s.cls.index());
  return m;
}

// Inside class (i, j, r, s) every psi is multiplication by a fixed constant
// c_i, c_j, c_r, c_s (a for bit 0, b for bit 1), and the equation becomes
//   (c_r c_i - c_s) u = (c_r - c_j - c_s + c_s c_j) v.
// The class is closed under (u, v) -> (t^2 u, t^2 v) and u has a fixed
// square class, so one representative u decides emptiness.
ClassMask class_mask_C(const Field& f, SigmaPair pr) {
  const Elem zeta = f.least_nonsquare();
  auto coef = [&](std::uint8_t bit) { return bit ? pr.b : pr.a; };
  ClassMask mask = 0;
  for (unsigned n = 0; n < 16; ++n) {
    const ClassIndex cls = ClassIndex::from_index(n);
    const Elem ci = coef(cls.i), cj = coef(cls.j), cr = coef(cls.r), cs = coef(cls.s);
    const Elem lhs = f.sub(f.mul(cr, ci), cs);
    const Elem rhs = f.add(f.sub(f.sub(cr, cj), cs), f.mul(cs, cj));
    const Elem u = cls.i ? zeta : f.one();
    bool nonempty = false;
    if (lhs.code != 0 && rhs.code != 0) {
      const Elem v = f.mul(f.div(lhs, rhs), u);
      const auto got = classify(f, pr, u, v);
      nonempty = got && *got == cls;
    } else if (lhs.code == 0 && rhs.code == 0) {
      // Every class-consistent pair solves the equation; scan the slice.
      for (std::uint32_t vc = 1; vc < f.order() && !nonempty; ++vc) {
        const auto got = classify(f, pr, u, Elem{vc});
        nonempty = got && *got == cls && assoc_eq_holds(f, pr, u, Elem{vc});
      }
    }
    // Exactly one zero coefficient forces u = 0 or v = 0: no solution.
    if (nonempty) mask |= ClassMask(1u << n);
  }
  return mask;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::A: return "A";
    case Method::B: return "B";
    case Method::Bscaled: return "Bscaled";
    case Method::C: return "C";
    case Method::D: return "D";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "A") return Method::A;
  if (s == "B") return Method::B;
  if (s == "Bscaled") return Method::Bscaled;
  if (s == "C") return Method::C;
  if (s == "D") return Method::D;
  return std::nullopt;
}

std::uint32_t method_limit(Method m) {
  switch (m) {
    case Method::A: return kMaxOrderA;
    case Method::B: return kMaxOrderB;
    case Method::Bscaled: return kMaxOrderBscaled;
    case Method::C:
    case Method::D: return static_cast<std::uint32_t>(Field::kMaxOrder);
  }
  return 0;
}

bool is_mna_A(const Field& f, SigmaPair pr, bool allow_large) {
  if (f.order() > kMaxOrderTriples && !allow_large)
    throw TooLarge("method A scans q^3 triples and is limited to q <= 64");
  const Quasigroup qg(f, pr);
  const std::uint32_t q = f.order();
  for (std::uint32_t u = 0; u < q; ++u) {
    for (std::uint32_t v = 0; v < q; ++v) {
      const Elem uv = qg(Elem{u}, Elem{v});
      for (std::uint32_t w = 0; w < q; ++w) {
        if (u == v && v == w) continue;
        if (qg(uv, Elem{w}) == qg(Elem{u}, qg(Elem{v}, Elem{w}))) return false;
      }
    }
  }
  return true;
}

bool is_mna_B(const Field& f, SigmaPair pr) {
  for (std::uint32_t u = 0; u < f.order(); ++u)
    for (std::uint32_t v = 0; v < f.order(); ++v)
      if ((u | v) != 0 && assoc_eq_holds(f, pr, Elem{u}, Elem{v})) return false;
  return true;
}

bool is_mna_Bscaled(const Field& f, SigmaPair pr) {
  const Elem zeta = f.least_nonsquare();
  for (Elem u : {f.one(), zeta})
    for (std::uint32_t v = 0; v < f.order(); ++v)
      if (assoc_eq_holds(f, pr, u, Elem{v})) return false;
  for (Elem v : {f.one(), zeta})
    if (assoc_eq_holds(f, pr, f.zero(), v)) return false;
  return true;
}

bool is_mna_C(const Field& f, SigmaPair pr) { return class_mask_C(f, pr) == 0; }

bool is_mna(const Field& f, SigmaPair pr, Method m) {
  switch (m) {
    case Method::A: return is_mna_A(f, pr, true);
    case Method::B: return is_mna_B(f, pr);
    case Method::Bscaled: return is_mna_Bscaled(f, pr);
    case Method::C: return is_mna_C(f, pr);
    case Method::D: break;
  }
  throw Error("method D decides on (x, y) pairs; use sigma_count_D");
}

std::uint64_t sigma_count(const Field& f, Method m, int jobs) {
  check_limit(f, m);
  if (m == Method::D) throw Error("method D is provided by sigma_count_D");
  const auto pairs = enumerate_sigma(f);
  const std::int64_t n = static_cast<std::int64_t>(pairs.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : count) num_threads(threads)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    if (is_mna(f, pairs[static_cast<std::size_t>(idx)], m)) ++count;
  }
  return count;
}

namespace serial {

std::uint64_t sigma_count(const Field& f, Method m) {
  check_limit(f, m);
  if (m == Method::D) throw Error("method D is provided by sigma_count_D");
  std::uint64_t count = 0;
  for (const auto& pr : enumerate_sigma(f))
    if (is_mna(f, pr, m)) ++count;
  return count;
}

}  // namespace serial
}  // namespace mna
