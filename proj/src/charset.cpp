#include "mna/charset.hpp"

#include <cmath>

#include <omp.h>

#include "mna/errors.hpp"
#include "mna/weil.hpp"

namespace mna {

namespace charpoly {

Elem f1(const Field& F, Elem x, Elem y) {
  // x^2 + y^2 - xy - x
  return F.sub(F.add(F.mul(x, x), F.mul(y, y)), F.add(F.mul(x, y), x));
}
Elem f2(const Field& F, Elem x, Elem y) { return f1(F, y, x); }
Elem f3(const Field& F, Elem x, Elem y) {
  // xy^2 + xy - x^2 - y^2
  const Elem xy = F.mul(x, y);
  return F.sub(F.add(F.mul(xy, y), xy), F.add(F.mul(x, x), F.mul(y, y)));
}
Elem f4(const Field& F, Elem x, Elem y) { return f3(F, y, x); }
Elem g1(const Field& F, Elem x, Elem y) {
  // x^2 + y - 2x
  return F.sub(F.add(F.mul(x, x), y), F.add(x, x));
}
Elem g2(const Field& F, Elem x, Elem y) { return g1(F, y, x); }
Elem g3(const Field& F, Elem x, Elem y) {
  // x^2 + y - 2xy
  const Elem xy = F.mul(x, y);
  return F.sub(F.add(F.mul(x, x), y), F.add(xy, xy));
}
Elem g4(const Field& F, Elem x, Elem y) { return g3(F, y, x); }

}  // namespace charpoly

PointChars point_chars(const Field& F, Elem x, Elem y) {
  const Elem one = F.one();
  const Elem xy = F.mul(x, y);
  PointChars pc;
  pc.x_minus_y = F.chi(F.sub(x, y));
  pc.one_minus_x = F.chi(F.sub(one, x));
  pc.one_minus_y = F.chi(F.sub(one, y));
  pc.y_plus_1_minus_x = F.chi(F.sub(F.add(y, one), x));
  pc.x_plus_1_minus_y = F.chi(F.sub(F.add(x, one), y));
  pc.y_plus_xy_minus_x = F.chi(F.sub(F.add(y, xy), x));
  pc.x_plus_xy_minus_y = F.chi(F.sub(F.add(x, xy), y));
  pc.f = {F.chi(charpoly::f1(F, x, y)), F.chi(charpoly::f2(F, x, y)),
          F.chi(charpoly::f3(F, x, y)), F.chi(charpoly::f4(F, x, y))};
  pc.g = {F.chi(charpoly::g1(F, x, y)), F.chi(charpoly::g2(F, x, y)),
          F.chi(charpoly::g3(F, x, y)), F.chi(charpoly::g4(F, x, y))};
  pc.minus_one = F.chi(F.neg(one));
  return pc;
}

bool regular_locus(const Field& F, Elem x, Elem y) {
  const Elem one = F.one();
  auto golden = [&](Elem t) { return F.sub(F.mul(t, t), F.add(t, one)).code == 0; };
  const bool first = F.sub(F.add(y, one), x).code == 0 && golden(x);
  const bool second = F.sub(F.add(x, one), y).code == 0 && golden(y);
  return !first && !second;
}

namespace {

constexpr unsigned idx(unsigned i, unsigned j, unsigned r, unsigned s) {
  return (i << 3) | (j << 2) | (r << 1) | s;
}

ClassMask mask_one_mod_four(const PointChars& pc) {
  const int e = pc.x_minus_y;
  const int ox = pc.one_minus_x, oy = pc.one_minus_y;
  const auto& f = pc.f;
  const auto& g = pc.g;
  ClassMask m = 0;
  auto set = [&m](bool cond, unsigned k) {
    if (cond) m |= static_cast<ClassMask>(1u << k);
  };
  const bool diag = ox == e && oy == e;
  set(diag, idx(0, 0, 0, 0));
  set(diag, idx(1, 1, 1, 1));
  set(f[0] == -e && f[1] == -e, idx(1, 1, 0, 0));
  set(f[2] == -e && f[3] == -e, idx(0, 0, 1, 1));
  set(ox == -e && pc.y_plus_1_minus_x == 1 && f[0] == e, idx(1, 1, 0, 1));
  set(oy == -e && pc.x_plus_1_minus_y == 1 && f[1] == e, idx(1, 1, 1, 0));
  set(ox == -e && pc.x_plus_xy_minus_y == 1 && f[2] == e, idx(0, 0, 1, 0));
  set(oy == -e && pc.y_plus_xy_minus_x == 1 && f[3] == e, idx(0, 0, 0, 1));
  const int eta1 = pc.y_plus_1_minus_x;
  set(eta1 != 0 && pc.y_plus_xy_minus_x == -eta1 && g[0] == -eta1 * e && g[3] == eta1 * e,
      idx(0, 1, 0, 1));
  const int eta2 = pc.x_plus_1_minus_y;
  set(eta2 != 0 && pc.x_plus_xy_minus_y == -eta2 && g[1] == -eta2 * e && g[2] == eta2 * e,
      idx(1, 0, 1, 0));
  return m;
}

ClassMask mask_three_mod_four(const PointChars& pc) {
  const int d = pc.x_minus_y;       // chi(x - y)
  const int dm = pc.minus_one * d;  // chi(y - x)
  const int mo = pc.minus_one;
  const int ox = pc.one_minus_x, oy = pc.one_minus_y;
  const int xm1my = mo * pc.y_plus_1_minus_x;  // chi(x - 1 - y)
  const int ym1mx = mo * pc.x_plus_1_minus_y;  // chi(y - 1 - x)
  const int ymxymx = mo * pc.x_plus_xy_minus_y;  // chi(y - xy - x)
  const int xmxymy = mo * pc.y_plus_xy_minus_x;  // chi(x - xy - y)
  const auto& f = pc.f;
  const auto& g = pc.g;
  ClassMask m = 0;
  auto set = [&m](bool cond, unsigned k) {
    if (cond) m |= static_cast<ClassMask>(1u << k);
  };
  const bool swap = oy * d == 1 && ox * dm == 1;
  set(swap, idx(0, 1, 1, 0));
  set(swap, idx(1, 0, 0, 1));
  set(ox * d == 1 && g[0] * dm == 1, idx(0, 1, 0, 0));
  set(oy * dm == 1 && g[1] * d == 1, idx(1, 0, 0, 0));
  set(ox * d == 1 && g[2] * d == 1, idx(1, 0, 1, 1));
  set(oy * dm == 1 && g[3] * dm == 1, idx(0, 1, 1, 1));
  set(ox * d == 1 && xm1my == 1 && d * f[0] == 1, idx(1, 1, 0, 1));
  set(oy * dm == 1 && ym1mx == 1 && dm * f[1] == 1, idx(1, 1, 1, 0));
  set(ox * d == 1 && ymxymx == 1 && d * f[2] == 1, idx(0, 0, 1, 0));
  set(oy * dm == 1 && xmxymy == 1 && dm * f[3] == 1, idx(0, 0, 0, 1));
  set(xmxymy * xm1my == 1 && g[0] * dm * xm1my == 1 && g[3] * dm * xm1my == 1,
      idx(0, 1, 0, 1));
  set(ymxymx * ym1mx == 1 && g[1] * d * ym1mx == 1 && g[2] * d * ym1mx == 1,
      idx(1, 0, 1, 0));
  return m;
}

}  // namespace

ClassMask s_class_mask(const PointChars& pc) {
  return pc.minus_one == 1 ? mask_one_mod_four(pc) : mask_three_mod_four(pc);
}

ClassMask s_class_mask(const Field& F, SPair sp) {
  if (!is_s_pair(F, sp)) throw NotInS("s_class_mask: pair is not in S");
  if (!regular_locus(F, sp.x, sp.y)) throw ExceptionalPair("s_class_mask: exceptional pair");
  return s_class_mask(point_chars(F, sp.x, sp.y));
}

bool s_class_member(const Field& F, SPair sp, ClassIndex cls) {
  return mask_has(s_class_mask(F, sp), cls);
}

bool in_union(const Field& F, Elem x, Elem y) {
  if (!regular_locus(F, x, y)) return true;
  return s_class_mask(point_chars(F, x, y)) != 0;
}

namespace {

std::vector<Elem> squares_except_one(const Field& F) {
  std::vector<Elem> out;
  for (Elem s : F.nonzero_squares())
    if (s != F.one()) out.push_back(s);
  return out;
}

std::uint64_t count_column(const Field& F, const std::vector<Elem>& sq, Elem y) {
  std::uint64_t n = 0;
  for (Elem x : sq)
    if (x != y && !in_union(F, x, y)) ++n;
  return n;
}

}  // namespace

std::uint64_t sigma_count_D(const Field& F, int jobs) {
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto sq = squares_except_one(F);
  const auto n = static_cast<std::int64_t>(sq.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) num_threads(threads)
  for (std::int64_t k = 0; k < n; ++k) total += count_column(F, sq, sq[static_cast<std::size_t>(k)]);
  return total;
}

namespace serial {
std::uint64_t sigma_count_D(const Field& F) {
  const auto sq = squares_except_one(F);
  std::uint64_t total = 0;
  for (Elem y : sq) total += count_column(F, sq, y);
  return total;
}
}  // namespace serial

std::vector<SPair> exceptional_pairs(const Field& F) {
  std::vector<SPair> out;
  for (const auto& sp : enumerate_s(F))
    if (!regular_locus(F, sp.x, sp.y)) out.push_back(sp);
  return out;
}

namespace {

enum class Part { NotT, T11, T1m, T2, T11p, T1mp, T2p, T1, Forbidden };

std::string part_name(Part p) {
  switch (p) {
    case Part::NotT: return "not in T";
    case Part::T11: return "T1,1";
    case Part::T1m: return "T1,-1";
    case Part::T2: return "T2";
    case Part::T11p: return "T1,1'";
    case Part::T1mp: return "T1,-1'";
    case Part::T2p: return "T2'";
    case Part::T1: return "T1";
    case Part::Forbidden: return "forbidden";
  }
  return "?";
}

// Part of T containing (x, y); precondition (x, y) in S.
Part t_part(const Field& F, Elem x, Elem y) {
  if (in_union(F, x, y)) return Part::NotT;
  const Elem one = F.one();
  const int ox = F.chi(F.sub(one, x)), oy = F.chi(F.sub(one, y));
  if (F.chi(F.neg(one)) == -1) {
    const bool primed = F.chi(F.sub(y, x)) != 1;
    const int a = primed ? oy : ox, b = primed ? ox : oy;
    if (a == 1 && b == 1) return primed ? Part::T11p : Part::T11;
    if (a == -1 && b == -1) return primed ? Part::T1mp : Part::T1m;
    if (a == -1 && b == 1) return primed ? Part::T2p : Part::T2;
    return Part::Forbidden;
  }
  const int e = F.chi(F.sub(x, y));
  if (ox == -e && oy == -e) return Part::T1;
  if (ox == e && oy == -e) return Part::T2;
  if (ox == -e && oy == e) return Part::T2p;
  return Part::Forbidden;
}

Part swap_image(Part p) {
  switch (p) {
    case Part::T11: return Part::T11p;
    case Part::T1m: return Part::T1mp;
    case Part::T2: return Part::T2p;
    case Part::T11p: return Part::T11;
    case Part::T1mp: return Part::T1m;
    case Part::T2p: return Part::T2;
    default: return p;
  }
}

Part inverse_image(Part p) {
  switch (p) {
    case Part::T11: return Part::T1mp;
    case Part::T1m: return Part::T11p;
    case Part::T2: return Part::T2p;
    case Part::T11p: return Part::T1m;
    case Part::T1mp: return Part::T11;
    case Part::T2p: return Part::T2;
    default: return p;
  }
}

std::string point_str(Elem x, Elem y) {
  return "(" + std::to_string(x.code) + "," + std::to_string(y.code) + ")";
}

struct TableRow {
  int part;
  std::array<int, 4> rho;
  std::array<int, 4> s;
  unsigned mu;
};

constexpr std::array<TableRow, 10> kTable{{
    {1, {1, 1, 1, 1}, {1, 1, 1, 1}, 1},
    {1, {1, 1, 1, -1}, {1, 1, 1, 0}, 4},
    {1, {1, -1, 1, -1}, {1, 0, 1, 0}, 2},
    {1, {1, -1, -1, 1}, {1, 0, 0, 1}, 2},
    {2, {1, 1, 1, 1}, {0, 1, 0, 1}, 1},
    {2, {1, 1, 1, -1}, {0, 1, 0, 0}, 2},
    {2, {1, -1, 1, -1}, {0, 0, 0, 0}, 1},
    {2, {1, -1, -1, 1}, {0, 0, 0, 1}, 2},
    {2, {1, 1, -1, 1}, {0, 1, 0, 1}, 2},
    {2, {-1, 1, -1, 1}, {0, 1, 0, 1}, 1},
}};

constexpr RhoIndex rho_of(const std::array<int, 4>& r) { return rho_index(r[0], r[1], r[2], r[3]); }

std::array<int, 4> rho_from_index(RhoIndex k) {
  return {(k >> 3) & 1 ? -1 : 1, (k >> 2) & 1 ? -1 : 1, (k >> 1) & 1 ? -1 : 1, k & 1 ? -1 : 1};
}

// s_j = 1 forces x-1-y, y-1-x, y-xy-x, x-xy-y (j = 1..4) to be a non-square.
bool respects_s(const Field& F, Elem x, Elem y, const std::array<int, 4>& s) {
  const Elem one = F.one(), xy = F.mul(x, y);
  const std::array<Elem, 4> v{F.sub(F.sub(x, one), y), F.sub(F.sub(y, one), x),
                              F.sub(F.sub(y, xy), x), F.sub(F.sub(x, xy), y)};
  for (std::size_t j = 0; j < 4; ++j)
    if (s[j] == 1 && F.chi(v[j]) == 1) return false;
  return true;
}

void finish_one_mod_four(const Field& F, TPartitionReport& rep,
                         const std::vector<std::pair<SPair, Part>>& pts) {
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };
  for (const auto& [sp, part] : pts) {
    const int e = F.chi(F.sub(sp.x, sp.y));
    std::array<int, 4> rho{};
    bool vanishes = false;
    const std::array<Elem, 4> fv{charpoly::f1(F, sp.x, sp.y), charpoly::f2(F, sp.x, sp.y),
                                 charpoly::f3(F, sp.x, sp.y), charpoly::f4(F, sp.x, sp.y)};
    for (std::size_t j = 0; j < 4; ++j) {
      rho[j] = e * F.chi(fv[j]);
      if (rho[j] == 0) vanishes = true;
    }
    if (vanishes) {
      ++rep.r_uncovered;
      continue;
    }
    const RhoIndex k = rho_of(rho);
    ++rep.r[k];
    if (part == Part::T1) ++rep.r1[k];
    if (part == Part::T2) ++rep.r2[k];
    if (part == Part::T1 || part == Part::T2) {
      const int i = part == Part::T1 ? 1 : 2;
      for (const auto& row : kTable) {
        if (row.part != i || row.rho != rho) continue;
        if (!respects_s(F, sp.x, sp.y, row.s))
          fail("s-pattern mismatch at " + point_str(sp.x, sp.y) + " in " + part_name(part));
      }
    }
  }
  if (rep.t_size != rep.t1 + 2 * rep.t2) fail("|T| != |T1| + 2|T2|");
  if (rep.t2 != rep.t2p) fail("|T2| != |T2'|");
  for (RhoIndex k = 0; k < 16; ++k) {
    const auto rho = rho_from_index(k);
    if (rep.r[k] == 0) continue;
    if (rho[2] == -1 && rho[3] == -1) fail("R(rho1, rho2, -1, -1) nonempty");
    if (rho[0] == -1 && rho[1] == -1) fail("R(-1, -1, rho3, rho4) nonempty");
  }
  for (RhoIndex k = 0; k < 16; ++k) {
    const auto rho = rho_from_index(k);
    const RhoIndex swapped = rho_index(rho[1], rho[0], rho[3], rho[2]);
    const RhoIndex rotated = rho_index(rho[2], rho[3], rho[0], rho[1]);
    if (rep.r1[k] != rep.r1[swapped]) fail("|R1(rho)| != |R1(rho2, rho1, rho4, rho3)|");
    if (rep.r1[k] != rep.r1[rotated]) fail("|R1(rho)| != |R1(rho3, rho4, rho1, rho2)|");
    if (rep.r2[k] != rep.r2[rotated]) fail("|R2(rho)| != |R2(rho3, rho4, rho1, rho2)|");
  }
  for (int i = 1; i <= 2; ++i) {
    const auto& ri = i == 1 ? rep.r1 : rep.r2;
    std::uint64_t weighted = 0, total = 0;
    for (const auto& row : kTable)
      if (row.part == i) weighted += row.mu * ri[rho_of(row.rho)];
    for (auto v : ri) total += v;
    if (weighted != total) fail("weighted table rows do not cover R" + std::to_string(i));
  }
}

}  // namespace

TPartitionReport t_partition(const Field& F) {
  TPartitionReport rep;
  rep.q = F.order();
  rep.mod4 = static_cast<int>(F.order() % 4);
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };
  std::vector<std::pair<SPair, Part>> pts;
  for (const auto& sp : enumerate_s(F)) {
    ++rep.s_size;
    if (!regular_locus(F, sp.x, sp.y)) ++rep.exceptional;
    const Part part = t_part(F, sp.x, sp.y);
    if (part == Part::NotT) continue;
    ++rep.t_size;
    pts.emplace_back(sp, part);
    switch (part) {
      case Part::T11: ++rep.t11; ++rep.t0; break;
      case Part::T1m: ++rep.t1m; ++rep.t0; break;
      case Part::T2: ++rep.t2; if (rep.mod4 == 3) ++rep.t0; break;
      case Part::T11p: ++rep.t11p; ++rep.t0p; break;
      case Part::T1mp: ++rep.t1mp; ++rep.t0p; break;
      case Part::T2p: ++rep.t2p; if (rep.mod4 == 3) ++rep.t0p; break;
      case Part::T1: ++rep.t1; break;
      case Part::Forbidden:
        fail("point " + point_str(sp.x, sp.y) + " of T in the forbidden part");
        break;
      case Part::NotT: break;
    }
  }
  if (rep.mod4 == 3) {
    for (const auto& [sp, part] : pts) {
      const Part s = t_part(F, sp.y, sp.x);
      if (s != swap_image(part))
        fail("swap sends " + point_str(sp.x, sp.y) + " from " + part_name(part) + " to " +
             part_name(s));
      const Part inv = t_part(F, F.inv(sp.x), F.inv(sp.y));
      if (inv != inverse_image(part))
        fail("inversion sends " + point_str(sp.x, sp.y) + " from " + part_name(part) + " to " +
             part_name(inv));
    }
    if (rep.t_size != rep.t0 + rep.t0p) fail("|T| != |T0| + |T0'|");
  } else {
    finish_one_mod_four(F, rep, pts);
  }
  return rep;
}

namespace {

bool valid_slice(const Field& F, Elem c) {
  if (F.chi(c) != 1 || c == F.one()) return false;
  if (F.order() % 4 == 3) return F.chi(F.sub(F.one(), c)) == 1;
  return true;
}

SliceCount make_count(std::string part, std::uint64_t count, double density, double q,
                      double coeff) {
  SliceCount sc;
  sc.part = std::move(part);
  sc.count = count;
  sc.expected = density * q;
  sc.radius = (std::sqrt(q) + 1) * coeff + 21;
  sc.within = std::abs(static_cast<double>(count) - sc.expected) <= sc.radius;
  return sc;
}

}  // namespace

SliceReport slice_counters(const Field& F, Elem c) {
  if (!valid_slice(F, c)) throw BadSliceParam("slice_counters: invalid slice parameter");
  std::uint64_t n_first = 0, n_second = 0;
  const bool three = F.order() % 4 == 3;
  for (Elem x : F.nonzero_squares()) {
    if (!is_s_pair(F, x, c)) continue;
    const Part p = t_part(F, x, c);
    if (three) {
      if (p == Part::T2) ++n_first;
      if (p == Part::T11) ++n_second;
    } else {
      if (p == Part::T1) ++n_first;
      if (p == Part::T2) ++n_second;
    }
  }
  const double q = F.order();
  SliceReport rep;
  rep.c = c;
  rep.admissible = check_admissible(F, c).admissible;
  if (three) {
    rep.counts = {make_count("T2", n_first, std::ldexp(25.0, -15), q, 165.0 / 2),
                  make_count("T1,1", n_second, std::ldexp(25.0, -11), q, 96.0)};
  } else {
    rep.counts = {make_count("T1", n_first, std::ldexp(169.0, -14), q, 1161.0 / 2),
                  make_count("T2", n_second, std::ldexp(49.0, -11), q, 4455.0 / 2)};
  }
  return rep;
}

std::vector<SliceReport> all_slices(const Field& F, int jobs) {
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<Elem> params;
  for (std::uint32_t c = 0; c < F.order(); ++c)
    if (valid_slice(F, Elem{c})) params.push_back(Elem{c});
  std::vector<SliceReport> out(params.size());
  const auto n = static_cast<std::int64_t>(params.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i] = slice_counters(F, params[i]);
  }
  return out;
}

}  // namespace mna
