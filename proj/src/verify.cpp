#include "mna/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "mna/assoc.hpp"
#include "mna/charset.hpp"
#include "mna/errors.hpp"
#include "mna/field.hpp"
#include "mna/poly.hpp"
#include "mna/quasigroup.hpp"
#include "mna/report.hpp"
#include "mna/search.hpp"
#include "mna/weil.hpp"

namespace mna {

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "bijection", "symmetry", "methods", "charset", "weil", "thm31", "slices", "partitions"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

const std::vector<std::pair<std::uint32_t, std::uint64_t>>& frozen_sigma() {
  static const std::vector<std::pair<std::uint32_t, std::uint64_t>> values{
      {9, 6}, {11, 0}, {13, 10}, {17, 4}, {19, 4}, {23, 8}, {25, 32}, {27, 24}};
  return values;
}

namespace {

using Checks = std::vector<CheckResult>;

std::string pt(Elem u, Elem v) {
  return "(" + std::to_string(u.code) + "," + std::to_string(v.code) + ")";
}

void add(Checks& out, std::string name, const Field& F, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), F.order(), ok, std::move(detail)});
}

// ---- bijection ----

void bijection(const Field& F, Checks& out) {
  const auto sigma = enumerate_sigma(F);
  const auto s = enumerate_s(F);
  const std::uint64_t expect = sigma_size(F.order());
  add(out, "sigma_size", F, sigma.size() == expect,
      std::to_string(sigma.size()) + " vs " + std::to_string(expect));
  add(out, "s_size", F, s.size() == expect,
      std::to_string(s.size()) + " vs " + std::to_string(expect));
  std::string bad;
  for (const auto& pr : sigma)
    if (phi_map(F, psi_map(F, pr)) != pr && bad.empty()) bad = "phi(psi" + pt(pr.a, pr.b) + ")";
  for (const auto& sp : s)
    if (psi_map(F, phi_map(F, sp)) != sp && bad.empty()) bad = "psi(phi" + pt(sp.x, sp.y) + ")";
  add(out, "psi_phi_inverse", F, bad.empty(), bad);
  if (F.order() <= 49) {
    std::string q_bad;
    for (const auto& pr : sigma) {
      const Quasigroup qg(F, pr);
      if (!(qg.is_latin() && qg.is_idempotent() && is_orthomorphism(F, pr)) && q_bad.empty())
        q_bad = pt(pr.a, pr.b);
    }
    add(out, "idempotent_latin_orthomorphism", F, q_bad.empty(), q_bad);
  }
}

// ---- symmetry ----

// Class of (u, v) if it solves the associativity equation.
std::optional<ClassIndex> solution_class(const Field& F, SigmaPair pr, Elem u, Elem v) {
  if (!assoc_eq_holds(F, pr, u, v)) return std::nullopt;
  const auto c = classify(F, pr, u, v);
  if (!c) throw Error("solution with a vanishing classifying quantity at " + pt(u, v));
  return c;
}

ClassIndex flip_all(ClassIndex c) {
  return {static_cast<std::uint8_t>(1 - c.i), static_cast<std::uint8_t>(1 - c.j),
          static_cast<std::uint8_t>(1 - c.r), static_cast<std::uint8_t>(1 - c.s)};
}
ClassIndex transpose(ClassIndex c) { return {c.j, c.i, c.s, c.r}; }

ClassMask map_mask(ClassMask m, ClassIndex (*f)(ClassIndex)) {
  ClassMask out = 0;
  for (unsigned k = 0; k < 16; ++k)
    if ((m >> k) & 1u) out |= static_cast<ClassMask>(1u << f(ClassIndex::from_index(k)).index());
  return out;
}

void symmetry(const Field& F, Checks& out) {
  const auto sigma = enumerate_sigma(F);
  const Elem one = F.one();
  const Elem zeta = F.least_nonsquare();
  const bool minus_one_square = F.chi(F.neg(one)) == 1;

  std::string iso_bad;
  for (const auto& pr : sigma) {
    const auto rep = opposite_and_iso_checks(F, pr, zeta);
    if (!(rep.isomorphism_holds && rep.opposite_holds) && iso_bad.empty()) iso_bad = pt(pr.a, pr.b);
  }
  add(out, "isomorphism_and_opposite", F, iso_bad.empty(), iso_bad);

  // Transport of solutions and their classes.
  std::string tr_bad;
  for (const auto& pr : sigma) {
    const SigmaPair swapped{pr.b, pr.a};
    const SigmaPair comp = minus_one_square ? SigmaPair{F.sub(one, pr.a), F.sub(one, pr.b)}
                                            : SigmaPair{F.sub(one, pr.b), F.sub(one, pr.a)};
    for (std::uint32_t u = 0; u < F.order() && tr_bad.empty(); ++u) {
      for (std::uint32_t v = 0; v < F.order(); ++v) {
        if ((u | v) == 0) continue;
        const Elem eu{u}, ev{v};
        const auto c = solution_class(F, pr, eu, ev);
        const auto c1 = solution_class(F, swapped, F.mul(zeta, eu), F.mul(zeta, ev));
        const auto c2 = solution_class(F, comp, ev, eu);
        bool ok = c.has_value() == c1.has_value() && c.has_value() == c2.has_value();
        if (ok && c) {
          const ClassIndex want2 = minus_one_square ? transpose(*c) : flip_all(transpose(*c));
          ok = *c1 == flip_all(*c) && *c2 == want2;
        }
        if (!ok) {
          tr_bad = pt(pr.a, pr.b) + " at " + pt(eu, ev);
          break;
        }
      }
    }
  }
  add(out, "solution_transports", F, tr_bad.empty(), tr_bad);

  // Class symmetries on Sigma.
  std::string sc_bad;
  for (const auto& pr : sigma) {
    const ClassMask m = class_mask_E(F, pr);
    const ClassMask mc = class_mask_E(F, {F.sub(one, pr.a), F.sub(one, pr.b)});
    const ClassMask ms = class_mask_E(F, {pr.b, pr.a});
    if ((map_mask(m, transpose) != mc || map_mask(m, flip_all) != ms) && sc_bad.empty())
      sc_bad = pt(pr.a, pr.b);
  }
  add(out, "sigma_class_symmetry", F, sc_bad.empty(), sc_bad);

  // The same on S through the character tables, and closure of T.
  std::string ss_bad, t_bad;
  for (const auto& sp : enumerate_s(F)) {
    const Elem ix = F.inv(sp.x), iy = F.inv(sp.y);
    if (in_union(F, sp.x, sp.y) != in_union(F, sp.y, sp.x) ||
        in_union(F, sp.x, sp.y) != in_union(F, ix, iy)) {
      if (t_bad.empty()) t_bad = pt(sp.x, sp.y);
    }
    if (!regular_locus(F, sp.x, sp.y) || !regular_locus(F, sp.y, sp.x) ||
        !regular_locus(F, ix, iy))
      continue;
    const ClassMask m = s_class_mask(F, sp);
    if ((map_mask(m, transpose) != s_class_mask(F, {sp.y, sp.x}) ||
         map_mask(m, flip_all) != s_class_mask(F, {ix, iy})) &&
        ss_bad.empty())
      ss_bad = pt(sp.x, sp.y);
  }
  add(out, "s_class_symmetry", F, ss_bad.empty(), ss_bad);
  add(out, "t_closed_under_swap_and_inversion", F, t_bad.empty(), t_bad);
}

// ---- methods ----

void methods(const Field& F, Checks& out, int jobs) {
  const std::uint32_t q = F.order();
  std::vector<std::pair<Method, std::uint64_t>> counts;
  if (q <= method_limit(Method::A)) counts.emplace_back(Method::A, sigma_count(F, Method::A, jobs));
  if (q <= 49) counts.emplace_back(Method::B, sigma_count(F, Method::B, jobs));
  if (q <= method_limit(Method::Bscaled))
    counts.emplace_back(Method::Bscaled, sigma_count(F, Method::Bscaled, jobs));
  counts.emplace_back(Method::C, sigma_count(F, Method::C, jobs));
  counts.emplace_back(Method::D, sigma_count_D(F, jobs));
  std::ostringstream detail;
  bool agree = true;
  for (const auto& [m, n] : counts) {
    detail << method_name(m) << "=" << n << " ";
    agree = agree && n == counts.front().second;
  }
  add(out, "methods_agree", F, agree, detail.str());
  for (const auto& [fq, fs] : frozen_sigma()) {
    if (fq != q) continue;
    add(out, "frozen_sigma", F, counts.front().second == fs,
        std::to_string(counts.front().second) + " vs " + std::to_string(fs));
  }
  const auto rep = make_sigma_report(q, counts.back().second, Method::D, 0);
  add(out, "global_bound", F, rep.bound_slack > 0, "slack " + format_number(rep.bound_slack));
}

// ---- charset ----

void charset(const Field& F, Checks& out) {
  std::uint64_t checked = 0, exceptional = 0;
  std::string bad;
  for (const auto& sp : enumerate_s(F)) {
    if (!regular_locus(F, sp.x, sp.y)) {
      ++exceptional;
      continue;
    }
    ++checked;
    if (s_class_mask(F, sp) != class_mask_E(F, phi_map(F, sp)) && bad.empty())
      bad = pt(sp.x, sp.y);
  }
  add(out, "tables_match_scan", F, bad.empty(),
      bad.empty() ? std::to_string(checked) + " pairs, " + std::to_string(exceptional) +
                        " exceptional skipped"
                  : "first mismatch at " + bad);
}

// ---- weil ----

Poly random_poly(const Field& F, int degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = Elem{static_cast<std::uint32_t>(bounded_draw(rng, F.order()))};
  c.back() = Elem{static_cast<std::uint32_t>(1 + bounded_draw(rng, F.order() - 1))};
  return Poly(std::move(c));
}

std::vector<PolySpec> random_squarefree_list(const Field& F, std::mt19937_64& rng) {
  for (;;) {
    const int k = static_cast<int>(1 + bounded_draw(rng, 4));
    std::vector<PolySpec> specs;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      const int room = 8 - total - (k - 1 - i);
      const int d = static_cast<int>(1 + bounded_draw(rng, static_cast<std::uint64_t>(std::min(room, 4))));
      total += d;
      specs.push_back({random_poly(F, d, rng), bounded_draw(rng, 2) ? 1 : -1});
    }
    std::vector<Poly> polys;
    for (const auto& s : specs) polys.push_back(s.poly);
    if (is_squarefree_list(F, polys).square_free) return specs;
  }
}

void weil(const Field& F, Checks& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (std::uint64_t{F.order()} << 32));
  constexpr int kLists = 200;
  int violations = 0;
  double worst = 0;
  for (int n = 0; n < kLists; ++n) {
    const auto specs = random_squarefree_list(F, rng);
    const auto chk = check_sign_pattern(F, specs);
    if (!chk.within_bound) ++violations;
    worst = std::max(worst, std::abs(static_cast<double>(chk.count) - chk.expected) / chk.radius);
  }
  add(out, "character_sum_bound", F, violations == 0,
      std::to_string(kLists) + " lists, " + std::to_string(violations) +
          " violations, max |N - q/2^k| / radius = " + format_number(worst));
}

// ---- thm31 ----

void thm31(const Field& F, Checks& out, int jobs) {
  const auto rep = verify_slice_lists(F, jobs);
  std::ostringstream d;
  d << rep.admissible << " admissible; not square-free " << rep.not_square_free
    << ", |R(c)| != 7 " << rep.root_set_wrong_size << ", double roots " << rep.double_roots
    << ", root set hits " << rep.root_set_hits << ", shared f roots " << rep.shared_f_roots;
  add(out, "slice_lists", F, rep.ok(), d.str());
  const std::uint32_t q = F.order();
  if (q % 4 == 3) {
    add(out, "square_pair_count", F, rep.square_pairs == (q - 3) / 4,
        std::to_string(rep.square_pairs) + " vs " + std::to_string((q - 3) / 4));
    add(out, "inadmissible_square_pairs", F, rep.square_pairs_inadmissible <= 22,
        std::to_string(rep.square_pairs_inadmissible));
  } else {
    add(out, "inadmissible_squares", F, rep.squares_inadmissible <= 49,
        std::to_string(rep.squares_inadmissible));
  }
  if (!rep.three_quadratic_only.empty()) {
    std::ostringstream e;
    e << "observed:";
    for (const auto& [c, sf] : rep.three_quadratic_only)
      e << " c=" << c.code << (sf ? " square-free" : " not square-free");
    add(out, "three_quadratic_only_report", F, true, e.str());
  }
}

// ---- slices ----

void slices(const Field& F, Checks& out, int jobs) {
  std::uint64_t admissible = 0;
  std::string bad;
  for (const auto& r : all_slices(F, jobs)) {
    if (r.admissible) ++admissible;
    if (!r.holds() && bad.empty()) bad = "c=" + std::to_string(r.c.code);
  }
  add(out, "slice_bounds", F, bad.empty(),
      bad.empty() ? std::to_string(admissible) + " admissible c" : "first violation at " + bad);
}

// ---- partitions ----

void partitions(const Field& F, Checks& out, int jobs) {
  const auto rep = t_partition(F);
  std::string detail;
  for (const auto& f : rep.failures) detail += f + "; ";
  add(out, "t_partition", F, rep.ok(), detail);
  const std::uint64_t sigma = sigma_count(F, Method::C, jobs);
  add(out, "t_size_is_sigma", F, rep.t_size == sigma,
      std::to_string(rep.t_size) + " vs " + std::to_string(sigma));
}

}  // namespace

SuiteResult run_suite(std::string_view name, std::uint32_t qmax, int jobs, std::uint64_t seed) {
  if (!is_suite(name)) throw Error("unknown suite: " + std::string(name));
  SuiteResult res{std::string(name), qmax, {}};
  const std::uint32_t lo = name == "methods" ? 9 : 5;
  for (std::uint32_t q : odd_prime_powers(lo, qmax)) {
    if (name == "weil" && factor_prime_power(q).k != 1) continue;
    const Field F(q);
    if (name == "bijection") bijection(F, res.checks);
    else if (name == "symmetry") symmetry(F, res.checks);
    else if (name == "methods") methods(F, res.checks, jobs);
    else if (name == "charset") charset(F, res.checks);
    else if (name == "weil") weil(F, res.checks, seed);
    else if (name == "thm31") thm31(F, res.checks, jobs);
    else if (name == "slices") slices(F, res.checks, jobs);
    else partitions(F, res.checks, jobs);
  }
  return res;
}

nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["q"] = c.q;
  j["passed"] = c.passed;
  j["detail"] = c.detail;
  return j;
}

nlohmann::ordered_json to_json(const SuiteResult& s) {
  nlohmann::ordered_json j;
  j["suite"] = s.suite;
  j["qmax"] = s.qmax;
  j["passed"] = s.passed();
  j["failures"] = s.failures();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) j["checks"].push_back(to_json(c));
  return j;
}

}  // namespace mna
