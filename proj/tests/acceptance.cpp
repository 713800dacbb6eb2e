// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "mna/assoc.hpp"
#include "mna/charset.hpp"
#include "mna/errors.hpp"
#include "mna/field.hpp"
#include "mna/quasigroup.hpp"
#include "mna/report.hpp"
#include "mna/search.hpp"
#include "mna/verify.hpp"
#include "mna/weil.hpp"
#include "oracle_fixtures.hpp"

namespace {

using namespace mna;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

std::string suite_failure(const SuiteResult& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return r.suite + "/" + c.name + " q=" + std::to_string(c.q) + " " + c.detail;
  return {};
}

Outcome cardinality() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for (std::uint32_t q : odd_prime_powers(3, 199)) {
    const Field F(q);
    const std::uint64_t want = (std::uint64_t{q} * q - 8 * q + 15) / 4;
    if (enumerate_sigma(F).size() != want || enumerate_s(F).size() != want)
      fail(o, "|Sigma| mismatch at q=" + std::to_string(q));
    ++n;
  }
  const double s = since(t0);
  if (s >= 10) fail(o, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(n) + " prime powers, " + format_number(s) + " s";
  return o;
}

Outcome method_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& [q, frozen] : frozen_sigma()) {
    const Field F(q);
    const auto a = sigma_count(F, Method::A, 1);
    for (Method m : {Method::B, Method::Bscaled, Method::C})
      if (sigma_count(F, m, 1) != a)
        fail(o, std::string(method_name(m)) + " != A at q=" + std::to_string(q));
  }
  std::size_t n = 0;
  for (std::uint32_t q : odd_prime_powers(9, 125)) {
    const Field F(q);
    const auto c = sigma_count(F, Method::C, 1);
    if (sigma_count(F, Method::Bscaled, 1) != c) fail(o, "Bscaled != C at q=" + std::to_string(q));
    if (sigma_count_D(F, 1) != c) fail(o, "D != C at q=" + std::to_string(q));
    ++n;
  }
  const double s = since(t0);
  if (s >= 300) fail(o, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "A=B=Bscaled=C on 8 q, Bscaled=C=D on " + std::to_string(n) + " q, " +
                       format_number(s) + " s single-threaded";
  return o;
}

Outcome characterization() {
  Outcome o;
  std::uint64_t pairs = 0;
  for (std::uint32_t q : {13u, 17u, 19u, 23u, 25u, 27u}) {
    const Field F(q);
    for (const auto& sp : enumerate_s(F)) {
      if (!regular_locus(F, sp.x, sp.y)) continue;
      ++pairs;
      if (s_class_mask(F, sp) != class_mask_E(F, phi_map(F, sp)))
        fail(o, "mismatch at q=" + std::to_string(q));
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs x 16 classes";
  return o;
}

Outcome symmetries() {
  Outcome o;
  std::size_t checks = 0;
  for (const char* s : {"symmetry", "partitions"}) {
    const auto r = run_suite(s, 49);
    checks += r.checks.size();
    if (!r.passed()) fail(o, suite_failure(r));
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks, q <= 49";
  return o;
}

Outcome slice_lists() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = run_suite("thm31", 199);
  std::uint64_t admissible = 0;
  for (const auto& c : r.checks)
    if (c.name == "slice_lists") admissible += std::stoull(c.detail);
  if (!r.passed()) fail(o, suite_failure(r));
  const double s = since(t0);
  if (s >= 120) fail(o, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(admissible) + " admissible c, " + format_number(s) + " s";
  return o;
}

Outcome character_sums() {
  Outcome o;
  const auto r = run_suite("weil", 199, 0, 1);
  if (!r.passed()) fail(o, suite_failure(r));
  if (o.ok) o.detail = std::to_string(r.checks.size()) + " primes x 200 lists";
  return o;
}

Outcome slice_bounds() {
  Outcome o;
  std::uint64_t admissible = 0;
  for (std::uint32_t q : {31u, 43u, 47u, 59u, 71u, 29u, 37u, 41u, 53u}) {
    const Field F(q);
    for (const auto& r : all_slices(F)) {
      if (r.admissible) ++admissible;
      if (!r.holds()) fail(o, "q=" + std::to_string(q) + " c=" + std::to_string(r.c.code));
    }
  }
  if (o.ok) o.detail = std::to_string(admissible) + " admissible slices";
  return o;
}

Outcome global_bounds(std::map<std::uint32_t, std::uint64_t>& sigma_cache) {
  Outcome o;
  std::size_t n = 0;
  auto check = [&](std::uint32_t q) {
    const auto r = count_sigma(Field(q), Method::D);
    sigma_cache[q] = r.sigma;
    if (!(r.bound_slack > 0)) fail(o, "q=" + std::to_string(q) + " slack " + format_number(r.bound_slack));
    ++n;
    return r;
  };
  for (std::uint32_t q : odd_prime_powers(9, 1000)) check(q);
  std::ostringstream d;
  for (std::uint32_t q : {10007u, 10009u}) {
    const auto r = check(q);
    d << " q=" << q << " sigma=" << r.sigma << " density=" << format_number(r.density)
      << " " << format_number(r.seconds) << " s;";
  }
  if (o.ok) o.detail = std::to_string(n) + " q;" + d.str();
  return o;
}

Outcome counting_identity() {
  Outcome o;
  std::size_t n = 0;
  for (std::uint32_t q : odd_prime_powers(7, 199)) {
    if (q % 4 != 3) continue;
    const Field F(q);
    std::uint64_t count = 0;
    for (std::uint32_t c = 0; c < q; ++c)
      if (F.chi(Elem{c}) == 1 && F.chi(F.sub(F.one(), Elem{c})) == 1) ++count;
    if (count != (q - 3) / 4) fail(o, "q=" + std::to_string(q));
    ++n;
  }
  if (o.ok) o.detail = std::to_string(n) + " prime powers";
  return o;
}

Outcome search_stats(const std::map<std::uint32_t, std::uint64_t>& sigma_cache) {
  Outcome o;
  std::ostringstream d;
  for (auto [q, reference] : {std::pair{10009u, 1 / 8.596}, std::pair{10007u, 1 / 19.86}}) {
    const Field F(q);
    const auto s = search_statistics(F, 2024, 10000);
    const double p = static_cast<double>(sigma_cache.at(q)) / static_cast<double>(sigma_size(q));
    const double sd = std::sqrt(p * (1 - p) / static_cast<double>(s.samples));
    const double z = (s.frequency() - p) / sd;
    if (s.samples != 10000 || std::abs(z) >= 3) fail(o, "q=" + std::to_string(q) + " z=" + format_number(z));
    d << (d.tellp() > 0 ? " " : "") << "q=" << q << " freq=" << format_number(s.frequency()) << " exact=" << format_number(p)
      << " z=" << format_number(z) << " asymptotic=" << format_number(reference) << ";";
  }
  o.detail = (o.ok ? std::string() : o.detail + " |") + d.str();
  return o;
}

Outcome regression_freeze() {
  Outcome o;
  std::map<std::uint32_t, std::uint64_t> oracle;
  for (const auto& row : testing::oracle_rows()) oracle[row.q] = row.sigma;
  for (const auto& [q, frozen] : frozen_sigma()) {
    const Field F(q);
    const auto a = sigma_count(F, Method::A);
    const auto b = sigma_count(F, Method::B);
    if (!oracle.count(q) || oracle[q] != frozen || a != frozen || b != frozen)
      fail(o, "q=" + std::to_string(q));
  }
  if (oracle.size() != frozen_sigma().size()) fail(o, "fixture size");
  if (o.ok) o.detail = "8 values agree with the oracle fixture, A and B";
  return o;
}

}  // namespace

int main() {
  std::map<std::uint32_t, std::uint64_t> sigma_cache;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cardinality", cardinality},
      {"method_equivalence", method_equivalence},
      {"characterization", characterization},
      {"symmetries", symmetries},
      {"slice_lists_square_free", slice_lists},
      {"character_sum_bound", character_sums},
      {"slice_bounds", slice_bounds},
      {"global_bounds", [&] { return global_bounds(sigma_cache); }},
      {"counting_identity", counting_identity},
      {"search_statistics", [&] { return search_stats(sigma_cache); }},
      {"regression_freeze", regression_freeze},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
