#include "mna/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "mna/charset.hpp"
#include "mna/errors.hpp"

namespace mna {

Rational density_limit(std::uint64_t q) {
  if (q % 4 == 1) return {953, 32768};
  return {825, 65536};
}

double limit_display(Rational r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", static_cast<double>(r.num) / static_cast<double>(r.den));
  return std::strtod(buf, nullptr);
}

double global_bound(std::uint64_t q) {
  const double x = static_cast<double>(q);
  if (q % 4 == 1) return 2518 * x * std::sqrt(x) + 2623 * x;
  return 138 * x * std::sqrt(x) + 235 * x;
}

SigmaReport make_sigma_report(std::uint32_t q, std::uint64_t sigma, Method m, double seconds) {
  SigmaReport r;
  r.q = q;
  r.mod4 = static_cast<int>(q % 4);
  r.sigma_set_size = sigma_size(q);
  r.sigma = sigma;
  r.sigma_count_method = std::string(method_name(m));
  const Rational lim = density_limit(q);
  const auto q2 = static_cast<std::int64_t>(q) * q;
  // |sigma * den - num * q^2| is exact in 64 bits for q <= 2^20.
  const auto gap_num = std::llabs(static_cast<std::int64_t>(sigma) * lim.den - lim.num * q2);
  r.density = static_cast<double>(sigma) / static_cast<double>(q2);
  r.limit = limit_display(lim);
  r.abs_gap = static_cast<double>(gap_num) / (static_cast<double>(lim.den) * static_cast<double>(q2));
  r.bound_slack = global_bound(q) - static_cast<double>(gap_num) / static_cast<double>(lim.den);
  r.seconds = seconds;
  return r;
}

SigmaReport count_sigma(const Field& F, Method m, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t sigma = m == Method::D ? sigma_count_D(F, jobs) : sigma_count(F, m, jobs);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return make_sigma_report(F.order(), sigma, m, dt.count());
}

std::string format_number(double x) { return nlohmann::json(x).dump(); }

nlohmann::ordered_json to_json(const SigmaReport& r) {
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["mod4"] = r.mod4;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["sigma_set_size"] = r.sigma_set_size;
  j["sigma"] = r.sigma;
  j["sigma_count_method"] = r.sigma_count_method;
  j["density"] = r.density;
  j["limit"] = r.limit;
  j["abs_gap"] = r.abs_gap;
  j["bound_slack"] = r.bound_slack;
  j["seconds"] = r.seconds;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

std::string csv_header() {
  return "q,mod4,sigma,sigma_count_method,density,limit,abs_gap,bound_slack,seconds";
}

std::string to_csv_row(const SigmaReport& r) {
  std::string row = std::to_string(r.q) + "," + std::to_string(r.mod4) + ",";
  if (r.error) {
    std::string msg = *r.error;
    std::replace(msg.begin(), msg.end(), ',', ';');
    return row + ",error: " + msg + ",,,,,";
  }
  row += std::to_string(r.sigma) + "," + r.sigma_count_method + ",";
  row += format_number(r.density) + "," + format_number(r.limit) + ",";
  row += format_number(r.abs_gap) + "," + format_number(r.bound_slack) + ",";
  row += format_number(r.seconds);
  return row;
}

std::vector<SigmaReport> density_table(std::vector<std::uint64_t> qs, Method m, int jobs) {
  std::sort(qs.begin(), qs.end());
  std::vector<SigmaReport> rows;
  for (std::uint64_t q : qs) {
    try {
      const Field F(q);
      rows.push_back(count_sigma(F, m, jobs));
    } catch (const Error& e) {
      SigmaReport r;
      r.q = static_cast<std::uint32_t>(std::min<std::uint64_t>(q, UINT32_MAX));
      r.mod4 = static_cast<int>(q % 4);
      r.sigma_count_method = std::string(method_name(m));
      r.error = e.what();
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace mna
