// mna: count, search and verify maximally nonassociative quasigroups Q_{a,b}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mna/assoc.hpp"
#include "mna/charset.hpp"
#include "mna/errors.hpp"
#include "mna/field.hpp"
#include "mna/report.hpp"
#include "mna/search.hpp"
#include "mna/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kGuard = 3;
constexpr int kExhausted = 4;
constexpr int kFailed = 5;

struct Options {
  std::vector<std::uint64_t> q;
  std::uint32_t qmax = 49;
  std::string method;
  std::uint64_t seed = 1;
  std::uint64_t max_attempts = 1000;
  int jobs = 0;
  std::string out;
  std::string format;  // empty: csv for density-table, json elsewhere
  std::string suite;
  std::string check;
  bool no_timing = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw mna::Error("cannot open " + o.out);
  f << text;
}

mna::Method method_or(const Options& o, mna::Method fallback) {
  if (o.method.empty()) return fallback;
  const auto m = mna::parse_method(o.method);
  if (!m) throw CLI::ValidationError("--method", "expected A, B, Bscaled, C or D");
  return *m;
}

std::uint64_t single_q(const Options& o) {
  if (o.q.size() != 1) throw CLI::ValidationError("--q", "exactly one value required");
  return o.q.front();
}

int cmd_count(const Options& o) {
  const mna::Field F(single_q(o));
  auto r = mna::count_sigma(F, method_or(o, mna::Method::C), o.jobs);
  if (o.no_timing) r.seconds = 0;
  if (o.format == "csv")
    emit(o, mna::csv_header() + "\n" + mna::to_csv_row(r) + "\n");
  else
    emit(o, mna::to_json(r).dump(2) + "\n");
  return kOk;
}

int cmd_search(const Options& o) {
  if (!o.check.empty()) {
    std::ifstream f(o.check);
    if (!f) throw mna::Error("cannot open " + o.check);
    const auto cert = mna::load_certificate(nlohmann::json::parse(f));
    std::cout << mna::to_json(cert).dump(2) << "\n";
    return kOk;
  }
  const mna::Field F(single_q(o));
  const auto cert = mna::search(F, o.seed, o.max_attempts);
  if (!cert) {
    std::cerr << "no maximally nonassociative pair in " << o.max_attempts << " attempts\n";
    return kExhausted;
  }
  emit(o, mna::to_json(*cert).dump(2) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  if (!mna::is_suite(o.suite)) {
    std::cerr << "unknown suite '" << o.suite << "'\n";
    return kUsage;
  }
  const auto res = mna::run_suite(o.suite, o.qmax, o.jobs, o.seed);
  emit(o, mna::to_json(res).dump(2) + "\n");
  std::cerr << o.suite << ": " << res.checks.size() << " checks, " << res.failures()
            << " failures\n";
  return res.passed() ? kOk : kFailed;
}

int cmd_density_table(const Options& o) {
  if (o.q.empty()) throw CLI::ValidationError("--q", "at least one value required");
  auto rows = mna::density_table(o.q, method_or(o, mna::Method::D), o.jobs);
  if (o.no_timing)
    for (auto& r : rows) r.seconds = 0;
  std::ostringstream s;
  if (o.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(mna::to_json(r));
    s << arr.dump(2) << "\n";
  } else {
    s << mna::csv_header() << "\n";
    for (const auto& r : rows) s << mna::to_csv_row(r) << "\n";
  }
  emit(o, s.str());
  return kOk;
}

int cmd_slices(const Options& o) {
  const mna::Field F(single_q(o));
  const auto reps = mna::all_slices(F, o.jobs);
  bool ok = true;
  std::ostringstream s;
  if (o.format == "csv") {
    s << "c,admissible,part,count,expected,radius,within\n";
    for (const auto& r : reps)
      for (const auto& c : r.counts)
        s << r.c.code << "," << (r.admissible ? 1 : 0) << "," << c.part << "," << c.count << ","
          << mna::format_number(c.expected) << "," << mna::format_number(c.radius) << ","
          << (c.within ? 1 : 0) << "\n";
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reps) {
      nlohmann::ordered_json j;
      j["c"] = r.c.code;
      j["admissible"] = r.admissible;
      for (const auto& c : r.counts)
        j["counts"].push_back({{"part", c.part},
                               {"count", c.count},
                               {"expected", c.expected},
                               {"radius", c.radius},
                               {"within", c.within}});
      arr.push_back(j);
    }
    s << arr.dump(2) << "\n";
  }
  for (const auto& r : reps) ok = ok && r.holds();
  emit(o, s.str());
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximally nonassociative quasigroups from quadratic orthomorphisms"};
  app.require_subcommand(1);
  Options o;

  auto add_jobs = [&o](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "Worker threads (0: runtime default)")->envname("MNA_JOBS");
  };
  auto add_out = [&o](CLI::App* c) { c->add_option("--out", o.out, "Write output to a file"); };
  auto add_format = [&o](CLI::App* c) {
    c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* count = app.add_subcommand("count", "Count sigma(q)");
  count->add_option("--q", o.q, "Field order")->required()->expected(1);
  count->add_option("--method", o.method, "A, B, Bscaled, C or D (default C)");
  count->add_flag("--no-timing", o.no_timing, "Report seconds as 0");
  add_jobs(count);
  add_out(count);

  auto* search = app.add_subcommand("search", "Find an MNA pair by random sampling");
  search->add_option("--q", o.q, "Field order")->expected(1);
  search->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  search->add_option("--max-attempts", o.max_attempts, "Sigma samples to try")
      ->capture_default_str();
  search->add_option("--check", o.check, "Re-verify a saved certificate");
  add_out(search);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", o.suite, "bijection, symmetry, methods, charset, weil, thm31, slices, partitions")
      ->required();
  verify->add_option("--qmax", o.qmax, "Largest field order")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for random lists")->capture_default_str();
  add_jobs(verify);
  add_out(verify);

  auto* table = app.add_subcommand("density-table", "sigma(q)/q^2 for several q");
  table->add_option("--q", o.q, "Field orders (repeat or comma-separated)")
      ->required()
      ->delimiter(',');
  table->add_option("--method", o.method, "Counting method (default D)");
  table->add_flag("--no-timing", o.no_timing, "Report seconds as 0");
  add_jobs(table);
  add_out(table);

  auto* slices = app.add_subcommand("slices", "Slice counts against their bounds");
  slices->add_option("--q", o.q, "Field order")->required()->expected(1);
  add_jobs(slices);
  add_out(slices);

  add_format(count);
  add_format(table);
  add_format(slices);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (o.format.empty()) o.format = table->parsed() ? "csv" : "json";
  if (search->parsed() && o.check.empty() && o.q.empty()) {
    std::cerr << "search: --q or --check required\n";
    return kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o);
    if (search->parsed()) return cmd_search(o);
    if (verify->parsed()) return cmd_verify(o);
    if (table->parsed()) return cmd_density_table(o);
    return cmd_slices(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const mna::NotOddPrimePower& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const mna::TooLarge& e) {
    std::cerr << e.what() << "\n";
    return kGuard;
  } catch (const mna::Error& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
