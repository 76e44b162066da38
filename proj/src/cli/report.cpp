#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "cosets/errors.hpp"
#include "cosets/verify.hpp"

namespace cosets {

using nlohmann::json;

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> v{Suite::reciprocity, Suite::homology, Suite::join, Suite::altgen, Suite::a7, Suite::identities};
  return v;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::reciprocity: return "reciprocity";
    case Suite::homology: return "homology";
    case Suite::join: return "join";
    case Suite::altgen: return "altgen";
    case Suite::a7: return "a7";
    case Suite::identities: return "identities";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

void SuiteConfig::validate() const {
  if (!is_prime(prime)) throw PreconditionError("--prime " + std::to_string(prime) + " is not prime");
  if (max_order > lattice_bound)
    throw PreconditionError("max_order " + std::to_string(max_order) + " exceeds the lattice bound " + std::to_string(lattice_bound));
  if (reciprocity_max_order > lattice_bound)
    throw PreconditionError("reciprocity bound " + std::to_string(reciprocity_max_order) + " exceeds the lattice bound " +
                            std::to_string(lattice_bound));
}

json SuiteConfig::to_json() const {
  json names = json::array();
  for (Suite s : suites.empty() ? all_suites() : suites) names.push_back(std::string(suite_name(s)));
  return {{"catalog", catalog_path},   {"max_order", max_order}, {"reciprocity_max_order", reciprocity_max_order},
          {"lattice_bound", lattice_bound}, {"prime", prime},       {"suites", names},
          {"slow", slow}};
}

bool VerificationReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

json VerificationReport::to_json() const {
  json recs = json::array();
  for (const auto& r : records)
    recs.push_back({{"suite", r.suite},
                    {"subject", r.subject},
                    {"verdict", r.pass ? "pass" : "fail"},
                    {"values", r.values},
                    {"witnesses", r.witnesses},
                    {"millis", r.millis}});
  return {{"version", 1}, {"timestamp", timestamp}, {"config", config.to_json()}, {"records", recs}, {"overall", passed() ? "pass" : "fail"}};
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : records) {
    failed += !r.pass;
    os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.suite << r.subject;
    if (!config.deterministic) os << "  (" << std::fixed << std::setprecision(0) << r.millis << " ms)";
    if (r.values.contains("error")) os << "  error: " << r.values["error"].get<std::string>();
    os << '\n';
  }
  os << records.size() - failed << '/' << records.size() << " records pass; overall " << (passed() ? "pass" : "fail") << '\n';
  return os.str();
}

std::vector<const Record*> VerificationReport::of_suite(Suite s) const {
  std::vector<const Record*> out;
  for (const auto& r : records)
    if (r.suite == suite_name(s)) out.push_back(&r);
  return out;
}

const Record* VerificationReport::find(Suite s, std::string_view subject) const {
  for (const auto& r : records)
    if (r.suite == suite_name(s) && r.subject == subject) return &r;
  return nullptr;
}

std::vector<Record> run_jobs(std::vector<SuiteJob> jobs, unsigned workers, bool deterministic) {
  std::vector<Record> out(jobs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      Record& r = out[i];
      r.suite = jobs[i].suite;
      r.subject = jobs[i].subject;
      const auto start = std::chrono::steady_clock::now();
      try {
        jobs[i].run(r);
      } catch (const std::exception& e) {
        r.pass = false;
        r.values["error"] = e.what();
      }
      r.millis = deterministic ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config, const std::vector<GroupCatalogEntry>& catalog) {
  config.validate();
  VerificationReport rep;
  rep.config = config;
  rep.timestamp = config.deterministic ? "" : utc_now();
  const auto& suites = config.suites.empty() ? all_suites() : config.suites;
  rep.records = run_jobs(suite_jobs(suites, catalog, config), config.jobs, config.deterministic);
  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out) throw Error("cannot write report " + config.out_path);
    out << rep.to_json().dump(2) << '\n';
  }
  return rep;
}

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  return run_suite(config, load_catalog(config.catalog_path));
}

}  // namespace cosets
