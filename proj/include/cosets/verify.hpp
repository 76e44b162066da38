#pragma once

// Verification suites over a group catalog, run by a work pool, reported as
// JSON {version, timestamp, config, records, overall}.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cosets/catalog.hpp"
#include "json.hpp"

namespace cosets {

enum class Suite { reciprocity, homology, join, altgen, a7, identities };

const std::vector<Suite>& all_suites();
std::string_view suite_name(Suite s);
/// Throws ParseError for an unknown name.
Suite parse_suite(std::string_view name);

struct SuiteConfig {
  std::string catalog_path;
  std::uint64_t max_order = 60;               // homology sweep
  std::uint64_t reciprocity_max_order = 120;  // Hall value vs Euler characteristic vs Moebius
  std::uint64_t lattice_bound = 2520;         // largest group whose full lattice is enumerated
  unsigned prime = 2;
  std::vector<Suite> suites;                  // empty means all
  bool slow = false;
  std::string out_path;
  unsigned jobs = 0;                          // 0: hardware concurrency
  bool deterministic = false;                 // zero every timing field

  /// Throws PreconditionError: prime not prime, max_order above lattice_bound.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Record {
  std::string suite;
  std::string subject;
  bool pass = false;
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  double millis = 0;
};

struct VerificationReport {
  SuiteConfig config;
  std::string timestamp;
  std::vector<Record> records;

  bool passed() const;
  nlohmann::json to_json() const;
  /// One line per record plus a total.
  std::string summary() const;
  /// Records of one suite, in order.
  std::vector<const Record*> of_suite(Suite s) const;
  const Record* find(Suite s, std::string_view subject) const;
};

/// A unit of work: fills in verdict, values and witnesses.  Exceptions are
/// caught by the runner and turn the record into a failure.
struct SuiteJob {
  std::string suite;
  std::string subject;
  std::function<void(Record&)> run;
};

/// Jobs of the given suites, suite by suite, each in catalog order.  The
/// jobs share one cache of subgroup lattices.
std::vector<SuiteJob> suite_jobs(const std::vector<Suite>& suites, const std::vector<GroupCatalogEntry>& catalog,
                                 const SuiteConfig& config);

/// Runs the jobs on `workers` threads; records come back in job order.
std::vector<Record> run_jobs(std::vector<SuiteJob> jobs, unsigned workers, bool deterministic);

/// Loads the catalog, runs every enabled suite and writes the JSON report if
/// out_path is set.  Catalog errors propagate; job errors do not.
VerificationReport run_suite(const SuiteConfig& config);
VerificationReport run_suite(const SuiteConfig& config, const std::vector<GroupCatalogEntry>& catalog);

}  // namespace cosets
