#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polarnc/code.hpp"

// Property suites that tie every fast operation to its defining property or
// to an oracle. Used by `polarnc verify` and the acceptance tests.
namespace polarnc::verify {

struct SuiteResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures only
};

class Report {
 public:
  void record(const std::string& suite, bool ok, const std::string& message = {});
  void merge(const Report& other);

  const std::map<std::string, SuiteResult>& suites() const { return suites_; }
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  bool has(const std::string& suite) const { return suites_.count(suite) != 0; }
  const SuiteResult& at(const std::string& suite) const { return suites_.at(suite); }

 private:
  std::map<std::string, SuiteResult> suites_;
};

struct Options {
  /// Largest n for which the brute-force oracles run on n-space codes.
  int oracle_max_length = 7;
  /// Largest n for which the doubled-space oracle runs on C^p (2n <= 10).
  int polar_oracle_max_n = 5;
  /// Largest n for which every length-2n motif is pushed through the
  /// deactivation criterion.
  int gjs_scan_max_n = 3;
  /// Worker threads for per-code suites; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Laws on motifs and pseudo-monomials, exhaustive at small lengths and
/// sampled (seeded) at lengths up to 12.
Report motif_laws(std::uint64_t seed = 1);

/// Every per-code property suite on one code.
void check_code(const Code& c, const Options& options, Report& report);

/// Inclusion transfer between D and the complement of C.
void check_pair(const Code& c, const Code& d, Report& report);

/// The deactivation criterion against a C^[p] motif test for all 3^(2n) motifs.
void check_gjs(const Code& c, Report& report);

/// Runs check_code on every code and check_pair on neighbours, in parallel.
Report run_family(const std::vector<Code>& codes, const Options& options);

/// All 2^(2^n) codes of length n (n <= 4).
std::vector<Code> exhaustive_family(int n);

/// `count` codes of length n with word densities cycling 0.25, 0.5, 0.75.
std::vector<Code> random_family(int n, int count, std::uint64_t seed);

/// One line per suite: "<name> checks=<k> failures=<f>".
std::vector<std::string> summary_lines(const Report& report);

}  // namespace polarnc::verify
