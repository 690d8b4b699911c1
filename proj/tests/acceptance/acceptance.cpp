// Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polarnc/code.hpp"
#include "polarnc/ideal.hpp"
#include "polarnc/io.hpp"
#include "polarnc/oracle.hpp"
#include "polarnc/polarization.hpp"
#include "polarnc/verify.hpp"

using namespace polarnc;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Collects the first few mismatches of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (notes_.size() < 5) notes_.push_back(what);
    }
  }

  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    expect(got == want, what + ": got " + show(got) + ", want " + show(want));
  }

  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  static std::string show(const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s + "}";
  }
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

Code code(std::vector<std::string> words) { return io::parse_code(words); }

std::vector<std::string> strs(const std::vector<Motif>& v) { return render(v); }

std::vector<std::string> strs(const std::vector<PartialMotif>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.str());
  return out;
}

std::vector<std::string> primes(const std::vector<MotivicPrime>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const Code& main_example() {
  static const Code c = code({"000", "100", "110", "011"});
  return c;
}

void single_word_chain(Checker& k) {
  const Code c = code({"10"});
  k.equal(strs(max_mot(c)), {"10"}, "MaxMot(C)");
  k.equal(strs(max_mot(complement(c))), {"0*", "*1"}, "MaxMot(complement C)");
  k.equal(strs(oracle::brute_max_mot(complement(c))), {"0*", "*1"}, "oracle MaxMot(complement C)");
  k.equal(polarize_motif(Motif::parse("10")).str(), std::string("*00*"), "10^p");
  const Code cp = polarize_code(c);
  k.equal(cp.strings(), {"0000", "0001", "1000", "1001"}, "C^p");
  const Code dp = polarize_code(complement(c));
  k.equal(dp.strings(), sorted({"0000", "0100", "0010", "0110", "0001", "0101", "0011", "0111", "1000", "1100",
                                "1010", "1110"}),
          "(complement C)^p");
  const std::vector<Motif> d{Motif::parse("0***"), Motif::parse("***0")};
  k.expect(dp == union_of_varieties(4, d), "(complement C)^p is V(0***) u V(***0)");
  Code meet(4);
  for (const auto& w : cp.words()) {
    if (dp.contains(w)) meet.insert(w);
  }
  // Computed directly; 0001 and 1000 lie in both polarizations.
  k.equal(meet.strings(), {"0000", "0001", "1000"}, "C^p meets (complement C)^p");
  k.equal(complement(code_union(cp, dp)).strings(), {"1011", "1101", "1111"}, "outside both polarizations");
  k.equal(neural_ideal_cf(c).strings(), {"(1-X1)", "X2"}, "CF(J_C)");
  k.equal(cf_polarized_ideal(c).strings(), {"X2", "Y1"}, "CF^p");
  k.equal(cf_of_polarized_code(c).strings(), {"X2", "Y1"}, "CF(J_{C^p})");
  k.equal(neural_ideal_cf(cp, VariableSpace{2, true}).strings(), {"X2", "Y1"}, "CF(J_{C^p}) by search");
  k.expect(formal_polarize(c) == cp, "C^p = C^[p]");
}

void main_example_chain(Checker& k) {
  const Code& c = main_example();
  const VariableSpace d3{3, true};
  k.equal(strs(max_mot(c)), {"011", "1*0", "*00"}, "MaxMot(C)");
  k.equal(strs(max_mot(complement(c))), {"010", "1*1", "*01"}, "MaxMot(complement C)");
  k.equal(strs(oracle::brute_max_mot(complement(c))), {"010", "1*1", "*01"}, "oracle MaxMot(complement C)");

  const Code cp = polarize_code(c);
  const Code cf = formal_polarize(c);
  k.equal(strs(max_mot_polarized(c)), {"0***00", "*00***", "**00**"}, "MaxMot(C^p)");
  k.equal(strs(max_mot(cp)), {"0***00", "*00***", "**00**"}, "MaxMot(C^p) by search");
  k.equal(cf_polarized_ideal(c).strings(), {"X1X3", "X2Y1Y3", "X3Y2"}, "CF(J_{C^[p]})");
  k.equal(neural_ideal_cf(cf, d3).strings(), {"X1X3", "X2Y1Y3", "X3Y2"}, "CF(J_{C^[p]}) by search");
  k.equal(sorted(strs(max_mot_complement(6, max_mot_polarized(c)))),
          sorted({"**1*1*", "1*1***", "*1*1*1", "**1**1", "*1*11*", "11*1**"}), "MaxMot(complement C^p)");
  k.equal(sorted(strs(max_mot(complement(cp)))),
          sorted({"**1*1*", "1*1***", "*1*1*1", "**1**1", "*1*11*", "11*1**"}),
          "MaxMot(complement C^p) by search");
  const std::vector<std::string> cf_code =
      sorted({"X3Y2", "X1X3", "X2Y1Y3", "X3Y3", "X2Y1Y2", "X1X2Y1"});
  k.equal(cf_of_polarized_code(c).strings(), cf_code, "CF(J_{C^p})");
  k.equal(neural_ideal_cf(cp, d3).strings(), cf_code, "CF(J_{C^p}) by search");
  k.equal(cp.size(), std::size_t{29}, "|C^p|");
  k.equal(cf.size(), std::size_t{35}, "|C^[p]|");

  const std::vector<std::string> polar_primes{"(X1, Y2, Y3)", "(X2, X3)", "(X3, Y1)"};
  k.equal(primes(min_primes_polarized(c)), polar_primes, "Min(J_{C^p})");
  k.equal(primes(min_primes(cp, d3)), polar_primes, "Min(J_{C^p}) by search");
  const auto formal_primes = primes(min_primes(cf, d3));
  k.equal(sorted(formal_primes),
          sorted({"(X2, X3)", "(X3, Y1)", "(X1, Y2, Y3)", "(X3, Y3)", "(X1, X2, Y2)", "(X1, Y1, Y2)"}),
          "Min(J_{C^[p]})");
}

void canonical_form_two_generators(Checker& k) {
  const VariableSpace s3{3, false};
  const std::vector<PseudoMonomial> gens{PseudoMonomial::parse("X1(1-X2)", s3),
                                         PseudoMonomial::parse("X2(1-X3)", s3)};
  const auto cf = cf_of_pm_ideal(s3, gens);
  k.equal(cf.strings(), {"X1(1-X2)", "X1(1-X3)", "X2(1-X3)"}, "CF of the two-generator ideal");
  k.equal(oracle::brute_cf(zero_set(s3, gens)).strings(), cf.strings(), "oracle CF");
  k.equal(neural_ideal_cf(code({"000", "001", "011", "111"})).strings(), cf.strings(), "CF(J_C) of its variety");
}

void partial_code_cases(Checker& k) {
  const Code& c = main_example();
  const Code formal = formal_polarize(c);
  const auto minimal = max_mot(formal);
  const int second[] = {1};
  const int third[] = {2};
  k.equal(strs(max_par_mot(deactivate(c, second))), {"0u*", "*u0"}, "MaxParMot(C deactivated at 2)");
  k.equal(strs(max_par_mot(deactivate(c, third))), {"**u"}, "MaxParMot(C deactivated at 3)");

  struct Case {
    const char* motif;
    const char* depolarized;
    std::vector<int> inactive;
    bool minimal;
  };
  const std::vector<Case> cases{
      {"00**0*", "0u*", {1}, true},   // (X1, X2, Y2)
      {"0*0**0", "0*u", {2}, false},  // (X1, X3, Y3)
      {"100*0*", "*u0", {1}, false},
  };
  for (const auto& tc : cases) {
    const auto r = gjs_prime_test(Motif::parse(tc.motif), c);
    const std::string tag = std::string("case ") + tc.motif;
    k.expect(r.contains, tag + " contains");
    k.equal(r.depolarized.str(), std::string(tc.depolarized), tag + " partial motif");
    k.expect(r.inactive == tc.inactive, tag + " inactive neurons");
    k.expect(prime_contains_neural_ideal(Motif::parse(tc.motif), formal), tag + " agrees with containment");
    const bool is_min = std::find(minimal.begin(), minimal.end(), Motif::parse(tc.motif)) != minimal.end();
    k.expect(is_min == tc.minimal, tag + " minimality");
  }
  k.expect(par_mot_contains(PartialMotif::parse("0u*"), deactivate(c, second)), "0u* in ParMot");
  k.expect(par_mot_contains(PartialMotif::parse("0*u"), deactivate(c, third)), "0*u in ParMot");
  // (X2, X3, Y2) lies above the minimal prime (X2, X3) and is not minimal itself.
  const Motif adjacent = Motif::parse("*00*0*");
  k.expect(gjs_prime_test(adjacent, c).contains, "(X2, X3, Y2) contains the ideal");
  k.expect(std::find(minimal.begin(), minimal.end(), adjacent) == minimal.end(), "(X2, X3, Y2) not minimal");
}

// Suites that must have run, each covering one structural statement.
const std::vector<std::string> kPropertySuites{
    "polarized-max-mot",            "polarization-preserves-order",  "polarized-motifs",
    "lagrange-polarization",        "disjointness-transfer",         "formal-contains-polarized",
    "cf-polarized-equals-formal",   "cf-formal-in-polarized-code",   "cf-polarized-two-routes",
    "min-primes-polarized",         "min-primes-polarized-in-formal", "primary-decomposition",
    "primary-decomposition-polarized", "complement-polarized-all-ones", "cf-polarized-monomials",
    "variety-of-neural-ideal",      "inclusion-transfer",            "complement-max-mot",
};

void report_into(const verify::Report& r, Checker& k) {
  for (const auto& [name, s] : r.suites()) {
    k.expect(s.failures == 0, name + " failures=" + std::to_string(s.failures) +
                                  (s.messages.empty() ? "" : " first: " + s.messages.front()));
  }
}

void exhaustive_properties(Checker& k) {
  const auto r = verify::run_family(verify::exhaustive_family(3), verify::Options{});
  auto laws = verify::motif_laws(kSeed);
  laws.merge(r);
  for (const auto& name : kPropertySuites) {
    k.expect(laws.has(name) && laws.at(name).checks > 0, "suite " + name + " ran");
  }
  k.expect(r.has("polarized-max-mot") && r.at("polarized-max-mot").checks == 256, "all 256 codes checked");
  report_into(laws, k);
}

void random_properties(Checker& k) {
  for (int n = 4; n <= 7; ++n) {
    const auto family = verify::random_family(n, 200, kSeed);
    const auto r = verify::run_family(family, verify::Options{});
    k.expect(r.at("polarized-max-mot").checks == 200, "n=" + std::to_string(n) + " covers 200 codes");
    report_into(r, k);
  }
}

void gjs_scan(Checker& k) {
  std::vector<Code> codes{main_example()};
  std::mt19937_64 rng(kSeed);
  const double densities[] = {0.25, 0.5, 0.75};
  for (int i = 0; i < 20; ++i) codes.push_back(oracle::random_code(3, densities[i % 3], rng));
  std::size_t motifs = 0;
  for (const auto& c : codes) {
    const auto scan = oracle::brute_gjs_scan(c);
    motifs += scan.motifs_checked;
    k.expect(scan.motifs_checked == 729, "729 motifs for code " + c.hex());
    for (const auto& d : scan.discrepancies) {
      k.expect(false, oracle::discrepancy_line(c, d.motif.str(), d.fast, d.oracle));
    }
  }
  k.equal(motifs, std::size_t{21 * 729}, "motifs scanned");
}

void oracle_equivalence(Checker& k) {
  std::vector<Code> codes = verify::exhaustive_family(3);
  for (int n = 4; n <= 7; ++n) {
    const auto family = verify::random_family(n, 200, kSeed);
    codes.insert(codes.end(), family.begin(), family.end());
  }
  for (const auto& c : codes) {
    k.expect(max_mot(c) == oracle::brute_max_mot(c), "max_mot of " + c.hex());
    k.expect(neural_ideal_cf(c) == oracle::brute_cf(c), "cf of " + c.hex());
  }
  k.equal(codes.size(), std::size_t{256 + 800}, "codes compared");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "single-word code chain", 1.0, single_word_chain},
      {2, "main example chain", 1.0, main_example_chain},
      {3, "canonical form of a two-generator ideal", 1.0, canonical_form_two_generators},
      {4, "partial-code prime test cases", 1.0, partial_code_cases},
      {5, "property suite, all 256 codes of length 3", 120.0, exhaustive_properties},
      {6, "property suite, 200 seeded codes per length 4..7", 300.0, random_properties},
      {7, "partial-code prime test scan, 21 codes x 729 motifs", 120.0, gjs_scan},
      {8, "oracle equivalence for max_mot and canonical forms", 180.0, oracle_equivalence},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Checker k;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(k);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = error.empty() && k.failures() == 0 && in_time;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << k.checks()
              << " checks, " << std::fixed << std::setprecision(3) << seconds << " s, limit "
              << std::setprecision(0) << c.limit_seconds << " s)\n";
    if (!error.empty()) std::cout << "  exception: " << error << '\n';
    if (!in_time) std::cout << "  over the time limit\n";
    for (const auto& note : k.notes()) std::cout << "  " << note << '\n';
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << '\n';
  return failed == 0 ? 0 : 1;
}
