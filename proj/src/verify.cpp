#include "polarnc/verify.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <random>
#include <thread>

#include "polarnc/ideal.hpp"
#include "polarnc/oracle.hpp"
#include "polarnc/polarization.hpp"

namespace polarnc::verify {

namespace {

constexpr std::size_t kMaxMessages = 8;

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_same_v<T, std::string>) {
      out += items[i];
    } else {
      out += items[i].str();
    }
  }
  return out + "}";
}

std::string tag(const Code& c) { return "code " + c.hex() + " (n=" + std::to_string(c.length()) + ")"; }

bool same_primes(const std::vector<MotivicPrime>& a, const std::vector<MotivicPrime>& b) {
  return a == b;
}

bool primes_subset(const std::vector<MotivicPrime>& a, const std::vector<MotivicPrime>& b) {
  return std::all_of(a.begin(), a.end(), [&](const MotivicPrime& p) {
    return std::find(b.begin(), b.end(), p) != b.end();
  });
}

bool motifs_subset(const std::vector<Motif>& a, const std::vector<Motif>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const Motif& m) { return std::find(b.begin(), b.end(), m) != b.end(); });
}

std::vector<std::string> prime_strings(const std::vector<MotivicPrime>& primes) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.str());
  return out;
}

// CF of J_X for a code X in doubled space, through a direct maximal-motif
// search on the complement rather than hitting sets.
CanonicalForm cf_by_complement_search(const Code& x) {
  const VariableSpace space = VariableSpace::for_length(x.length(), true);
  std::vector<PseudoMonomial> elements;
  for (const auto& b : max_mot(complement(x))) elements.push_back(lagrange(b, space));
  return CanonicalForm(space, std::move(elements));
}

std::string erase_positions(const std::string& s, std::uint64_t mask, int length) {
  std::string out;
  for (int p = 0; p < length; ++p) {
    if (!(mask & position_bit(length, p))) out.push_back(s[p]);
  }
  return out;
}

std::string insert_u(const std::string& s, std::uint64_t mask, int length) {
  std::string out;
  std::size_t q = 0;
  for (int p = 0; p < length; ++p) {
    out.push_back((mask & position_bit(length, p)) ? 'u' : s[q++]);
  }
  return out;
}

void check_max_mot(const Code& c, const Options& options, Report& r) {
  const int n = c.length();
  const auto mot = max_mot(c);
  if (n <= options.oracle_max_length) {
    const auto brute = oracle::brute_max_mot(c);
    r.record("max-mot-oracle", mot == brute,
             tag(c) + ": fast " + join(mot) + " oracle " + join(brute));
  }

  bool antichain = true;
  for (const auto& a : mot) {
    for (const auto& b : mot) {
      if (!(a == b) && motif_leq(a, b)) antichain = false;
    }
  }
  r.record("max-mot-antichain", antichain, tag(c) + ": " + join(mot));
  r.record("max-mot-cover", union_of_varieties(n, mot) == c, tag(c) + ": " + join(mot));
  r.record("max-mot-empty-iff-empty-code", mot.empty() == c.empty(), tag(c));

  if (n <= options.oracle_max_length) {
    bool dominated = true;
    for (const auto& a : oracle::all_motifs(n)) {
      if (!is_motif_of(a, c)) continue;
      if (std::none_of(mot.begin(), mot.end(), [&](const Motif& b) { return motif_leq(a, b); })) {
        dominated = false;
        r.record("max-mot-dominates", false, tag(c) + ": motif " + a.str() + " not covered");
        break;
      }
    }
    if (dominated) r.record("max-mot-dominates", true);
  }

  const auto via_hitting = max_mot_complement(n, mot);
  const auto direct = max_mot(complement(c));
  r.record("complement-max-mot", via_hitting == direct,
           tag(c) + ": hitting sets " + join(via_hitting) + " direct " + join(direct));
}

void check_canonical_form(const Code& c, const Options& options, Report& r) {
  const int n = c.length();
  const auto cf = neural_ideal_cf(c);
  if (n <= options.oracle_max_length) {
    const auto brute = oracle::brute_cf(c);
    r.record("cf-oracle", cf == brute,
             tag(c) + ": fast " + join(cf.strings()) + " oracle " + join(brute.strings()));
  }

  const auto words = c.words();
  bool vanishes = true;
  for (const auto& f : cf.elements()) {
    for (const auto& w : words) {
      if (evaluate(f, w) != 0) vanishes = false;
    }
  }
  r.record("cf-vanishes-on-code", vanishes, tag(c) + ": " + join(cf.strings()));

  bool separates = true;
  for (const auto& w : complement(c).words()) {
    if (std::none_of(cf.elements().begin(), cf.elements().end(),
                     [&](const PseudoMonomial& f) { return evaluate(f, w) == 1; })) {
      separates = false;
    }
  }
  r.record("cf-separates-non-words", separates, tag(c) + ": " + join(cf.strings()));

  bool antichain = true;
  for (const auto& f : cf.elements()) {
    for (const auto& g : cf.elements()) {
      if (!(f == g) && pm_divides(f, g)) antichain = false;
    }
  }
  r.record("cf-antichain", antichain, tag(c));

  const auto again = cf_of_pm_ideal(cf.space(), cf.elements());
  r.record("cf-idempotent", again == cf,
           tag(c) + ": " + join(cf.strings()) + " became " + join(again.strings()));

  if (n <= options.oracle_max_length) {
    // Membership by divisibility against membership by vanishing on C.
    bool agree = true;
    for (const auto& m : oracle::all_motifs(n)) {
      const PseudoMonomial f(cf.space(), m.ones_mask(), m.zeros_mask());
      const bool by_division = ideal_contains(cf, f);
      const bool by_value = std::all_of(words.begin(), words.end(),
                                        [&](const Word& w) { return evaluate(f, w) == 0; });
      if (by_division != by_value) {
        agree = false;
        r.record("ideal-membership", false, tag(c) + ": disagreement at " + f.str());
        break;
      }
    }
    if (agree) r.record("ideal-membership", true);
  }

  r.record("variety-of-neural-ideal", variety_of_neural_ideal(c) == c, tag(c));
  if (n <= oracle::kMaxVarietyDim) {
    r.record("variety-of-neural-ideal-oracle",
             oracle::brute_variety(cf.space(), cf.elements()) == c, tag(c));
  }
}

void check_primes(const Code& c, const Options& options, Report& r) {
  const int n = c.length();
  const auto primes = min_primes(c);
  // V_a inside V_b iff p_b inside p_a, so minimal primes have incomparable motifs.
  bool antichain = true;
  for (const auto& p : primes) {
    for (const auto& q : primes) {
      if (!(p == q) && motif_leq(p.motif(), q.motif())) antichain = false;
    }
  }
  r.record("min-primes-antichain", antichain, tag(c) + ": " + join(prime_strings(primes)));

  if (n <= options.oracle_max_length) {
    bool agree = true;
    for (const auto& a : oracle::all_motifs(n)) {
      const bool contains = prime_contains_neural_ideal(a, c);
      const bool below = std::any_of(primes.begin(), primes.end(),
                                     [&](const MotivicPrime& p) { return motif_leq(a, p.motif()); });
      if (contains != below) {
        agree = false;
        r.record("prime-containment", false, tag(c) + ": motif " + a.str());
        break;
      }
    }
    if (agree) r.record("prime-containment", true);
  }

  if (!c.empty()) {
    bool irredundant = true;
    try {
      const auto dec = primary_decomposition(c);
      irredundant = same_primes(dec, primes);
    } catch (const Error&) {
      irredundant = false;
    }
    r.record("primary-decomposition", irredundant, tag(c));
  }
}

void check_polarization(const Code& c, const Options& options, Report& r) {
  const int n = c.length();
  const VariableSpace doubled{n, true};
  const Code cp = polarize_code(c);
  const Code cfp = formal_polarize(c);

  // Maximal motifs of C^p from n-space data against a doubled-space search.
  const auto polar_mot = max_mot_polarized(c);
  const auto searched = n <= options.polar_oracle_max_n ? oracle::brute_max_mot(cp) : max_mot(cp);
  r.record("polarized-max-mot", polar_mot == searched,
           tag(c) + ": " + join(polar_mot) + " vs " + join(searched));

  if (n <= options.oracle_max_length) {
    bool inside = true;
    for (const auto& a : oracle::all_motifs(n)) {
      if (is_motif_of(a, c) && !is_motif_of(polarize_motif(a), cp)) {
        inside = false;
        r.record("polarized-motifs", false, tag(c) + ": " + a.str());
        break;
      }
    }
    if (inside) r.record("polarized-motifs", true);
  }

  r.record("formal-contains-polarized", cp.subset_of(cfp), tag(c));

  const auto formal_mot = max_mot(cfp);
  r.record("max-mot-polarized-in-formal", motifs_subset(polar_mot, formal_mot), tag(c));
  const auto outside_formal = max_mot_complement_formal(c);
  const auto outside_formal_searched = max_mot(complement(cfp));
  const auto outside_polar = max_mot_complement(2 * n, polar_mot);
  const auto outside_polar_searched = max_mot(complement(cp));
  r.record("complement-formal-max-mot", outside_formal == outside_formal_searched,
           tag(c) + ": " + join(outside_formal) + " vs " + join(outside_formal_searched));
  r.record("complement-polarized-max-mot", outside_polar == outside_polar_searched,
           tag(c) + ": " + join(outside_polar) + " vs " + join(outside_polar_searched));
  r.record("complement-formal-in-polarized", motifs_subset(outside_formal, outside_polar), tag(c));

  bool only_ones = std::all_of(outside_polar.begin(), outside_polar.end(),
                               [](const Motif& b) { return b.ones_mask() == b.fixed_mask(); });
  r.record("complement-polarized-all-ones", only_ones, tag(c) + ": " + join(outside_polar));

  const auto cf_ideal = cf_polarized_ideal(c);
  const auto cf_bar = cf_polarized_ideal_by_bar(c);
  const auto cf_formal = cf_by_complement_search(cfp);
  const auto cf_code = cf_of_polarized_code(c);
  const auto cf_code_searched = cf_by_complement_search(cp);
  r.record("cf-polarized-two-routes", cf_ideal == cf_bar,
           tag(c) + ": " + join(cf_ideal.strings()) + " vs " + join(cf_bar.strings()));
  r.record("cf-polarized-equals-formal", cf_ideal == cf_formal,
           tag(c) + ": " + join(cf_ideal.strings()) + " vs " + join(cf_formal.strings()));
  r.record("cf-polarized-code", cf_code == cf_code_searched,
           tag(c) + ": " + join(cf_code.strings()) + " vs " + join(cf_code_searched.strings()));
  r.record("cf-formal-in-polarized-code", cf_ideal.subset_of(cf_code), tag(c));
  r.record("cf-polarized-monomials",
           std::all_of(cf_code.elements().begin(), cf_code.elements().end(),
                       [](const PseudoMonomial& f) { return f.is_monomial(); }),
           tag(c));

  const auto primes_polar = min_primes_polarized(c);
  const auto primes_cp = min_primes(cp, doubled);
  const auto primes_cfp = min_primes(cfp, doubled);
  r.record("min-primes-polarized", same_primes(primes_polar, primes_cp),
           tag(c) + ": " + join(prime_strings(primes_polar)) + " vs " + join(prime_strings(primes_cp)));
  r.record("min-primes-polarized-in-formal", primes_subset(primes_polar, primes_cfp), tag(c));

  if (!c.empty()) {
    bool same = false;
    try {
      same = same_primes(primary_decomposition_polarized(c), primary_decomposition(cp, doubled));
    } catch (const Error&) {
      same = false;
    }
    r.record("primary-decomposition-polarized", same, tag(c));
  }
}

void check_deactivation(const Code& c, Report& r) {
  const int n = c.length();
  const auto words = c.strings();
  for (std::uint64_t inactive = 0; inactive < (std::uint64_t{1} << n); ++inactive) {
    const int k = std::popcount(inactive);
    if (k > 2 || k == n) continue;
    const auto partial = deactivate_mask(c, inactive);
    const auto fast = max_par_mot(partial);

    // Delete the coordinates, search the shorter code, put u back.
    std::vector<std::string> shorter;
    for (const auto& w : words) shorter.push_back(erase_positions(w, inactive, n));
    std::vector<std::string> expected;
    if (!shorter.empty()) {
      const Code deleted = Code::from_strings(n - k, shorter);
      for (const auto& m : max_mot(deleted)) expected.push_back(insert_u(m.str(), inactive, n));
    }
    std::vector<std::string> got;
    bool members = true;
    for (const auto& m : fast) {
      got.push_back(m.str());
      members = members && par_mot_contains(m, partial);
    }
    r.record("deactivation-round-trip", got == expected && members,
             tag(c) + ": " + join(got) + " vs " + join(expected));
  }
}

}  // namespace

void Report::record(const std::string& suite, bool ok, const std::string& message) {
  auto& s = suites_[suite];
  ++s.checks;
  if (!ok) {
    ++s.failures;
    if (s.messages.size() < kMaxMessages) s.messages.push_back(message);
  }
}

void Report::merge(const Report& other) {
  for (const auto& [name, result] : other.suites_) {
    auto& s = suites_[name];
    s.checks += result.checks;
    s.failures += result.failures;
    for (const auto& m : result.messages) {
      if (s.messages.size() < kMaxMessages) s.messages.push_back(m);
    }
  }
}

std::size_t Report::failures() const {
  std::size_t total = 0;
  for (const auto& [name, s] : suites_) total += s.failures;
  return total;
}

Report motif_laws(std::uint64_t seed) {
  Report r;
  for (int len = 1; len <= 4; ++len) {
    const auto motifs = oracle::all_motifs(len);
    const Motif zero(len, full_mask(len), 0);
    for (const auto& a : motifs) {
      r.record("bar-involution", bar(bar(a)) == a, a.str());
      r.record("monoid-identity", motif_add(a, zero) == a, a.str());
      r.record("polar-round-trip", depolarize(polarize_motif(a)) == a && is_polar(polarize_motif(a)),
               a.str());
      for (const auto& b : motifs) {
        const bool leq = motif_leq(a, b);
        r.record("order-variety-adjunction", leq == variety(a).subset_of(variety(b)),
                 a.str() + " " + b.str());
        r.record("monoid-commutative", motif_add(a, b) == motif_add(b, a), a.str() + " " + b.str());
        const Motif sum = motif_add(a, b);
        r.record("disjoint-iff-sum-has-one", is_disjoint(a, b) == (sum.ones_mask() != 0),
                 a.str() + " " + b.str());
        r.record("polarization-preserves-order", leq == motif_leq(polarize_motif(a), polarize_motif(b)),
                 a.str() + " " + b.str());
        r.record("disjointness-transfer",
                 is_disjoint(a, b) == is_disjoint(polarize_motif(a), bar_polarize(b)),
                 a.str() + " " + b.str());
        // V_a inside V_b iff p_b inside p_a, i.e. the generators of p_b are among those of p_a.
        const auto ga = motivic_prime(a).generators();
        const auto gb = motivic_prime(b).generators();
        const bool prime_inside = std::all_of(gb.begin(), gb.end(), [&](const PseudoMonomial& g) {
          return std::find(ga.begin(), ga.end(), g) != ga.end();
        });
        r.record("prime-order-reversal", leq == prime_inside, a.str() + " " + b.str());

        const PseudoMonomial f = lagrange(a);
        const PseudoMonomial g = lagrange(b);
        bool implied = true;
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
          if (evaluate(g, w) == 1 && evaluate(f, w) == 0) implied = false;
        }
        r.record("divisibility-vs-evaluation", pm_divides(f, g) == implied, f.str() + " " + g.str());
        r.record("polarization-preserves-divisibility",
                 pm_divides(f, g) == pm_divides(polarize_pm(f), polarize_pm(g)),
                 f.str() + " " + g.str());

        for (const auto& c : motifs) {
          r.record("monoid-associative",
                   motif_add(motif_add(a, b), c) == motif_add(a, motif_add(b, c)),
                   a.str() + " " + b.str() + " " + c.str());
          if (sum.ones_mask() != 0 && motif_leq(c, b)) {
            r.record("sum-one-monotone", motif_add(a, c).ones_mask() != 0,
                     a.str() + " " + b.str() + " " + c.str());
          }
        }
      }
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
        r.record("lagrange-indicator",
                 (evaluate(lagrange(a), w) == 1) == variety(a).contains(w), a.str());
      }
    }
  }

  for (int len = 1; len <= 6; ++len) {
    for (const auto& a : oracle::all_motifs(len)) {
      r.record("lagrange-polarization",
               polarize_pm(lagrange(a)) == lagrange(bar_polarize(a), VariableSpace{len, true}),
               a.str());
    }
  }

  for (int n = 1; n <= 3; ++n) {
    for (const auto& b : oracle::all_motifs(2 * n)) {
      const bool polar = is_polar(b);
      bool round_trip = false;
      try {
        round_trip = polarize_motif(depolarize(b)) == b;
      } catch (const Error&) {
        round_trip = false;
      }
      r.record("polar-characterisation", polar == round_trip, b.str(true));
    }
    // Every partial motif of length n, u included.
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::string s;
      for (std::uint64_t v = idx, i = 0; i < static_cast<std::uint64_t>(n); ++i, v /= 4) {
        s.push_back("01*u"[v % 4]);
      }
      const auto a = PartialMotif::parse(s);
      const auto ap = polarize_partial_motif(a);
      r.record("partial-polar-round-trip",
               is_polar_partial(ap) && depolarize_partial_motif(ap) == a, s);
    }
  }

  // Sampled adjunction at lengths 5..12.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> trit(0, 2);
  for (int len = 5; len <= 12; ++len) {
    for (int i = 0; i < 500; ++i) {
      auto pick = [&]() {
        std::uint64_t fixed = 0;
        std::uint64_t ones = 0;
        for (int p = 0; p < len; ++p) {
          const int t = trit(rng);
          const std::uint64_t bit = position_bit(len, p);
          if (t != 2) fixed |= bit;
          if (t == 1) ones |= bit;
        }
        return Motif(len, fixed, ones);
      };
      const Motif a = pick();
      // Half the partners are built above a so the true branch is exercised.
      Motif b = pick();
      if (i % 2 == 0) {
        b = Motif(len, a.fixed_mask() & b.fixed_mask(), a.ones_mask() & b.fixed_mask());
      }
      r.record("order-variety-adjunction",
               motif_leq(a, b) == variety(a).subset_of(variety(b)), a.str() + " " + b.str());
    }
  }
  return r;
}

void check_code(const Code& c, const Options& options, Report& report) {
  try {
    check_max_mot(c, options, report);
    check_canonical_form(c, options, report);
    check_primes(c, options, report);
    check_polarization(c, options, report);
    check_deactivation(c, report);
    if (c.length() <= options.gjs_scan_max_n) check_gjs(c, report);
  } catch (const std::exception& e) {
    report.record("exceptions", false, tag(c) + ": " + e.what());
  }
}

void check_pair(const Code& c, const Code& d, Report& report) {
  const bool left = d.subset_of(complement(c));
  const Code image = bar_polarize_code(d);
  const Code image_by_codes = bar(polarize_code(bar(d)));
  report.record("bar-polarized-code-two-routes", image == image_by_codes, tag(c) + " " + tag(d));
  const bool right = image.subset_of(complement(polarize_code(c)));
  report.record("inclusion-transfer", left == right, tag(c) + " " + tag(d));
}

void check_gjs(const Code& c, Report& report) {
  const auto scan = oracle::brute_gjs_scan(c);
  for (const auto& d : scan.discrepancies) {
    report.record("gjs-equivalence", false,
                  oracle::discrepancy_line(c, d.motif.str(), d.fast, d.oracle));
  }
  for (std::size_t i = scan.discrepancies.size(); i < scan.motifs_checked; ++i) {
    report.record("gjs-equivalence", true);
  }
}

Report run_family(const std::vector<Code>& codes, const Options& options) {
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(codes.size())));

  auto work = [&](std::size_t begin, std::size_t end) {
    Report r;
    for (std::size_t i = begin; i < end; ++i) {
      const Code& c = codes[i];
      check_code(c, options, r);
      try {
        check_pair(c, complement(c), r);
        check_pair(c, codes[(i + 1) % codes.size()], r);
        if (!c.empty()) {
          Code d = complement(c);
          d.insert(c.words().front());
          check_pair(c, d, r);
        }
      } catch (const std::exception& e) {
        r.record("exceptions", false, tag(c) + ": " + e.what());
      }
    }
    return r;
  };

  std::vector<std::future<Report>> parts;
  const std::size_t chunk = (codes.size() + threads - 1) / std::max(1u, threads);
  for (std::size_t begin = 0; begin < codes.size(); begin += chunk) {
    parts.push_back(std::async(std::launch::async, work, begin, std::min(codes.size(), begin + chunk)));
  }
  Report total;
  for (auto& p : parts) total.merge(p.get());
  return total;
}

std::vector<Code> exhaustive_family(int n) {
  if (n < 1 || n > 4) throw Error("exhaustive families are limited to n in [1, 4]");
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<Code> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(oracle::code_from_index(n, i));
  return out;
}

std::vector<Code> random_family(int n, int count, std::uint64_t seed) {
  static constexpr double kDensities[] = {0.25, 0.5, 0.75};
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n)};
  std::mt19937_64 rng(seq);
  std::vector<Code> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_code(n, kDensities[i % 3], rng));
  return out;
}

std::vector<std::string> summary_lines(const Report& report) {
  std::vector<std::string> out;
  for (const auto& [name, s] : report.suites()) {
    out.push_back(name + " checks=" + std::to_string(s.checks) +
                  " failures=" + std::to_string(s.failures));
  }
  return out;
}

}  // namespace polarnc::verify
