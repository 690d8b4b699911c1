#include "polarnc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "polarnc/code.hpp"
#include "polarnc/ideal.hpp"
#include "polarnc/io.hpp"
#include "polarnc/oracle.hpp"
#include "polarnc/polarization.hpp"
#include "polarnc/verify.hpp"

namespace polarnc::cli {

namespace {

using nlohmann::json;

// Result of one subcommand, printable as text lines or as a JSON object.
struct Output {
  int n = 0;
  bool doubled = false;
  std::vector<std::string> motifs;
  std::vector<std::string> cf;
  std::vector<std::vector<std::string>> primes;
  std::vector<std::string> text;
  json extra = json::object();

  void set_motifs(const std::vector<Motif>& ms) {
    motifs = render(ms, doubled);
    text = motifs;
  }
  void set_cf(const CanonicalForm& form) {
    cf = form.strings();
    text = cf;
  }
  void set_primes(const std::vector<MotivicPrime>& ps) {
    primes.clear();
    text.clear();
    for (const auto& p : ps) {
      primes.push_back(p.generator_strings());
      text.push_back(p.str());
    }
  }
};

void emit(const Output& o, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = o.extra;
    j["n"] = o.n;
    j["doubled"] = o.doubled;
    j["motifs"] = o.motifs;
    j["cf"] = o.cf;
    j["primes"] = o.primes;
    out << j.dump() << '\n';
    return;
  }
  for (const auto& line : o.text) out << line << '\n';
}

struct Globals {
  std::string input;
  bool json = false;
  bool quiet = false;
  std::optional<int> length;
};

std::vector<std::string> input_lines(const Globals& g, std::istream& in) {
  if (g.input.empty()) return io::read_lines(in);
  std::ifstream file(g.input);
  if (!file) throw Error("cannot open input file " + g.input);
  return io::read_lines(file);
}

Code input_code(const Globals& g, std::istream& in) {
  return io::parse_code(input_lines(g, in), g.length);
}

enum class Variant { plain, polar, formal };

struct VariantFlags {
  bool polar = false;
  bool formal = false;

  Variant get() const { return polar ? Variant::polar : formal ? Variant::formal : Variant::plain; }
};

void add_variant_flags(CLI::App* sub, VariantFlags& flags, const std::string& polar_help,
                       const std::string& formal_help) {
  auto* p = sub->add_flag("--polar", flags.polar, polar_help);
  auto* f = sub->add_flag("--formal", flags.formal, formal_help);
  p->excludes(f);
}

Output motifs_output(int n, bool doubled, const std::vector<Motif>& ms) {
  Output o;
  o.n = n;
  o.doubled = doubled;
  o.set_motifs(ms);
  return o;
}

Output code_output(int n, bool doubled, const Code& c) {
  Output o;
  o.n = n;
  o.doubled = doubled;
  o.motifs = c.strings(doubled);
  o.text = o.motifs;
  return o;
}

int run_verify(int exhaustive_n, int random_count, int random_n, std::optional<std::uint64_t> seed,
               unsigned threads, const Globals& g, std::ostream& out, std::ostream& err) {
  std::vector<Code> codes;
  if (random_count > 0) {
    if (!seed) throw Error("verify --random requires --seed");
    if (random_n < 1 || random_n > 8) throw Error("verify --n must be in [1, 8]");
    codes = verify::random_family(random_n, random_count, *seed);
  } else {
    codes = verify::exhaustive_family(exhaustive_n);
  }
  const auto start = std::chrono::steady_clock::now();
  verify::Options options;
  options.threads = threads;
  verify::Report report = verify::motif_laws(seed.value_or(1));
  report.merge(verify::run_family(codes, options));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (g.json) {
    json suites = json::object();
    for (const auto& [name, s] : report.suites()) {
      suites[name] = {{"checks", s.checks}, {"failures", s.failures}, {"messages", s.messages}};
    }
    out << json{{"codes", codes.size()}, {"ok", report.ok()}, {"suites", suites}}.dump() << '\n';
  } else {
    if (!g.quiet) {
      for (const auto& line : verify::summary_lines(report)) out << line << '\n';
    }
    for (const auto& [name, s] : report.suites()) {
      for (const auto& m : s.messages) out << "FAIL " << name << ": " << m << '\n';
    }
    if (!g.quiet) {
      out << (report.ok() ? "PASS" : "FAIL") << ": " << codes.size() << " codes, "
          << report.failures() << " failures\n";
    }
  }
  if (!g.quiet) err << "verify finished in " << seconds << " s\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

int run_oracle_compare(const Code& c, const Globals& g, std::ostream& out) {
  std::vector<std::string> lines;
  auto diff = [&](const std::vector<Motif>& fast, const std::vector<Motif>& slow) {
    for (const auto& m : fast) {
      if (std::find(slow.begin(), slow.end(), m) == slow.end()) {
        lines.push_back(oracle::discrepancy_line(c, m.str(), true, false));
      }
    }
    for (const auto& m : slow) {
      if (std::find(fast.begin(), fast.end(), m) == fast.end()) {
        lines.push_back(oracle::discrepancy_line(c, m.str(), false, true));
      }
    }
  };
  diff(max_mot(c), oracle::brute_max_mot(c));

  // CF elements are compared through the motifs whose Lagrange polynomials they are.
  auto cf_motifs = [&](const CanonicalForm& cf) {
    std::vector<Motif> ms;
    for (const auto& f : cf.elements()) {
      ms.emplace_back(c.length(), f.sigma() | f.tau(), f.sigma());
    }
    return ms;
  };
  diff(cf_motifs(neural_ideal_cf(c)), cf_motifs(oracle::brute_cf(c)));

  if (c.length() <= oracle::kMaxGjsScanLength) {
    for (const auto& d : oracle::brute_gjs_scan(c).discrepancies) {
      lines.push_back(oracle::discrepancy_line(c, d.motif.str(), d.fast, d.oracle));
    }
  }
  if (g.json) {
    out << json{{"discrepancies", lines}}.dump() << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return lines.empty() ? kExitOk : kExitMismatch;
}

std::vector<std::string> motif_inputs(const std::vector<std::string>& given, const Globals& g,
                                      std::istream& in) {
  return given.empty() ? input_lines(g, in) : given;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Neural codes, neural ideals and their polarization", "polarnc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.input, "Code (or term/motif) file; stdin when absent");
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_flag("--quiet", g.quiet, "Suppress summaries and diagnostics");
  app.add_option("--length", g.length, "Word length; needed for an empty code")
      ->check(CLI::Range(1, kMaxCodeLength));

  VariantFlags maxmot_v, comp_v, cf_v, primes_v;
  bool decompose_polar = false;

  auto* maxmot = app.add_subcommand("maxmot", "Maximal motifs of the code");
  add_variant_flags(maxmot, maxmot_v, "of C^p (polarized code)", "of C^[p] (formal polarization)");
  auto* comp = app.add_subcommand("complement-maxmot", "Maximal motifs of the complement, by hitting sets");
  add_variant_flags(comp, comp_v, "complement of C^p", "complement of C^[p]");
  auto* cf = app.add_subcommand("cf", "Canonical form of the neural ideal");
  add_variant_flags(cf, cf_v, "CF(J_{C^p})", "CF(J_C^p) = CF(J_{C^[p]})");

  auto* cf_ideal = app.add_subcommand("cf-ideal", "Canonical form of the ideal generated by the input terms");
  std::optional<int> ideal_n;
  bool ideal_doubled = false;
  cf_ideal->add_option("--n", ideal_n, "Number of variables (X1..Xn)")->check(CLI::Range(1, kMaxCodeLength));
  cf_ideal->add_flag("--doubled", ideal_doubled, "Use X1..Xn,Y1..Yn");

  std::vector<std::string> pol_motifs, depol_motifs;
  auto* pol_motif = app.add_subcommand("polarize-motif", "Polarize motifs or partial motifs (u = inactive)");
  pol_motif->add_option("--motif", pol_motifs, "Motif; repeatable. Reads input lines when absent");
  auto* depol = app.add_subcommand("depolarize", "Depolarize polar motifs or polar partial motifs");
  depol->add_option("--motif", depol_motifs, "Motif; repeatable. Reads input lines when absent");

  auto* pol_code = app.add_subcommand("polarize-code", "The polarized code C^p");
  auto* formal = app.add_subcommand("formal-polarize", "The formal polarization C^[p]");
  auto* minprimes = app.add_subcommand("minprimes", "Minimal primes of the neural ideal");
  add_variant_flags(minprimes, primes_v, "of J_{C^p}", "of J_{C^[p]}");
  auto* decompose = app.add_subcommand("decompose", "Irredundant primary decomposition of J_C");
  decompose->add_flag("--polar", decompose_polar, "of J_{C^p}, by polarizing that of J_C");

  std::vector<int> neurons;
  auto* deact = app.add_subcommand("deactivate", "Deactivate neurons (1-based)");
  deact->add_option("--neurons", neurons, "Neuron indices")->delimiter(',')->required();
  std::vector<int> par_neurons;
  auto* maxparmot = app.add_subcommand("maxparmot", "Maximal partial motifs after deactivation");
  maxparmot->add_option("--neurons", par_neurons, "Neuron indices")->delimiter(',')->required();

  std::string gjs_motif;
  auto* gjs = app.add_subcommand("gjs-check", "Does p_c contain J_{C^[p]}? Decided on partial codes of C");
  gjs->add_option("--motif", gjs_motif, "Motif c of length 2n")->required();

  int exhaustive_n = 3;
  int random_count = 0;
  int random_n = 4;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  auto* ver = app.add_subcommand("verify", "Run the property suites");
  auto* ex_opt = ver->add_option("--exhaustive-n", exhaustive_n, "Check every code of length N")
                     ->check(CLI::Range(1, 4));
  auto* rnd_opt = ver->add_option("--random", random_count, "Check K random codes")->check(CLI::PositiveNumber);
  ver->add_option("--n", random_n, "Length of the random codes");
  ver->add_option("--seed", seed, "Seed for the random codes");
  ver->add_option("--threads", threads, "Worker threads (0 = all cores)");
  ex_opt->excludes(rnd_opt);

  auto* ocmp = app.add_subcommand("oracle-compare", "Compare fast paths with brute-force oracles");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ver) return run_verify(exhaustive_n, random_count, random_n, seed, threads, g, out, err);

    Output o;
    if (*maxmot) {
      const Code c = input_code(g, in);
      switch (maxmot_v.get()) {
        case Variant::plain: o = motifs_output(c.length(), false, max_mot(c)); break;
        case Variant::polar: o = motifs_output(c.length(), true, max_mot_polarized(c)); break;
        case Variant::formal: o = motifs_output(c.length(), true, max_mot(formal_polarize(c))); break;
      }
    } else if (*comp) {
      const Code c = input_code(g, in);
      const int n = c.length();
      switch (comp_v.get()) {
        case Variant::plain: o = motifs_output(n, false, max_mot_complement(n, max_mot(c))); break;
        case Variant::polar:
          o = motifs_output(n, true, max_mot_complement(2 * n, max_mot_polarized(c)));
          break;
        case Variant::formal: o = motifs_output(n, true, max_mot_complement_formal(c)); break;
      }
    } else if (*cf) {
      const Code c = input_code(g, in);
      o.n = c.length();
      switch (cf_v.get()) {
        case Variant::plain: o.set_cf(neural_ideal_cf(c)); break;
        case Variant::polar: o.doubled = true; o.set_cf(cf_of_polarized_code(c)); break;
        case Variant::formal: o.doubled = true; o.set_cf(cf_polarized_ideal(c)); break;
      }
    } else if (*cf_ideal) {
      const auto terms = input_lines(g, in);
      VariableSpace space;
      if (ideal_n) {
        space = VariableSpace{*ideal_n, ideal_doubled};
      } else {
        space = io::infer_space(terms);
        space.doubled = space.doubled || ideal_doubled;
      }
      const auto gens = io::parse_terms(terms, space);
      o.n = space.n;
      o.doubled = space.doubled;
      o.set_cf(cf_of_pm_ideal(space, gens));
    } else if (*pol_motif || *depol) {
      const bool polarizing = static_cast<bool>(*pol_motif);
      const auto items = motif_inputs(polarizing ? pol_motifs : depol_motifs, g, in);
      for (const auto& s : items) {
        std::string result;
        int n = 0;
        if (s.find('u') != std::string::npos) {
          const auto a = PartialMotif::parse(s);
          const auto b = polarizing ? polarize_partial_motif(a) : depolarize_partial_motif(a);
          result = b.str(polarizing);
          n = polarizing ? a.length() : b.length();
        } else {
          const auto a = Motif::parse(s);
          const auto b = polarizing ? polarize_motif(a) : depolarize(a);
          result = b.str(polarizing);
          n = polarizing ? a.length() : b.length();
        }
        o.n = n;
        o.motifs.push_back(result);
      }
      o.doubled = polarizing;
      o.text = o.motifs;
    } else if (*pol_code) {
      const Code c = input_code(g, in);
      o = code_output(c.length(), true, polarize_code(c));
    } else if (*formal) {
      const Code c = input_code(g, in);
      o = code_output(c.length(), true, formal_polarize(c));
    } else if (*minprimes) {
      const Code c = input_code(g, in);
      o.n = c.length();
      switch (primes_v.get()) {
        case Variant::plain: o.set_primes(min_primes(c)); break;
        case Variant::polar: o.doubled = true; o.set_primes(min_primes_polarized(c)); break;
        case Variant::formal:
          o.doubled = true;
          o.set_primes(min_primes(formal_polarize(c), VariableSpace{c.length(), true}));
          break;
      }
    } else if (*decompose) {
      const Code c = input_code(g, in);
      o.n = c.length();
      o.doubled = decompose_polar;
      o.set_primes(decompose_polar ? primary_decomposition_polarized(c) : primary_decomposition(c));
    } else if (*deact || *maxparmot) {
      const Code c = input_code(g, in);
      std::vector<int> positions;
      for (int i : (*deact ? neurons : par_neurons)) positions.push_back(i - 1);
      const auto partial = deactivate(c, positions);
      o.n = c.length();
      if (*deact) {
        o.motifs = partial.strings();
      } else {
        for (const auto& m : max_par_mot(partial)) o.motifs.push_back(m.str());
      }
      o.text = o.motifs;
    } else if (*gjs) {
      const Code c = input_code(g, in);
      const auto r = gjs_prime_test(Motif::parse(gjs_motif), c);
      std::vector<int> one_based;
      for (int i : r.inactive) one_based.push_back(i + 1);
      o.n = c.length();
      o.doubled = true;
      o.motifs = {r.depolarized.str()};
      o.primes = {motivic_prime(Motif::parse(gjs_motif), VariableSpace{c.length(), true})
                      .generator_strings()};
      o.extra = {{"contains", r.contains},
                 {"stripped", r.stripped.str(true)},
                 {"inactive", one_based},
                 {"deactivated", r.deactivated.str(true)},
                 {"partial_code", r.partial_code.strings()}};
      std::string inactive_text;
      for (std::size_t i = 0; i < one_based.size(); ++i) {
        inactive_text += (i ? "," : "") + std::to_string(one_based[i]);
      }
      std::string partial_text;
      for (const auto& w : r.partial_code.strings()) partial_text += (partial_text.empty() ? "" : " ") + w;
      o.text = {"prime " + motivic_prime(Motif::parse(gjs_motif), VariableSpace{c.length(), true}).str(),
                "stripped " + r.stripped.str(true),
                "inactive " + (inactive_text.empty() ? std::string("-") : inactive_text),
                "deactivated " + r.deactivated.str(true),
                "depolarized " + r.depolarized.str(),
                "partial-code " + partial_text,
                std::string("contains ") + (r.contains ? "true" : "false")};
    } else if (*ocmp) {
      return run_oracle_compare(input_code(g, in), g, out);
    }
    emit(o, g.json, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace polarnc::cli
