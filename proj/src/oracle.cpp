#include "polarnc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "polarnc/polarization.hpp"

namespace polarnc::oracle {

namespace {

void require_at_most(int length, int cap, const char* what) {
  if (length > cap) {
    throw Error(std::string(what) + " is capped at length " + std::to_string(cap) + ", got " +
                std::to_string(length));
  }
}

bool matches(const Motif& a, std::uint64_t w) {
  return ((w ^ a.ones_mask()) & a.fixed_mask()) == 0;
}

// V_a inside C, checked by scanning the whole ambient space.
bool literal_motif_of(const Motif& a, const Code& c) {
  const std::uint64_t total = std::uint64_t{1} << c.length();
  for (std::uint64_t w = 0; w < total; ++w) {
    if (matches(a, w) && !c.contains(w)) return false;
  }
  return true;
}

Code literal_variety_union(int length, const std::vector<Motif>& motifs) {
  Code out(length);
  const std::uint64_t total = std::uint64_t{1} << length;
  for (std::uint64_t w = 0; w < total; ++w) {
    for (const auto& m : motifs) {
      if (matches(m, w)) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Motif> all_motifs(int length) {
  std::vector<Motif> out;
  std::vector<int> digit(length, 0);
  while (true) {
    std::uint64_t fixed = 0;
    std::uint64_t ones = 0;
    for (int p = 0; p < length; ++p) {
      const std::uint64_t bit = position_bit(length, p);
      if (digit[p] != 2) fixed |= bit;
      if (digit[p] == 1) ones |= bit;
    }
    out.emplace_back(length, fixed, ones);
    int p = length - 1;
    while (p >= 0 && digit[p] == 2) digit[p--] = 0;
    if (p < 0) break;
    ++digit[p];
  }
  return out;
}

std::vector<Motif> brute_max_mot(const Code& c) {
  require_at_most(c.length(), kMaxBruteLength, "brute_max_mot");
  std::vector<Motif> mot;
  for (const auto& a : all_motifs(c.length())) {
    if (literal_motif_of(a, c)) mot.push_back(a);
  }
  // Anything below another motif of C is below a maximal one with more
  // stars, so comparing against the maximal motifs found so far suffices.
  std::stable_sort(mot.begin(), mot.end(),
                   [](const Motif& a, const Motif& b) { return a.star_count() > b.star_count(); });
  std::vector<Motif> out;
  for (const auto& a : mot) {
    const bool dominated =
        std::any_of(out.begin(), out.end(), [&](const Motif& b) { return motif_leq(a, b); });
    if (!dominated) out.push_back(a);
  }
  sort_canonical(out);
  return out;
}

CanonicalForm brute_cf(const Code& c) {
  require_at_most(c.length(), kMaxBruteLength, "brute_cf");
  const VariableSpace space = VariableSpace::for_length(c.length());
  const auto words = c.words();
  std::vector<PseudoMonomial> vanishing;
  for (const auto& m : all_motifs(c.length())) {
    const PseudoMonomial f(space, m.ones_mask(), m.zeros_mask());
    const bool vanishes = std::all_of(words.begin(), words.end(),
                                      [&](const Word& w) { return evaluate(f, w) == 0; });
    if (vanishes) vanishing.push_back(f);
  }
  std::stable_sort(vanishing.begin(), vanishing.end(),
                   [](const PseudoMonomial& a, const PseudoMonomial& b) {
                     return a.degree() < b.degree();
                   });
  std::vector<PseudoMonomial> minimal;
  for (const auto& f : vanishing) {
    const bool divisible = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const PseudoMonomial& g) { return pm_divides(g, f); });
    if (!divisible) minimal.push_back(f);
  }
  return CanonicalForm(space, std::move(minimal));
}

Code brute_variety(VariableSpace space, std::span<const PseudoMonomial> gens) {
  require_at_most(space.dim(), kMaxVarietyDim, "brute_variety");
  Code out(space.dim());
  const std::uint64_t total = std::uint64_t{1} << space.dim();
  for (std::uint64_t w = 0; w < total; ++w) {
    bool zero = true;
    for (const auto& f : gens) {
      if (!(f.space() == space)) throw Error("generator from another variable space");
      if (evaluate(f, w) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.insert(w);
  }
  return out;
}

GjsScan brute_gjs_scan(const Code& c) {
  require_at_most(c.length(), kMaxGjsScanLength, "brute_gjs_scan");
  const int n = c.length();
  std::vector<Motif> outside;
  for (const auto& b : brute_max_mot(complement(c))) outside.push_back(bar(polarize_motif(bar(b))));
  const Code formal = complement(literal_variety_union(2 * n, outside));

  GjsScan scan;
  for (const auto& m : all_motifs(2 * n)) {
    const bool fast = gjs_prime_test(m, c).contains;
    const bool slow = literal_motif_of(m, formal);
    ++scan.motifs_checked;
    if (slow) ++scan.holds;
    if (fast != slow) scan.discrepancies.push_back({m, fast, slow});
  }
  return scan;
}

std::string discrepancy_line(const Code& c, const std::string& motif, bool fast, bool oracle) {
  return "CODE " + c.hex() + " MOTIF " + motif + " fast=" + (fast ? "true" : "false") +
         " oracle=" + (oracle ? "true" : "false");
}

Code random_code(int length, double density, std::mt19937_64& rng) {
  Code out(length);
  std::bernoulli_distribution include(density);
  const std::uint64_t total = std::uint64_t{1} << length;
  for (std::uint64_t w = 0; w < total; ++w) {
    if (include(rng)) out.insert(w);
  }
  return out;
}

Code code_from_index(int length, std::uint64_t index) {
  if (length > 6) throw Error("code_from_index supports length <= 6");
  Code out(length);
  const std::uint64_t total = std::uint64_t{1} << length;
  for (std::uint64_t w = 0; w < total; ++w) {
    if ((index >> w) & 1) out.insert(w);
  }
  return out;
}

}  // namespace polarnc::oracle
