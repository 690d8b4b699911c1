#include "polarnc/polarization.hpp"

#include <bit>

namespace polarnc {

namespace {

// In a length-2n motif the first half sits in the high n bits and the second
// half in the low n bits.
struct Halves {
  std::uint64_t high;
  std::uint64_t low;
};

Halves split(std::uint64_t mask, int n) { return {(mask >> n) & full_mask(n), mask & full_mask(n)}; }

std::uint64_t join(std::uint64_t high, std::uint64_t low, int n) { return (high << n) | low; }

int half_length(int length) {
  if (length % 2 != 0) throw Error("doubled-space motif must have even length, got " + std::to_string(length));
  return length / 2;
}

}  // namespace

PseudoMonomial polarize_pm(const PseudoMonomial& f) {
  if (f.space().doubled) throw Error("pseudo-monomial is already in doubled space");
  const int n = f.space().n;
  return PseudoMonomial(VariableSpace{n, true}, join(f.sigma(), f.tau(), n), 0);
}

Motif polarize_motif(const Motif& a) {
  const int n = a.length();
  if (2 * n > kMaxLength) throw Error("motif too long to polarize");
  // A zero at i becomes a zero at i; a one at i becomes a zero at n+i.
  return Motif(2 * n, join(a.zeros_mask(), a.ones_mask(), n), 0);
}

bool is_polar(const Motif& b) {
  if (b.length() % 2 != 0) return false;
  const int n = b.length() / 2;
  const auto fixed = split(b.fixed_mask(), n);
  return b.ones_mask() == 0 && (fixed.high & fixed.low) == 0;
}

Motif depolarize(const Motif& b) {
  const int n = half_length(b.length());
  if (b.ones_mask() != 0) throw Error("motif " + b.str(true) + " is not polar: it contains a 1");
  const auto zeros = split(b.zeros_mask(), n);
  if (zeros.high & zeros.low) {
    throw Error("motif " + b.str(true) + " is not polar: a position pair is 00");
  }
  return Motif(n, zeros.high | zeros.low, zeros.low);
}

Code polarize_code(const Code& c) {
  const auto mot = max_mot_polarized(c);
  return union_of_varieties(2 * c.length(), mot);
}

Motif bar_polarize(const Motif& b) { return bar(polarize_motif(bar(b))); }

Code bar_polarize_code(const Code& d) {
  std::vector<Motif> mot;
  for (const auto& b : max_mot(d)) mot.push_back(bar_polarize(b));
  return union_of_varieties(2 * d.length(), mot);
}

std::vector<Motif> max_mot_complement_formal(const Code& c) {
  const auto mot = max_mot(c);
  std::vector<Motif> out;
  for (const auto& b : max_mot_complement(c.length(), mot)) out.push_back(bar_polarize(b));
  sort_canonical(out);
  return out;
}

Code formal_polarize(const Code& c) {
  const auto outside = max_mot_complement_formal(c);
  return complement(union_of_varieties(2 * c.length(), outside));
}

std::vector<Motif> max_mot_polarized(const Code& c) {
  std::vector<Motif> out;
  for (const auto& a : max_mot(c)) out.push_back(polarize_motif(a));
  sort_canonical(out);
  return out;
}

CanonicalForm cf_polarized_ideal(const Code& c) {
  const auto cf = neural_ideal_cf(c);
  std::vector<PseudoMonomial> elements;
  for (const auto& f : cf.elements()) elements.push_back(polarize_pm(f));
  return CanonicalForm(VariableSpace{c.length(), true}, std::move(elements));
}

CanonicalForm cf_polarized_ideal_by_bar(const Code& c) {
  const VariableSpace space{c.length(), true};
  std::vector<PseudoMonomial> elements;
  for (const auto& b : max_mot_complement_formal(c)) elements.push_back(lagrange(b, space));
  return CanonicalForm(space, std::move(elements));
}

CanonicalForm cf_of_polarized_code(const Code& c) {
  const VariableSpace space{c.length(), true};
  const auto mot = max_mot_polarized(c);
  std::vector<PseudoMonomial> elements;
  for (const auto& b : max_mot_complement(2 * c.length(), mot)) elements.push_back(lagrange(b, space));
  return CanonicalForm(space, std::move(elements));
}

std::vector<MotivicPrime> min_primes_polarized(const Code& c) {
  const VariableSpace space{c.length(), true};
  std::vector<MotivicPrime> out;
  for (const auto& a : max_mot_polarized(c)) out.emplace_back(space, a);
  sort_primes(out);
  return out;
}

std::vector<MotivicPrime> primary_decomposition_polarized(const Code& c) {
  const VariableSpace space{c.length(), true};
  std::vector<MotivicPrime> out;
  for (const auto& p : primary_decomposition(c)) out.emplace_back(space, polarize_motif(p.motif()));
  sort_primes(out);
  return out;
}

PartialMotif polarize_partial_motif(const PartialMotif& a) {
  const int n = a.length();
  if (2 * n > kMaxLength) throw Error("partial motif too long to polarize");
  return PartialMotif(2 * n, join(a.zeros_mask(), a.ones_mask(), n), 0,
                      join(a.inactive_mask(), a.inactive_mask(), n));
}

bool is_polar_partial(const PartialMotif& b) {
  if (b.length() % 2 != 0) return false;
  const int n = b.length() / 2;
  const auto inactive = split(b.inactive_mask(), n);
  return inactive.high == inactive.low && is_polar(b.with_stars());
}

PartialMotif depolarize_partial_motif(const PartialMotif& b) {
  const int n = half_length(b.length());
  const auto inactive = split(b.inactive_mask(), n);
  if (inactive.high != inactive.low) {
    throw Error("partial motif " + b.str(true) + " is not polar: u positions do not pair up");
  }
  const Motif a = depolarize(b.with_stars());
  return PartialMotif(n, a.fixed_mask(), a.ones_mask(), inactive.high);
}

GjsResult gjs_prime_test(const Motif& c, const Code& code) {
  const int n = half_length(c.length());
  if (n != code.length()) {
    throw Error("motif " + c.str(true) + " needs a code of length " + std::to_string(n));
  }
  GjsResult r;
  r.stripped = Motif(c.length(), c.zeros_mask(), 0);
  const auto zeros = split(r.stripped.zeros_mask(), n);
  const std::uint64_t inactive = zeros.high & zeros.low;
  for (int i = 0; i < n; ++i) {
    if (inactive & position_bit(n, i)) r.inactive.push_back(i);
  }
  r.deactivated = PartialMotif::deactivated(r.stripped, join(inactive, inactive, n));
  r.depolarized = depolarize_partial_motif(r.deactivated);
  r.partial_code = deactivate_mask(code, inactive);
  r.contains = par_mot_contains(r.depolarized, r.partial_code);
  return r;
}

}  // namespace polarnc
