#pragma once

#include <cstdint>
#include <vector>

#include "polarnc/code.hpp"
#include "polarnc/ideal.hpp"
#include "polarnc/motif.hpp"

namespace polarnc {

/// f^p: (1 - X_j) becomes Y_j. The result is a square-free monomial.
PseudoMonomial polarize_pm(const PseudoMonomial& f);

/// Position i of a maps to the pair (i, n+i) of a^p:
/// 0 -> (0,*), 1 -> (*,0), * -> (*,*).
Motif polarize_motif(const Motif& a);

bool is_polar(const Motif& b);

/// The unique a with a^p = b. Throws when b is not polar.
Motif depolarize(const Motif& b);

/// C^p: union of V_{a^p} over the maximal motifs a of C.
Code polarize_code(const Code& c);

/// bar(bar(b)^p), the image of a complement motif in doubled space.
Motif bar_polarize(const Motif& b);

/// bar(bar(D)^p) for a code D: the union of bar_polarize over MaxMot(D).
Code bar_polarize_code(const Code& d);

/// C^[p]: complement of the union of V_{bar(bar(b)^p)} over MaxMot(complement C).
Code formal_polarize(const Code& c);

/// MaxMot(C^p) = MaxMot(C)^p; no search in doubled space.
std::vector<Motif> max_mot_polarized(const Code& c);

/// MaxMot(complement of C^[p]) = bar(bar(MaxMot(complement C))^p).
std::vector<Motif> max_mot_complement_formal(const Code& c);

/// CF(J_C^p) = {f^p : f in CF(J_C)}.
CanonicalForm cf_polarized_ideal(const Code& c);

/// The same set through Lagrange polynomials: {L_{bar(bar(b)^p)} : b in MaxMot(complement C)}.
CanonicalForm cf_polarized_ideal_by_bar(const Code& c);

/// CF(J_{C^p}), from MaxMot(C)^p by hitting sets.
CanonicalForm cf_of_polarized_code(const Code& c);

/// Min(J_{C^p}) = {p_{a^p} : a in MaxMot(C)}.
std::vector<MotivicPrime> min_primes_polarized(const Code& c);

/// Primary decomposition of J_{C^p} as the polarization of that of J_C.
std::vector<MotivicPrime> primary_decomposition_polarized(const Code& c);

/// Adds the rule u -> (u,u) to polarize_motif.
PartialMotif polarize_partial_motif(const PartialMotif& a);
bool is_polar_partial(const PartialMotif& b);
PartialMotif depolarize_partial_motif(const PartialMotif& b);

/// Outcome of the partial-code criterion for p_c containing J_{C^[p]}.
struct GjsResult {
  Motif stripped;                // c with every 1 replaced by *
  std::vector<int> inactive;     // neurons i (0-based) with stripped_i = stripped_{n+i} = 0
  PartialMotif deactivated;      // stripped with u at i and n+i for inactive i
  PartialMotif depolarized;      // the length-n depolarization of `deactivated`
  PartialCode partial_code;      // C with the inactive neurons deactivated
  bool contains = false;         // depolarized lies in ParMot(partial_code)
};

/// Decides p_c contains J_{C^[p]} from C alone, via deactivated neurons.
GjsResult gjs_prime_test(const Motif& c, const Code& code);

}  // namespace polarnc
