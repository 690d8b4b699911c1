#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarnc/code.hpp"
#include "polarnc/motif.hpp"

namespace polarnc {

/// Variables X_1..X_n, or X_1..X_n,Y_1..Y_n when doubled. Variable index
/// n+i (0-based position n+i-1) names Y_i.
struct VariableSpace {
  int n = 0;
  bool doubled = false;

  int dim() const { return doubled ? 2 * n : n; }
  std::string variable_name(int position) const;

  /// The space a code or motif of the given length lives in.
  static VariableSpace for_length(int length, bool doubled = false);

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;
};

/// prod_{i in sigma} X_i prod_{j in tau} (1 - X_j), sigma and tau disjoint.
/// Index sets use the same bit layout as motif positions.
class PseudoMonomial {
 public:
  PseudoMonomial() = default;
  PseudoMonomial(VariableSpace space, std::uint64_t sigma, std::uint64_t tau);

  /// Parses a term such as "X1X2(1-X4)" or "X3Y2", or "1".
  static PseudoMonomial parse(std::string_view text, VariableSpace space);

  const VariableSpace& space() const { return space_; }
  std::uint64_t sigma() const { return sigma_; }
  std::uint64_t tau() const { return tau_; }
  int degree() const;
  bool is_monomial() const { return tau_ == 0; }

  /// Factors sorted by variable index; "1" for the empty product.
  std::string str() const;

  friend bool operator==(const PseudoMonomial&, const PseudoMonomial&) = default;

 private:
  VariableSpace space_;
  std::uint64_t sigma_ = 0;
  std::uint64_t tau_ = 0;
};

/// An antichain of pseudo-monomials under divisibility, kept sorted by
/// rendered text.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(VariableSpace space, std::vector<PseudoMonomial> elements);

  const VariableSpace& space() const { return space_; }
  const std::vector<PseudoMonomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  std::vector<std::string> strings() const;
  bool subset_of(const CanonicalForm& other) const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  VariableSpace space_;
  std::vector<PseudoMonomial> elements_;
};

/// p_a = ({X_i : a_i = 0} and {1 - X_j : a_j = 1}).
class MotivicPrime {
 public:
  MotivicPrime() = default;
  MotivicPrime(VariableSpace space, Motif motif);

  const VariableSpace& space() const { return space_; }
  const Motif& motif() const { return motif_; }

  /// Degree-one generators sorted by variable index.
  std::vector<PseudoMonomial> generators() const;
  std::vector<std::string> generator_strings() const;
  /// "(1-X1, X2)"; the zero ideal renders as "(0)".
  std::string str() const;

  friend bool operator==(const MotivicPrime&, const MotivicPrime&) = default;

 private:
  VariableSpace space_;
  Motif motif_;
};

/// Primes in canonical order of their motifs.
void sort_primes(std::vector<MotivicPrime>& primes);

PseudoMonomial lagrange(const Motif& a, VariableSpace space);
PseudoMonomial lagrange(const Motif& a);

/// Factorwise containment; exact for pseudo-monomials.
bool pm_divides(const PseudoMonomial& f, const PseudoMonomial& g);

/// Value of f at w in F_2.
int evaluate(const PseudoMonomial& f, const Word& w);
int evaluate(const PseudoMonomial& f, std::uint64_t bits);

/// CF(J_C) = {L_a : a in MaxMot(complement C)}.
CanonicalForm neural_ideal_cf(const Code& c, VariableSpace space);
CanonicalForm neural_ideal_cf(const Code& c);

/// The vanishing set of the generators, by evaluation over F_2^dim.
Code zero_set(VariableSpace space, std::span<const PseudoMonomial> gens);

/// CF of the pseudo-monomial ideal generated by `gens`, via its zero set.
CanonicalForm cf_of_pm_ideal(VariableSpace space, std::span<const PseudoMonomial> gens);

/// Membership of a pseudo-monomial in the ideal with canonical form `cf`.
bool ideal_contains(const CanonicalForm& cf, const PseudoMonomial& f);

MotivicPrime motivic_prime(const Motif& a, VariableSpace space);
MotivicPrime motivic_prime(const Motif& a);

/// p_a contains J_C iff a is a motif of C.
bool prime_contains_neural_ideal(const Motif& a, const Code& c);

std::vector<MotivicPrime> min_primes(const Code& c, VariableSpace space);
std::vector<MotivicPrime> min_primes(const Code& c);

/// The unique irredundant primary decomposition of J_C. Throws for the
/// empty code, whose neural ideal is the unit ideal.
std::vector<MotivicPrime> primary_decomposition(const Code& c, VariableSpace space);
std::vector<MotivicPrime> primary_decomposition(const Code& c);

/// V(J_C), computed by evaluating CF(J_C) over F_2^n.
Code variety_of_neural_ideal(const Code& c);

}  // namespace polarnc
