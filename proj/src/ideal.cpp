#include "polarnc/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace polarnc {

std::string VariableSpace::variable_name(int position) const {
  if (doubled && position >= n) return "Y" + std::to_string(position - n + 1);
  return "X" + std::to_string(position + 1);
}

VariableSpace VariableSpace::for_length(int length, bool doubled) {
  if (doubled) {
    if (length % 2 != 0) throw Error("doubled space needs even length, got " + std::to_string(length));
    return {length / 2, true};
  }
  return {length, false};
}

PseudoMonomial::PseudoMonomial(VariableSpace space, std::uint64_t sigma, std::uint64_t tau)
    : space_(space), sigma_(sigma), tau_(tau) {
  if (space.n <= 0 || space.dim() > kMaxLength) throw Error("variable space out of range");
  if ((sigma | tau) & ~full_mask(space.dim())) throw Error("pseudo-monomial index out of range");
  if (sigma & tau) throw Error("pseudo-monomial has X_i and (1-X_i) for the same i");
}

int PseudoMonomial::degree() const { return std::popcount(sigma_) + std::popcount(tau_); }

std::string PseudoMonomial::str() const {
  if (sigma_ == 0 && tau_ == 0) return "1";
  const int dim = space_.dim();
  std::string out;
  for (int p = 0; p < dim; ++p) {
    const std::uint64_t bit = position_bit(dim, p);
    if (sigma_ & bit) {
      out += space_.variable_name(p);
    } else if (tau_ & bit) {
      out += "(1-" + space_.variable_name(p) + ")";
    }
  }
  return out;
}

PseudoMonomial PseudoMonomial::parse(std::string_view text, VariableSpace space) {
  const int dim = space.dim();
  std::uint64_t sigma = 0;
  std::uint64_t tau = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return Error("cannot parse pseudo-monomial \"" + std::string(text) + "\": " + why);
  };
  auto read_variable = [&]() -> int {
    if (i >= text.size() || (text[i] != 'X' && text[i] != 'Y')) throw fail("expected X or Y");
    const bool is_y = text[i] == 'Y';
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw fail("missing variable index");
    const int index = std::stoi(std::string(text.substr(start, i - start)));
    if (index < 1 || index > space.n) throw fail("variable index out of range");
    if (is_y && !space.doubled) throw fail("Y variable in an undoubled space");
    return is_y ? space.n + index - 1 : index - 1;
  };
  auto add = [&](std::uint64_t& set, int position) {
    const std::uint64_t bit = position_bit(dim, position);
    if ((sigma | tau) & bit) throw fail("repeated variable");
    set |= bit;
  };

  if (text == "1") return PseudoMonomial(space, 0, 0);
  if (text.empty()) throw fail("empty term");
  while (i < text.size()) {
    if (text[i] == '(') {
      if (text.substr(i, 3) != "(1-") throw fail("expected \"(1-\"");
      i += 3;
      const int p = read_variable();
      if (i >= text.size() || text[i] != ')') throw fail("expected ')'");
      ++i;
      add(tau, p);
    } else {
      add(sigma, read_variable());
    }
  }
  return PseudoMonomial(space, sigma, tau);
}

CanonicalForm::CanonicalForm(VariableSpace space, std::vector<PseudoMonomial> elements)
    : space_(space), elements_(std::move(elements)) {
  for (const auto& f : elements_) {
    if (!(f.space() == space_)) throw Error("canonical form element from another variable space");
  }
  std::sort(elements_.begin(), elements_.end(),
            [](const PseudoMonomial& a, const PseudoMonomial& b) { return a.str() < b.str(); });
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& f : elements_) {
    for (const auto& g : elements_) {
      if (!(f == g) && pm_divides(f, g)) {
        throw Error("canonical form is not an antichain: " + f.str() + " divides " + g.str());
      }
    }
  }
}

std::vector<std::string> CanonicalForm::strings() const {
  std::vector<std::string> out;
  for (const auto& f : elements_) out.push_back(f.str());
  return out;
}

bool CanonicalForm::subset_of(const CanonicalForm& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const PseudoMonomial& f) {
    return std::find(other.elements_.begin(), other.elements_.end(), f) != other.elements_.end();
  });
}

MotivicPrime::MotivicPrime(VariableSpace space, Motif motif) : space_(space), motif_(motif) {
  if (motif.length() != space.dim()) throw Error("prime motif length does not match space");
}

std::vector<PseudoMonomial> MotivicPrime::generators() const {
  const int dim = space_.dim();
  std::vector<PseudoMonomial> out;
  for (int p = 0; p < dim; ++p) {
    const std::uint64_t bit = position_bit(dim, p);
    if (motif_.zeros_mask() & bit) out.emplace_back(space_, bit, 0);
    if (motif_.ones_mask() & bit) out.emplace_back(space_, 0, bit);
  }
  return out;
}

std::vector<std::string> MotivicPrime::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators()) {
    // "(1-X1)" reads as "1-X1" inside the prime's own parentheses.
    std::string s = g.str();
    if (s.front() == '(') s = s.substr(1, s.size() - 2);
    out.push_back(std::move(s));
  }
  return out;
}

std::string MotivicPrime::str() const {
  const auto gens = generator_strings();
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i];
  }
  return out + ")";
}

void sort_primes(std::vector<MotivicPrime>& primes) {
  std::sort(primes.begin(), primes.end(), [](const MotivicPrime& a, const MotivicPrime& b) {
    return canonical_less(a.motif(), b.motif());
  });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
}

PseudoMonomial lagrange(const Motif& a, VariableSpace space) {
  if (a.length() != space.dim()) throw Error("motif length does not match variable space");
  return PseudoMonomial(space, a.ones_mask(), a.zeros_mask());
}

PseudoMonomial lagrange(const Motif& a) { return lagrange(a, VariableSpace::for_length(a.length())); }

bool pm_divides(const PseudoMonomial& f, const PseudoMonomial& g) {
  if (!(f.space() == g.space())) throw Error("pseudo-monomials from different variable spaces");
  return (f.sigma() & ~g.sigma()) == 0 && (f.tau() & ~g.tau()) == 0;
}

int evaluate(const PseudoMonomial& f, std::uint64_t bits) {
  return ((bits & f.sigma()) == f.sigma() && (bits & f.tau()) == 0) ? 1 : 0;
}

int evaluate(const PseudoMonomial& f, const Word& w) {
  if (w.length() != f.space().dim()) throw Error("word length does not match variable space");
  return evaluate(f, w.bits());
}

CanonicalForm neural_ideal_cf(const Code& c, VariableSpace space) {
  if (space.dim() != c.length()) throw Error("code length does not match variable space");
  std::vector<PseudoMonomial> elements;
  const auto mot = max_mot(c);
  for (const auto& b : max_mot_complement(c.length(), mot)) elements.push_back(lagrange(b, space));
  return CanonicalForm(space, std::move(elements));
}

CanonicalForm neural_ideal_cf(const Code& c) {
  return neural_ideal_cf(c, VariableSpace::for_length(c.length()));
}

Code zero_set(VariableSpace space, std::span<const PseudoMonomial> gens) {
  for (const auto& f : gens) {
    if (!(f.space() == space)) throw Error("generator from another variable space");
  }
  Code out(space.dim());
  const std::uint64_t total = std::uint64_t{1} << space.dim();
  for (std::uint64_t w = 0; w < total; ++w) {
    const bool vanishes = std::all_of(gens.begin(), gens.end(),
                                      [&](const PseudoMonomial& f) { return evaluate(f, w) == 0; });
    if (vanishes) out.insert(w);
  }
  return out;
}

CanonicalForm cf_of_pm_ideal(VariableSpace space, std::span<const PseudoMonomial> gens) {
  return neural_ideal_cf(zero_set(space, gens), space);
}

bool ideal_contains(const CanonicalForm& cf, const PseudoMonomial& f) {
  return std::any_of(cf.elements().begin(), cf.elements().end(),
                     [&](const PseudoMonomial& g) { return pm_divides(g, f); });
}

MotivicPrime motivic_prime(const Motif& a, VariableSpace space) { return MotivicPrime(space, a); }

MotivicPrime motivic_prime(const Motif& a) {
  return MotivicPrime(VariableSpace::for_length(a.length()), a);
}

bool prime_contains_neural_ideal(const Motif& a, const Code& c) { return is_motif_of(a, c); }

std::vector<MotivicPrime> min_primes(const Code& c, VariableSpace space) {
  if (space.dim() != c.length()) throw Error("code length does not match variable space");
  std::vector<MotivicPrime> out;
  for (const auto& a : max_mot(c)) out.emplace_back(space, a);
  sort_primes(out);
  return out;
}

std::vector<MotivicPrime> min_primes(const Code& c) {
  return min_primes(c, VariableSpace::for_length(c.length()));
}

std::vector<MotivicPrime> primary_decomposition(const Code& c, VariableSpace space) {
  if (c.empty()) throw Error("the neural ideal of the empty code is the unit ideal");
  auto primes = min_primes(c, space);
  // p_a contains p_b iff V_a is inside V_b; maximal motifs never nest.
  for (const auto& p : primes) {
    for (const auto& q : primes) {
      if (!(p == q) && motif_leq(p.motif(), q.motif())) {
        throw Error("primary decomposition is redundant at " + p.str());
      }
    }
  }
  return primes;
}

std::vector<MotivicPrime> primary_decomposition(const Code& c) {
  return primary_decomposition(c, VariableSpace::for_length(c.length()));
}

Code variety_of_neural_ideal(const Code& c) {
  const auto cf = neural_ideal_cf(c);
  return zero_set(cf.space(), cf.elements());
}

}  // namespace polarnc
