#include "polarnc/motif.hpp"

#include <algorithm>
#include <bit>

namespace polarnc {

namespace {

void check_length(int length) {
  if (length <= 0 || length > kMaxLength) {
    throw Error("length must be in [1, " + std::to_string(kMaxLength) + "], got " +
                std::to_string(length));
  }
}

// Removes a '|' separator, which is only legal exactly in the middle.
std::string strip_separator(std::string_view text) {
  const auto bar_pos = text.find('|');
  if (bar_pos == std::string_view::npos) return std::string(text);
  if (text.find('|', bar_pos + 1) != std::string_view::npos) {
    throw Error("more than one '|' in \"" + std::string(text) + "\"");
  }
  const std::size_t rest = text.size() - bar_pos - 1;
  if (bar_pos != rest) {
    throw Error("'|' must split \"" + std::string(text) + "\" into equal halves");
  }
  std::string out(text.substr(0, bar_pos));
  out.append(text.substr(bar_pos + 1));
  return out;
}

// Rank of a symbol in the canonical order 0 < 1 < * < u.
int rank_at(int length, std::uint64_t fixed, std::uint64_t ones, std::uint64_t inactive,
            int position) {
  const std::uint64_t bit = position_bit(length, position);
  if (inactive & bit) return 3;
  if (!(fixed & bit)) return 2;
  return (ones & bit) ? 1 : 0;
}

bool less_by_rank(int la, std::uint64_t fa, std::uint64_t oa, std::uint64_t ia, int lb,
                  std::uint64_t fb, std::uint64_t ob, std::uint64_t ib) {
  const int common = std::min(la, lb);
  for (int p = 0; p < common; ++p) {
    const int ra = rank_at(la, fa, oa, ia, p);
    const int rb = rank_at(lb, fb, ob, ib, p);
    if (ra != rb) return ra < rb;
  }
  return la < lb;
}

std::string with_split(std::string s, bool split) {
  if (split && s.size() % 2 == 0) s.insert(s.size() / 2, 1, '|');
  return s;
}

}  // namespace

Word::Word(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  check_length(length);
  if (bits & ~full_mask(length)) throw Error("word bits exceed length");
}

Word Word::parse(std::string_view text) {
  const std::string s = strip_separator(text);
  check_length(static_cast<int>(s.size()));
  const int n = static_cast<int>(s.size());
  std::uint64_t bits = 0;
  for (int p = 0; p < n; ++p) {
    switch (s[p]) {
      case '0': break;
      case '1': bits |= position_bit(n, p); break;
      default:
        throw Error("invalid word character '" + std::string(1, s[p]) + "' in \"" +
                    std::string(text) + "\"");
    }
  }
  return Word(n, bits);
}

std::string Word::str(bool split) const {
  std::string s(length_, '0');
  for (int p = 0; p < length_; ++p) {
    if (at(p)) s[p] = '1';
  }
  return with_split(std::move(s), split);
}

Motif::Motif(int length, std::uint64_t fixed, std::uint64_t ones)
    : length_(length), fixed_(fixed), ones_(ones) {
  check_length(length);
  if (fixed & ~full_mask(length)) throw Error("motif mask exceeds length");
  if (ones & ~fixed) throw Error("motif has a 1 at a star position");
}

Motif Motif::stars(int length) { return Motif(length, 0, 0); }

Motif Motif::from_word(const Word& w) { return Motif(w.length(), full_mask(w.length()), w.bits()); }

Motif Motif::parse(std::string_view text) {
  const std::string s = strip_separator(text);
  check_length(static_cast<int>(s.size()));
  const int n = static_cast<int>(s.size());
  std::uint64_t fixed = 0;
  std::uint64_t ones = 0;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t bit = position_bit(n, p);
    switch (s[p]) {
      case '0': fixed |= bit; break;
      case '1': fixed |= bit; ones |= bit; break;
      case '*': break;
      default:
        throw Error("invalid motif character '" + std::string(1, s[p]) + "' in \"" +
                    std::string(text) + "\"");
    }
  }
  return Motif(n, fixed, ones);
}

int Motif::star_count() const { return std::popcount(star_mask()); }

Trit Motif::at(int position) const {
  const std::uint64_t bit = position_bit(length_, position);
  if (!(fixed_ & bit)) return Trit::star;
  return (ones_ & bit) ? Trit::one : Trit::zero;
}

std::string Motif::str(bool split) const {
  std::string s(length_, '*');
  for (int p = 0; p < length_; ++p) {
    switch (at(p)) {
      case Trit::zero: s[p] = '0'; break;
      case Trit::one: s[p] = '1'; break;
      case Trit::star: break;
    }
  }
  return with_split(std::move(s), split);
}

bool canonical_less(const Motif& a, const Motif& b) {
  return less_by_rank(a.length(), a.fixed_mask(), a.ones_mask(), 0, b.length(), b.fixed_mask(),
                      b.ones_mask(), 0);
}

void sort_canonical(std::vector<Motif>& motifs) {
  std::sort(motifs.begin(), motifs.end(),
            [](const Motif& a, const Motif& b) { return canonical_less(a, b); });
  motifs.erase(std::unique(motifs.begin(), motifs.end()), motifs.end());
}

std::vector<std::string> render(const std::vector<Motif>& motifs, bool split) {
  std::vector<std::string> out;
  out.reserve(motifs.size());
  for (const auto& m : motifs) out.push_back(m.str(split));
  return out;
}

namespace {
void require_same_length(const Motif& a, const Motif& b) {
  if (a.length() != b.length()) {
    throw Error("motif length mismatch: " + std::to_string(a.length()) + " vs " +
                std::to_string(b.length()));
  }
}
}  // namespace

bool motif_leq(const Motif& a, const Motif& b) {
  require_same_length(a, b);
  // Every fixed coordinate of b is fixed in a with the same value.
  return (b.fixed_mask() & ~a.fixed_mask()) == 0 &&
         ((a.ones_mask() ^ b.ones_mask()) & b.fixed_mask()) == 0;
}

Motif motif_add(const Motif& a, const Motif& b) {
  require_same_length(a, b);
  const std::uint64_t fixed = a.fixed_mask() & b.fixed_mask();
  return Motif(a.length(), fixed, (a.ones_mask() ^ b.ones_mask()) & fixed);
}

bool is_disjoint(const Motif& a, const Motif& b) {
  require_same_length(a, b);
  return (a.fixed_mask() & b.fixed_mask() & (a.ones_mask() ^ b.ones_mask())) != 0;
}

Motif bar(const Motif& a) {
  return Motif(a.length(), a.fixed_mask(), a.fixed_mask() & ~a.ones_mask());
}

PartialMotif::PartialMotif(int length, std::uint64_t fixed, std::uint64_t ones,
                           std::uint64_t inactive)
    : length_(length), fixed_(fixed), ones_(ones), inactive_(inactive) {
  check_length(length);
  if ((fixed | inactive) & ~full_mask(length)) throw Error("partial motif mask exceeds length");
  if (ones & ~fixed) throw Error("partial motif has a 1 at a non-fixed position");
  if (fixed & inactive) throw Error("position both fixed and inactive");
}

PartialMotif PartialMotif::parse(std::string_view text) {
  const std::string s = strip_separator(text);
  check_length(static_cast<int>(s.size()));
  const int n = static_cast<int>(s.size());
  std::uint64_t fixed = 0;
  std::uint64_t ones = 0;
  std::uint64_t inactive = 0;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t bit = position_bit(n, p);
    switch (s[p]) {
      case '0': fixed |= bit; break;
      case '1': fixed |= bit; ones |= bit; break;
      case '*': break;
      case 'u': inactive |= bit; break;
      default:
        throw Error("invalid partial motif character '" + std::string(1, s[p]) + "' in \"" +
                    std::string(text) + "\"");
    }
  }
  return PartialMotif(n, fixed, ones, inactive);
}

PartialMotif PartialMotif::deactivated(const Motif& a, std::uint64_t inactive) {
  return PartialMotif(a.length(), a.fixed_mask() & ~inactive, a.ones_mask() & ~inactive,
                      inactive);
}

std::string PartialMotif::str(bool split) const {
  std::string s(length_, '*');
  for (int p = 0; p < length_; ++p) {
    const std::uint64_t bit = position_bit(length_, p);
    if (inactive_ & bit) {
      s[p] = 'u';
    } else if (fixed_ & bit) {
      s[p] = (ones_ & bit) ? '1' : '0';
    }
  }
  return with_split(std::move(s), split);
}

bool canonical_less(const PartialMotif& a, const PartialMotif& b) {
  return less_by_rank(a.length(), a.fixed_mask(), a.ones_mask(), a.inactive_mask(), b.length(),
                      b.fixed_mask(), b.ones_mask(), b.inactive_mask());
}

void sort_canonical(std::vector<PartialMotif>& motifs) {
  std::sort(motifs.begin(), motifs.end(),
            [](const PartialMotif& a, const PartialMotif& b) { return canonical_less(a, b); });
  motifs.erase(std::unique(motifs.begin(), motifs.end()), motifs.end());
}

bool partial_motif_leq(const PartialMotif& a, const PartialMotif& b) {
  if (a.length() != b.length()) throw Error("partial motif length mismatch");
  if (a.inactive_mask() != b.inactive_mask()) return false;
  return motif_leq(a.with_stars(), b.with_stars());
}

}  // namespace polarnc
