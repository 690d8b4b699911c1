#include "polarnc/code.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace polarnc {

namespace {

std::size_t block_count(int length) {
  return length >= 6 ? (std::size_t{1} << (length - 6)) : 1;
}

// Mask of valid bits in the single block used when length < 6.
std::uint64_t tail_mask(int length) {
  return length >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << length)) - 1;
}

void require_code_length(int length) {
  if (length <= 0 || length > kMaxCodeLength) {
    throw Error("code length must be in [1, " + std::to_string(kMaxCodeLength) + "], got " +
                std::to_string(length));
  }
}

std::uint64_t compress(std::uint64_t bits, int length, std::uint64_t active) {
  std::uint64_t out = 0;
  for (int p = 0; p < length; ++p) {
    const std::uint64_t bit = position_bit(length, p);
    if (active & bit) out = (out << 1) | ((bits & bit) ? 1 : 0);
  }
  return out;
}

std::uint64_t expand(std::uint64_t bits, int length, std::uint64_t active) {
  const int width = std::popcount(active);
  std::uint64_t out = 0;
  int q = 0;
  for (int p = 0; p < length; ++p) {
    const std::uint64_t bit = position_bit(length, p);
    if (active & bit) {
      if (bits & position_bit(width, q)) out |= bit;
      ++q;
    }
  }
  return out;
}

}  // namespace

Code::Code(int length) : length_(length) {
  require_code_length(length);
  blocks_.assign(block_count(length), 0);
}

Code::Code(int length, std::span<const Word> words) : Code(length) {
  for (const auto& w : words) insert(w);
}

Code Code::from_strings(int length, std::span<const std::string> words) {
  Code c(length);
  for (const auto& s : words) c.insert(Word::parse(s));
  return c;
}

Code Code::full(int length) { return complement(Code(length)); }

std::size_t Code::size() const {
  std::size_t total = 0;
  for (auto b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool Code::contains(const Word& w) const {
  if (w.length() != length_) throw Error("word length does not match code length");
  return contains(w.bits());
}

void Code::insert(const Word& w) {
  if (w.length() != length_) {
    throw Error("word \"" + w.str() + "\" has length " + std::to_string(w.length()) +
                ", code has length " + std::to_string(length_));
  }
  insert(w.bits());
}

std::vector<Word> Code::words() const {
  std::vector<Word> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::uint64_t block = blocks_[b];
    while (block) {
      const int bit = std::countr_zero(block);
      out.emplace_back(length_, (static_cast<std::uint64_t>(b) << 6) | bit);
      block &= block - 1;
    }
  }
  return out;
}

std::vector<std::string> Code::strings(bool split) const {
  std::vector<std::string> out;
  for (const auto& w : words()) out.push_back(w.str(split));
  return out;
}

std::string Code::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = length_ >= 2 ? (std::size_t{1} << length_) / 4 : 1;
  std::string out;
  out.reserve(nibbles);
  for (std::size_t i = nibbles; i-- > 0;) {
    const std::size_t bit = i * 4;
    const unsigned v = static_cast<unsigned>((blocks_[bit >> 6] >> (bit & 63)) & 0xF);
    out.push_back(kDigits[v]);
  }
  return out;
}

bool Code::subset_of(const Code& other) const {
  if (length_ != other.length_) throw Error("code length mismatch");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b] & ~other.blocks_[b]) return false;
  }
  return true;
}

Code complement(const Code& c) {
  Code out(c.length_);
  for (std::size_t b = 0; b < c.blocks_.size(); ++b) out.blocks_[b] = ~c.blocks_[b];
  out.blocks_.back() &= tail_mask(c.length_);
  return out;
}

Code code_union(const Code& a, const Code& b) {
  if (a.length_ != b.length_) throw Error("code length mismatch");
  Code out = a;
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) out.blocks_[i] |= b.blocks_[i];
  return out;
}

Code bar(const Code& c) {
  Code out(c.length());
  const std::uint64_t mask = full_mask(c.length());
  for (const auto& w : c.words()) out.insert(~w.bits() & mask);
  return out;
}

Code variety(const Motif& a) {
  Code out(a.length());
  for_each_word(a, [&](std::uint64_t w) { out.insert(w); });
  return out;
}

Code union_of_varieties(int length, std::span<const Motif> motifs) {
  Code out(length);
  for (const auto& m : motifs) {
    if (m.length() != length) throw Error("motif length does not match code length");
    for_each_word(m, [&](std::uint64_t w) { out.insert(w); });
  }
  return out;
}

bool is_motif_of(const Motif& a, const Code& c) {
  if (a.length() != c.length()) throw Error("motif length does not match code length");
  bool inside = true;
  const std::uint64_t stars = a.star_mask();
  std::uint64_t sub = 0;
  while (true) {
    if (!c.contains(a.ones_mask() | sub)) {
      inside = false;
      break;
    }
    if (sub == stars) break;
    sub = (sub - stars) & stars;
  }
  return inside;
}

// Mot(C) is downward closed, so a motif with a star at position p is a motif
// of C iff both of its specialisations at p are. Motifs are indexed in base 3
// with digit 0, 1, 2 for 0, 1, * and position 0 most significant; increasing
// index is then the canonical order and specialisations have smaller indices.
namespace {

// Calls fn(index, bits) for every word, where index is its base-3 position
// (digits 0/1 only) and bits its integer value.
template <typename Fn>
void for_each_ternary_word(int n, const std::vector<std::size_t>& pow3, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::size_t idx = 0;
    for (int p = 0; p < n; ++p) {
      if (bits & position_bit(n, p)) idx += pow3[p];
    }
    fn(idx, bits);
  }
}

}  // namespace

std::vector<Motif> max_mot(const Code& c) {
  const int n = c.length();
  if (n > kMaxMotLength) {
    throw Error("max_mot supports length <= " + std::to_string(kMaxMotLength));
  }
  std::vector<std::size_t> pow3(n);
  std::size_t total = 1;
  for (int p = n - 1; p >= 0; --p) {
    pow3[p] = total;
    total *= 3;
  }

  // mot[idx] = 1 iff the motif with base-3 digits idx (2 = *) is a motif of c.
  // Words are seeded first; position p then fills every entry whose last star
  // is p from the two entries with that star resolved to 0 and 1.
  std::vector<std::uint8_t> mot(total, 0);
  for_each_ternary_word(n, pow3, [&](std::size_t idx, std::uint64_t bits) { mot[idx] = c.contains(bits); });
  for (int p = 0; p < n; ++p) {
    const std::size_t stride = pow3[p];
    for (std::size_t base = 0; base < total; base += 3 * stride) {
      std::uint8_t* block = mot.data() + base;
      for (std::size_t i = 0; i < stride; ++i) block[2 * stride + i] = block[i] & block[stride + i];
    }
  }

  // A motif is maximal iff no single fixed entry can be lifted to *.
  std::vector<std::uint8_t> keep(mot);
  for (int p = 0; p < n; ++p) {
    const std::size_t stride = pow3[p];
    for (std::size_t base = 0; base < total; base += 3 * stride) {
      std::uint8_t* k = keep.data() + base;
      const std::uint8_t* lifted = mot.data() + base + 2 * stride;
      for (std::size_t i = 0; i < stride; ++i) {
        k[i] &= static_cast<std::uint8_t>(!lifted[i]);
        k[stride + i] &= static_cast<std::uint8_t>(!lifted[i]);
      }
    }
  }

  std::vector<Motif> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!keep[idx]) continue;
    std::uint64_t fixed = 0;
    std::uint64_t ones = 0;
    std::size_t rest = idx;
    for (int p = 0; p < n; ++p) {
      const std::size_t d = rest / pow3[p];
      rest %= pow3[p];
      if (d == 2) continue;
      fixed |= position_bit(n, p);
      if (d == 1) ones |= position_bit(n, p);
    }
    out.emplace_back(n, fixed, ones);
  }
  return out;
}

namespace {

struct Assignment {
  std::uint64_t fixed = 0;
  std::uint64_t ones = 0;

  bool contains(const Assignment& other) const {
    return (other.fixed & ~fixed) == 0 && ((other.ones ^ ones) & other.fixed) == 0;
  }
};

}  // namespace

std::vector<Motif> max_mot_complement(int length, std::span<const Motif> mot) {
  for (const auto& m : mot) {
    if (m.length() != length) throw Error("motif length does not match ambient length");
  }
  for (std::size_t i = 0; i < mot.size(); ++i) {
    for (std::size_t j = 0; j < mot.size(); ++j) {
      if (i != j && motif_leq(mot[i], mot[j])) {
        throw Error("maximal motif set is not an antichain: " + mot[i].str() + " <= " +
                    mot[j].str());
      }
    }
  }
  if (mot.empty()) return {Motif::stars(length)};
  for (const auto& m : mot) {
    if (m.fixed_mask() == 0) return {};
  }

  std::vector<Motif> order(mot.begin(), mot.end());
  std::stable_sort(order.begin(), order.end(), [](const Motif& a, const Motif& b) {
    return std::popcount(a.fixed_mask()) < std::popcount(b.fixed_mask());
  });

  // Each selection flips one fixed coordinate of every motif; a selection
  // that already flips a coordinate of the next motif needs no new choice.
  std::vector<Assignment> found;
  std::function<void(std::size_t, Assignment)> extend = [&](std::size_t k, Assignment cur) {
    for (const auto& f : found) {
      if (cur.contains(f)) return;
    }
    if (k == order.size()) {
      found.push_back(cur);
      return;
    }
    const Motif& m = order[k];
    if (cur.fixed & m.fixed_mask() & (cur.ones ^ m.ones_mask())) {
      extend(k + 1, cur);
      return;
    }
    std::uint64_t options = m.fixed_mask() & ~cur.fixed;
    while (options) {
      const std::uint64_t bit = options & (~options + 1);
      options &= options - 1;
      Assignment next = cur;
      next.fixed |= bit;
      if (!(m.ones_mask() & bit)) next.ones |= bit;
      extend(k + 1, next);
    }
  };
  extend(0, Assignment{});

  std::vector<Motif> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < found.size() && minimal; ++j) {
      if (i != j && found[i].contains(found[j]) && !found[j].contains(found[i])) minimal = false;
    }
    if (minimal) out.emplace_back(length, found[i].fixed, found[i].ones);
  }
  sort_canonical(out);
  return out;
}

PartialCode::PartialCode(int length, std::uint64_t inactive, std::vector<std::uint64_t> words)
    : length_(length), inactive_(inactive), words_(std::move(words)) {
  if (length <= 0 || length > kMaxLength) throw Error("partial code length out of range");
  if (inactive & ~full_mask(length)) throw Error("inactive set exceeds length");
  for (auto& w : words_) {
    if (w & ~full_mask(length)) throw Error("partial word exceeds length");
    if (w & inactive) throw Error("partial word has a value at an inactive position");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool PartialCode::contains(std::uint64_t bits) const {
  return std::binary_search(words_.begin(), words_.end(), bits);
}

std::vector<std::string> PartialCode::strings() const {
  std::vector<std::string> out;
  for (auto w : words_) {
    out.push_back(PartialMotif(length_, full_mask(length_) & ~inactive_, w, inactive_).str());
  }
  return out;
}

PartialCode deactivate_mask(const Code& c, std::uint64_t inactive) {
  if (inactive & ~full_mask(c.length())) throw Error("deactivated neuron out of range");
  std::vector<std::uint64_t> words;
  for (const auto& w : c.words()) words.push_back(w.bits() & ~inactive);
  return PartialCode(c.length(), inactive, std::move(words));
}

PartialCode deactivate(const Code& c, std::span<const int> positions) {
  std::uint64_t inactive = 0;
  for (int p : positions) {
    if (p < 0 || p >= c.length()) {
      throw Error("neuron index " + std::to_string(p + 1) + " out of range [1, " +
                  std::to_string(c.length()) + "]");
    }
    inactive |= position_bit(c.length(), p);
  }
  return deactivate_mask(c, inactive);
}

std::vector<PartialMotif> max_par_mot(const PartialCode& p) {
  const int n = p.length();
  const std::uint64_t active = full_mask(n) & ~p.inactive_mask();
  if (p.size() == 0) return {};
  if (active == 0) return {PartialMotif(n, 0, 0, p.inactive_mask())};

  const int width = std::popcount(active);
  Code projected(width);
  for (auto w : p.words()) projected.insert(compress(w, n, active));

  std::vector<PartialMotif> out;
  for (const auto& m : max_mot(projected)) {
    out.emplace_back(n, expand(m.fixed_mask(), n, active), expand(m.ones_mask(), n, active),
                     p.inactive_mask());
  }
  sort_canonical(out);
  return out;
}

bool par_mot_contains(const PartialMotif& a, const PartialCode& p) {
  if (a.length() != p.length()) throw Error("partial motif length does not match partial code");
  if (a.inactive_mask() != p.inactive_mask()) {
    throw Error("inactive set of " + a.str() + " does not match the partial code");
  }
  const std::uint64_t stars = a.star_mask();
  std::uint64_t sub = 0;
  while (true) {
    if (!p.contains(a.ones_mask() | sub)) return false;
    if (sub == stars) return true;
    sub = (sub - stars) & stars;
  }
}

}  // namespace polarnc
