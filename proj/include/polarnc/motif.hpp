#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarnc {

/// Thrown for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxLength = 64;

// Position p (0-based, printed left to right) is stored at bit (length-1-p),
// so the integer value of a word orders words lexicographically.
constexpr std::uint64_t position_bit(int length, int position) {
  return std::uint64_t{1} << (length - 1 - position);
}

constexpr std::uint64_t full_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

/// A binary word w_1 ... w_n.
class Word {
 public:
  Word() = default;
  Word(int length, std::uint64_t bits);

  static Word parse(std::string_view text);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool at(int position) const { return (bits_ & position_bit(length_, position)) != 0; }

  std::string str(bool split = false) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

enum class Trit : std::uint8_t { zero, one, star };

/// A string over {0,1,*}. Stored as a mask of fixed positions plus the
/// values at those positions.
class Motif {
 public:
  Motif() = default;
  Motif(int length, std::uint64_t fixed, std::uint64_t ones);

  static Motif stars(int length);
  static Motif from_word(const Word& w);
  /// Accepts 0, 1, * and a single '|' exactly in the middle.
  static Motif parse(std::string_view text);

  int length() const { return length_; }
  std::uint64_t fixed_mask() const { return fixed_; }
  std::uint64_t ones_mask() const { return ones_; }
  std::uint64_t zeros_mask() const { return fixed_ & ~ones_; }
  std::uint64_t star_mask() const { return full_mask(length_) & ~fixed_; }
  int star_count() const;
  bool is_word() const { return fixed_ == full_mask(length_); }

  Trit at(int position) const;

  /// Renders the motif; `split` inserts '|' after the first half.
  std::string str(bool split = false) const;

  friend bool operator==(const Motif&, const Motif&) = default;

 private:
  int length_ = 0;
  std::uint64_t fixed_ = 0;
  std::uint64_t ones_ = 0;
};

/// Canonical order for emitted sets: lexicographic with 0 < 1 < *.
bool canonical_less(const Motif& a, const Motif& b);
void sort_canonical(std::vector<Motif>& motifs);

std::vector<std::string> render(const std::vector<Motif>& motifs, bool split = false);

/// Componentwise order generated by 0 < * and 1 < *.
bool motif_leq(const Motif& a, const Motif& b);

/// 0+0=0, 0+1=1, 1+1=0, x+*=*.
Motif motif_add(const Motif& a, const Motif& b);

/// True iff some coordinate holds 0 in one motif and 1 in the other.
bool is_disjoint(const Motif& a, const Motif& b);

/// Swaps 0 and 1, keeps *.
Motif bar(const Motif& a);

/// Calls `fn(bits)` for every word of the variety, in increasing order.
template <typename Fn>
void for_each_word(const Motif& a, Fn&& fn) {
  const std::uint64_t stars = a.star_mask();
  std::uint64_t sub = 0;
  while (true) {
    fn(a.ones_mask() | sub);
    if (sub == stars) break;
    sub = (sub - stars) & stars;
  }
}

/// A string over {0,1,*,u}; u marks an inactive neuron.
class PartialMotif {
 public:
  PartialMotif() = default;
  PartialMotif(int length, std::uint64_t fixed, std::uint64_t ones, std::uint64_t inactive);

  static PartialMotif parse(std::string_view text);
  static PartialMotif deactivated(const Motif& a, std::uint64_t inactive);

  int length() const { return length_; }
  std::uint64_t fixed_mask() const { return fixed_; }
  std::uint64_t ones_mask() const { return ones_; }
  std::uint64_t zeros_mask() const { return fixed_ & ~ones_; }
  std::uint64_t inactive_mask() const { return inactive_; }
  std::uint64_t star_mask() const { return full_mask(length_) & ~fixed_ & ~inactive_; }

  /// The motif with every u replaced by *.
  Motif with_stars() const { return Motif(length_, fixed_, ones_); }

  std::string str(bool split = false) const;

  friend bool operator==(const PartialMotif&, const PartialMotif&) = default;

 private:
  int length_ = 0;
  std::uint64_t fixed_ = 0;
  std::uint64_t ones_ = 0;
  std::uint64_t inactive_ = 0;
};

bool canonical_less(const PartialMotif& a, const PartialMotif& b);
void sort_canonical(std::vector<PartialMotif>& motifs);

/// u is comparable only with itself.
bool partial_motif_leq(const PartialMotif& a, const PartialMotif& b);

}  // namespace polarnc
