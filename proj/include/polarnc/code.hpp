#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polarnc/motif.hpp"

namespace polarnc {

/// Codes are stored as a dense bitset over F_2^n, so n is capped.
inline constexpr int kMaxCodeLength = 24;

/// Exhaustive maximal-motif search walks all 3^n motifs.
inline constexpr int kMaxMotLength = 16;

/// A neural code: a set of words of length n.
class Code {
 public:
  Code() = default;
  explicit Code(int length);
  Code(int length, std::span<const Word> words);

  /// Parses word strings; duplicates collapse. Throws on ragged lengths.
  static Code from_strings(int length, std::span<const std::string> words);
  static Code full(int length);

  int length() const { return length_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(std::uint64_t bits) const {
    return (blocks_[bits >> 6] >> (bits & 63)) & 1;
  }
  bool contains(const Word& w) const;
  void insert(std::uint64_t bits) { blocks_[bits >> 6] |= std::uint64_t{1} << (bits & 63); }
  void insert(const Word& w);

  /// Words in increasing (lexicographic) order.
  std::vector<Word> words() const;
  std::vector<std::string> strings(bool split = false) const;

  /// Hex rendering of the bitset, most significant word index first.
  std::string hex() const;

  bool subset_of(const Code& other) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  friend Code complement(const Code& c);
  friend Code code_union(const Code& a, const Code& b);

  int length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

Code complement(const Code& c);
Code code_union(const Code& a, const Code& b);

/// Applies bar to every word.
Code bar(const Code& c);

/// All words matching the motif.
Code variety(const Motif& a);

/// Union of varieties of the given motifs (all of length `length`).
Code union_of_varieties(int length, std::span<const Motif> motifs);

/// V_a is contained in C.
bool is_motif_of(const Motif& a, const Code& c);

/// Maximal motifs of C in canonical order.
std::vector<Motif> max_mot(const Code& c);

/// Maximal motifs of the complement of the code whose maximal motifs are `mot`,
/// found as minimal consistent hitting assignments; the ambient space is never
/// enumerated. `length` is needed when `mot` is empty.
std::vector<Motif> max_mot_complement(int length, std::span<const Motif> mot);

/// A code with some neurons deactivated. Each word has u exactly on the
/// inactive positions; `words` stores the active bits with inactive bits zero.
class PartialCode {
 public:
  PartialCode() = default;
  PartialCode(int length, std::uint64_t inactive, std::vector<std::uint64_t> words);

  int length() const { return length_; }
  std::uint64_t inactive_mask() const { return inactive_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(std::uint64_t bits) const;

  std::vector<std::string> strings() const;

  friend bool operator==(const PartialCode&, const PartialCode&) = default;

 private:
  int length_ = 0;
  std::uint64_t inactive_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Replaces the entries at `positions` (0-based) by u and deduplicates.
PartialCode deactivate(const Code& c, std::span<const int> positions);
PartialCode deactivate_mask(const Code& c, std::uint64_t inactive);

std::vector<PartialMotif> max_par_mot(const PartialCode& p);

/// Every partial word below `a` lies in `p`. The u sets must agree.
bool par_mot_contains(const PartialMotif& a, const PartialCode& p);

}  // namespace polarnc
