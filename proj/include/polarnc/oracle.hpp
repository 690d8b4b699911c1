#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "polarnc/code.hpp"
#include "polarnc/ideal.hpp"
#include "polarnc/motif.hpp"

// Exhaustive reference implementations. They follow the definitions
// literally and share no algorithmic path with the fast operations.
namespace polarnc::oracle {

inline constexpr int kMaxBruteLength = 10;
inline constexpr int kMaxVarietyDim = 20;
inline constexpr int kMaxGjsScanLength = 4;

/// Enumerates all 3^n motifs, keeps motifs of C, filters to the maximal ones.
std::vector<Motif> brute_max_mot(const Code& c);

/// Enumerates all 3^n pseudo-monomials, keeps those vanishing on C, filters
/// to the divisibility-minimal ones.
CanonicalForm brute_cf(const Code& c);

/// All points of F_2^dim at which every generator vanishes.
Code brute_variety(VariableSpace space, std::span<const PseudoMonomial> gens);

struct GjsDiscrepancy {
  Motif motif;
  bool fast = false;
  bool oracle = false;
};

struct GjsScan {
  std::size_t motifs_checked = 0;
  std::size_t holds = 0;
  std::vector<GjsDiscrepancy> discrepancies;
};

/// For every c of length 2n compares gjs_prime_test(c, C) with p_c containing
/// J_{C^[p]} (a motif-of-C^[p] test).
GjsScan brute_gjs_scan(const Code& c);

/// "CODE <hex-bitset> MOTIF <string> fast=<bool> oracle=<bool>"
std::string discrepancy_line(const Code& c, const std::string& motif, bool fast, bool oracle);

/// Each word is included independently with probability `density`.
Code random_code(int length, double density, std::mt19937_64& rng);

/// Code number `index` of the 2^(2^n) codes of length n (bit w = word w).
Code code_from_index(int length, std::uint64_t index);

/// Every motif of the given length in canonical order.
std::vector<Motif> all_motifs(int length);

}  // namespace polarnc::oracle
