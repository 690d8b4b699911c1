#include <doctest.h>

#include "polarnc/io.hpp"
#include "polarnc/oracle.hpp"
#include "polarnc/polarization.hpp"

using namespace polarnc;

namespace {

Code code(std::vector<std::string> words, std::optional<int> length = std::nullopt) {
  return io::parse_code(words, length);
}

const Code kExample = code({"000", "100", "110", "011"});
const Code kChain = code({"000", "001", "011", "111"});

}  // namespace

TEST_CASE("brute_max_mot") {
  CHECK(render(oracle::brute_max_mot(kChain)) == std::vector<std::string>{"00*", "0*1", "*11"});
  CHECK(render(oracle::brute_max_mot(complement(kExample))) ==
        std::vector<std::string>{"010", "1*1", "*01"});
  CHECK(oracle::brute_max_mot(Code(3)).empty());
  CHECK_THROWS_AS(oracle::brute_max_mot(Code(oracle::kMaxBruteLength + 1)), Error);
}

TEST_CASE("brute_cf") {
  CHECK(oracle::brute_cf(code({"10"})).strings() == std::vector<std::string>{"(1-X1)", "X2"});
  CHECK(oracle::brute_cf(kChain) == neural_ideal_cf(kChain));
  CHECK(oracle::brute_cf(Code::full(3)).empty());
  CHECK_THROWS_AS(oracle::brute_cf(Code(oracle::kMaxBruteLength + 1)), Error);
}

TEST_CASE("brute_variety") {
  const VariableSpace s3{3, false};
  const std::vector<PseudoMonomial> gens{PseudoMonomial::parse("X1(1-X2)", s3),
                                         PseudoMonomial::parse("X2(1-X3)", s3)};
  CHECK(oracle::brute_variety(s3, gens) == kChain);
  CHECK(oracle::brute_variety(s3, {}) == Code::full(3));
  const std::vector<PseudoMonomial> unit{PseudoMonomial::parse("1", s3)};
  CHECK(oracle::brute_variety(s3, unit).empty());
  CHECK_THROWS_AS(oracle::brute_variety(VariableSpace{11, true}, {}), Error);
}

TEST_CASE("brute_gjs_scan") {
  const auto scan = oracle::brute_gjs_scan(kExample);
  CHECK(scan.motifs_checked == 729);
  CHECK(scan.discrepancies.empty());
  CHECK(scan.holds > 0);

  const auto empty = oracle::brute_gjs_scan(Code(2));
  CHECK(empty.motifs_checked == 81);
  CHECK(empty.holds == 0);
  CHECK(empty.discrepancies.empty());

  const auto single = oracle::brute_gjs_scan(code({"10"}));
  CHECK(single.motifs_checked == 81);
  CHECK(single.discrepancies.empty());

  CHECK_THROWS_AS(oracle::brute_gjs_scan(Code(oracle::kMaxGjsScanLength + 1)), Error);
}

TEST_CASE("discrepancy report line") {
  CHECK(oracle::discrepancy_line(code({"10"}), "*00*", true, false) == "CODE 4 MOTIF *00* fast=true oracle=false");
}

TEST_CASE("random codes are reproducible") {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (double density : {0.25, 0.5, 0.75}) CHECK(oracle::random_code(6, density, a) == oracle::random_code(6, density, b));
  std::mt19937_64 r(1);
  CHECK(oracle::random_code(5, 0.0, r).empty());
  CHECK(oracle::random_code(5, 1.0, r) == Code::full(5));
}

TEST_CASE("codes by index and motif enumeration") {
  CHECK(oracle::code_from_index(2, 0).empty());
  CHECK(oracle::code_from_index(2, 0b0100).strings() == std::vector<std::string>{"10"});
  CHECK(oracle::code_from_index(2, 15) == Code::full(2));
  const auto all = oracle::all_motifs(3);
  CHECK(all.size() == 27);
  CHECK(all.front().str() == "000");
  CHECK(all.back().str() == "***");
}

TEST_CASE("fast paths agree with the oracles on every code of length 3") {
  for (std::uint64_t i = 0; i < 256; ++i) {
    const Code c = oracle::code_from_index(3, i);
    CHECK(max_mot(c) == oracle::brute_max_mot(c));
    CHECK(neural_ideal_cf(c) == oracle::brute_cf(c));
    CHECK(oracle::brute_variety(VariableSpace{3, false}, neural_ideal_cf(c).elements()) == c);
  }
}
