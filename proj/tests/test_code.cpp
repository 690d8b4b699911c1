#include <doctest.h>

#include "polarnc/code.hpp"
#include "polarnc/io.hpp"

#include <optional>
#include <sstream>

using namespace polarnc;

namespace {

Code code(std::vector<std::string> words, std::optional<int> length = std::nullopt) {
  return io::parse_code(words, length);
}

std::vector<std::string> strs(const std::vector<Motif>& v) { return render(v); }

std::vector<std::string> strs(const std::vector<PartialMotif>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.str());
  return out;
}

std::vector<Motif> motifs(std::initializer_list<const char*> list) {
  std::vector<Motif> out;
  for (const char* s : list) out.push_back(Motif::parse(s));
  return out;
}

const Code kExample = code({"000", "100", "110", "011"});
const Code kChain = code({"000", "001", "011", "111"});

}  // namespace

TEST_CASE("code construction") {
  const Code c = code({"10", "10", "01"});
  CHECK(c.size() == 2);
  CHECK(c.strings() == std::vector<std::string>{"01", "10"});
  CHECK(c.contains(Word::parse("10")));
  CHECK_FALSE(c.contains(Word::parse("11")));
  CHECK(code({}, 3).empty());
  CHECK(Code::full(3).size() == 8);
  CHECK_THROWS_AS(code({"10", "101"}), Error);
  CHECK_THROWS_AS(code({}), Error);
  CHECK_THROWS_AS(code({"10"}, 3), Error);
  CHECK_THROWS_AS(Code(kMaxCodeLength + 1), Error);
}

TEST_CASE("hex rendering") {
  CHECK(code({"10"}).hex() == "4");
  CHECK(code({"000", "111"}).hex() == "81");
  CHECK(Code(2).hex() == "0");
}

TEST_CASE("variety") {
  CHECK(variety(Motif::parse("*00*")).strings() ==
        std::vector<std::string>{"0000", "0001", "1000", "1001"});
  CHECK(variety(Motif::parse("10")).strings() == std::vector<std::string>{"10"});
  const auto d = union_of_varieties(4, motifs({"0***", "***0"}));
  CHECK(d.size() == 12);
  CHECK(d == complement(code({"1001", "1011", "1101", "1111"})));
}

TEST_CASE("complement") {
  CHECK(complement(code({"10"})).strings() == std::vector<std::string>{"00", "01", "11"});
  CHECK(complement(kExample).strings() == std::vector<std::string>{"001", "010", "101", "111"});
  CHECK(complement(Code::full(3)).empty());
  CHECK(complement(complement(kExample)) == kExample);
}

TEST_CASE("is_motif_of") {
  CHECK(is_motif_of(Motif::parse("00*"), kChain));
  CHECK(is_motif_of(Motif::parse("*11"), kChain));
  CHECK_FALSE(is_motif_of(Motif::parse("1*0"), kChain));
  CHECK_THROWS_AS(is_motif_of(Motif::parse("00"), kChain), Error);
}

TEST_CASE("max_mot") {
  CHECK(strs(max_mot(kChain)) == std::vector<std::string>{"00*", "0*1", "*11"});
  CHECK(strs(max_mot(code({"10"}))) == std::vector<std::string>{"10"});
  CHECK(max_mot(Code(3)).empty());
  CHECK(strs(max_mot(Code::full(3))) == std::vector<std::string>{"***"});
  CHECK(strs(max_mot(kExample)) == std::vector<std::string>{"011", "1*0", "*00"});
  // The complement of the main example: 010 is maximal, 111 sits below 1*1.
  CHECK(strs(max_mot(complement(kExample))) == std::vector<std::string>{"010", "1*1", "*01"});
}

TEST_CASE("max_mot_complement") {
  CHECK(strs(max_mot_complement(6, motifs({"*00***", "**00**", "0***00"}))) ==
        std::vector<std::string>{"11*1**", "1*1***", "*1*11*", "*1*1*1", "**1*1*", "**1**1"});
  CHECK(strs(max_mot_complement(2, motifs({"10"}))) == std::vector<std::string>{"0*", "*1"});
  CHECK(max_mot_complement(3, motifs({"***"})).empty());
  CHECK(strs(max_mot_complement(3, {})) == std::vector<std::string>{"***"});
  CHECK(strs(max_mot_complement(3, max_mot(kExample))) == strs(max_mot(complement(kExample))));
  CHECK_THROWS_AS(max_mot_complement(3, motifs({"00*", "0**"})), Error);
  CHECK_THROWS_AS(max_mot_complement(3, motifs({"00"})), Error);
}

TEST_CASE("deactivate") {
  const int two[] = {1};
  const int three[] = {2};
  CHECK(deactivate(kExample, two).strings() == std::vector<std::string>{"0u0", "0u1", "1u0"});
  CHECK(deactivate(kExample, three).strings() == std::vector<std::string>{"00u", "01u", "10u", "11u"});
  CHECK(deactivate(kExample, {}).strings() == kExample.strings());
  const int bad[] = {3};
  CHECK_THROWS_AS(deactivate(kExample, bad), Error);
}

TEST_CASE("max_par_mot") {
  const int two[] = {1};
  const int three[] = {2};
  CHECK(strs(max_par_mot(deactivate(kExample, two))) == std::vector<std::string>{"0u*", "*u0"});
  CHECK(strs(max_par_mot(deactivate(kExample, three))) == std::vector<std::string>{"**u"});
  CHECK(max_par_mot(deactivate(Code(3), two)).empty());
  const int all[] = {0, 1, 2};
  CHECK(strs(max_par_mot(deactivate(kExample, all))) == std::vector<std::string>{"uuu"});
}

TEST_CASE("par_mot_contains") {
  const int two[] = {1};
  const auto p = deactivate(kExample, two);
  CHECK(par_mot_contains(PartialMotif::parse("0u*"), p));
  CHECK_FALSE(par_mot_contains(PartialMotif::parse("*u*"), p));
  const int first[] = {0};
  CHECK(par_mot_contains(PartialMotif::parse("u00"), deactivate(code({"000"}), first)));
  CHECK_THROWS_AS(par_mot_contains(PartialMotif::parse("0*u"), p), Error);
}

TEST_CASE("code reading from text") {
  std::istringstream in("# a code\n000\n 100  # trailing\n\n110\n011\n");
  CHECK(io::read_code(in) == kExample);
  std::istringstream doubled("0*0|*00\n");
  CHECK_THROWS_AS(io::read_code(doubled), Error);
  std::istringstream split("01|10\n");
  CHECK(io::read_code(split).strings(true) == std::vector<std::string>{"01|10"});
}
