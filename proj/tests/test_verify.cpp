#include <doctest.h>

#include "polarnc/verify.hpp"

using namespace polarnc;

TEST_CASE("report bookkeeping") {
  verify::Report r;
  r.record("a", true);
  r.record("a", false, "first");
  r.record("b", true);
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.ok());
  CHECK(r.at("a").checks == 2);
  CHECK(r.at("a").messages == std::vector<std::string>{"first"});

  verify::Report other;
  other.record("b", true);
  r.merge(other);
  CHECK(r.at("b").checks == 2);
  CHECK(verify::summary_lines(r).front() == "a checks=2 failures=1");
}

TEST_CASE("families") {
  CHECK(verify::exhaustive_family(2).size() == 16);
  CHECK(verify::exhaustive_family(3).size() == 256);
  CHECK_THROWS_AS(verify::exhaustive_family(5), Error);
  const auto a = verify::random_family(5, 10, 3);
  const auto b = verify::random_family(5, 10, 3);
  CHECK(a == b);
  CHECK(a.size() == 10);
  CHECK(verify::random_family(5, 10, 4) != a);
}

TEST_CASE("motif laws hold") {
  const auto r = verify::motif_laws(11);
  for (const auto& line : verify::summary_lines(r)) INFO(line);
  CHECK(r.ok());
  CHECK(r.has("order-variety-adjunction"));
  CHECK(r.has("disjointness-transfer"));
}

TEST_CASE("exhaustive family of length 2 passes every suite") {
  verify::Options options;
  options.threads = 2;
  const auto r = verify::run_family(verify::exhaustive_family(2), options);
  for (const auto& line : verify::summary_lines(r)) INFO(line);
  CHECK(r.ok());
  CHECK(r.has("gjs-equivalence"));
  CHECK(r.has("cf-oracle"));
  CHECK_FALSE(r.has("exceptions"));
}

TEST_CASE("results do not depend on the thread count") {
  const auto codes = verify::random_family(4, 12, 9);
  verify::Options one;
  one.threads = 1;
  verify::Options many;
  many.threads = 4;
  CHECK(verify::summary_lines(verify::run_family(codes, one)) ==
        verify::summary_lines(verify::run_family(codes, many)));
}
