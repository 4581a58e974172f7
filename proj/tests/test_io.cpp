#include <doctest.h>

#include "mfact/error.hpp"
#include "mfact/json_io.hpp"
#include "mfact/text_io.hpp"
#include "support/oracles.hpp"

using namespace mfact;
using nlohmann::json;

TEST_CASE("chain text form") {
  const Chain c = parse_chain(8, "(3 8)(5 7)(1 8)(3 7)");
  CHECK(c.length() == 4);
  CHECK(format_chain(c) == "(3 8)(5 7)(1 8)(3 7)");
  CHECK(parse_chain(8, " (3 8) (5 7) ") == parse_chain(8, "(3 8)(5 7)"));
  CHECK(parse_chain(8, "(8 3)") == parse_chain(8, "(3 8)"));
  CHECK(format_chain(Chain(3, {})) == "()");
  CHECK(parse_chain(3, "()") == Chain(3, {}));
  CHECK(parse_chain(3, "") == Chain(3, {}));
  CHECK_THROWS_AS(parse_chain(3, "(1 2 3)"), Error);
  CHECK_THROWS_AS(parse_chain(3, "(2 2)"), Error);
  CHECK_THROWS_AS(parse_chain(3, "(1 4)"), Error);
  CHECK_THROWS_AS(parse_chain(3, "1 2"), Error);
}

TEST_CASE("chain JSON form") {
  const Chain c = parse_chain(8, "(3 8)(5 7)(1 8)(3 7)");
  const json j = to_json(c);
  CHECK(j.dump() == R"({"n":8,"steps":[[3,8],[5,7],[1,8],[3,7]]})");
  CHECK(chain_from_json(j) == c);
  CHECK_THROWS_AS(chain_from_json(json::parse(R"({"n":3,"steps":[[1,2,3]]})")), Error);
  CHECK_THROWS_AS(chain_from_json(json::parse(R"({"steps":[]})")), Error);
  CHECK_THROWS_AS(chain_from_json(json::parse(R"({"n":"x","steps":[]})")), Error);
}

TEST_CASE("pair JSON form") {
  const PairAB p(8, {1, 3, 7, 1}, {7, 1, 3, 5, 6});
  const json j = to_json(p);
  CHECK(j.dump() == R"({"a":[1,3,7,1],"b":[1,3,5,6,7],"n":8})");
  CHECK(pair_from_json(j) == p);
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"n":8,"a":[1],"b":[1]})")), Error);
}

TEST_CASE("text and JSON forms round-trip every member, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k)
      for (const auto& c : enumerate_sigma(n, k)) {
        REQUIRE(parse_chain(n, format_chain(c)) == c);
        REQUIRE(chain_from_json(json::parse(to_json(c).dump())) == c);
      }
}

TEST_CASE("int lists") {
  CHECK(parse_int_list("1,3,7,1") == std::vector<int>{1, 3, 7, 1});
  CHECK(parse_int_list(" 1 3, 7 ") == std::vector<int>{1, 3, 7});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1;2"), Error);
  CHECK(format_int_list({1, 2, 3}) == "1,2,3");
}

TEST_CASE("big integers in JSON") {
  CHECK(to_json(BigInt(28672)).dump() == "28672");
  BigInt big = 1;
  for (int r = 0; r < 30; ++r)
    big *= 30;
  CHECK(to_json(big).is_string());
}
