#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "borelfix/error.hpp"
#include "borelfix/serialize.hpp"

using namespace borelfix;

TEST_CASE("partition JSON") {
  const GotzmannPartition b({1, 1, 1, 0});
  CHECK(to_json(b).dump() == "[1,1,1,0]");
  CHECK(partition_from_json(Json::parse("[1,1,1,0]")) == b);
  CHECK_THROWS_AS(partition_from_json(Json::parse("{\"a\":1}")), Error);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,\"x\"]")), Error);
  CHECK(to_json(to_macaulay(b)).dump() == "[4,3]");
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("1,1,0") == std::vector<int>{1, 1, 0});
  CHECK(parse_int_list("[1, 1, 0]") == std::vector<int>{1, 1, 0});
  CHECK(parse_int_list("1 1 0") == std::vector<int>{1, 1, 0});
  CHECK_THROWS_AS(parse_int_list("1,a"), Error);
  CHECK_THROWS_AS(parse_int_list(""), Error);
}

TEST_CASE("ideal JSON round trip") {
  const auto ideal = parse_ideal("<x0, x1^4, x1^3*x2>", 4);
  const Json j = to_json(ideal);
  CHECK(j.dump() == R"({"num_vars":4,"generators":[[1,0,0,0],[0,4,0,0],[0,3,1,0]]})");
  CHECK(ideal_from_json(j) == ideal);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"num_vars":2,"generators":[[1,0,0]]})")), Error);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"generators":[]})")), Error);
}

TEST_CASE("human syntax") {
  CHECK(to_human(parse_ideal("x1^3*x2, x1^4, x0", 4)) == "<x0, x1^4, x1^3*x2>");
  CHECK(to_human(parse_monomial(" x0 * x1 ", 3)) == "x0*x1");
  CHECK(to_human(parse_monomial("x0^2*x1", 3)) == "x0^2*x1");
  CHECK(to_human(parse_monomial("x2^3*x2^0", 3)) == "x2^3");
  CHECK(to_human(parse_monomial("1", 3)) == "1");
  CHECK(to_human(MonomialIdeal::zero(3)) == "<>");
  CHECK(parse_ideal("(x0^2, x1^2)", 0).num_vars() == 2);
  CHECK(parse_ideal("x0, x1^3", 3).num_vars() == 3);
  CHECK_THROWS_AS(parse_monomial("x3", 3), Error);
  CHECK_THROWS_AS(parse_monomial("y0", 3), Error);
  CHECK_THROWS_AS(parse_ideal("<x0, >", 3), Error);
}

TEST_CASE("verdict and report JSON") {
  ClassificationVerdict v{2, "(i)(a)", 2};
  CHECK(to_json(v).dump() == R"j({"clause":"(i)(a)","predicted":2,"verified":2})j");
  ClassificationVerdict open{std::nullopt, "none", std::nullopt};
  CHECK(to_json(open)["verified"].is_null());
  CHECK(to_json(open)["predicted"] != Json(2));

  const auto grid = grid_from_json(Json::parse(
      R"({"cells":[{"partition":[0,0,0],"n":2,"char":0,"method":"reeves"}]})"));
  REQUIRE(grid.size() == 1);
  const auto report = to_json(verify_classification(grid), true);
  const auto& cell = report["cells"][0];
  for (const char* key : {"partition", "n", "char", "clause", "predicted", "verified", "ideals"})
    CHECK(cell.contains(key));
  CHECK(cell["verified"] == 2);
  CHECK(report["discrepancy_count"] == 0);
  CHECK_FALSE(to_json(verify_classification(grid), false)["cells"][0].contains("ideals"));

  const auto range = grid_from_json(Json::parse(R"({"max_r":3,"max_b1":1,"codims":[2],"chars":[0]})"));
  CHECK_FALSE(range.empty());
  CHECK_THROWS_AS(grid_from_json(Json::parse(R"({"cells":[{"n":2}]})")), Error);
}

TEST_CASE("tree JSON") {
  const Json j = to_json(tree_explore(2, 1));
  CHECK(j["nodes"].size() == 3);
  CHECK(j["nodes"][0]["partition"].dump() == "[0]");
  CHECK(j["nodes"][0]["child_a"] == 1);
  CHECK(j["nodes"][0]["child_phi"] == 2);
  CHECK(j["nodes"][0]["out_of_scope"] == false);
}
