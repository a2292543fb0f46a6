// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>
#include <vector>

#include "borelfix/borelfix.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  bf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  const int parts[] = {1, 1, 1, 0};
  bf_partition* p = nullptr;
  REQUIRE(bf_partition_new(parts, 4, &p) == BF_OK);
  CHECK(bf_partition_length(p) == 4);
  CHECK(bf_partition_part(p, 0) == 1);
  CHECK(bf_partition_part(p, 9) == -1);

  char* s = nullptr;
  REQUIRE(bf_partition_evaluate(p, 4, &s) == BF_OK);
  CHECK(take(s) == "13");

  int mac[4];
  size_t len = 0;
  REQUIRE(bf_partition_to_macaulay(p, mac, 4, &len) == BF_OK);
  CHECK(len == 2);
  CHECK(mac[0] == 4);
  CHECK(mac[1] == 3);

  bf_partition* q = nullptr;
  REQUIRE(bf_partition_apply_nabla(p, &q) == BF_OK);
  REQUIRE(bf_partition_to_json(q, &s) == BF_OK);
  CHECK(take(s) == "[0,0,0]");
  bf_partition* c = nullptr;
  CHECK(bf_partition_apply_nabla(q, &c) == BF_ERR_DOMAIN);
  CHECK(c == nullptr);
  CHECK(std::string(bf_last_error()).size() > 0);
  bf_partition_free(q);

  const long long values[] = {11, 13, 15, 17};
  REQUIRE(bf_partition_peel(5, values, 4, &q) == BF_OK);
  REQUIRE(bf_partition_to_json(q, &s) == BF_OK);
  CHECK(take(s) == "[1,1]");
  bf_partition_free(q);
  bf_partition_free(p);

  const int bad[] = {0, 1};
  CHECK(bf_partition_new(bad, 2, &p) == BF_ERR_INVALID_ARGUMENT);
  CHECK(bf_partition_parse("1,x", &p) == BF_ERR_INVALID_ARGUMENT);
  CHECK(bf_partition_parse(nullptr, &p) == BF_ERR_INVALID_ARGUMENT);
  bf_partition_free(nullptr);
}

TEST_CASE("ideals") {
  bf_ideal* ideal = nullptr;
  REQUIRE(bf_ideal_parse("<x0^2, x0*x1, x1^2>", 3, &ideal) == BF_OK);
  CHECK(bf_ideal_num_vars(ideal) == 3);
  CHECK(bf_ideal_num_generators(ideal) == 3);
  int exps[3];
  REQUIRE(bf_ideal_generator(ideal, 2, exps) == BF_OK);
  CHECK(exps[1] == 2);
  CHECK(bf_ideal_generator(ideal, 3, exps) == BF_ERR_INVALID_ARGUMENT);

  long long h = 0;
  REQUIRE(bf_ideal_hilbert_function(ideal, 2, &h) == BF_OK);
  CHECK(h == 3);
  int in = 0;
  const int m[] = {1, 1, 1};
  REQUIRE(bf_ideal_contains(ideal, m, &in) == BF_OK);
  CHECK(in == 1);

  int ss = 0;
  REQUIRE(bf_ideal_is_strongly_stable(ideal, &ss) == BF_OK);
  CHECK(ss == 1);
  CHECK(bf_ideal_is_p_borel(ideal, 4, &ss) == BF_ERR_INVALID_ARGUMENT);

  bf_ideal* lifted = nullptr;
  REQUIRE(bf_ideal_lift(ideal, &lifted) == BF_OK);
  bf_partition* hp = nullptr;
  int stab = -1, retries = -1;
  REQUIRE(bf_ideal_hilbert_polynomial(lifted, -1, &hp, &stab, &retries) == BF_OK);
  char* s = nullptr;
  REQUIRE(bf_partition_to_json(hp, &s) == BF_OK);
  CHECK(take(s) == "[1,1,1,0]");
  CHECK(retries == 0);
  bf_partition_free(hp);

  bf_ideal* exp = nullptr;
  REQUIRE(bf_expandable_generators(ideal, &exp) == BF_OK);
  REQUIRE(bf_ideal_to_string(exp, &s) == BF_OK);
  CHECK(take(s) == "<x1^2>");
  bf_ideal_free(exp);

  const int gens[] = {0, 2, 0, 1, 1, 0};
  bf_ideal* raw = nullptr;
  REQUIRE(bf_ideal_from_exponents(3, gens, 2, &raw) == BF_OK);
  bf_ideal* closed = nullptr;
  REQUIRE(bf_borel_closure(raw, 0, &closed) == BF_OK);
  CHECK(bf_ideal_equal(closed, ideal) == 1);
  bf_ideal_free(closed);
  bf_ideal_free(raw);

  bf_ideal* unit = nullptr;
  REQUIRE(bf_ideal_parse("1", 3, &unit) == BF_OK);
  REQUIRE(bf_ideal_hilbert_polynomial(unit, -1, &hp, nullptr, nullptr) == BF_OK);
  CHECK(hp == nullptr);
  bf_ideal_free(unit);

  REQUIRE(bf_ideal_to_json(ideal, &s) == BF_OK);
  bf_ideal* back = nullptr;
  REQUIRE(bf_ideal_from_json(s, &back) == BF_OK);
  bf_string_free(s);
  CHECK(bf_ideal_equal(back, ideal) == 1);
  bf_ideal_free(back);
  CHECK(bf_ideal_from_json("{not json", &back) == BF_ERR_INVALID_ARGUMENT);

  bf_ideal_free(lifted);
  bf_ideal_free(ideal);
}

TEST_CASE("enumeration") {
  bf_partition* p = nullptr;
  REQUIRE(bf_partition_parse("0,0,0,0", &p) == BF_OK);
  bf_ideal_set* reeves = nullptr;
  REQUIRE(bf_reeves(p, 2, &reeves) == BF_OK);
  CHECK(bf_ideal_set_size(reeves) == 2);
  bf_ideal_set* oracle = nullptr;
  REQUIRE(bf_oracle(p, 2, 2, 0, &oracle) == BF_OK);
  CHECK(bf_ideal_set_size(oracle) == 3);
  CHECK(bf_ideal_set_get(oracle, 3) == nullptr);
  int nonstandard = 0;
  for (size_t i = 0; i < bf_ideal_set_size(oracle); ++i) {
    int ss = 0;
    REQUIRE(bf_ideal_is_strongly_stable(bf_ideal_set_get(oracle, i), &ss) == BF_OK);
    nonstandard += ss == 0;
  }
  CHECK(nonstandard == 1);
  bf_ideal_set_free(oracle);
  bf_ideal_set_free(reeves);

  bf_partition* big = nullptr;
  REQUIRE(bf_partition_parse("0,0,0,0,0,0", &big) == BF_OK);
  CHECK(bf_oracle(big, 2, 3, 0, &oracle) == BF_ERR_FEASIBILITY);
  bf_partition_free(big);

  bf_ideal* lex = nullptr;
  REQUIRE(bf_lex_from_partition(p, 2, &lex) == BF_OK);
  char* s = nullptr;
  REQUIRE(bf_ideal_to_string(lex, &s) == BF_OK);
  CHECK(take(s) == "<x0, x1^4>");
  bf_ideal_free(lex);
  bf_partition_free(p);
}

TEST_CASE("classification") {
  bf_partition* p = nullptr;
  REQUIRE(bf_partition_parse("0,0,0", &p) == BF_OK);
  char* s = nullptr;
  REQUIRE(bf_classify(p, 2, 0, 1, "auto", 0, &s) == BF_OK);
  const std::string out = take(s);
  CHECK(out.find("\"clause\":\"(i)(a)\"") != std::string::npos);
  CHECK(out.find("\"predicted\":2") != std::string::npos);
  CHECK(out.find("\"verified\":2") != std::string::npos);
  bf_partition_free(p);

  REQUIRE(bf_partition_parse("1,1", &p) == BF_OK);
  CHECK(bf_classify(p, 2, 0, 0, "auto", 0, &s) == BF_ERR_DOMAIN);
  CHECK(std::string(bf_last_error()).find("out of scope") != std::string::npos);
  bf_partition_free(p);

  REQUIRE(bf_verify(R"({"cells":[{"partition":[1,1,1,0],"n":3}]})", 0, 0, &s) == BF_OK);
  CHECK(take(s).find("\"discrepancy_count\":0") != std::string::npos);
  REQUIRE(bf_tree(2, 2, 0, &s) == BF_OK);
  bf_string_free(s);
  CHECK(bf_tree(2, 50, 0, &s) == BF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("error messages are per thread") {
  bf_partition* p = nullptr;
  CHECK(bf_partition_parse("2,3", &p) == BF_ERR_INVALID_ARGUMENT);
  const std::string here = bf_last_error();
  std::string there = "unset";
  std::thread t([&] {
    bf_partition* q = nullptr;
    bf_partition_parse("1", &q);
    there = bf_last_error();
    bf_partition_free(q);
  });
  t.join();
  CHECK(there.empty());
  CHECK(std::string(bf_last_error()) == here);
  CHECK(std::string(bf_version()).size() > 0);
}
