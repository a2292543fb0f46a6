#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "borelfix/borel.hpp"
#include "borelfix/error.hpp"
#include "borelfix/serialize.hpp"
#include "support/oracles.hpp"

using namespace borelfix;

namespace {

MonomialIdeal I(const std::string& text, int num_vars) { return parse_ideal(text, num_vars); }
Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

const Characteristic zero{};

}  // namespace

TEST_CASE("characteristic validation") {
  CHECK_NOTHROW(Characteristic(0));
  CHECK_NOTHROW(Characteristic(2));
  CHECK_NOTHROW(Characteristic(7919));
  for (int bad : {-2, 1, 4, 9, 91}) {
    try {
      Characteristic c(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }
}

TEST_CASE("leq_p") {
  CHECK(leq_p(1, 3, Characteristic(2)));
  CHECK_FALSE(leq_p(1, 2, Characteristic(2)));
  CHECK(leq_p(2, 2, Characteristic(3)));
  CHECK(leq_p(1, 5, zero));
  CHECK_FALSE(leq_p(2, 5, zero));
  for (int p : {2, 3, 5, 7})
    for (int l = 0; l < 40; ++l)
      for (int k = 0; k <= l + 2; ++k) CHECK(leq_p(k, l, Characteristic(p)) == oracle::leq_p(k, l, p));
}

TEST_CASE("p-Borel and strongly stable") {
  CHECK(is_p_borel(I("x0^2, x1^2", 3), Characteristic(2)));
  CHECK_FALSE(is_p_borel(I("x0^2, x1^2", 3), Characteristic(3)));
  CHECK(is_p_borel(I("x0, x1^3", 3), Characteristic(2)));
  CHECK(is_p_borel(I("x0^3, x1^3", 3), Characteristic(3)));
  CHECK(is_strongly_stable(I("x0^2, x0*x1, x1^2", 3)));
  CHECK_FALSE(is_strongly_stable(I("x0^2, x1^2", 3)));
  CHECK(is_strongly_stable(MonomialIdeal::zero(3)));
  CHECK(is_p_borel(MonomialIdeal::zero(3), Characteristic(5)));

  // Generator-level test agrees with the definition on all monomials.
  const std::vector<std::string> samples{
      "x0^2, x1^2",        "x0^4, x1^4",       "x0^2, x0*x1, x1^3", "x0, x1^2*x2",
      "x0^3, x0*x1^2, x1^3", "x0^2, x1^2, x2^2", "x0^2, x0*x1^2, x1^4, x0*x1*x2",
      "x0, x1^4, x1^3*x2", "x1^2",             "x0^6, x1^6"};
  for (const auto& text : samples) {
    const auto ideal = I(text, 4);
    for (int p : {0, 2, 3, 5})
      CHECK_MESSAGE(is_p_borel(ideal, Characteristic(p)) == oracle::is_p_borel(ideal, p, 8),
                    text << " p=" << p);
  }
}

TEST_CASE("borel closure") {
  CHECK(borel_closure({M({0, 2, 0})}, zero, 3) == I("x0^2, x0*x1, x1^2", 3));
  CHECK(borel_closure({M({0, 2, 0})}, Characteristic(2), 3) == I("x0^2, x1^2", 3));
  for (int p : {0, 2, 3})
    for (int nv : {1, 2, 4}) {
      std::vector<int> e(static_cast<std::size_t>(nv), 0);
      e[0] = 1;
      CHECK(borel_closure({M(e)}, Characteristic(p), nv).generators() == std::vector<Monomial>{M(e)});
    }
  // Minimality: dropping any generator loses either the seed or stability.
  const Monomial seed = M({0, 2, 1});
  const auto c = borel_closure({seed}, zero, 3);
  CHECK(is_strongly_stable(c));
  CHECK(contains(c, seed));
  for (const auto& g : c.generators()) {
    std::vector<Monomial> fewer;
    for (const auto& h : c.generators())
      if (!(h == g)) fewer.push_back(h);
    const auto smaller = minimalize(fewer, 3);
    CHECK_FALSE((is_strongly_stable(smaller) && contains(smaller, seed)));
  }
}

TEST_CASE("expandable generators") {
  CHECK(expandable_generators(I("x0, x1^3", 3)) == std::vector<Monomial>{M({1, 0, 0}), M({0, 3, 0})});
  CHECK(expandable_generators(I("x0^2, x0*x1, x1^2", 3)) == std::vector<Monomial>{M({0, 2, 0})});
  CHECK(expandable_generators(I("x0", 2)) == std::vector<Monomial>{M({1, 0})});

  // Brute force the defining set on a few saturated strongly stable ideals.
  for (const auto& text : {"x0^2, x0*x1, x0*x2, x1^3", "x0, x1^4, x1^3*x2", "x0^2, x0*x1, x1^2"}) {
    const auto ideal = I(text, 4);
    const int n = ideal.num_vars() - 1;
    std::vector<Monomial> expected;
    for (const auto& g : ideal.generators()) {
      bool blocked = false;
      for (int i = 0; i < n - 1; ++i) {
        if (g[static_cast<std::size_t>(i)] == 0) continue;
        const auto moved = g.times(i, -1).times(i + 1, 1);
        for (const auto& h : ideal.generators()) blocked = blocked || h == moved;
      }
      if (!blocked) expected.push_back(g);
    }
    CHECK(expandable_generators(ideal) == expected);
  }
}

TEST_CASE("expansion") {
  CHECK(expand(I("x0, x1^3", 4), M({1, 0, 0, 0})) == I("x0^2, x0*x1, x0*x2, x1^3", 4));
  CHECK(expand(I("x0, x1^3", 4), M({0, 3, 0, 0})) == I("x0, x1^4, x1^3*x2", 4));
  CHECK_THROWS_AS(expand(I("x0^2, x0*x1, x1^2", 3), M({2, 0, 0})), Error);
  CHECK_THROWS_AS(expand(I("x0^2, x0*x1, x1^2", 3), M({0, 1, 1})), Error);
  // Expanding the unit ideal gives the homogeneous maximal ideal of x_0..x_{n-1}.
  CHECK(expand(MonomialIdeal::unit(4), Monomial::one(4)) == I("x0, x1, x2", 4));
}
