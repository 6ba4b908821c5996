#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "confemb/catalog.hpp"
#include "confemb/conformal.hpp"

using namespace confemb;

namespace {

bool contains(const std::vector<Rational>& v, const Rational& q) { return std::find(v.begin(), v.end(), q) != v.end(); }

ConformalVerdict verdict_of(const ReductiveSubalgebra& k) { return conformal_levels(k, orthocomplement_branching(k)); }

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("AP terms of the declared D4 example at k = -2") {
  const DeclaredEmbedding d = d4_example();
  for (std::size_t i = 0; i < d.branching.components.size(); ++i) {
    CAPTURE(i);
    CHECK(ap_value(d.subalgebra, d.branching, i, Rational(-2)) == 1);
  }
  const ApTerms t = ap_terms(d.subalgebra, d.branching, 0, Rational(-2));
  REQUIRE(t.ideal_terms.size() == 1);
  CHECK(t.ideal_terms[0] == ratio(4, 3));
  CHECK(t.center_term == ratio(-1, 3));
  CHECK(ap_check(d.subalgebra, d.branching, Rational(-2)).conformal);
  CHECK_FALSE(ap_check(d.subalgebra, d.branching, Rational(-1)).conformal);
}

TEST_CASE("excluded levels and critical denominators") {
  const DeclaredEmbedding d = d4_example();
  CHECK(excluded_levels(d.subalgebra) == std::vector<Rational>{-6, -3, 0});
  CHECK_THROWS_AS(ap_value(d.subalgebra, d.branching, 0, Rational(-3)), CriticalLevelError);
  try {
    ap_value(d.subalgebra, d.branching, 0, Rational(-3));
  } catch (const CriticalLevelError& e) {
    CHECK(e.algebra() == "A2");
  }
  CHECK_THROWS_AS(ap_value(d.subalgebra, d.branching, 0, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(ap_value(d.subalgebra, d.branching, 99, Rational(1)), std::out_of_range);
}

TEST_CASE("declared and computed D4 subalgebras give the same levels") {
  const DeclaredEmbedding d = d4_example();
  const ConformalVerdict declared = conformal_levels(d.subalgebra, d.branching);
  const ConformalVerdict computed = verdict_of(resolve_subalgebra("D4/sl3+u1+u1").bottom());
  CHECK(declared.levels == computed.levels);
  CHECK(contains(declared.levels, Rational(-2)));
  CHECK(declared.non_integrable_levels() == std::vector<Rational>{-2});
}

TEST_CASE("type A: sl(p) + sl(q) + u1 in sl(p+q)") {
  for (int n = 2; n <= 8; ++n) {
    const auto g = shared_root_system(SimpleLieType::make(Family::A, n));
    for (int h = 1; h <= n; ++h) {
      const int p = h, q = n + 1 - h;
      CAPTURE(p);
      CAPTURE(q);
      const ConformalVerdict v = verdict_of(equal_rank_subalgebra(g, {0, h}));
      std::vector<Rational> expected;
      if (p > 1 && q > 1) expected.push_back(-1);
      if (p != q) expected.push_back(ratio(-(n + 1), 2));
      CHECK(v.non_integrable_levels() == sorted(expected));
      if (p == q) CHECK(contains(v.suppressed_levels, ratio(-(n + 1), 2)));
      CHECK(contains(v.levels, Rational(1)));
    }
  }
}

TEST_CASE("type D: so(s) + so(n-s) and gl(m) in so(2m)") {
  // so(4) + so(4) in so(8): 2 - n/2 = -2 is critical for every sl2.
  const ConformalVerdict d4 = verdict_of(resolve_subalgebra("D4/A1+A1+A1+A1").bottom());
  CHECK(d4.non_integrable_levels().empty());
  CHECK(contains(d4.suppressed_levels, Rational(-2)));

  const ConformalVerdict d5 = verdict_of(resolve_subalgebra("D5/A1+A1+A3").bottom());
  CHECK(d5.non_integrable_levels() == std::vector<Rational>{-3});

  const ConformalVerdict gl = verdict_of(resolve_subalgebra("D6/A5+u1").bottom());
  CHECK(gl.non_integrable_levels() == std::vector<Rational>{-2});
}

TEST_CASE("type B and C examples") {
  const ConformalVerdict b4 = verdict_of(resolve_subalgebra("B4/A1+A1+B2").bottom());
  // so(9) > so(4) + so(5): 2 - 9/2.
  CHECK(b4.non_integrable_levels() == std::vector<Rational>{ratio(-5, 2)});

  const ConformalVerdict c3 = verdict_of(resolve_subalgebra("C3/A1+B2").bottom());
  CHECK(c3.non_integrable_levels() == std::vector<Rational>{ratio(-5, 2), ratio(-1, 2)});

  const ConformalVerdict c4 = verdict_of(resolve_subalgebra("C4/B2+B2").bottom());
  CHECK(c4.non_integrable_levels() == std::vector<Rational>{ratio(-1, 2)});
  CHECK(contains(c4.suppressed_levels, Rational(-3)));

  const ConformalVerdict gl = verdict_of(resolve_subalgebra("C4/A3[2]+u1").bottom());
  CHECK(gl.non_integrable_levels() == std::vector<Rational>{ratio(-1, 2)});
}

TEST_CASE("conformal levels match central charges for every maximal subalgebra") {
  for (const char* t : {"A5", "B4", "C4", "D5", "E6", "E7", "F4", "G2"}) {
    for (const auto& m : borel_de_siebenthal(SimpleLieType::parse(t))) {
      const auto& k = m.subalgebra;
      CAPTURE(t);
      CAPTURE(k.type_key());
      const ConformalVerdict v = verdict_of(k);
      // Finitely many solutions: no component polynomial vanishes identically.
      for (const auto& p : v.component_polynomials) CHECK_FALSE(p.is_zero());
      const auto cc = central_charge_levels(k);
      for (const auto& level : v.levels) {
        CHECK(central_charge_match(k, level));
        CHECK(contains(cc, level));
        CHECK(ap_check(k, orthocomplement_branching(k), level).conformal);
      }
      for (const auto& level : v.suppressed_levels) CHECK(contains(v.excluded_levels, level));
    }
  }
}

TEST_CASE("random non-conformal levels fail both tests") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 11);
  for (const char* t : {"E6", "F4", "D5"}) {
    for (const auto& m : borel_de_siebenthal(SimpleLieType::parse(t))) {
      const auto& k = m.subalgebra;
      const Branching b = orthocomplement_branching(k);
      const ConformalVerdict v = conformal_levels(k, b);
      for (int i = 0; i < 20; ++i) {
        const Rational level = ratio(num(rng), den(rng));
        if (contains(v.excluded_levels, level) || contains(v.levels, level)) continue;
        CAPTURE(to_string(level));
        CHECK_FALSE(ap_check(k, b, level).conformal);
      }
    }
  }
}

TEST_CASE("chain parsing") {
  const Chain c = parse_chain("A1+A1+B2 < A1+C3 < F4");
  CHECK(c.depth() == 2);
  CHECK(c.to_string() == "A1+A1+B2 < A1+C3 < F4");
  CHECK(c.links[2].new_ideals.size() == 2);
  CHECK_THROWS_AS(parse_chain("F4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain("A1+C3 < A1+F4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain("A2+A2 < E6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain("A1+ < B2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain("A1[2 < B2"), std::invalid_argument);
  // Either A2 of A2 + A2[2] can lose a node; the unindexed term fits both.
  try {
    parse_chain("A1+A2+u1 < A2+A2[2] < F4");
    FAIL("expected an ambiguity error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("ambiguous") != std::string::npos);
  }
  CHECK(parse_chain("A1[2]+A2+u1 < A2+A2[2] < F4").bottom().type_key() == "A1[2]+A2+u1");
  CHECK_THROWS_AS(resolve_subalgebra("F4/A1+A2+u1"), std::invalid_argument);
  CHECK(resolve_subalgebra("F4/A1[2]+A2+u1").depth() == 2);
  CHECK_THROWS_AS(resolve_subalgebra("D4 A3+u1"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_subalgebra("D4/G2"), std::invalid_argument);
}

TEST_CASE("chain check at a conformal level") {
  const Chain c = parse_chain("A1+A1+B2 < A1+C3 < F4");
  const ChainCheck check = chain_conformal_check(c, ratio(-5, 2));
  CHECK(check.conformal);
  REQUIRE(check.steps.size() == 2);
  for (const auto& s : check.steps) CHECK(s.replaced_charge == s.replacing_charge);
  CHECK(contains(chain_levels(c), ratio(-5, 2)));
  CHECK_FALSE(chain_conformal_check(c, Rational(-1)).conformal);
}

TEST_CASE("chain check at a critical level names the step and the ideal") {
  const Chain c = parse_chain("A1+A1+B2 < A1+C3 < F4");
  try {
    chain_conformal_check(c, Rational(-4));
    FAIL("expected a critical-level error");
  } catch (const CriticalLevelError& e) {
    const std::string what = e.what();
    CHECK(what.find("step 1") != std::string::npos);
    CHECK(e.algebra() == "C3");
  }
  CHECK_THROWS_AS(chain_step_levels(c, 3), std::out_of_range);
  CHECK_THROWS_AS(chain_conformal_check(trivial_chain(shared_root_system(SimpleLieType::parse("F4"))), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("enumerated chains are conformal at their level") {
  for (const char* t : {"E6", "F4", "G2", "B3"}) {
    const auto g = shared_root_system(SimpleLieType::parse(t));
    const auto found = enumerate_conformal_chains(g, 2);
    std::set<std::string> seen;
    for (const auto& cl : found) {
      CAPTURE(cl.chain.to_string());
      CHECK(chain_conformal_check(cl.chain, cl.level).conformal);
      CHECK_FALSE(is_positive_integer(cl.level));
      CHECK(cl.level != 0);
      CHECK(seen.insert(cl.chain.to_string() + " @ " + to_string(cl.level)).second);
    }
    const auto with_int = enumerate_conformal_chains(g, 2, true);
    CHECK(with_int.size() >= found.size());
  }
  CHECK_THROWS_AS(enumerate_conformal_chains(shared_root_system(SimpleLieType::parse("A2")), 0), std::invalid_argument);
}

TEST_CASE("central charge of a reductive subalgebra") {
  const DeclaredEmbedding d = d4_example();
  // c(sl3, -2) + 2 = -16 + 2 = c(so8, -2) = -14.
  CHECK(central_charge(d.subalgebra, Rational(-2)) == -14);
  CHECK(central_charge_match(d.subalgebra, Rational(-2)));
  CHECK_THROWS_AS(conformal_levels(d.subalgebra, Branching{}), std::domain_error);
}
