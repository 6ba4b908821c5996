#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "confemb/matrix.hpp"
#include "confemb/polynomial.hpp"

using namespace confemb;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("-3/6") == ratio(-1, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(to_string(ratio(4, 2)) == "2");
  CHECK(to_string(ratio(-5, 2)) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(is_positive_integer(Rational(1)));
  CHECK_FALSE(is_positive_integer(Rational(0)));
  CHECK_FALSE(is_positive_integer(ratio(3, 2)));
  CHECK(is_integer(Rational(-4)));
}

TEST_CASE("rational rendering round-trips") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 97);
  for (int i = 0; i < 200; ++i) {
    const Rational q = ratio(num(rng), den(rng));
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("matrix inverse, determinant and null space") {
  // Cartan matrix of A3: det 4.
  RationalMatrix a({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(determinant(a) == 4);
  CHECK(inverse(a) * a == RationalMatrix::identity(3));
  CHECK(rank(a) == 3);
  CHECK(leading_minors(a) == std::vector<Rational>{2, 3, 4});

  RationalMatrix row({{1, 1, 1, 1}});
  const auto ker = null_space(row);
  REQUIRE(ker.size() == 3);
  CHECK(ker[0] == RationalVector{1, -1, 0, 0});
  CHECK(ker[2] == RationalVector{1, 0, 0, -1});

  RationalMatrix singular({{1, 2}, {2, 4}});
  CHECK(determinant(singular) == 0);
  CHECK_THROWS(inverse(singular));
  RationalVector x;
  CHECK(solve(a, {1, 0, 1}, x));
  CHECK(a.apply(x) == RationalVector{1, 0, 1});
}

TEST_CASE("null space vectors are annihilated (random matrices)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-3, 3), dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
    const auto ker = null_space(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto& v : ker) {
      for (const auto& y : m.apply(v)) CHECK(y == 0);
      auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
      REQUIRE(first != v.end());
      CHECK(*first == 1);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = Polynomial::linear(2, 1) * Polynomial::linear(1, -3);  // (2k+1)(k-3)
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 0);
  CHECK(p(ratio(-1, 2)) == 0);
  CHECK(p.to_string("k") == "2*k^2 - 5*k - 3");
  const auto [q, r] = divmod(p, Polynomial::linear(1, -3));
  CHECK(r.is_zero());
  CHECK(q == Polynomial::linear(2, 1));
  CHECK(gcd(p, Polynomial::linear(1, -3) * Polynomial::linear(1, 5)) == Polynomial::linear(1, -3));
  CHECK(gcd(Polynomial(), p) == p.monic());
}

TEST_CASE("rational roots split off an irreducible quadratic") {
  const Polynomial p = Polynomial::linear(2, 1) * Polynomial::linear(1, -3) * Polynomial{1, 0, 1};
  const auto s = split_rational_roots(p);
  CHECK(s.roots == std::vector<Rational>{ratio(-1, 2), 3});
  CHECK(s.residual == (Polynomial{1, 0, 1}));
  CHECK_THROWS_AS(split_rational_roots(Polynomial()), std::domain_error);
  CHECK(positive_divisors(mpz_class(12)) == std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("random products of linear factors give back their roots") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6), count(1, 4);
  for (int t = 0; t < 60; ++t) {
    Polynomial p = Polynomial::constant(Rational(den(rng)));
    std::set<Rational> roots;
    for (int i = count(rng); i > 0; --i) {
      const Rational r = ratio(num(rng), den(rng));
      roots.insert(r);
      p = p * Polynomial::linear(1, -r);
    }
    const auto s = split_rational_roots(p);
    CHECK(s.roots == std::vector<Rational>(roots.begin(), roots.end()));
    CHECK(s.residual.degree() == 0);
  }
}
