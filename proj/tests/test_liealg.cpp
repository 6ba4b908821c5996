#include <doctest.h>

#include <random>

#include "confemb/liealg.hpp"

using namespace confemb;

namespace {

struct Expected {
  const char* type;
  int dim;
  int hvee;
  int det;
};

// dim, dual Coxeter number and det of the Cartan matrix.
const Expected kTable[] = {
    {"A1", 3, 2, 2},    {"A2", 8, 3, 3},    {"A5", 35, 6, 6},   {"A8", 80, 9, 9},   {"B2", 10, 3, 2},
    {"B3", 21, 5, 2},   {"B8", 136, 15, 2}, {"C3", 21, 4, 2},   {"C8", 136, 9, 2},  {"D4", 28, 6, 4},
    {"D5", 45, 8, 4},   {"D8", 120, 14, 4}, {"E6", 78, 12, 3},  {"E7", 133, 18, 2}, {"E8", 248, 30, 1},
    {"F4", 52, 9, 1},   {"G2", 14, 4, 1},
};

std::vector<SimpleLieType> all_types_up_to_rank(int r) {
  std::vector<SimpleLieType> out;
  for (int n = 1; n <= r; ++n) out.push_back(SimpleLieType::make(Family::A, n));
  for (int n = 2; n <= r; ++n) out.push_back(SimpleLieType::make(Family::B, n));
  for (int n = 3; n <= r; ++n) out.push_back(SimpleLieType::make(Family::C, n));
  for (int n = 4; n <= r; ++n) out.push_back(SimpleLieType::make(Family::D, n));
  for (int n = 6; n <= std::min(r, 8); ++n) out.push_back(SimpleLieType::make(Family::E, n));
  out.push_back(SimpleLieType::make(Family::F, 4));
  out.push_back(SimpleLieType::make(Family::G, 2));
  return out;
}

}  // namespace

TEST_CASE("dimension, dual Coxeter number and Cartan determinant") {
  for (const auto& e : kTable) {
    CAPTURE(e.type);
    const auto rs = shared_root_system(SimpleLieType::parse(e.type));
    CHECK(rs->dimension() == e.dim);
    CHECK(rs->dimension() == rs->type().dimension());
    CHECK(dual_coxeter(*rs) == e.hvee);
    RationalMatrix a(static_cast<std::size_t>(rs->rank()), static_cast<std::size_t>(rs->rank()));
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j) a(i, j) = rs->cartan()[i][j];
    CHECK(determinant(a) == e.det);
  }
}

TEST_CASE("type names parse to canonical types") {
  CHECK(SimpleLieType::parse("sl3") == SimpleLieType::make(Family::A, 2));
  CHECK(SimpleLieType::parse("so(9)") == SimpleLieType::make(Family::B, 4));
  CHECK(SimpleLieType::parse("so6") == SimpleLieType::make(Family::A, 3));
  CHECK(SimpleLieType::parse("D3") == SimpleLieType::make(Family::A, 3));
  CHECK(SimpleLieType::parse("sp4") == SimpleLieType::make(Family::B, 2));
  CHECK(SimpleLieType::parse("C2") == SimpleLieType::make(Family::B, 2));
  CHECK(SimpleLieType::parse("so3") == SimpleLieType::make(Family::A, 1));
  CHECK(SimpleLieType::parse("e8") == SimpleLieType::make(Family::E, 8));
  CHECK_THROWS_AS(SimpleLieType::parse("so4"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleLieType::parse("X9"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleLieType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleLieType::parse("sp5"), std::invalid_argument);
}

TEST_CASE("highest root and marks") {
  const auto e8 = shared_root_system(SimpleLieType::parse("E8"));
  CHECK(e8->theta() == Root{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(e8->marks() == std::vector<int>{1, 2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(shared_root_system(SimpleLieType::parse("F4"))->theta() == Root{2, 3, 4, 2});
  CHECK(shared_root_system(SimpleLieType::parse("G2"))->theta() == Root{3, 2});
  CHECK(shared_root_system(SimpleLieType::parse("D4"))->theta() == Root{1, 2, 1, 1});
  CHECK(shared_root_system(SimpleLieType::parse("C3"))->theta() == Root{2, 2, 1});
  CHECK(shared_root_system(SimpleLieType::parse("B3"))->theta() == Root{1, 2, 2});
}

TEST_CASE("Casimir of the highest root is twice the dual Coxeter number") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(t.name());
    const auto rs = shared_root_system(t);
    CHECK(casimir_eigenvalue(*rs, rs->theta_weight()) == 2 * dual_coxeter(*rs));
    CHECK(rs->norm(rs->theta()) == 2);
    CHECK(weyl_dim(*rs, rs->theta_weight()) == rs->dimension());
    CHECK(static_cast<int>(rs->roots().size()) + rs->rank() == rs->dimension());
  }
}

TEST_CASE("Weyl dimensions and Casimir values") {
  const auto a2 = shared_root_system(SimpleLieType::parse("A2"));
  CHECK(weyl_dim(*a2, Weight::from_ints({1, 1})) == 8);
  CHECK(weyl_dim(*a2, Weight::from_ints({3, 0})) == 10);
  CHECK(casimir_eigenvalue(*a2, Weight::from_ints({0, 1})) == ratio(8, 3));
  const auto a3 = shared_root_system(SimpleLieType::parse("A3"));
  CHECK(casimir_eigenvalue(*a3, Weight::from_ints({0, 1, 0})) == 5);
  CHECK(weyl_dim(*a3, Weight::from_ints({0, 2, 0})) == 20);
  const auto a4 = shared_root_system(SimpleLieType::parse("A4"));
  CHECK(casimir_eigenvalue(*a4, Weight::from_ints({1, 0, 0, 0})) == ratio(24, 5));
  CHECK(casimir_eigenvalue(*a4, Weight::from_ints({0, 1, 0, 0})) == ratio(36, 5));
  const auto b3 = shared_root_system(SimpleLieType::parse("B3"));
  CHECK(weyl_dim(*b3, Weight::from_ints({0, 0, 1})) == 8);
  CHECK(weyl_dim(*b3, Weight::from_ints({1, 0, 0})) == 7);
  CHECK(casimir_eigenvalue(*b3, Weight::from_ints({1, 0, 0})) == 6);  // n - 1 for so(n)
  const auto g2 = shared_root_system(SimpleLieType::parse("G2"));
  CHECK(weyl_dim(*g2, Weight::from_ints({1, 0})) == 7);
  const auto e8 = shared_root_system(SimpleLieType::parse("E8"));
  CHECK(weyl_dim(*e8, Weight::fundamental(8, 0)) == 3875);
  const auto e6 = shared_root_system(SimpleLieType::parse("E6"));
  CHECK(weyl_dim(*e6, Weight::fundamental(6, 0)) == 27);
  CHECK_THROWS_AS(casimir_eigenvalue(*a2, Weight::from_ints({-1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(*a2, Weight(RationalVector{ratio(1, 2), 0})), std::invalid_argument);
}

TEST_CASE("Weyl orbit sizes") {
  CHECK(weyl_orbit(*shared_root_system(SimpleLieType::parse("A2")), Weight::from_ints({1, 1})).size() == 6);
  CHECK(weyl_orbit(*shared_root_system(SimpleLieType::parse("B2")), Weight::from_ints({1, 1})).size() == 8);
  CHECK(weyl_orbit(*shared_root_system(SimpleLieType::parse("G2")), Weight::from_ints({1, 1})).size() == 12);
  const auto d4 = shared_root_system(SimpleLieType::parse("D4"));
  // The long roots form the orbit of theta.
  CHECK(weyl_orbit(*d4, d4->theta_weight()).size() == 24);
}

TEST_CASE("weight Gram matrix is positive definite and dual to the roots") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(t.name());
    const auto rs = shared_root_system(t);
    for (const auto& m : leading_minors(rs->weight_gram())) CHECK(m > 0);
    const auto n = static_cast<std::size_t>(rs->rank());
    for (std::size_t i = 0; i < n; ++i) {
      Root a(n, 0);
      a[i] = 1;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational expected = i == j ? rs->simple_norm(i) / 2 : Rational(0);
        CHECK(rs->pairing(Weight::fundamental(n, j), a) == expected);
      }
    }
  }
}

TEST_CASE("central charge") {
  const auto a1 = shared_root_system(SimpleLieType::parse("A1"));
  CHECK(central_charge(*a1, Rational(1)) == 1);
  CHECK(central_charge(*shared_root_system(SimpleLieType::parse("E8")), Rational(1)) == 8);
  CHECK(central_charge(*shared_root_system(SimpleLieType::parse("D4")), Rational(-2)) == -14);
  CHECK_THROWS_AS(central_charge(*a1, Rational(-2)), CriticalLevelError);
  CHECK(central_charge_abelian(1, ratio(-5, 2)) == 1);
}

TEST_CASE("central charge is a Moebius function of the level (random levels)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (const char* t : {"A3", "B4", "E7", "G2"}) {
    const auto rs = shared_root_system(SimpleLieType::parse(t));
    const int h = dual_coxeter(*rs);
    for (int i = 0; i < 20; ++i) {
      const Rational k = ratio(num(rng), den(rng));
      if (k == -h) continue;
      CHECK(central_charge(*rs, k) * (k + h) == k * rs->dimension());
    }
  }
}

TEST_CASE("shared root systems are memoized") {
  const auto a = shared_root_system(SimpleLieType::parse("E7"));
  const auto b = shared_root_system(SimpleLieType::make(Family::E, 7));
  CHECK(a.get() == b.get());
}
