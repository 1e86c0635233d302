#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "liekam/algebra.hpp"

using namespace liekam;

namespace {

// Brute-force oracle: enumerate +-Li+-Lj, +-2Li and count (C series).
int c_series_expected_roots(int n) { return 2 * n * n; }

Element jacobi_sum(const AlgebraPtr& g, const Element& x, const Element& y, const Element& z) {
  return g->bracket(x, g->bracket(y, z)) + g->bracket(y, g->bracket(z, x)) +
         g->bracket(z, g->bracket(x, y));
}

}  // namespace

TEST_CASE("root system cardinalities and axioms") {
  struct Row {
    LieType t;
    int rank;
    std::size_t count;
  };
  // classical counts; E8 split 112 + 128 checked separately below
  for (Row row : {Row{LieType::A, 1, 2}, Row{LieType::A, 5, 30}, Row{LieType::B, 3, 18},
                  Row{LieType::C, 3, 18}, Row{LieType::C, 6, 72}, Row{LieType::D, 5, 40},
                  Row{LieType::E, 6, 72}, Row{LieType::E, 7, 126}, Row{LieType::E, 8, 240},
                  Row{LieType::F, 4, 48}, Row{LieType::G, 2, 12}}) {
    auto rs = RootSystem::build(row.t, row.rank);
    CAPTURE(rs.name());
    CHECK(rs.size() == row.count);
    if (row.t == LieType::C)  // derived enumeration
      CHECK(rs.size() == std::size_t(c_series_expected_roots(row.rank)));
    // closed under negation and reflections; integral Cartan pairings
    for (const auto& a : rs.roots()) {
      Coords2 neg = a.c2;
      for (auto& v : neg) v = -v;
      CHECK(rs.index_of(neg) >= 0);
      for (const auto& b : rs.roots()) {
        CHECK(rs.index_of(rs.reflect(a, b)) >= 0);
        CHECK((2 * b.ip2(a)) % a.norm2_times4() == 0);
      }
    }
    // coordinates have denominator 1 or 2 (doubled: integers)
    int maxn = 0, minn = 1 << 30;
    for (const auto& a : rs.roots()) {
      maxn = std::max(maxn, a.norm2_times4());
      minn = std::min(minn, a.norm2_times4());
    }
    if (row.t == LieType::G) {
      CHECK(minn == 8);   // norm^2 = 2
      CHECK(maxn == 24);  // norm^2 = 6
    } else {
      CHECK(maxn <= 16);  // norm^2 in {1,2,4}
      CHECK(minn >= 4);
    }
  }
}

TEST_CASE("E8 roots split into 112 integer pairs and 128 half-sum roots") {
  auto rs = RootSystem::build(LieType::E, 8);
  int pairs = 0, halves = 0;
  for (const auto& r : rs.roots()) {
    bool half = false;
    for (int v : r.c2)
      if (v % 2 != 0) half = true;
    if (half) {
      int minus = 0;
      for (int v : r.c2)
        if (v < 0) ++minus;
      CHECK(minus % 2 == 0);
      ++halves;
    } else {
      ++pairs;
    }
  }
  CHECK(pairs == 112);
  CHECK(halves == 128);
}

TEST_CASE("A1 is the standard sl2") {
  auto g = LieAlgebra::create(LieType::A, 1);
  CHECK(g->rs().size() == 2);
  auto t = g->sl2_triple_for_root(parse_root_expr("L1-L2", 2));
  CHECK(g->bracket(t.X, t.U) == t.U.scaled(2));
  CHECK(g->bracket(t.X, t.V) == t.V.scaled(-2));
  CHECK(g->bracket(t.U, t.V) == t.X);
}

TEST_CASE("A2 bracket of adjacent simple root vectors has coefficient +-1") {
  auto g = LieAlgebra::create(LieType::A, 2);
  auto u12 = g->root_vector("L1-L2");
  auto u23 = g->root_vector("L2-L3");
  auto b = g->bracket(u12, u23);
  auto u13 = g->root_vector("L1-L3");
  CHECK((b == u13 || b == u13.scaled(-1)));
}

TEST_CASE("Cartan is abelian in every supported type") {
  for (auto [t, r] : std::vector<std::pair<LieType, int>>{{LieType::A, 3},
                                                          {LieType::B, 4},
                                                          {LieType::C, 3},
                                                          {LieType::D, 4},
                                                          {LieType::F, 4},
                                                          {LieType::G, 2}}) {
    auto g = LieAlgebra::create(t, r);
    for (int i = 0; i < g->rank(); ++i)
      for (int j = 0; j < g->rank(); ++j)
        CHECK(g->bracket(g->basis_element(g->cartan_index(i)),
                         g->basis_element(g->cartan_index(j)))
                  .is_zero());
  }
}

TEST_CASE("structure constants: antisymmetry, size bound, vanishing rule") {
  for (auto [t, r] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4},
           {LieType::G, 2}, {LieType::F, 4}}) {
    auto g = LieAlgebra::create(t, r);
    const auto& rs = g->rs();
    for (int i = 0; i < g->n_roots(); ++i)
      for (int j = 0; j < g->n_roots(); ++j) {
        long n = g->structure_constant(i, j);
        if (rs.sum_index(i, j) >= 0) {
          CHECK(n != 0);
          CHECK(std::abs(n) <= 3);
          CHECK(n == -g->structure_constant(j, i));
          // Chevalley normalization N(-a,-b) = -N(a,b)
          CHECK(n == -g->structure_constant(rs.negative_of(i), rs.negative_of(j)));
        } else {
          CHECK(n == 0);
        }
      }
  }
}

TEST_CASE("Jacobi identity holds exactly on all basis triples (rank <= 4)") {
  for (auto [t, r] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 2}, {LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3},
           {LieType::D, 4}, {LieType::G, 2}, {LieType::F, 4}}) {
    auto g = LieAlgebra::create(t, r);
    CAPTURE(g->name());
    const int d = g->dim();
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = i; j < d && ok; ++j)
        for (int k = j; k < d && ok; ++k)
          ok = jacobi_sum(g, g->basis_element(i), g->basis_element(j), g->basis_element(k))
                   .is_zero();
    CHECK(ok);
  }
}

TEST_CASE("Jacobi identity on randomized triples for E8") {
  auto g = LieAlgebra::create(LieType::E, 8);
  CHECK(g->dim() == 248);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> pick(0, g->dim() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    int i = pick(rng), j = pick(rng), k = pick(rng);
    REQUIRE(jacobi_sum(g, g->basis_element(i), g->basis_element(j), g->basis_element(k))
                .is_zero());
  }
}

TEST_CASE("bracket is bilinear, antisymmetric and rejects mixed algebras") {
  auto g = LieAlgebra::create(LieType::C, 3);
  auto h = LieAlgebra::create(LieType::A, 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    Element x = g->zero(), y = g->zero();
    for (int i = 0; i < g->dim(); ++i) {
      x.coeffs[i] = coef(rng);
      y.coeffs[i] = coef(rng);
    }
    CHECK(g->bracket(x, x).is_zero());
    CHECK((g->bracket(x, y) + g->bracket(y, x)).is_zero());
  }
  CHECK_THROWS_AS((void)g->bracket(g->zero(), h->zero()), std::invalid_argument);
}

TEST_CASE("C3: bracket of opposite long root vectors is the coroot") {
  auto g = LieAlgebra::create(LieType::C, 3);
  auto b = g->bracket(g->root_vector("2L1"), g->root_vector("-2L1"));
  CHECK_FALSE(b.is_zero());
  CHECK(b == g->coroot_element(g->rs().index_of(parse_root_expr("2L1", 3))));
  // it is a Cartan element
  for (int i = 0; i < g->n_roots(); ++i) CHECK(b.coeffs[i] == 0);
}

TEST_CASE("B5: short+short root bracket lands on the long root with nonzero coefficient") {
  auto g = LieAlgebra::create(LieType::B, 5);
  auto b = g->bracket(g->root_vector("L1"), g->root_vector("L2"));
  CHECK_FALSE(b.is_zero());
  int target = g->rs().index_of(parse_root_expr("L1+L2", 5));
  for (int i = 0; i < g->dim(); ++i)
    if (i != target) CHECK(b.coeffs[i] == 0);
  CHECK(b.coeffs[target] != 0);
}

TEST_CASE("ad matrix is a homomorphism into matrices") {
  auto g = LieAlgebra::create(LieType::B, 3);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Element x = g->zero(), y = g->zero();
    for (int i = 0; i < g->dim(); ++i) {
      x.coeffs[i] = coef(rng);
      y.coeffs[i] = coef(rng);
    }
    RatMat ax = g->ad_matrix(x), ay = g->ad_matrix(y);
    RatMat lhs = g->ad_matrix(g->bracket(x, y));
    RatMat comm = ax * ay;
    RatMat ba = ay * ax;
    for (int i = 0; i < g->dim(); ++i)
      for (int j = 0; j < g->dim(); ++j) comm.at(i, j) -= ba.at(i, j);
    CHECK(lhs == comm);
  }
}

TEST_CASE("ad of a root vector is nilpotent with small index; ad(0) = 0") {
  auto g = LieAlgebra::create(LieType::C, 3);
  CHECK(g->ad_matrix(g->zero()).is_zero());
  for (int i = 0; i < g->n_roots(); ++i) {
    RatMat a = g->ad_matrix(g->root_vector(i));
    RatMat p = RatMat::identity(g->dim());
    int power = 0;
    while (!p.is_zero() && power <= 6) {
      p = p * a;
      ++power;
    }
    CHECK(power <= 6);
    if (g->rs().root(i).length_class == LengthClass::Long) CHECK(power <= 5);
  }
}

TEST_CASE("ad of a Cartan element is diagonal with pairing entries") {
  auto g = LieAlgebra::create(LieType::A, 2);
  int r12 = g->rs().index_of(parse_root_expr("L1-L2", 3));
  Element h = g->coroot_element(r12);
  RatMat a = g->ad_matrix(h);
  for (int j = 0; j < g->n_roots(); ++j) {
    for (int i = 0; i < g->dim(); ++i) {
      if (i == j)
        CHECK(a.at(i, j) == Rat(g->rs().root(j).pairing(g->rs().root(r12))));
      else
        CHECK(a.at(i, j) == 0);
    }
  }
}

TEST_CASE("sl2 triple relations hold for every root; negation swaps U and V") {
  for (auto [t, r] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::G, 2}}) {
    auto g = LieAlgebra::create(t, r);
    for (int i = 0; i < g->n_roots(); ++i) {
      auto tr = g->sl2_triple_for_root(i);
      CHECK(g->bracket(tr.U, tr.V) == tr.X);
      CHECK(g->bracket(tr.X, tr.U) == tr.U.scaled(2));
      CHECK(g->bracket(tr.X, tr.V) == tr.V.scaled(-2));
      auto opp = g->sl2_triple_for_root(g->rs().negative_of(i));
      CHECK(opp.U == tr.V);
      CHECK(opp.X == tr.X.scaled(-1));
    }
  }
}

TEST_CASE("C3 sl2 triple at 2L1 has X equal to the coroot of 2L1") {
  auto g = LieAlgebra::create(LieType::C, 3);
  auto tr = g->sl2_triple_for_root(parse_root_expr("2L1", 3));
  CHECK(tr.X == g->coroot_element(g->rs().index_of(parse_root_expr("2L1", 3))));
}

TEST_CASE("unsupported type/rank is rejected with a message") {
  CHECK_THROWS_AS((void)RootSystem::build(LieType::E, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)RootSystem::build(LieType::A, 9), std::invalid_argument);
  CHECK_THROWS_AS((void)RootSystem::build(LieType::F, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)RootSystem::build(LieType::G, 3), std::invalid_argument);
}
