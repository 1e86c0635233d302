#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "liekam/constructions.hpp"

using namespace liekam;

namespace {

std::set<std::string> root_strings(const AlgebraPtr& alg, const std::vector<int>& idxs) {
  std::set<std::string> out;
  for (int i : idxs) out.insert(alg->rs().root(i).str());
  return out;
}

}  // namespace

TEST_CASE("A5 family slots match the listed sets") {
  auto g = LieAlgebra::create(LieType::A, 5);
  auto fam = uv_sets(g);
  CHECK(root_strings(g, fam.u_sets[0]) ==
        std::set<std::string>{"L1-L3", "L1-L4", "L1-L5", "L1-L6"});
  CHECK(root_strings(g, fam.u_sets[2]) == std::set<std::string>{"L1-L2"});
  CHECK(root_strings(g, fam.v_sets[2]) == std::set<std::string>{"-L1+L2"});
  for (int e = 3; e < kQ0; ++e) CHECK(fam.slot_empty(e));
}

TEST_CASE("C3 family slots") {
  auto g = LieAlgebra::create(LieType::C, 3);
  auto fam = uv_sets(g);
  CHECK(root_strings(g, fam.v_sets[2]) == std::set<std::string>{"-2L1"});
  CHECK(root_strings(g, fam.u_sets[0]) == std::set<std::string>{"L1-L2", "L1-L3"});
  CHECK(root_strings(g, fam.u_sets[1]) == std::set<std::string>{"L1+L2", "L1+L3"});
  for (int e = 3; e < kQ0; ++e) CHECK(fam.slot_empty(e));
}

TEST_CASE("D5 slots 6..9 empty; B6 short-root slots populated") {
  auto d5 = LieAlgebra::create(LieType::D, 5);
  auto fd = uv_sets(d5);
  for (int e = 5; e < kQ0; ++e) CHECK(fd.slot_empty(e));
  CHECK_FALSE(fd.slot_empty(4));

  auto b6 = LieAlgebra::create(LieType::B, 6);
  auto fb = uv_sets(b6);
  CHECK(root_strings(b6, fb.u_sets[5]) == std::set<std::string>{"L1"});
  CHECK(root_strings(b6, fb.v_sets[6]) == std::set<std::string>{"L2"});
  for (int e = 7; e < kQ0; ++e) CHECK(fb.slot_empty(e));
}

TEST_CASE("E-series and F4 half-sum family slots") {
  auto e7 = LieAlgebra::create(LieType::E, 7);
  auto fe = uv_sets(e7);
  CHECK(fe.u_sets[5].size() == 8);  // +L8 half roots with +L1 -L2
  CHECK(fe.u_sets[6].size() == 8);
  CHECK(fe.v_sets[5].size() == 8);
  for (int e = 7; e < kQ0; ++e) CHECK(fe.slot_empty(e));
  for (int i : fe.u_sets[5]) {
    const auto& c = e7->rs().root(i).c2;
    CHECK(c[0] == 1);
    CHECK(c[1] == -1);
    CHECK(c[7] == 1);
  }

  auto f4 = LieAlgebra::create(LieType::F, 4);
  auto ff = uv_sets(f4);
  CHECK(root_strings(f4, ff.u_sets[7]) ==
        std::set<std::string>{"1/2(L1-L2+L3+L4)", "1/2(L1-L2-L3+L4)"});
  CHECK(root_strings(f4, ff.u_sets[8]) ==
        std::set<std::string>{"1/2(L1-L2+L3-L4)", "1/2(L1-L2-L3-L4)"});
  CHECK(ff.u_sets[5].size() == 1);  // u_{L1}
}

TEST_CASE("abelian basis cardinalities match the formulas") {
  struct Row { LieType t; int rank; long card; };
  for (Row row : {Row{LieType::A, 5, 9}, Row{LieType::A, 4, 6}, Row{LieType::C, 3, 6},
                  Row{LieType::B, 3, 5}, Row{LieType::B, 5, 11}, Row{LieType::D, 5, 10},
                  Row{LieType::E, 6, 16}, Row{LieType::E, 7, 27}, Row{LieType::E, 8, 36},
                  Row{LieType::F, 4, 9}}) {
    auto g = LieAlgebra::create(row.t, row.rank);
    auto basis = abelian_basis(g);
    CAPTURE(g->name());
    CHECK(basis.claimed_cardinality == row.card);
    CHECK(static_cast<long>(basis.root_indices.size()) == row.card);
  }
}

TEST_CASE("A5 abelian basis is the odd-to-even difference set") {
  auto g = LieAlgebra::create(LieType::A, 5);
  auto basis = abelian_basis(g);
  std::set<int> expect;
  for (int i : {1, 3, 5})
    for (int j : {2, 4, 6}) {
      std::string s = "L" + std::to_string(i) + "-L" + std::to_string(j);
      expect.insert(g->rs().index_of(parse_root_expr(s, 6)));
    }
  CHECK(std::set<int>(basis.root_indices.begin(), basis.root_indices.end()) == expect);
}

TEST_CASE("B3 abelian basis is the explicit five-element set") {
  auto g = LieAlgebra::create(LieType::B, 3);
  auto basis = abelian_basis(g);
  CHECK(root_strings(g, basis.root_indices) ==
        std::set<std::string>{"L1", "L1-L2", "L1-L3", "L1+L2", "L1+L3"});
}

TEST_CASE("abelian basis is rejected outside the listed ranks") {
  CHECK_THROWS_AS((void)abelian_basis(LieAlgebra::create(LieType::A, 2)), std::invalid_argument);
  CHECK_THROWS_AS((void)abelian_basis(LieAlgebra::create(LieType::A, 3)), std::invalid_argument);
  CHECK_THROWS_AS((void)abelian_basis(LieAlgebra::create(LieType::B, 4)), std::invalid_argument);
  CHECK_THROWS_AS((void)abelian_basis(LieAlgebra::create(LieType::D, 4)), std::invalid_argument);
  CHECK_THROWS_AS((void)abelian_basis(LieAlgebra::create(LieType::G, 2)), std::invalid_argument);
}

TEST_CASE("base sl2 data") {
  SUBCASE("A7 has the two-element E0 inside the centralizer") {
    auto g = LieAlgebra::create(LieType::A, 7);
    auto d = base_sl2(g);
    REQUIRE(d.e0.size() == 2);
    CHECK(d.e0[0] == g->root_vector("L3-L4"));
    CHECK(d.e0[1] == g->root_vector("L5-L6"));
    for (const auto& e : d.e0) CHECK(d.g1_perp.contains(e));
  }
  SUBCASE("C3 base triple sits at 2L1") {
    auto g = LieAlgebra::create(LieType::C, 3);
    auto d = base_sl2(g);
    CHECK(d.U == g->root_vector("2L1"));
    CHECK(d.V == g->root_vector("-2L1"));
    CHECK(d.e0.empty());
  }
  SUBCASE("theta satisfies [X, theta] = 2(U+V)") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{
             {LieType::A, 4}, {LieType::B, 5}, {LieType::C, 3}}) {
      auto g = LieAlgebra::create(t, r);
      auto d = base_sl2(g);
      CHECK(g->bracket(d.X, d.theta) == (d.U + d.V).scaled(2));
    }
  }
}

TEST_CASE("A3 centralizer of the base pair contains the L3-L4 triple") {
  auto g = LieAlgebra::create(LieType::A, 3);
  auto d = base_sl2(g);
  CHECK(d.g1_perp.contains(g->root_vector("L3-L4")));
  auto tr = g->sl2_triple_for_root(parse_root_expr("L3-L4", 4));
  CHECK(d.g1_perp.contains(tr.X));
  CHECK(d.g1_perp.contains(tr.V));
}

TEST_CASE("centralizer basics") {
  auto g = LieAlgebra::create(LieType::A, 2);
  SUBCASE("centralizer of zero is everything") {
    CHECK(g->centralizer({g->zero()}).dim() == std::size_t(g->dim()));
  }
  SUBCASE("empty generator list rejected") {
    CHECK_THROWS_AS((void)g->centralizer({}), std::invalid_argument);
  }
  SUBCASE("centralizer of the split Cartan is the Cartan") {
    std::vector<Element> cartan;
    for (int k = 0; k < g->rank(); ++k) cartan.push_back(g->basis_element(g->cartan_index(k)));
    auto z = g->centralizer(cartan);
    CHECK(z.dim() == std::size_t(g->rank()));
    for (const auto& h : cartan) CHECK(z.contains(h));
  }
  SUBCASE("generic and closed-form paths agree on single root vectors") {
    auto fast = g->centralizer({g->root_vector("L1-L2")});
    auto generic = g->centralizer({g->root_vector("L1-L2").scaled(1), g->zero()});
    CHECK(fast == generic);
  }
}

TEST_CASE("split families on A7 and B6") {
  auto g = LieAlgebra::create(LieType::A, 7);
  auto s = split_uv_sets(g, uv_sets(g));
  CHECK(root_strings(g, s.u1_sets[0]) ==
        std::set<std::string>{"L1-L5", "L1-L6", "L1-L7", "L1-L8"});
  CHECK(root_strings(g, s.u2_sets[0]) ==
        std::set<std::string>{"L1-L3", "L1-L4", "L1-L7", "L1-L8"});
  // empty base slot stays empty
  CHECK(s.u1_sets[3].empty());
  CHECK(s.u2_sets[3].empty());

  auto b6 = LieAlgebra::create(LieType::B, 6);
  auto sb = split_uv_sets(b6, uv_sets(b6));
  CHECK(sb.u1_sets[5] == uv_sets(b6).u_sets[5]);  // u_{L1} commutes with u_{+-(L3-L4)}

  CHECK_THROWS_AS((void)split_uv_sets(LieAlgebra::create(LieType::C, 3),
                                      uv_sets(LieAlgebra::create(LieType::C, 3))),
                  std::invalid_argument);
}

TEST_CASE("eigenspace decomposition") {
  SUBCASE("base X has eigenvalues inside {0,+-1,+-2} and recomposes") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{
             {LieType::A, 5}, {LieType::B, 5}, {LieType::C, 3}, {LieType::D, 5},
             {LieType::F, 4}}) {
      auto g = LieAlgebra::create(t, r);
      auto d = base_sl2(g);
      auto dec = g->eigenspace_decomposition(d.X);
      std::size_t total = 0;
      for (const auto& [ev, sp] : dec) {
        CHECK((ev == 0 || ev == 1 || ev == -1 || ev == 2 || ev == -2));
        total += sp.dim();
      }
      CHECK(total == std::size_t(g->dim()));
      CHECK(dec.at(Rat(0)).dim() >= std::size_t(g->rank()));
    }
  }
  SUBCASE("zero element gives the whole algebra at eigenvalue 0") {
    auto g = LieAlgebra::create(LieType::A, 2);
    auto dec = g->eigenspace_decomposition(g->zero());
    CHECK(dec.size() == 1);
    CHECK(dec.at(Rat(0)).dim() == std::size_t(g->dim()));
  }
  SUBCASE("B5 pairings: L1-L3 pairs to 1, L1-L2 pairs to 2 against (L1-L2)^v") {
    auto g = LieAlgebra::create(LieType::B, 5);
    auto d = base_sl2(g);
    auto dec = g->eigenspace_decomposition(d.X);
    CHECK(dec.at(Rat(1)).contains(g->root_vector("L1-L3")));
    CHECK(dec.at(Rat(2)).contains(g->root_vector("L1-L2")));
  }
  SUBCASE("nilpotent ad is rejected with a Jordan-block message") {
    auto g = LieAlgebra::create(LieType::A, 1);
    CHECK_THROWS_WITH_AS((void)g->eigenspace_decomposition(g->root_vector("L1-L2")),
                         doctest::Contains("Jordan block"), std::domain_error);
  }
  SUBCASE("elliptic U-V has no rational eigenvalues") {
    auto g = LieAlgebra::create(LieType::A, 1);
    Element theta = g->root_vector("L1-L2") - g->root_vector("L2-L1");
    CHECK_THROWS_AS((void)g->eigenspace_decomposition(theta), std::domain_error);
  }
}

TEST_CASE("image of ad") {
  auto g = LieAlgebra::create(LieType::C, 3);
  SUBCASE("image of zero is trivial") { CHECK(g->image_of_ad(g->zero()).dim() == 0); }
  SUBCASE("2L1 image contains the listed span and has rank 6") {
    auto im = g->image_of_ad(g->root_vector("2L1"));
    CHECK(im.dim() == 6);  // rank oracle; includes u_{2L1} itself via the Cartan columns
    for (const char* s : {"L1+L2", "L1-L2", "L1+L3", "L1-L3", "2L1"})
      CHECK(im.contains(g->root_vector(s)));
    int r = g->rs().index_of(parse_root_expr("2L1", 3));
    CHECK(im.contains(g->coroot_element(r)));
    CHECK_FALSE(im.contains(g->root_vector("-2L1")));
  }
  SUBCASE("image always contains the coroot, never the opposite long root vector") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{
             {LieType::C, 3}, {LieType::B, 3}, {LieType::A, 3}}) {
      auto a = LieAlgebra::create(t, r);
      for (int i = 0; i < a->n_roots(); ++i) {
        auto im = a->image_of_ad(a->root_vector(i));
        CHECK(im.contains(a->coroot_element(i)));
        if (a->rs().root(i).length_class == LengthClass::Long)
          CHECK_FALSE(im.contains(a->root_vector(a->rs().negative_of(i))));
      }
    }
  }
  SUBCASE("closed form: image = root sums + R u_phi + R H_phi") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{{LieType::C, 3}, {LieType::B, 3}}) {
      auto a = LieAlgebra::create(t, r);
      for (int i = 0; i < a->n_roots(); ++i) {
        std::vector<Element> gens{a->root_vector(i), a->coroot_element(i)};
        for (int j = 0; j < a->n_roots(); ++j)
          if (a->rs().sum_index(i, j) >= 0) gens.push_back(a->root_vector(a->rs().sum_index(i, j)));
        CHECK(a->span(gens) == a->image_of_ad(a->root_vector(i)));
      }
    }
  }
}

TEST_CASE("jordan chains") {
  SUBCASE("zero matrix gives singleton chains") {
    auto jc = jordan_chains(RatMat(4, 4));
    CHECK(jc.chains.size() == 4);
    for (const auto& c : jc.chains) CHECK(c.size() == 1);
  }
  SUBCASE("single 2x2 block") {
    RatMat n(2, 2);
    n.at(0, 1) = 1;
    auto jc = jordan_chains(n);
    REQUIRE(jc.chains.size() == 1);
    CHECK(jc.chains[0].size() == 2);
  }
  SUBCASE("non-nilpotent input rejected") {
    RatMat m = RatMat::identity(3);
    CHECK_THROWS_AS((void)jordan_chains(m), std::invalid_argument);
  }
  SUBCASE("ad(u_{L1-L2}) in A2: rank sequence 4,1,0 gives blocks {3,2,2,1}") {
    auto g = LieAlgebra::create(LieType::A, 2);
    RatMat n = g->ad_matrix(g->root_vector("L1-L2"));
    CHECK(n.rank() == 4);
    CHECK((n * n).rank() == 1);
    CHECK((n * n * n).rank() == 0);
    auto jc = jordan_chains(n);
    std::vector<std::size_t> sizes;
    for (const auto& c : jc.chains) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{3, 2, 2, 1});
    // P^{-1} N P is in Jordan form: check N * P columns walk down the chains
    for (const auto& ch : jc.chains) {
      for (std::size_t k = 0; k < ch.size(); ++k) {
        RatVec col(n.rows());
        for (std::size_t r = 0; r < n.rows(); ++r) col[r] = jc.basis.at(r, ch[k]);
        RatVec img = n.apply(col);
        if (k == 0) {
          for (const auto& x : img) CHECK(x == 0);
        } else {
          for (std::size_t r = 0; r < n.rows(); ++r)
            CHECK(img[r] == jc.basis.at(r, ch[k - 1]));
        }
      }
    }
  }
}

TEST_CASE("chain configs exist with expected entry counts") {
  auto a5 = LieAlgebra::create(LieType::A, 5);
  auto c1 = chain_config(a5, ChainKind::Cor9Step1);
  CHECK(c1.entries.size() == 4);  // Lie(S1) + three nonempty V-slots
  CHECK(c1.entries[0].name == "Lie(S1)");
  auto c2 = chain_config(a5, ChainKind::Cor9Step2);
  CHECK(c2.entries.size() == 4);
  CHECK(c2.entries[0].name == "Lie(S)");
  CHECK(c2.target_name == "g");

  auto a7 = LieAlgebra::create(LieType::A, 7);
  auto c10 = chain_config(a7, ChainKind::Cor10Step2);
  // Lie(S) + (U1,U2) per nonempty slot 1..3
  CHECK(c10.entries.size() == 7);
  CHECK_THROWS_AS((void)chain_config(a5, ChainKind::Cor10Step1), std::invalid_argument);
}

TEST_CASE("slot permutation changes entry order but not the span") {
  auto g = LieAlgebra::create(LieType::B, 5);
  std::vector<int> perm{6, 5, 4, 3, 2, 1, 0, 7, 8};
  auto c1 = chain_config(g, ChainKind::Cor9Step1);
  auto c2 = chain_config(g, ChainKind::Cor9Step1, &perm);
  CHECK(c1.entries.size() == c2.entries.size());
  CHECK(c1.target == c2.target);
  CHECK(c1.entries[1].name != c2.entries[1].name);
}
