#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liekam/verify.hpp"

using namespace liekam;

namespace {

int ridx(const AlgebraPtr& g, const std::string& s) {
  int i = g->rs().index_of(parse_root_expr(s, g->rs().ambient_dim()));
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("cardinality check") {
  auto g = LieAlgebra::create(LieType::A, 5);
  auto b = abelian_basis(g);
  CHECK(check_cardinalities(b).status == "pass");
  auto e7 = abelian_basis(LieAlgebra::create(LieType::E, 7));
  CHECK(e7.claimed_cardinality == 27);
  CHECK(check_cardinalities(e7).status == "pass");
  // adversarial: drop an element
  AbelianBasis broken = b;
  broken.root_indices.pop_back();
  CHECK(check_cardinalities(broken).status == "fail");
}

TEST_CASE("abelian check, including the adversarial fixture") {
  CHECK(check_abelian(abelian_basis(LieAlgebra::create(LieType::D, 5))).status == "pass");
  auto g = LieAlgebra::create(LieType::A, 4);
  AbelianBasis singleton{g, {ridx(g, "L1-L2")}, 1};
  CHECK(check_abelian(singleton).status == "pass");
  AbelianBasis bad{g, {ridx(g, "L1-L2"), ridx(g, "L2-L3")}, 2};
  auto r = check_abelian(bad);
  CHECK(r.status == "fail");
  CHECK(r.witness.has_value());
}

TEST_CASE("nilpotency check on basis elements") {
  CHECK(check_nilpotent(abelian_basis(LieAlgebra::create(LieType::C, 3))).status == "pass");
  CHECK(check_nilpotent(abelian_basis(LieAlgebra::create(LieType::B, 3))).status == "pass");
}

TEST_CASE("maximality check") {
  CHECK(check_maximal(abelian_basis(LieAlgebra::create(LieType::B, 5))).status == "pass");
  SUBCASE("dropping one element yields the omitted root vector as witness") {
    auto g = LieAlgebra::create(LieType::A, 5);
    auto b = abelian_basis(g);
    int omitted = b.root_indices.back();
    AbelianBasis broken = b;
    broken.root_indices.pop_back();
    auto r = check_maximal(broken);
    CHECK(r.status == "fail");
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == g->rs().root(omitted).str());
  }
  SUBCASE("rank-1: the centralizer of U among root vectors is span{U}") {
    auto g = LieAlgebra::create(LieType::A, 1);
    AbelianBasis b{g, {ridx(g, "L1-L2")}, 1};
    CHECK(check_maximal(b).status == "pass");
  }
}

TEST_CASE("eigenvalue membership of the families") {
  SUBCASE("A5: U^1 at 1, U^3 at 2") {
    auto g = LieAlgebra::create(LieType::A, 5);
    auto fam = uv_sets(g);
    auto d = base_sl2(g);
    for (int i : fam.u_sets[0]) CHECK(g->root_pairing(i, d.X) == 1);
    for (int i : fam.u_sets[2]) CHECK(g->root_pairing(i, d.X) == 2);
    CHECK(check_eigenvalue_membership(fam, d.X).status == "pass");
  }
  SUBCASE("F4: the half-sum slots 8 and 9 sit at eigenvalue 1") {
    auto g = LieAlgebra::create(LieType::F, 4);
    auto fam = uv_sets(g);
    auto d = base_sl2(g);
    for (int e : {7, 8})
      for (int i : fam.u_sets[e]) CHECK(g->root_pairing(i, d.X) == 1);
    CHECK(check_eigenvalue_membership(fam, d.X).status == "pass");
  }
  SUBCASE("every supported type passes") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{
             {LieType::A, 5}, {LieType::B, 5}, {LieType::C, 3}, {LieType::C, 8},
             {LieType::D, 5}, {LieType::E, 6}, {LieType::E, 7}, {LieType::E, 8},
             {LieType::F, 4}}) {
      auto g = LieAlgebra::create(t, r);
      CAPTURE(g->name());
      CHECK(check_eigenvalue_membership(uv_sets(g), base_sl2(g).X).status == "pass");
    }
  }
  SUBCASE("empty families pass vacuously") {
    auto g = LieAlgebra::create(LieType::A, 5);
    UVFamily empty;
    empty.alg = g;
    CHECK(check_eigenvalue_membership(empty, base_sl2(g).X).status == "pass");
  }
}

TEST_CASE("witness search: the named Appendix cases on C6") {
  auto g = LieAlgebra::create(LieType::C, 6);
  auto b = abelian_basis(g);
  SUBCASE("phi=L1-L2, psi=-L1+L3 accepts omega=L1+L3") {
    auto w = witness_search(b, ridx(g, "L1-L2"), ridx(g, "-L1+L3"));
    CHECK(w.status == "pass");
    REQUIRE(w.named_case.has_value());
    CHECK(w.named_confirmed);
    bool found = false;
    for (int i : w.named_roots)
      if (i == ridx(g, "L1+L3")) found = true;
    CHECK(found);
  }
  SUBCASE("phi=2L1, psi=-L1+L2 names omega=L1-L2") {
    auto w = witness_search(b, ridx(g, "2L1"), ridx(g, "-L1+L2"));
    CHECK(w.status == "pass");
    REQUIRE(w.named_case.has_value());
    CHECK(w.named_confirmed);
    CHECK(w.named_roots == std::vector<int>{ridx(g, "L1-L2")});
  }
  SUBCASE("phi=-L2-L4, psi=2L2 names omega=-2L2") {
    auto w = witness_search(b, ridx(g, "-L2-L4"), ridx(g, "2L2"));
    CHECK(w.status == "pass");
    REQUIRE(w.named_case.has_value());
    CHECK(w.named_confirmed);
    CHECK(w.named_roots == std::vector<int>{ridx(g, "-2L2")});
  }
  SUBCASE("preconditions are enforced") {
    CHECK_THROWS_AS((void)witness_search(b, ridx(g, "L1-L3"), ridx(g, "-L1+L3")),
                    std::invalid_argument);  // phi not a basis root
    CHECK_THROWS_AS((void)witness_search(b, ridx(g, "L1-L2"), ridx(g, "2L1")),
                    std::invalid_argument);  // psi inside the basis
    CHECK_THROWS_AS((void)witness_search(b, ridx(g, "L1-L2"), ridx(g, "L1+L3")),
                    std::invalid_argument);  // u_psi inside the image
  }
}

TEST_CASE("witness sweep passes in full on C3..C6") {
  for (int n : {3, 4, 5, 6}) {
    auto g = LieAlgebra::create(LieType::C, n);
    auto r = check_witness_escape(abelian_basis(g));
    CAPTURE(n);
    CAPTURE(r.details);
    CHECK(r.status == "pass");
  }
}

TEST_CASE("witness sweep is informational outside the C series") {
  auto r = check_witness_escape(abelian_basis(LieAlgebra::create(LieType::B, 5)));
  CHECK(r.status == "flagged");
}

TEST_CASE("chain hypotheses") {
  SUBCASE("cor9 both steps pass on the acceptance types") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{
             {LieType::A, 5}, {LieType::B, 5}, {LieType::C, 3}, {LieType::D, 5}}) {
      auto g = LieAlgebra::create(t, r);
      CAPTURE(g->name());
      auto c1 = check_chain_hypotheses(chain_config(g, ChainKind::Cor9Step1));
      CAPTURE(c1.details);
      CHECK(c1.status == "pass");
      auto c2 = check_chain_hypotheses(chain_config(g, ChainKind::Cor9Step2));
      CAPTURE(c2.details);
      CHECK(c2.status == "pass");
    }
  }
  SUBCASE("cor10 chains pass on A7") {
    auto g = LieAlgebra::create(LieType::A, 7);
    auto c1 = check_chain_hypotheses(chain_config(g, ChainKind::Cor10Step1));
    CAPTURE(c1.details);
    CHECK(c1.status == "pass");
    auto c2 = check_chain_hypotheses(chain_config(g, ChainKind::Cor10Step2));
    CAPTURE(c2.details);
    CHECK(c2.status == "pass");
  }
  SUBCASE("a chain with two identical stage sets fails (*)") {
    auto g = LieAlgebra::create(LieType::A, 3);
    ChainConfig cfg;
    cfg.kind = ChainKind::Cor9Step1;
    GeneratorSet q1{"Q1", {g->root_vector("L1-L2")}};
    GeneratorSet q2{"Q2", {g->root_vector("L3-L4")}};
    GeneratorSet q3{"Q3", {g->root_vector("L3-L4")}};
    cfg.entries = {q1, q2, q3};
    cfg.target = g->full_space();
    cfg.target_name = "g";
    auto r = check_chain_hypotheses(cfg);
    CHECK(r.status == "fail");
    CHECK(r.details.find("direct-sum=no") != std::string::npos);
  }
}

TEST_CASE("full report") {
  SUBCASE("C3 passes every structural check (split context flagged as n/a)") {
    auto rep = full_report(LieType::C, 3, 7);
    CHECK(rep.n_fail == 0);
    for (const auto& r : rep.results) {
      CAPTURE(r.check_id);
      CAPTURE(r.details);
      CHECK(r.status != "fail");
    }
  }
  SUBCASE("A2 flags the undefined abelian basis") {
    auto rep = full_report(LieType::A, 2, 7);
    CHECK(rep.n_fail == 0);
    CHECK(rep.n_flagged > 0);
    CHECK(rep.exit_code() == 2);
    bool saw = false;
    for (const auto& r : rep.results)
      if (r.check_id == "cardinality" && r.status == "flagged") saw = true;
    CHECK(saw);
  }
  SUBCASE("C6 passes everything and exits 0") {
    auto rep = full_report(LieType::C, 6, 7);
    CHECK(rep.exit_code() == 0);
  }
  SUBCASE("check filter restricts the run") {
    auto rep = full_report(LieType::B, 5, 7, {"abelian", "cardinality"});
    CHECK(rep.results.size() == 2);
  }
  SUBCASE("results are sorted by check id") {
    auto rep = full_report(LieType::C, 3, 7);
    for (std::size_t i = 1; i < rep.results.size(); ++i)
      CHECK(rep.results[i - 1].check_id < rep.results[i].check_id);
  }
}
