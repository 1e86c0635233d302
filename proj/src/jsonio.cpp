#include "liekam/jsonio.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace liekam {

std::string rat_str(const Rat& r) { return to_string(r); }

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json root_json(const Root& r) {
  Json coords = Json::array();
  for (int v : r.c2) {
    if (v % 2 == 0)
      coords.push_back(Json(v / 2));
    else
      coords.push_back(Json(std::to_string(v) + "/2"));
  }
  return Json{{"coords", coords},
              {"name", r.str()},
              {"length", r.length_class == LengthClass::Long ? "long" : "short"},
              {"height", r.height}};
}

Json algebra_json(const LieAlgebra& alg) {
  const auto& rs = alg.rs();
  Json roots = Json::array();
  for (const auto& r : rs.roots()) roots.push_back(root_json(r));
  Json simple = Json::array();
  for (int i : rs.simple_indices()) simple.push_back(i);
  Json consts = Json::array();
  for (int i = 0; i < alg.n_roots(); ++i)
    for (int j = i + 1; j < alg.n_roots(); ++j)
      if (alg.structure_constant(i, j) != 0)
        consts.push_back(Json::array({i, j, alg.structure_constant(i, j)}));
  return Json{{"type", type_name(rs.lie_type())}, {"rank", rs.rank()},
              {"ambient_dim", rs.ambient_dim()},  {"dim", alg.dim()},
              {"roots", roots},                   {"simple_roots", simple},
              {"structure_constants", consts}};
}

namespace {

Json roots_by_name(const RootSystem& rs, const std::vector<int>& idxs) {
  Json a = Json::array();
  for (int i : idxs) a.push_back(rs.root(i).str());
  return a;
}

Json family_json(const RootSystem& rs, const std::array<std::vector<int>, kQ0>& sets,
                 const std::string& prefix) {
  Json out = Json::object();
  for (int e = 0; e < kQ0; ++e)
    out[prefix + std::to_string(e + 1)] = roots_by_name(rs, sets[e]);
  return out;
}

}  // namespace

Json atlas_json(const AlgebraPtr& alg) {
  const auto& rs = alg->rs();
  Json out;
  out["type"] = type_name(rs.lie_type());
  out["rank"] = rs.rank();
  out["dim"] = alg->dim();
  out["root_count"] = rs.size();
  Json roots = Json::array();
  for (const auto& r : rs.roots()) roots.push_back(r.str());
  out["roots"] = roots;

  try {
    auto basis = abelian_basis(alg);
    out["abelian_basis"] = Json{{"cardinality", basis.root_indices.size()},
                                {"claimed_cardinality", basis.claimed_cardinality},
                                {"roots", roots_by_name(rs, basis.root_indices)}};
  } catch (const std::exception& e) {
    out["abelian_basis"] = Json{{"unavailable", e.what()}};
  }

  try {
    auto fam = uv_sets(alg);
    out["families"] = Json{{"U", family_json(rs, fam.u_sets, "U")},
                           {"V", family_json(rs, fam.v_sets, "V")}};
    auto d = base_sl2(alg);
    Json sl2;
    sl2["U_root"] = rs.lie_type() == LieType::C ? "2L1" : "L1-L2";
    Json e0 = Json::array();
    for (std::size_t i = 0; i < d.e0.size(); ++i)
      e0.push_back(i == 0 ? "L3-L4" : "L5-L6");
    sl2["E0"] = e0;
    if (!d.e0_note.empty()) sl2["E0_note"] = d.e0_note;
    sl2["centralizer_dim"] = d.g1_perp.dim();
    out["base_sl2"] = sl2;
    if (split_context_available(rs.lie_type(), rs.rank())) {
      auto s = split_uv_sets(alg, fam);
      out["split_families"] = Json{{"U1", family_json(rs, s.u1_sets, "U")},
                                   {"U2", family_json(rs, s.u2_sets, "U")},
                                   {"V1", family_json(rs, s.v1_sets, "V")},
                                   {"V2", family_json(rs, s.v2_sets, "V")}};
    }
  } catch (const std::exception& e) {
    out["families"] = Json{{"unavailable", e.what()}};
  }
  return out;
}

Json report_json(const Report& rep, bool timings) {
  Json results = Json::array();
  for (const auto& r : rep.results) {
    Json e{{"check_id", r.check_id},
           {"claim_ref", r.claim_ref},
           {"status", r.status},
           {"details", r.details},
           {"elapsed_ms", timings ? r.elapsed_ms : 0}};
    if (r.witness) e["witness"] = *r.witness;
    results.push_back(std::move(e));
  }
  return Json{{"type", rep.type_tag},
              {"rank", rep.rank},
              {"seed", rep.seed},
              {"results", results},
              {"summary", Json{{"pass", rep.n_pass},
                               {"fail", rep.n_fail},
                               {"flagged", rep.n_flagged}}}};
}

Json audit_json(const ScheduleAudit& a) {
  Json iqs = Json::array();
  for (const auto& iq : a.inequalities)
    iqs.push_back(Json{{"name", iq.name},
                       {"lhs", rat_str(iq.lhs)},
                       {"rhs", rat_str(iq.rhs)},
                       {"margin", rat_str(iq.margin)},
                       {"pass", iq.pass}});
  return Json{{"varrho", rat_str(a.varrho)},
              {"l0", a.l0},
              {"a", rat_str(a.a)},
              {"b", rat_str(a.b)},
              {"inequalities", iqs},
              {"all_pass", a.all_pass},
              {"stated_threshold", rat_str(a.stated_threshold)},
              {"repaired_threshold", rat_str(a.repaired_threshold)},
              {"requirement", "l0 must strictly exceed the repaired threshold"}};
}

Json chain_constants_json(const ConstantChain& c) {
  return Json{{"dim_g", rat_str(c.dim_g)},   {"beta", rat_str(c.beta)},
              {"lambda", rat_str(c.lambda)}, {"lambda1", rat_str(c.lambda1)},
              {"q0", c.q0},                  {"sigma", rat_str(c.sigma)},
              {"sigma0", rat_str(c.sigma0)}, {"sigma1", rat_str(c.sigma1)},
              {"sigma2", rat_str(c.sigma2)}, {"varrho", rat_str(c.varrho)}};
}

Json ledger_json(const LedgerReplay& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e{{"step", s.step},
           {"increment", rat_str(s.increment)},
           {"cumulative", rat_str(s.cumulative)},
           {"within_claim", s.within_claim}};
    if (s.claimed) e["claimed"] = rat_str(*s.claimed);
    if (!s.note.empty()) e["note"] = s.note;
    steps.push_back(std::move(e));
  }
  Json out{{"proof", r.proof},
           {"steps", steps},
           {"final_requirement", rat_str(r.final_requirement)},
           {"overdraft", r.overdraft}};
  if (r.budget) out["budget"] = rat_str(*r.budget);
  if (r.slack) out["slack"] = rat_str(*r.slack);
  if (!r.overdraft_note.empty()) out["overdraft_note"] = r.overdraft_note;
  return out;
}

Json trajectory_json(const KamTrajectory& t, int head) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    bool boundary = !s.ok_c0 || !s.ok_cl;
    if (s.n >= head && s.n + head < static_cast<int>(t.steps.size()) && !boundary) continue;
    steps.push_back(Json{{"n", s.n},
                         {"log10_eps", s.log10_eps},
                         {"log10_c0", s.log10_c0},
                         {"log10_cl", s.log10_cl},
                         {"ok_c0", s.ok_c0},
                         {"ok_cl", s.ok_cl}});
  }
  return Json{{"varrho", rat_str(t.varrho)},
              {"l0", t.l0},
              {"eps0", t.eps0},
              {"c_assumed", t.c_assumed},
              {"steps_total", t.steps.size()},
              {"steps", steps},
              {"first_violation", t.first_violation},
              {"degenerate_zero", t.degenerate_zero},
              {"all_invariants_hold", t.first_violation < 0}};
}

Json smoothing_sweep_json(int d, int K, std::uint64_t seed) {
  TorusField y = TorusField::random(d, K, seed);
  Json rows = Json::array();
  double worst1 = 0, worst2 = 0;
  for (int s = 0; s <= 4; ++s)
    for (int sp = 0; sp <= s; ++sp)
      for (double t : {2.0, 4.0, 8.0, 16.0}) {
        auto r = torus_smoothing(t, y, s, sp);
        worst1 = std::max(worst1, r.c1);
        worst2 = std::max(worst2, r.c2);
        rows.push_back(Json{
            {"s", s}, {"sp", sp}, {"t", t}, {"c1", r.c1}, {"c2", r.c2}});
      }
  return Json{{"d", d},
              {"K", K},
              {"grid", rows},
              {"worst_c1", worst1},
              {"worst_c2", worst2},
              {"bound", 16.0},
              {"holds", worst1 <= 16.0 && worst2 <= 16.0}};
}

namespace {

AtomicRep rep_from_json(const Json& j) {
  AtomicRep xi;
  xi.m = j.at("m").get<int>();
  for (const auto& cj : j.at("components")) {
    AtomicComponent c;
    for (const auto& x : cj.at("chi")) c.chi.push_back(x.get<double>());
    c.amplitude = {cj.at("amplitude")[0].get<double>(), cj.at("amplitude")[1].get<double>()};
    if (cj.contains("label")) {
      SL2Label l;
      std::string kind = cj["label"].at("kind").get<std::string>();
      if (kind == "imaginary") l.kind = SL2Label::Kind::Imaginary;
      else if (kind == "complementary") l.kind = SL2Label::Kind::Complementary;
      else if (kind == "discrete") l.kind = SL2Label::Kind::Discrete;
      else if (kind == "trivial") l.kind = SL2Label::Kind::Trivial;
      else throw std::invalid_argument("unknown sl2 label kind '" + kind + "'");
      if (cj["label"].contains("nu")) l.nu = cj["label"]["nu"].get<double>();
      c.label = l;
    }
    xi.components.push_back(std::move(c));
  }
  xi.validate();
  return xi;
}

}  // namespace

Json run_model_scenario(const Json& scenario, std::uint64_t seed) {
  AtomicRep xi = rep_from_json(scenario);
  const int m = xi.m;
  BumpFunction f{1, 2, m};
  if (scenario.contains("bump")) {
    f.a = scenario["bump"].at("a").get<double>();
    f.b = scenario["bump"].at("b").get<double>();
  }
  Json out;
  out["components"] = xi.components.size();
  out["norm"] = xi.norm();

  {  // multiplicativity over randomized bump pairs
    int trials = scenario.value("multiplicativity_trials", 200);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> ab(0.5, 4.0);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      double a1 = ab(rng), a2 = ab(rng);
      BumpFunction f1{a1, a1 + ab(rng), m}, f2{a2, a2 + ab(rng), m};
      AtomicRep lhs = apply_pi(f1, apply_pi(f2, xi));
      AtomicRep rhs = apply_pi(
          [&](const std::vector<double>& t2) {
            return std::complex<double>(f1.eval(t2) * f2.eval(t2));
          },
          xi);
      worst = std::max(worst, lhs.distance(rhs));
    }
    out["multiplicativity"] =
        Json{{"trials", trials}, {"worst_residual", worst}, {"pass", worst <= 1e-12}};
  }

  {  // derivative relation
    std::vector<int> k(m, 1);
    if (scenario.contains("derivative_multi_index")) {
      k.clear();
      for (const auto& x : scenario["derivative_multi_index"]) k.push_back(x.get<int>());
    }
    auto r = derivative_action(k, f, xi);
    out["derivative_relation"] =
        Json{{"multi_index", k}, {"residual", r.residual}, {"pass", r.residual <= 1e-12}};
  }

  if (scenario.contains("tail")) {
    double c = scenario["tail"].at("c").get<double>();
    int s = scenario["tail"].at("s").get<int>();
    auto r = tail_bound_check(xi, f, c, s);
    out["tail_bound"] = Json{{"c", c},         {"s", s},
                             {"lhs", r.lhs},   {"rhs", r.rhs},
                             {"ratio", r.ratio}, {"pass", r.lhs <= r.rhs * (1 + 1e-12)}};
  }

  if (scenario.contains("small")) {
    double a = scenario["small"].at("a").get<double>();
    double b = scenario["small"].at("b").get<double>();
    out["small_vector"] = Json{{"a", a}, {"b", b}, {"is_small", is_small_vector(xi, a, b)}};
  }

  if (scenario.contains("proj_l")) {
    int l = scenario["proj_l"].get<int>();
    bool labeled = true;
    for (const auto& c : xi.components)
      if (!c.label) labeled = false;
    if (labeled) {
      auto [head, tail] = split_decompose(l, xi);
      AtomicRep re = head;
      for (std::size_t i = 0; i < re.components.size(); ++i)
        re.components[i].amplitude += tail.components[i].amplitude;
      out["split"] = Json{{"l", l},
                          {"head_norm", head.norm()},
                          {"tail_norm", tail.norm()},
                          {"recompose_residual", re.distance(xi)},
                          {"projection_idempotent",
                           proj_Dl(l, head).distance(head) == 0}};
    } else {
      out["split"] = Json{{"skipped", "components carry no sl2 labels"}};
    }
  }

  out["bump_derivative_sup"] =
      Json{{"order1", bump_derivative_sup(f, 1)}, {"order2", bump_derivative_sup(f, 2)}};
  return out;
}

std::string atlas_text(const AlgebraPtr& alg) {
  std::ostringstream os;
  Json j = atlas_json(alg);
  os << j["type"].get<std::string>() << j["rank"].get<int>() << ": dim " << j["dim"].get<int>()
     << ", " << j["root_count"].get<std::size_t>() << " roots\n";
  os << "roots:";
  for (const auto& r : j["roots"]) os << " " << r.get<std::string>();
  os << "\n";
  if (j["abelian_basis"].contains("roots")) {
    os << "abelian basis (|D| = " << j["abelian_basis"]["cardinality"].get<std::size_t>()
       << "):";
    for (const auto& r : j["abelian_basis"]["roots"]) os << " " << r.get<std::string>();
    os << "\n";
  } else {
    os << "abelian basis: " << j["abelian_basis"]["unavailable"].get<std::string>() << "\n";
  }
  if (j.contains("families") && !j["families"].contains("unavailable")) {
    for (const char* side : {"U", "V"}) {
      for (auto& [name, lst] : j["families"][side].items()) {
        if (lst.empty()) continue;
        os << name << ":";
        for (const auto& r : lst) os << " " << r.get<std::string>();
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string report_text(const Report& rep) {
  std::ostringstream os;
  os << "verify " << rep.type_tag << rep.rank << " (seed " << rep.seed << ")\n";
  for (const auto& r : rep.results) {
    os << "  [" << r.status << "] " << r.check_id;
    if (r.witness) os << " witness: " << *r.witness;
    os << "\n    " << r.details << "\n";
  }
  os << "summary: " << rep.n_pass << " pass, " << rep.n_fail << " fail, " << rep.n_flagged
     << " flagged\n";
  return os.str();
}

}  // namespace liekam
