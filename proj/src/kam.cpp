#include "liekam/kam.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liekam {

TameOp TameOp::compose(const std::string& name, const std::vector<TameOp>& ops) {
  TameOp out;
  out.name = name;
  for (const auto& op : ops) {
    out.loss += op.loss;
    out.const_class.insert(op.const_class.begin(), op.const_class.end());
  }
  return out;
}

TameOp TameOp::parallel(const std::string& name, const std::vector<TameOp>& ops) {
  TameOp out;
  out.name = name;
  for (const auto& op : ops) {
    out.loss = std::max(out.loss, op.loss);
    out.const_class.insert(op.const_class.begin(), op.const_class.end());
  }
  return out;
}

ConstantChain constant_chain(const Rat& dim_g, const Rat& beta, const Rat& lambda,
                             const Rat& lambda1) {
  if (dim_g < 2) throw std::invalid_argument("constant_chain: dim_g must be >= 2");
  if (beta < 0 || lambda < 0 || lambda1 < 0)
    throw std::invalid_argument("constant_chain: beta, lambda, lambda1 must be >= 0");
  ConstantChain c;
  c.dim_g = dim_g;
  c.beta = beta;
  c.lambda = lambda;
  c.lambda1 = lambda1;
  c.sigma = Rat(3, 2) * dim_g;
  c.sigma0 = (7 + c.sigma) * c.sigma;
  c.sigma1 = Rat(c.q0 + 1) * c.sigma0;
  c.sigma2 = c.sigma1 + Rat(c.q0) * c.sigma0;
  Rat branch1 = Rat(2 * c.q0 + 1) * c.sigma0 + 1 + 2 * beta;
  Rat branch2 = lambda * beta + lambda1 + 1 + 2 * beta;
  c.varrho = std::max(branch1, branch2);
  return c;
}

std::string proof_case_name(ProofCase c) {
  switch (c) {
    case ProofCase::Thm61Case1: return "thm61_case1";
    case ProofCase::Thm61Case2: return "thm61_case2";
    case ProofCase::Prop51: return "prop51";
    case ProofCase::Cor58: return "cor58";
  }
  return "?";
}

LedgerReplay ledger_replay(const ConstantChain& c, ProofCase which,
                           const std::optional<Rat>& l_param) {
  LedgerReplay out;
  out.proof = proof_case_name(which);
  Rat cum = 0;
  auto push = [&](const std::string& step, const Rat& inc, std::optional<Rat> claimed,
                  const std::string& note = "") {
    cum += inc;
    LedgerStep s{step, inc, cum, claimed, true, note};
    if (claimed) s.within_claim = (cum <= *claimed);
    out.steps.push_back(std::move(s));
  };

  switch (which) {
    case ProofCase::Prop51: {
      Rat l = l_param.value_or(2 * c.sigma + 2);
      Rat low = c.sigma + Rat(3, 2);
      Rat high = (6 + l / 2) * c.sigma;
      push("frequency_projection", 1, std::nullopt, "splitting costs one derivative");
      push("high_frequency_route", high, c.sigma0,
           "loss (6+l/2)sigma with l = " + to_string(l));
      out.steps.back().within_claim = (high == c.sigma0);
      // the low route runs in parallel and is dominated
      LedgerStep lowstep{"low_frequency_route(parallel)", 0, cum, std::nullopt, true,
                         "loss sigma+3/2 = " + to_string(low) + ", dominated"};
      out.steps.push_back(lowstep);
      out.final_requirement = cum;  // sigma0 + 1
      out.budget = c.sigma0;
      out.overdraft = out.final_requirement > c.sigma0;
      if (out.overdraft)
        out.overdraft_note =
            "composed loss exceeds the sigma0 label by " +
            to_string(out.final_requirement - c.sigma0) +
            " (the projection derivative); downstream budgets absorb it";
      out.slack = c.sigma0 - out.final_requirement;
      break;
    }
    case ProofCase::Cor58: {
      Rat l = l_param.value_or(Rat(0));
      Rat per = 6 + l / 2;
      push("per_coordinate_solve", per, per, "one Jordan coordinate");
      push("chain_composition", per * (c.dim_g - 1), per * c.sigma,
           "at most dim(g) coordinates per block");
      out.final_requirement = per * c.dim_g;
      out.budget = per * c.sigma;
      out.slack = *out.budget - out.final_requirement;  // = per * dim_g / 2
      out.overdraft = out.final_requirement > *out.budget;
      break;
    }
    case ProofCase::Thm61Case1: {
      push("step1_smoothing_reduction", 0, std::nullopt,
           "cocycle error unchanged; quadratic term gains one derivative");
      push("step2_s1_splitting", c.sigma0, c.sigma0, "splitting proposition");
      push("step3_S_splitting", 0, c.sigma0, "residual stays at sigma0");
      push("step4_global_splitting", 0, c.sigma0, "same bound through the U-stages");
      Rat branch1 = cum + 1 + 2 * c.beta;
      Rat branch2 = c.lambda * c.beta + c.lambda1 + 1 + 2 * c.beta;
      Rat req = std::max(branch1, branch2);
      push("step5_embedding", req - cum, c.varrho,
           "Sobolev embedding (2 beta) + quadratic-term derivative; parallel branch "
           "lambda*beta+lambda1+1+2beta = " + to_string(branch2));
      out.final_requirement = req;
      out.budget = c.varrho;
      out.slack = c.varrho - req;
      out.overdraft = req > c.varrho;
      break;
    }
    case ProofCase::Thm61Case2: {
      push("step1_smoothing_reduction", 0, std::nullopt,
           "cocycle error unchanged; quadratic term gains one derivative");
      push("step2_s1_splitting", c.sigma0, c.sigma0, "splitting proposition");
      push("step3_S_splitting_pairs", c.sigma1 - c.sigma0, c.sigma1,
           "q0 paired stages: (q0+1)sigma0 = " + to_string(Rat(c.q0 + 1) * c.sigma0));
      out.steps.back().within_claim = (cum == c.sigma1);
      push("step4_global_splitting", c.sigma2 - c.sigma1, c.sigma2,
           "q0 more stages: sigma1 + q0*sigma0 = " +
               to_string(c.sigma1 + Rat(c.q0) * c.sigma0));
      out.steps.back().within_claim = (cum == c.sigma2);
      Rat branch1 = cum + 1 + 2 * c.beta;
      Rat branch2 = c.lambda * c.beta + c.lambda1 + 1 + 2 * c.beta;
      Rat req = std::max(branch1, branch2);
      push("step5_embedding", req - cum, c.varrho,
           "(2q0+1)sigma0+1+2beta vs lambda*beta+lambda1+1+2beta");
      out.final_requirement = req;
      out.budget = c.varrho;
      out.slack = c.varrho - req;  // zero: varrho is exactly this maximum
      out.overdraft = req > c.varrho;
      break;
    }
  }
  return out;
}

ScheduleAudit audit_schedule(const Rat& varrho, long l0) {
  if (Rat(l0) <= varrho)
    throw std::invalid_argument("audit_schedule: l0 must exceed varrho (got l0 = " +
                                std::to_string(l0) + ", varrho = " + to_string(varrho) + ")");
  ScheduleAudit out;
  out.varrho = varrho;
  out.l0 = l0;
  out.a = (varrho + 1) / l0;
  out.b = varrho / (Rat(l0) - varrho);
  const Rat& a = out.a;
  const Rat& b = out.b;

  auto add = [&](const std::string& name, const Rat& lhs, const Rat& rhs) {
    AuditInequality iq{name, lhs, rhs, rhs - lhs, rhs - lhs >= 0};
    out.inequalities.push_back(std::move(iq));
  };
  add("a<=1/120", a, Rat(1, 120));
  add("b<=a", b, a);
  add("5/6<=1-6a", Rat(5, 6), 1 - 6 * a);
  add("11/6<=2-20a", Rat(11, 6), 2 - 20 * a);
  add("2-20a<=3-6a", 2 - 20 * a, 3 - 6 * a);
  add("11/6<=(2-4a)(1-b)-5b", Rat(11, 6), (2 - 4 * a) * (1 - b) - 5 * b);

  out.all_pass = true;
  for (const auto& iq : out.inequalities) out.all_pass = out.all_pass && iq.pass;
  out.stated_threshold = 120 * (varrho + 1);
  out.repaired_threshold = std::max(out.stated_threshold, Rat(varrho * (varrho + 1)));
  return out;
}

namespace {

struct LogCtx {
  double ln_eps;  // < 0
  double ln_c;    // ln(C_assumed)

  double value(const KamLogValue& v) const {
    return v.alpha.convert_to<double>() * ln_eps + v.c_weight.convert_to<double>() * ln_c;
  }
  // -1 / 0 / +1 comparison of values, exact on identical coefficients
  int cmp(const KamLogValue& x, const KamLogValue& y) const {
    if (x.alpha == y.alpha && x.c_weight == y.c_weight) return 0;
    double d = (x.alpha - y.alpha).convert_to<double>() * ln_eps +
               (x.c_weight - y.c_weight).convert_to<double>() * ln_c;
    return d < 0 ? -1 : (d > 0 ? 1 : 0);
  }
  KamLogValue max(const KamLogValue& x, const KamLogValue& y) const {
    return cmp(x, y) >= 0 ? x : y;
  }
};

KamLogValue operator+(const KamLogValue& x, const KamLogValue& y) {
  return {x.alpha + y.alpha, x.c_weight + y.c_weight};
}
KamLogValue scale(const Rat& f, const KamLogValue& x) {
  return {f * x.alpha, f * x.c_weight};
}

}  // namespace

KamTrajectory simulate_iteration(const Rat& varrho, long l0, double eps0, double c_assumed,
                                 int n_steps) {
  if (eps0 < 0 || eps0 >= 1)
    throw std::invalid_argument("simulate_iteration: eps0 must lie in [0,1)");
  if (c_assumed <= 0) throw std::invalid_argument("simulate_iteration: C must be positive");
  ScheduleAudit audit = audit_schedule(varrho, l0);
  if (!audit.all_pass) {
    std::string bad;
    for (const auto& iq : audit.inequalities)
      if (!iq.pass) bad += (bad.empty() ? "" : ", ") + iq.name;
    throw std::invalid_argument("simulate_iteration: schedule audit failed (" + bad +
                                "); repaired threshold l0 > " +
                                to_string(audit.repaired_threshold));
  }

  KamTrajectory traj;
  traj.eps0 = eps0;
  traj.c_assumed = c_assumed;
  traj.varrho = varrho;
  traj.l0 = l0;
  if (eps0 == 0) {
    traj.degenerate_zero = true;  // fixed point: the zero perturbation stays zero
    return traj;
  }

  LogCtx ctx{std::log(eps0), std::log(c_assumed)};
  const Rat L0(l0);
  const Rat kmaxA = L0 - varrho + 1;

  KamLogValue x{Rat(1), Rat(0)};   // ||p^(0)||_C0 <= eps0
  KamLogValue y{Rat(-3), Rat(0)};  // ||p^(0)||_Cl0 <= eps0^{-3}
  Rat eps_alpha = 1;

  for (int n = 0; n <= n_steps; ++n) {
    KamStep st;
    st.n = n;
    st.eps = {eps_alpha, Rat(0)};
    st.t = {Rat(-6) / L0 * eps_alpha, Rat(0)};
    st.c0 = x;
    st.cl = y;
    st.log10_eps = ctx.value(st.eps) / std::log(10.0);
    st.log10_c0 = ctx.value(x) / std::log(10.0);
    st.log10_cl = ctx.value(y) / std::log(10.0);
    st.ok_c0 = ctx.cmp(x, st.eps) <= 0;
    KamLogValue bound_cl{-3 * eps_alpha, Rat(0)};
    st.ok_cl = ctx.cmp(y, bound_cl) <= 0;
    traj.steps.push_back(st);
    if ((!st.ok_c0 || !st.ok_cl) && traj.first_violation < 0) traj.first_violation = n;
    if (n == n_steps) break;

    const KamLogValue t = st.t;
    auto interp = [&](const Rat& r) {  // ||p||_{C^r} <= x^{1-r/l0} y^{r/l0}
      Rat w = r / L0;
      return scale(1 - w, x) + scale(w, y);
    };
    auto max_k = [&](const Rat& klo, const Rat& khi, auto f) {
      return ctx.max(f(klo), f(khi));
    };

    // C0 recurrence branches
    KamLogValue A = max_k(Rat(0), kmaxA,
                          [&](const Rat& k) { return scale(k, t) + interp(L0 - k); });
    KamLogValue B = ctx.max(x + interp(varrho + 1), scale(varrho + 1 - L0, t) + y);
    Rat bexp = varrho / (L0 - varrho);
    KamLogValue term1 = scale(bexp, A) + scale(1 - bexp, B);
    KamLogValue term2 = scale(2 * (varrho + 1), t) + scale(Rat(2), interp(varrho + 1));
    KamLogValue term3 = scale(varrho + 1 - L0, t) + y;
    KamLogValue nx = ctx.max(term1, ctx.max(term2, term3));
    nx.c_weight += 1;

    // Cl0 recurrence branches
    KamLogValue tA = scale(varrho, t) + y;
    KamLogValue tB{Rat(0), Rat(0)};  // the "+1"
    KamLogValue tC = max_k(varrho, L0 + varrho,
                           [&](const Rat& k) { return scale(k, t) + interp(L0 + varrho - k); });
    KamLogValue ny = ctx.max(tA, ctx.max(tB, tC));
    ny.c_weight += 1;

    x = nx;
    y = ny;
    eps_alpha *= Rat(11, 6);
  }
  return traj;
}

}  // namespace liekam
