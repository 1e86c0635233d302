#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liekam/rational.hpp"

namespace liekam {

inline constexpr int kChainQ0 = 9;

// A derivative-loss ledger entry: sequential composition adds losses, parallel
// combination takes the max; const_class records parameter dependence tags.
struct TameOp {
  std::string name;
  Rat loss{0};
  std::set<std::string> const_class;

  static TameOp compose(const std::string& name, const std::vector<TameOp>& ops);
  static TameOp parallel(const std::string& name, const std::vector<TameOp>& ops);
};

struct ConstantChain {
  Rat dim_g, beta, lambda, lambda1;
  int q0 = kChainQ0;
  Rat sigma, sigma0, sigma1, sigma2, varrho;
};

// sigma = 3/2 dim, sigma0 = (7+sigma)sigma, sigma1 = (q0+1)sigma0,
// sigma2 = sigma1 + q0*sigma0, varrho = max((2q0+1)sigma0+1+2b, lb+l1+1+2b).
ConstantChain constant_chain(const Rat& dim_g, const Rat& beta, const Rat& lambda,
                             const Rat& lambda1);

enum class ProofCase { Thm61Case1, Thm61Case2, Prop51, Cor58 };
std::string proof_case_name(ProofCase c);

struct LedgerStep {
  std::string step;
  Rat increment;
  Rat cumulative;
  std::optional<Rat> claimed;  // the labeled index at this point, when one exists
  bool within_claim = true;
  std::string note;
};

struct LedgerReplay {
  std::string proof;
  std::vector<LedgerStep> steps;
  Rat final_requirement;
  std::optional<Rat> budget;  // varrho for the theorem cases
  std::optional<Rat> slack;
  bool overdraft = false;
  std::string overdraft_note;
};

// l parameterizes the Prop51/Cor58 routes (defaults: 2*sigma+2 resp. 0).
LedgerReplay ledger_replay(const ConstantChain& chain, ProofCase which,
                           const std::optional<Rat>& l_param = std::nullopt);

struct AuditInequality {
  std::string name;
  Rat lhs, rhs;    // asserted lhs <= rhs
  Rat margin;      // rhs - lhs; pass iff margin >= 0 (boundary equality passes)
  bool pass = false;
};

struct ScheduleAudit {
  Rat varrho;
  long l0 = 0;
  Rat a, b;  // a = (varrho+1)/l0, b = varrho/(l0-varrho)
  std::vector<AuditInequality> inequalities;
  bool all_pass = false;
  Rat stated_threshold;    // 120(varrho+1), the stated lower bound on l0
  Rat repaired_threshold;  // max(120(varrho+1), varrho(varrho+1)); b<a needs the latter
};

// Exact-rational verification of every inequality the convergence step uses.
// Rejects l0 <= varrho.
ScheduleAudit audit_schedule(const Rat& varrho, long l0);

// Log-space state: value = alpha * ln(eps0) + c_weight * ln(C_assumed).
struct KamLogValue {
  Rat alpha;
  Rat c_weight;
};

struct KamStep {
  int n = 0;
  KamLogValue eps, t, c0, cl;
  double log10_eps = 0, log10_c0 = 0, log10_cl = 0;
  bool ok_c0 = true, ok_cl = true;
};

struct KamTrajectory {
  std::vector<KamStep> steps;
  int first_violation = -1;
  bool degenerate_zero = false;  // eps0 = 0 fixed point
  double eps0 = 0, c_assumed = 1;
  Rat varrho;
  long l0 = 0;
};

// Worst-case recurrences of the iterative step, in log space; bound sums are
// combined as the max of their branches with C_assumed as a per-step factor.
// Requires eps0 in [0, 1) and a passing schedule audit.
KamTrajectory simulate_iteration(const Rat& varrho, long l0, double eps0, double c_assumed,
                                 int n_steps);

}  // namespace liekam
