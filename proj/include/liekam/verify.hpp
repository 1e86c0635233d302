#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liekam/constructions.hpp"

namespace liekam {

struct CheckResult {
  std::string check_id;
  std::string claim_ref;
  std::string status;  // "pass" | "fail" | "flagged"
  std::optional<std::string> witness;
  std::string details;
  long elapsed_ms = 0;

  bool passed() const { return status == "pass"; }
};

struct Report {
  std::string type_tag;
  int rank = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;  // sorted by check_id
  int n_pass = 0, n_fail = 0, n_flagged = 0;

  void finalize();  // sorts and recounts
  int exit_code() const { return n_fail ? 1 : (n_flagged ? 2 : 0); }
};

CheckResult check_cardinalities(const AbelianBasis& basis);
CheckResult check_abelian(const AbelianBasis& basis);
CheckResult check_nilpotent(const AbelianBasis& basis);
CheckResult check_maximal(const AbelianBasis& basis);
CheckResult check_eigenvalue_membership(const UVFamily& fam, const Element& X);
CheckResult check_chain_hypotheses(const ChainConfig& cfg);
CheckResult check_base_sl2(const BaseSL2Data& d);
CheckResult check_split_families(const SplitUVFamily& s);
CheckResult check_jacobi(const AlgebraPtr& alg, std::uint64_t seed);

// Single witness query: phi must be a basis root, u_psi outside Im(ad u_phi),
// psi outside the basis roots; precondition violations throw.
struct WitnessResult {
  std::string status;  // pass | fail
  int witness_root = -1;
  long candidates_examined = 0;
  std::optional<std::string> named_case;  // Appendix-style case label when matched
  bool named_confirmed = false;
  std::vector<int> named_roots;
  std::string details;
};
WitnessResult witness_search(const AbelianBasis& basis, int phi_idx, int psi_idx);

// Aggregate witness sweep over all valid (phi, psi) pairs.
CheckResult check_witness_escape(const AbelianBasis& basis);

// Runs every applicable check; construction rejections become flagged results.
// eps_perm permutes the family-slot order inside the chain configurations.
Report full_report(LieType type, int rank, std::uint64_t seed = 0,
                   const std::vector<std::string>& only_checks = {},
                   const std::vector<int>* eps_perm = nullptr);

}  // namespace liekam
