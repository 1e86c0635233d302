#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liekam/algebra.hpp"

namespace liekam {

// Number of family slots; types with fewer families leave the rest empty.
inline constexpr int kQ0 = 9;

// The U^eps / V^eps root-vector families. Slot e holds the paper's eps = e+1.
struct UVFamily {
  AlgebraPtr alg;
  std::string type_tag;
  std::array<std::vector<int>, kQ0> u_sets, v_sets;  // root indices

  std::vector<Element> u_elements(int slot) const;
  std::vector<Element> v_elements(int slot) const;
  bool slot_empty(int slot) const { return u_sets[slot].empty() && v_sets[slot].empty(); }
};

// Per-slot subsets commuting with u_{+-(L3-L4)} (index 1) resp. u_{+-(L5-L6)} (index 2).
struct SplitUVFamily {
  UVFamily base;
  std::array<std::vector<int>, kQ0> u1_sets, u2_sets, v1_sets, v2_sets;
};

struct AbelianBasis {
  AlgebraPtr alg;
  std::vector<int> root_indices;  // sorted canonically
  long claimed_cardinality = 0;

  std::vector<Element> elements() const;
  bool contains_root(int root_idx) const;
};

struct BaseSL2Data {
  AlgebraPtr alg;
  Element X, U, V;
  Subspace g1_perp;
  Element theta;             // U - V
  std::vector<Element> e0;   // {u_{L3-L4}, u_{L5-L6}} when available, else empty
  std::string e0_note;
};

// uv_sets: the root-vector families of the base construction. Index rule: the
// running index j avoids the base sl2 coordinates (j >= 3 when the base root is
// L1-L2, j >= 2 for the C series whose base root is 2L1); an expression that is
// not a root of the given type is skipped, which empties the slots the type
// does not define.
UVFamily uv_sets(const AlgebraPtr& alg);

AbelianBasis abelian_basis(const AlgebraPtr& alg);
long claimed_basis_cardinality(LieType type, int rank);
bool abelian_basis_defined(LieType type, int rank);

BaseSL2Data base_sl2(const AlgebraPtr& alg);

// Requires the G = G1 context: types A/B/C/D with rank >= 6.
SplitUVFamily split_uv_sets(const AlgebraPtr& alg, const UVFamily& base);
bool split_context_available(LieType type, int rank);

enum class ChainKind { Cor9Step1, Cor9Step2, Cor10Step1, Cor10Step2 };
std::string chain_kind_name(ChainKind k);
ChainKind chain_kind_from_string(const std::string& s);

struct GeneratorSet {
  std::string name;
  std::vector<Element> gens;
};

struct ChainConfig {
  ChainKind kind;
  std::vector<GeneratorSet> entries;  // Q1, Q2, ..., Qn (empty slots skipped)
  Subspace target;                    // the declared Lie(Q)
  std::string target_name;
};

// eps_perm, when given, is a permutation of {0..q0-1} applied to the slot order.
ChainConfig chain_config(const AlgebraPtr& alg, ChainKind kind,
                         const std::vector<int>* eps_perm = nullptr);

}  // namespace liekam
