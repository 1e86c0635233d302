#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liekam/matrix.hpp"
#include "liekam/roots.hpp"

namespace liekam {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Exact coefficient vector over the Chevalley basis of a fixed algebra.
struct Element {
  AlgebraPtr alg;
  RatVec coeffs;

  bool is_zero() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const Rat& f) const;
  friend bool operator==(const Element& a, const Element& b) {
    return a.alg == b.alg && a.coeffs == b.coeffs;
  }
};

// Canonical (RREF rows) subspace of a fixed algebra; equality is syntactic.
struct Subspace {
  AlgebraPtr alg;
  RatMat basis;                       // RREF rows over the Chevalley basis
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.rows(); }
  bool contains(const RatVec& v) const { return in_row_span(basis, pivots, v); }
  bool contains(const Element& e) const { return contains(e.coeffs); }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.alg == b.alg && a.basis == b.basis;
  }
};

struct Sl2Triple {
  Element X, U, V;
};

// Chevalley basis of the split form: one root vector per root (in root-system
// order), then the simple coroots. Structure constants are computed with the
// extraspecial-pair sign algorithm under the height-then-lex order on positive
// roots, so every table is reproducible bit for bit.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
 public:
  static AlgebraPtr create(LieType type, int rank);
  static AlgebraPtr create(const RootSystem& rs);

  const RootSystem& rs() const { return rs_; }
  int dim() const { return dim_; }
  int n_roots() const { return static_cast<int>(rs_.size()); }
  int rank() const { return rs_.rank(); }
  std::string name() const { return rs_.name(); }

  // Basis layout: index i < n_roots() is the root vector u_{roots[i]};
  // index n_roots()+k is the k-th simple coroot.
  int root_vector_index(int root_idx) const { return root_idx; }
  int cartan_index(int k) const { return n_roots() + k; }
  bool is_root_vector(int basis_idx) const { return basis_idx < n_roots(); }

  // N_{alpha,beta} for root indices (0 when the sum is not a root; the
  // alpha+beta=0 case is handled by the bracket, not by N).
  long structure_constant(int i, int j) const { return nmat_[idx(i, j)]; }
  // <root j, alpha_k^v> for simple coroot k.
  int pairing_with_simple_coroot(int root_idx, int k) const {
    return pairing_[root_idx * rs_.rank() + k];
  }
  // Coroot of a root, as integer coefficients over the simple coroots.
  const std::vector<int>& coroot_coords(int root_idx) const { return coroot_[root_idx]; }

  Element zero() const;
  Element basis_element(int basis_idx) const;
  Element root_vector(int root_idx) const;
  Element root_vector(const Coords2& c2) const;
  Element root_vector(const std::string& expr) const;  // via parse_root_expr
  Element coroot_element(int root_idx) const;          // H_phi as an Element

  Element bracket(const Element& x, const Element& y) const;
  // Sparse bracket of two basis vectors: list of (basis index, coefficient).
  std::vector<std::pair<int, Rat>> basis_bracket(int i, int j) const;

  // <phi, H> for H supported on the Cartan part of `h`.
  Rat root_pairing(int root_idx, const Element& h) const;

  RatMat ad_matrix(const Element& x) const;
  std::vector<std::vector<std::pair<int, Rat>>> ad_sparse(const Element& x) const;

  Subspace image_of_ad(const Element& u) const;
  Subspace centralizer(const std::vector<Element>& gens) const;
  Subspace span(const std::vector<Element>& vecs) const;
  Subspace full_space() const;

  // Direct-sum eigenspace decomposition of ad_x over the rationals.
  // Throws std::domain_error when ad_x is not rationally diagonalizable.
  std::map<Rat, Subspace> eigenspace_decomposition(const Element& x) const;

  Sl2Triple sl2_triple_for_root(int root_idx) const;
  Sl2Triple sl2_triple_for_root(const Coords2& c2) const;

  // If x is a multiple of a single root vector, its root index; else -1.
  int single_root_direction(const Element& x) const;

 private:
  LieAlgebra() = default;
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * rs_.size() + j; }
  void build_constants();
  long eval_n(int i, int j, std::map<std::pair<int, int>, long>& memo,
              const std::vector<std::pair<int, int>>& xsp) const;
  int p_value(int i, int j) const;  // max k with beta - k*alpha a root

  RootSystem rs_;
  int dim_ = 0;
  std::vector<long> nmat_;
  std::vector<int> pairing_;
  std::vector<std::vector<int>> coroot_;
};

}  // namespace liekam
