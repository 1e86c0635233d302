#pragma once

#include <optional>
#include <vector>

#include "liekam/rational.hpp"

namespace liekam {

using RatVec = std::vector<Rat>;

// Dense exact-rational matrix. Sizes here stay small (≤ 248), so dense
// Gauss-Jordan is the workhorse; sparse fast paths live with the callers.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows, RatVec(cols)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  RatVec& row(std::size_t i) { return a_[i]; }
  const RatVec& row(std::size_t i) const { return a_[i]; }

  void append_row(RatVec v);
  bool is_zero() const;

  RatMat operator*(const RatMat& o) const;
  RatVec apply(const RatVec& v) const;
  RatMat transposed() const;

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  // In-place reduced row echelon form; returns pivot column per pivot row.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Basis of {x : A x = 0}, rows of the result.
  RatMat kernel() const;

  // RREF basis of the column space, rows of the result (vectors of length rows()).
  RatMat column_space() const;

  // Solves A x = b; empty if inconsistent.
  std::optional<RatVec> solve(const RatVec& b) const;

  std::optional<RatMat> inverse() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<RatVec> a_;
};

// Row-span membership test against an RREF basis (rows of `rref_basis`).
bool in_row_span(const RatMat& rref_basis, const std::vector<std::size_t>& pivots,
                 const RatVec& v);

// Jordan data for a nilpotent matrix: chains[c] lists basis indices head..tail,
// where column P[:, chains[c][k]] satisfies N*P_k = P_{k-1} (and N*P_0 = 0).
struct JordanChains {
  std::vector<std::vector<std::size_t>> chains;  // sizes sorted descending
  RatMat basis;                                  // change of basis P, columns = chain vectors
  RatMat basis_inv;
};

// Throws std::invalid_argument if N is not nilpotent.
JordanChains jordan_chains(const RatMat& N);

}  // namespace liekam
