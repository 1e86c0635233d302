#include "liekam/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace liekam {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i][i] = 1;
  return m;
}

void RatMat::append_row(RatVec v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  if (v.size() != c_) throw std::invalid_argument("append_row: width mismatch");
  a_.push_back(std::move(v));
  ++r_;
}

bool RatMat::is_zero() const {
  for (const auto& row : a_)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMat m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      if (a_[i][k] == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (o.a_[k][j] != 0) m.a_[i][j] += a_[i][k] * o.a_[k][j];
    }
  return m;
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.size() != c_) throw std::invalid_argument("apply: shape mismatch");
  RatVec out(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (a_[i][j] != 0 && v[j] != 0) out[i] += a_[i][j] * v[j];
  return out;
}

RatMat RatMat::transposed() const {
  RatMat m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m.a_[j][i] = a_[i][j];
  return m;
}

std::vector<std::size_t> RatMat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < c_ && pr < r_; ++pc) {
    std::size_t sel = pr;
    while (sel < r_ && a_[sel][pc] == 0) ++sel;
    if (sel == r_) continue;
    std::swap(a_[pr], a_[sel]);
    Rat inv = a_[pr][pc];
    for (std::size_t j = pc; j < c_; ++j) a_[pr][j] /= inv;
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == pr || a_[i][pc] == 0) continue;
      Rat f = a_[i][pc];
      for (std::size_t j = pc; j < c_; ++j)
        if (a_[pr][j] != 0) a_[i][j] -= f * a_[pr][j];
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

std::size_t RatMat::rank() const {
  RatMat m = *this;
  return m.rref().size();
}

RatMat RatMat::kernel() const {
  RatMat m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(c_, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMat ker(0, c_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (is_pivot[j]) continue;
    RatVec v(c_);
    v[j] = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      if (pivots[pi] < j) v[pivots[pi]] = -m.a_[pi][j];
    ker.append_row(std::move(v));
  }
  return ker;
}

RatMat RatMat::column_space() const {
  RatMat m = transposed();
  auto pivots = m.rref();
  RatMat out(0, r_);
  for (std::size_t i = 0; i < pivots.size(); ++i) out.append_row(m.row(i));
  return out;
}

std::optional<RatVec> RatMat::solve(const RatVec& b) const {
  if (b.size() != r_) throw std::invalid_argument("solve: shape mismatch");
  RatMat aug(r_, c_ + 1);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) aug.a_[i][j] = a_[i][j];
    aug.a_[i][c_] = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
  RatVec x(c_);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.a_[pi][c_];
  return x;
}

std::optional<RatMat> RatMat::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse: not square");
  RatMat aug(r_, 2 * c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) aug.a_[i][j] = a_[i][j];
    aug.a_[i][c_ + i] = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != r_ || pivots.back() != r_ - 1) return std::nullopt;
  RatMat inv(r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) inv.a_[i][j] = aug.a_[i][c_ + j];
  return inv;
}

bool in_row_span(const RatMat& rref_basis, const std::vector<std::size_t>& pivots,
                 const RatVec& v) {
  RatVec w = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rat& f = w[pivots[i]];
    if (f == 0) continue;
    Rat ff = f;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (rref_basis.at(i, j) != 0) w[j] -= ff * rref_basis.at(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

namespace {

// Extends `rref` (with pivot list) by v; returns true if v was independent.
bool extend_rref(RatMat& rref, std::vector<std::size_t>& pivots, RatVec v) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rat f = v[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (rref.at(i, j) != 0) v[j] -= f * rref.at(i, j);
  }
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Rat inv = v[p];
  for (auto& x : v) x /= inv;
  // back-eliminate into existing rows, keep pivot order sorted
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rat f = rref.at(i, p);
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) rref.at(i, j) -= f * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots.size() && pivots[pos] < p) ++pos;
  RatMat nm(0, v.size());
  for (std::size_t i = 0; i < pos; ++i) nm.append_row(rref.row(i));
  nm.append_row(std::move(v));
  for (std::size_t i = pos; i < pivots.size(); ++i) nm.append_row(rref.row(i));
  pivots.insert(pivots.begin() + pos, p);
  rref = std::move(nm);
  return true;
}

}  // namespace

JordanChains jordan_chains(const RatMat& N) {
  if (N.rows() != N.cols()) throw std::invalid_argument("jordan_chains: not square");
  const std::size_t n = N.rows();
  // Powers until zero; nilpotency index bounded by n.
  std::vector<RatMat> pw;  // pw[k] = N^k
  pw.push_back(RatMat::identity(n));
  std::size_t k = 0;
  while (!pw.back().is_zero()) {
    if (k >= n) throw std::invalid_argument("jordan_chains: matrix is not nilpotent");
    pw.push_back(pw.back() * N);
    ++k;
  }
  const std::size_t idx = k;  // N^idx = 0, N^{idx-1} != 0 (idx = 0 for n = 0)

  // Kernel bases of N^j as RREF rows.
  std::vector<RatMat> ker(idx + 1, RatMat(0, n));
  std::vector<std::vector<std::size_t>> kerp(idx + 1);
  for (std::size_t j = 1; j <= idx; ++j) {
    RatMat kj = pw[j].kernel();
    for (std::size_t i = 0; i < kj.rows(); ++i) extend_rref(ker[j], kerp[j], kj.row(i));
  }

  std::vector<std::vector<RatVec>> chains;  // head (killed by N) first
  // `occupied` spans ker[j-1] plus N*(heads of deeper chains) at stage j.
  for (std::size_t j = idx; j >= 1; --j) {
    RatMat occ(0, n);
    std::vector<std::size_t> occp;
    if (j >= 2)
      for (std::size_t i = 0; i < ker[j - 1].rows(); ++i) extend_rref(occ, occp, ker[j - 1].row(i));
    for (const auto& ch : chains)
      if (ch.size() >= j)
        extend_rref(occ, occp, ch[j - 1]);  // the chain vector killed by exactly N^j
    for (std::size_t i = 0; i < ker[j].rows(); ++i) {
      RatVec cand = ker[j].row(i);
      if (!extend_rref(occ, occp, cand)) continue;
      std::vector<RatVec> chain(j);
      chain[j - 1] = cand;  // tail: needs j applications of N to die
      for (std::size_t s = j - 1; s >= 1; --s) chain[s - 1] = N.apply(chain[s]);
      chains.push_back(std::move(chain));
    }
    if (j == 1) break;
  }

  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });

  JordanChains out;
  RatMat P(n, n);
  std::size_t col = 0;
  for (const auto& ch : chains) {
    std::vector<std::size_t> ids;
    for (const auto& v : ch) {
      for (std::size_t i = 0; i < n; ++i) P.at(i, col) = v[i];
      ids.push_back(col++);
    }
    out.chains.push_back(std::move(ids));
  }
  if (col != n) throw std::logic_error("jordan_chains: chain vectors do not span");
  auto inv = P.inverse();
  if (!inv) throw std::logic_error("jordan_chains: basis not invertible");
  out.basis = std::move(P);
  out.basis_inv = std::move(*inv);
  return out;
}

}  // namespace liekam
