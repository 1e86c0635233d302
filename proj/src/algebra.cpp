#include "liekam/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace liekam {

bool Element::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

Element& Element::operator+=(const Element& o) {
  if (alg != o.alg) throw std::invalid_argument("elements of different algebras");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (alg != o.alg) throw std::invalid_argument("elements of different algebras");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Element Element::scaled(const Rat& f) const {
  Element e = *this;
  for (auto& c : e.coeffs) c *= f;
  return e;
}

AlgebraPtr LieAlgebra::create(LieType type, int rank) {
  return create(RootSystem::build(type, rank));
}

AlgebraPtr LieAlgebra::create(const RootSystem& rs) {
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->rs_ = rs;
  alg->dim_ = static_cast<int>(rs.size()) + rs.rank();
  alg->build_constants();
  return alg;
}

int LieAlgebra::p_value(int i, int j) const {
  // max k >= 0 with root_j - k*root_i still a root
  int k = 0;
  Coords2 c = rs_.root(j).c2;
  for (;;) {
    for (std::size_t t = 0; t < c.size(); ++t) c[t] -= rs_.root(i).c2[t];
    if (rs_.index_of(c) < 0) break;
    ++k;
    if (k > 4) throw std::logic_error("root string too long");
  }
  return k;
}

void LieAlgebra::build_constants() {
  const int n = n_roots();
  const int r = rs_.rank();

  pairing_.resize(static_cast<std::size_t>(n) * r);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k)
      pairing_[i * r + k] = rs_.root(i).pairing(rs_.root(rs_.simple_indices()[k]));

  // coroot of gamma = sum_k a_k (alpha_k,alpha_k)/(gamma,gamma) alpha_k^v
  coroot_.resize(n);
  for (int i = 0; i < n; ++i) {
    const Root& g = rs_.root(i);
    for (int k = 0; k < r; ++k) {
      const Root& ak = rs_.root(rs_.simple_indices()[k]);
      long num = static_cast<long>(g.simple_coords[k]) * ak.norm2_times4();
      if (num % g.norm2_times4() != 0) throw std::logic_error("non-integer coroot coordinate");
      coroot_[i].push_back(static_cast<int>(num / g.norm2_times4()));
    }
  }

  // Extraspecial pair for each positive non-simple root: the special pair
  // (alpha, gamma-alpha) with minimal alpha in the height-then-lex order.
  std::vector<std::pair<int, int>> xsp(n, {-1, -1});
  std::vector<int> order_sorted;  // positive roots by order
  for (int i = 0; i < n; ++i)
    if (rs_.root(i).positive) order_sorted.push_back(i);
  std::sort(order_sorted.begin(), order_sorted.end(),
            [&](int a, int b) { return rs_.positive_order(a) < rs_.positive_order(b); });
  for (int gi = 0; gi < n; ++gi) {
    const Root& g = rs_.root(gi);
    if (!g.positive || g.height == 1) continue;
    for (int ai : order_sorted) {
      Coords2 rem = g.c2;
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= rs_.root(ai).c2[t];
      int bi = rs_.index_of(rem);
      if (bi < 0 || !rs_.root(bi).positive) continue;
      if (rs_.positive_order(ai) >= rs_.positive_order(bi)) continue;
      xsp[gi] = {ai, bi};
      break;
    }
    if (xsp[gi].first < 0) throw std::logic_error("no special pair for a non-simple root");
  }

  nmat_.assign(static_cast<std::size_t>(n) * n, 0);
  std::map<std::pair<int, int>, long> memo;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs_.sum_index(i, j) >= 0) nmat_[idx(i, j)] = eval_n(i, j, memo, xsp);
}

long LieAlgebra::eval_n(int i, int j, std::map<std::pair<int, int>, long>& memo,
                        const std::vector<std::pair<int, int>>& xsp) const {
  int si = rs_.sum_index(i, j);
  if (si < 0) return 0;
  auto key = std::make_pair(i, j);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  auto store = [&](long v) {
    memo[key] = v;
    return v;
  };

  const bool pi = rs_.root(i).positive, pj = rs_.root(j).positive;
  if (!pi && !pj) return store(-eval_n(rs_.negative_of(i), rs_.negative_of(j), memo, xsp));
  if (pi && pj) {
    if (rs_.positive_order(i) > rs_.positive_order(j)) return store(-eval_n(j, i, memo, xsp));
    auto [e, h] = xsp[si];
    if (e == i && h == j) return store(p_value(i, j) + 1);
    // Jacobi on the quadruple e + h - alpha - beta = 0:
    //   N(e,h)N(-a,-b)/(g,g) + N(h,-a)N(e,-b)/(h-a,h-a) + N(-a,e)N(h,-b)/(e-a,e-a) = 0
    const int na = rs_.negative_of(i), nb = rs_.negative_of(j);
    Rat acc = 0;
    if (rs_.sum_index(h, na) >= 0) {
      int d = rs_.root(rs_.sum_index(h, na)).norm2_times4();
      acc += Rat(eval_n(h, na, memo, xsp)) * eval_n(e, nb, memo, xsp) / d;
    }
    if (rs_.sum_index(na, e) >= 0) {
      int d = rs_.root(rs_.sum_index(na, e)).norm2_times4();
      acc += Rat(eval_n(na, e, memo, xsp)) * eval_n(h, nb, memo, xsp) / d;
    }
    Rat res = Rat(rs_.root(si).norm2_times4()) * acc / eval_n(e, h, memo, xsp);
    if (denominator(res) != 1) throw std::logic_error("non-integer structure constant");
    return store(static_cast<long>(numerator(res)));
  }
  if (!pi && pj) return store(-eval_n(rs_.negative_of(i), rs_.negative_of(j), memo, xsp));
  // pi && !pj: rotate the zero-sum triple (a, b, g0), g0 = -a-b:
  //   N(a,b)/(g0,g0) = N(b,g0)/(a,a) = N(g0,a)/(b,b)
  const int g0 = rs_.negative_of(si);
  Rat res;
  if (rs_.root(si).positive)
    res = Rat(rs_.root(g0).norm2_times4()) * eval_n(j, g0, memo, xsp) / rs_.root(i).norm2_times4();
  else
    res = Rat(rs_.root(g0).norm2_times4()) * eval_n(g0, i, memo, xsp) / rs_.root(j).norm2_times4();
  if (denominator(res) != 1) throw std::logic_error("non-integer structure constant");
  return store(static_cast<long>(numerator(res)));
}

Element LieAlgebra::zero() const {
  return Element{shared_from_this(), RatVec(dim_)};
}

Element LieAlgebra::basis_element(int basis_idx) const {
  Element e = zero();
  e.coeffs.at(basis_idx) = 1;
  return e;
}

Element LieAlgebra::root_vector(int root_idx) const { return basis_element(root_idx); }

Element LieAlgebra::root_vector(const Coords2& c2) const {
  int i = rs_.index_of(c2);
  if (i < 0) throw std::invalid_argument("not a root of " + name());
  return root_vector(i);
}

Element LieAlgebra::root_vector(const std::string& expr) const {
  return root_vector(parse_root_expr(expr, rs_.ambient_dim()));
}

Element LieAlgebra::coroot_element(int root_idx) const {
  Element e = zero();
  for (int k = 0; k < rs_.rank(); ++k) e.coeffs[cartan_index(k)] = coroot_[root_idx][k];
  return e;
}

std::vector<std::pair<int, Rat>> LieAlgebra::basis_bracket(int i, int j) const {
  std::vector<std::pair<int, Rat>> out;
  const int n = n_roots();
  const bool ri = i < n, rj = j < n;
  if (ri && rj) {
    int si = rs_.sum_index(i, j);
    if (si >= 0) {
      out.emplace_back(si, nmat_[idx(i, j)]);
    } else if (si == -2) {  // [u_phi, u_{-phi}] = H_phi
      for (int k = 0; k < rs_.rank(); ++k)
        if (coroot_[i][k] != 0) out.emplace_back(cartan_index(k), coroot_[i][k]);
    }
  } else if (ri && !rj) {  // [u_phi, H_k] = -<phi, alpha_k^v> u_phi
    int k = j - n;
    if (pairing_[i * rs_.rank() + k] != 0) out.emplace_back(i, -pairing_[i * rs_.rank() + k]);
  } else if (!ri && rj) {
    int k = i - n;
    if (pairing_[j * rs_.rank() + k] != 0) out.emplace_back(j, pairing_[j * rs_.rank() + k]);
  }
  return out;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.alg.get() != this || y.alg.get() != this)
    throw std::invalid_argument("bracket: elements of a different algebra");
  Element out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y.coeffs[j] == 0) continue;
      Rat f = x.coeffs[i] * y.coeffs[j];
      for (const auto& [b, c] : basis_bracket(i, j)) out.coeffs[b] += f * c;
    }
  }
  return out;
}

Rat LieAlgebra::root_pairing(int root_idx, const Element& h) const {
  Rat s = 0;
  for (int k = 0; k < rs_.rank(); ++k)
    s += h.coeffs[cartan_index(k)] * pairing_[root_idx * rs_.rank() + k];
  return s;
}

std::vector<std::vector<std::pair<int, Rat>>> LieAlgebra::ad_sparse(const Element& x) const {
  std::vector<std::vector<std::pair<int, Rat>>> cols(dim_);
  for (int j = 0; j < dim_; ++j) {
    std::map<int, Rat> col;
    for (int i = 0; i < dim_; ++i) {
      if (x.coeffs[i] == 0) continue;
      for (const auto& [b, c] : basis_bracket(i, j)) col[b] += x.coeffs[i] * c;
    }
    for (auto& [b, c] : col)
      if (c != 0) cols[j].emplace_back(b, std::move(c));
  }
  return cols;
}

RatMat LieAlgebra::ad_matrix(const Element& x) const {
  RatMat m(dim_, dim_);
  auto cols = ad_sparse(x);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [b, c] : cols[j]) m.at(b, j) = c;
  return m;
}

Subspace LieAlgebra::span(const std::vector<Element>& vecs) const {
  RatMat m(0, dim_);
  for (const auto& v : vecs) m.append_row(v.coeffs);
  auto piv = m.rref();
  RatMat basis(0, dim_);
  for (std::size_t i = 0; i < piv.size(); ++i) basis.append_row(m.row(i));
  return Subspace{shared_from_this(), std::move(basis), std::move(piv)};
}

Subspace LieAlgebra::full_space() const {
  std::vector<std::size_t> piv(dim_);
  for (int i = 0; i < dim_; ++i) piv[i] = i;
  return Subspace{shared_from_this(), RatMat::identity(dim_), std::move(piv)};
}

Subspace LieAlgebra::image_of_ad(const Element& u) const {
  auto cols = ad_sparse(u);
  RatMat m(0, dim_);
  for (const auto& col : cols) {
    if (col.empty()) continue;
    RatVec v(dim_);
    for (const auto& [b, c] : col) v[b] = c;
    m.append_row(std::move(v));
  }
  auto piv = m.rref();
  RatMat basis(0, dim_);
  for (std::size_t i = 0; i < piv.size(); ++i) basis.append_row(m.row(i));
  return Subspace{shared_from_this(), std::move(basis), std::move(piv)};
}

int LieAlgebra::single_root_direction(const Element& x) const {
  int found = -1;
  for (int i = 0; i < dim_; ++i) {
    if (x.coeffs[i] == 0) continue;
    if (i >= n_roots() || found >= 0) return -1;
    found = i;
  }
  return found;
}

Subspace LieAlgebra::centralizer(const std::vector<Element>& gens) const {
  if (gens.empty()) throw std::invalid_argument("centralizer: empty generator list");
  for (const auto& g : gens)
    if (g.alg.get() != this) throw std::invalid_argument("centralizer: algebra mismatch");

  bool all_single = true;
  std::vector<int> dirs;
  for (const auto& g : gens) {
    int d = single_root_direction(g);
    if (d < 0) {
      all_single = false;
      break;
    }
    dirs.push_back(d);
  }

  if (all_single) {
    // Closed form: a root vector u_psi commutes with u_phi iff psi+phi is
    // neither a root nor zero; H commutes iff <phi,H> = 0. There is no mixing.
    std::vector<Element> out;
    for (int psi = 0; psi < n_roots(); ++psi) {
      bool ok = true;
      for (int d : dirs)
        if (rs_.sum_index(d, psi) != -1) { ok = false; break; }
      if (ok) out.push_back(root_vector(psi));
    }
    RatMat pairs(dirs.size(), rs_.rank());
    for (std::size_t g = 0; g < dirs.size(); ++g)
      for (int k = 0; k < rs_.rank(); ++k) pairs.at(g, k) = pairing_[dirs[g] * rs_.rank() + k];
    RatMat ker = pairs.kernel();
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      Element h = zero();
      for (int k = 0; k < rs_.rank(); ++k) h.coeffs[cartan_index(k)] = ker.at(i, k);
      out.push_back(std::move(h));
    }
    return span(out);
  }

  // Generic path: iteratively intersect kernels of the ad maps.
  RatMat z = RatMat::identity(dim_);
  for (const auto& g : gens) {
    auto cols = ad_sparse(g);
    // rows w_i = ad_g(z_i); kernel of the stacked coefficients
    RatMat w(0, dim_);
    for (std::size_t i = 0; i < z.rows(); ++i) {
      RatVec out(dim_);
      for (int j = 0; j < dim_; ++j) {
        if (z.at(i, j) == 0) continue;
        for (const auto& [b, c] : cols[j]) out[b] += z.at(i, j) * c;
      }
      w.append_row(std::move(out));
    }
    RatMat combos = w.transposed().kernel();  // c with sum_i c_i w_i = 0
    RatMat nz(0, dim_);
    for (std::size_t i = 0; i < combos.rows(); ++i) {
      RatVec v(dim_);
      for (std::size_t k = 0; k < z.rows(); ++k) {
        if (combos.at(i, k) == 0) continue;
        for (int j = 0; j < dim_; ++j) v[j] += combos.at(i, k) * z.at(k, j);
      }
      nz.append_row(std::move(v));
    }
    z = std::move(nz);
    if (z.rows() == 0) break;
  }
  auto piv = z.rref();
  RatMat basis(0, dim_);
  for (std::size_t i = 0; i < piv.size(); ++i) basis.append_row(z.row(i));
  return Subspace{shared_from_this(), std::move(basis), std::move(piv)};
}

std::map<Rat, Subspace> LieAlgebra::eigenspace_decomposition(const Element& x) const {
  bool cartan_only = true;
  for (int i = 0; i < n_roots(); ++i)
    if (x.coeffs[i] != 0) { cartan_only = false; break; }

  std::map<Rat, Subspace> out;
  if (cartan_only) {
    std::map<Rat, std::vector<Element>> buckets;
    for (int i = 0; i < n_roots(); ++i) buckets[root_pairing(i, x)].push_back(root_vector(i));
    for (int k = 0; k < rs_.rank(); ++k) buckets[Rat(0)].push_back(basis_element(cartan_index(k)));
    for (auto& [ev, vecs] : buckets) out.emplace(ev, span(vecs));
    return out;
  }

  RatMat a = ad_matrix(x);
  // Candidate rational eigenvalues: pairings of the Cartan component plus 0.
  std::vector<Rat> cand{Rat(0)};
  for (int i = 0; i < n_roots(); ++i) {
    Rat p = root_pairing(i, x);
    if (std::find(cand.begin(), cand.end(), p) == cand.end()) cand.push_back(p);
  }
  std::size_t total = 0;
  for (const auto& ev : cand) {
    RatMat shifted = a;
    for (int i = 0; i < dim_; ++i) shifted.at(i, i) -= ev;
    RatMat ker = shifted.kernel();
    if (ker.rows() == 0) continue;
    // check for a nontrivial Jordan block at this eigenvalue
    RatMat sq = shifted * shifted;
    std::size_t k2 = sq.kernel().rows();
    if (k2 != ker.rows())
      throw std::domain_error("ad_x is not semisimple: Jordan block of size >= 2 at eigenvalue " +
                              to_string(ev) + " (generalized eigenspace exceeds kernel by " +
                              std::to_string(k2 - ker.rows()) + ")");
    std::vector<Element> vecs;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      Element e = zero();
      e.coeffs = ker.row(i);
      vecs.push_back(std::move(e));
    }
    total += ker.rows();
    out.emplace(ev, span(vecs));
  }
  if (total != static_cast<std::size_t>(dim_))
    throw std::domain_error("ad_x has eigenvalues outside the rationals; decomposition refused");
  return out;
}

Sl2Triple LieAlgebra::sl2_triple_for_root(int root_idx) const {
  Sl2Triple t;
  t.U = root_vector(root_idx);
  t.V = root_vector(rs_.negative_of(root_idx));
  t.X = coroot_element(root_idx);
  return t;
}

Sl2Triple LieAlgebra::sl2_triple_for_root(const Coords2& c2) const {
  int i = rs_.index_of(c2);
  if (i < 0) throw std::invalid_argument("sl2 triple: not a root");
  return sl2_triple_for_root(i);
}

}  // namespace liekam
