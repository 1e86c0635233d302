#include "liekam/model.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace liekam {

double AtomicRep::norm() const {
  double s = 0;
  for (const auto& c : components) s += std::norm(c.amplitude);
  return std::sqrt(s);
}

double AtomicRep::sobolev_norm(double s) const {
  double acc = 0;
  for (const auto& c : components)
    acc += std::pow(1.0 + c.chi_norm2(), s) * std::norm(c.amplitude);
  return std::sqrt(acc);
}

AtomicRep& AtomicRep::operator-=(const AtomicRep& o) {
  if (o.m != m || o.components.size() != components.size())
    throw std::invalid_argument("atomic vectors over different component lists");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].chi != o.components[i].chi)
      throw std::invalid_argument("atomic vectors over different characters");
    components[i].amplitude -= o.components[i].amplitude;
  }
  return *this;
}

double AtomicRep::distance(const AtomicRep& o) const {
  AtomicRep d = *this;
  d -= o;
  return d.norm();
}

void AtomicRep::validate() const {
  std::set<std::vector<double>> seen;
  for (const auto& c : components) {
    if (static_cast<int>(c.chi.size()) != m)
      throw std::invalid_argument("character dimension mismatch");
    if (!seen.insert(c.chi).second) throw std::invalid_argument("characters must be distinct");
  }
}

namespace {

double smooth_step(double s) {  // 0 at s<=0, 1 at s>=1, C^inf
  if (s <= 0) return 0;
  if (s >= 1) return 1;
  double h0 = std::exp(-1.0 / s), h1 = std::exp(-1.0 / (1.0 - s));
  return h0 / (h0 + h1);
}

}  // namespace

double BumpFunction::eval_radial(double r) const {
  if (r <= a) return 1;
  if (r >= b) return 0;
  return smooth_step((b - r) / (b - a));
}

double BumpFunction::eval(const std::vector<double>& t) const {
  double s = 0;
  for (double x : t) s += x * x;
  return eval_radial(std::sqrt(s));
}

double bump_derivative_sup(const BumpFunction& f, int order, int grid_points) {
  // forward differences of the radial profile on a uniform grid
  double lo = 0, hi = f.b * 1.25;
  double h = (hi - lo) / grid_points;
  std::vector<double> vals(grid_points + 1);
  for (int i = 0; i <= grid_points; ++i) vals[i] = f.eval_radial(lo + i * h);
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = (vals[i + 1] - vals[i]) / h;
    vals.pop_back();
  }
  double sup = 0;
  for (double v : vals) sup = std::max(sup, std::abs(v));
  return sup;
}

AtomicRep apply_pi(const BumpFunction& f, const AtomicRep& xi) {
  if (f.m != xi.m) throw std::invalid_argument("apply_pi: dimension mismatch");
  AtomicRep out = xi;
  for (auto& c : out.components) c.amplitude *= f.eval(c.chi);
  return out;
}

AtomicRep apply_pi(const SymbolFn& f, const AtomicRep& xi) {
  AtomicRep out = xi;
  for (auto& c : out.components) c.amplitude *= f(c.chi);
  return out;
}

BumpFunction dag_scale(double a, const BumpFunction& f) {
  if (a <= 0) throw std::invalid_argument("dag_scale: factor must be positive");
  return BumpFunction{a * f.a, a * f.b, f.m};
}

DerivativeActionResult derivative_action(const std::vector<int>& k, const BumpFunction& f,
                                         const AtomicRep& xi) {
  if (static_cast<int>(k.size()) != xi.m)
    throw std::invalid_argument("derivative_action: multi-index dimension mismatch");
  DerivativeActionResult r{apply_pi(f, xi), xi, 0};
  const std::complex<double> I(0, 1);
  // operators after projection: each u_j acts as multiplication by i*chi_j
  for (auto& c : r.via_operators.components)
    for (std::size_t j = 0; j < k.size(); ++j)
      for (int t = 0; t < k[j]; ++t) c.amplitude *= I * c.chi[j];
  // symbol route: pi(f_k) with f_k(t) = f(t) * prod (t_j i)^{k_j}
  for (auto& c : r.via_symbol.components) {
    std::complex<double> factor = f.eval(c.chi);
    for (std::size_t j = 0; j < k.size(); ++j)
      for (int t = 0; t < k[j]; ++t) factor *= c.chi[j] * I;
    c.amplitude *= factor;
  }
  r.residual = r.via_operators.distance(r.via_symbol);
  return r;
}

TailBoundResult tail_bound_check(const AtomicRep& xi, const BumpFunction& f, double c, int s) {
  if (c <= 1) throw std::invalid_argument("tail_bound_check: needs c > 1");
  AtomicRep smoothed = apply_pi(dag_scale(c, f), xi);
  TailBoundResult r{};
  r.lhs = xi.distance(smoothed);
  r.rhs = std::pow(c * f.a, -s) * xi.sobolev_norm(s);
  r.ratio = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
  return r;
}

bool is_small_vector(const AtomicRep& xi, double a, double b) {
  // model characterization: every character sits inside the closed a-ball
  (void)b;
  for (const auto& c : xi.components)
    if (std::norm(c.amplitude) > 0 && c.chi_norm2() > a * a) return false;
  return true;
}

AtomicRep proj_Dl(int l, const AtomicRep& xi) {
  AtomicRep out = xi;
  for (auto& c : out.components) {
    if (!c.label) throw std::invalid_argument("proj_Dl: component without an sl2 label");
    if (!c.label->discrete_at_least(l)) c.amplitude = 0;
  }
  return out;
}

AtomicRep obstruction_Dl(int l, const AtomicRep& xi,
                         const std::vector<std::complex<double>>& table) {
  if (table.size() != xi.components.size())
    throw std::invalid_argument("obstruction_Dl: table entry missing for a component");
  AtomicRep out = xi;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    auto& c = out.components[i];
    if (!c.label) throw std::invalid_argument("obstruction_Dl: component without an sl2 label");
    if (c.label->discrete_at_least(l))
      c.amplitude = 0;  // g_u = 0 on high discrete components
    else
      c.amplitude *= table[i];
  }
  return out;
}

std::pair<AtomicRep, AtomicRep> split_decompose(int l, const AtomicRep& xi) {
  AtomicRep head = proj_Dl(l, xi);
  AtomicRep tail = xi;
  tail -= head;
  return {head, tail};
}

namespace {

template <class F>
bool is_zero_f(const F& x) {
  return x == F{};
}

template <class F>
F rat_times(const Rat& r, const F& x);

template <>
GaussRat rat_times(const Rat& r, const GaussRat& x) {
  return GaussRat(r) * x;
}

template <>
std::complex<double> rat_times(const Rat& r, const std::complex<double>& x) {
  return r.convert_to<double>() * x;
}

template <class F>
ExtendedVector<F> backsub_impl(const std::vector<F>& base_action, const RatMat& ad_u,
                               const ExtendedVector<F>& omega) {
  const int n = omega.dim;
  if (ad_u.rows() != std::size_t(n) || ad_u.cols() != std::size_t(n))
    throw std::invalid_argument("jordan_backsub_solve: shape mismatch");
  if (static_cast<int>(base_action.size()) != omega.ncomp)
    throw std::invalid_argument("jordan_backsub_solve: one scalar per component required");
  for (std::size_t c = 0; c < base_action.size(); ++c)
    if (is_zero_f(base_action[c]))
      throw std::invalid_argument("jordan_backsub_solve: singular base action on component " +
                                  std::to_string(c));

  JordanChains jc = jordan_chains(ad_u);  // throws when ad_u is not nilpotent
  ExtendedVector<F> out = ExtendedVector<F>::zeros(n, omega.ncomp);
  for (int comp = 0; comp < omega.ncomp; ++comp) {
    const F& u = base_action[comp];
    // z = P^{-1} w
    std::vector<F> z(n, F{});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat& r = jc.basis_inv.at(i, j);
        if (r != 0) z[i] = z[i] + rat_times<F>(r, omega.data[j][comp]);
      }
    // solve (u + J) y = z chain by chain, last coordinate first
    std::vector<F> y(n, F{});
    for (const auto& ch : jc.chains) {
      for (std::size_t s = ch.size(); s-- > 0;) {
        F rhs = z[ch[s]];
        if (s + 1 < ch.size()) rhs = rhs - y[ch[s + 1]];
        y[ch[s]] = rhs / u;
      }
    }
    // v = P y
    for (int i = 0; i < n; ++i) {
      F acc{};
      for (int j = 0; j < n; ++j) {
        const Rat& r = jc.basis.at(i, j);
        if (r != 0) acc = acc + rat_times<F>(r, y[j]);
      }
      out.data[i][comp] = acc;
    }
  }
  return out;
}

template <class F>
ExtendedVector<F> residual_impl(const std::vector<F>& base_action, const RatMat& ad_u,
                                const ExtendedVector<F>& v, const ExtendedVector<F>& w) {
  ExtendedVector<F> r = ExtendedVector<F>::zeros(v.dim, v.ncomp);
  for (int comp = 0; comp < v.ncomp; ++comp)
    for (int i = 0; i < v.dim; ++i) {
      F acc = base_action[comp] * v.data[i][comp];
      for (int j = 0; j < v.dim; ++j) {
        const Rat& a = ad_u.at(i, j);
        if (a != 0) acc = acc + rat_times<F>(a, v.data[j][comp]);
      }
      r.data[i][comp] = acc - w.data[i][comp];
    }
  return r;
}

}  // namespace

ExtendedVectorQ jordan_backsub_solve(const std::vector<GaussRat>& base_action,
                                     const RatMat& ad_u, const ExtendedVectorQ& omega) {
  return backsub_impl(base_action, ad_u, omega);
}

ExtendedVectorD jordan_backsub_solve(const std::vector<std::complex<double>>& base_action,
                                     const RatMat& ad_u, const ExtendedVectorD& omega) {
  return backsub_impl(base_action, ad_u, omega);
}

ExtendedVectorQ backsub_residual(const std::vector<GaussRat>& base_action, const RatMat& ad_u,
                                 const ExtendedVectorQ& v, const ExtendedVectorQ& w) {
  return residual_impl(base_action, ad_u, v, w);
}

ExtendedVectorD backsub_residual(const std::vector<std::complex<double>>& base_action,
                                 const RatMat& ad_u, const ExtendedVectorD& v,
                                 const ExtendedVectorD& w) {
  return residual_impl(base_action, ad_u, v, w);
}

}  // namespace liekam
