#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "liekam/matrix.hpp"

namespace liekam {

// SL2 representation-parameter label: nu = sqrt(1-u) for Casimir parameter u.
struct SL2Label {
  enum class Kind { Imaginary, Complementary, Discrete, Trivial };
  Kind kind = Kind::Imaginary;
  double nu = 0.0;  // complementary: 0<nu<1; discrete: integer (stored exactly)

  bool discrete_at_least(int l) const {
    return kind == Kind::Discrete && std::abs(nu) >= l;
  }
};

struct AtomicComponent {
  std::vector<double> chi;
  std::complex<double> amplitude;
  std::optional<SL2Label> label;

  double chi_norm2() const {
    double s = 0;
    for (double x : chi) s += x * x;
    return s;
  }
};

// Finite atomic mock of a direct-integral decomposition over R^m.
struct AtomicRep {
  int m = 0;
  std::vector<AtomicComponent> components;

  double norm() const;
  double sobolev_norm(double s) const;  // sqrt(sum (1+|chi|^2)^s |amp|^2)
  AtomicRep& operator-=(const AtomicRep& o);
  friend AtomicRep operator-(AtomicRep a, const AtomicRep& b) { return a -= b; }
  double distance(const AtomicRep& o) const;
  void validate() const;  // distinct characters, matching dimensions
};

// Smooth bump: 1 on |t| <= a, 0 on |t| >= b, exponential transition between.
struct BumpFunction {
  double a = 1, b = 2;
  int m = 1;

  double eval_radial(double r) const;
  double eval(const std::vector<double>& t) const;
  std::complex<double> operator()(const std::vector<double>& t) const { return eval(t); }
};

// Numerical sup of the k-th radial derivative on a fixed grid (report data).
double bump_derivative_sup(const BumpFunction& f, int order, int grid_points = 4096);

using SymbolFn = std::function<std::complex<double>(const std::vector<double>&)>;

AtomicRep apply_pi(const BumpFunction& f, const AtomicRep& xi);
AtomicRep apply_pi(const SymbolFn& f, const AtomicRep& xi);

BumpFunction dag_scale(double a, const BumpFunction& f);

// Both evaluation orders of u1^k1...um^km pi(f) xi; residual must vanish.
struct DerivativeActionResult {
  AtomicRep via_operators, via_symbol;
  double residual;
};
DerivativeActionResult derivative_action(const std::vector<int>& k, const BumpFunction& f,
                                         const AtomicRep& xi);

struct TailBoundResult {
  double lhs, rhs, ratio;
};
TailBoundResult tail_bound_check(const AtomicRep& xi, const BumpFunction& f, double c, int s);

bool is_small_vector(const AtomicRep& xi, double a, double b);

AtomicRep proj_Dl(int l, const AtomicRep& xi);
// Per-component model stand-ins for the obstruction operators.
AtomicRep obstruction_Dl(int l, const AtomicRep& xi,
                         const std::vector<std::complex<double>>& table);
std::pair<AtomicRep, AtomicRep> split_decompose(int l, const AtomicRep& xi);

// Extended vectors: dim algebra coordinates sharing one component list.
template <class F>
struct ExtendedVector {
  int dim = 0;
  int ncomp = 0;
  std::vector<std::vector<F>> data;  // [dim][ncomp]

  static ExtendedVector zeros(int dim, int ncomp) {
    ExtendedVector v;
    v.dim = dim;
    v.ncomp = ncomp;
    v.data.assign(dim, std::vector<F>(ncomp, F{}));
    return v;
  }
};

using ExtendedVectorQ = ExtendedVector<GaussRat>;
using ExtendedVectorD = ExtendedVector<std::complex<double>>;

// Solves (u + ad_u) v = w per component by Jordan-chain back-substitution,
// where u acts on component c as the scalar base_action[c].
ExtendedVectorQ jordan_backsub_solve(const std::vector<GaussRat>& base_action,
                                     const RatMat& ad_u, const ExtendedVectorQ& omega);
ExtendedVectorD jordan_backsub_solve(const std::vector<std::complex<double>>& base_action,
                                     const RatMat& ad_u, const ExtendedVectorD& omega);

// Residual (u + ad_u) v - w; exact for the rational field.
ExtendedVectorQ backsub_residual(const std::vector<GaussRat>& base_action, const RatMat& ad_u,
                                 const ExtendedVectorQ& v, const ExtendedVectorQ& w);
ExtendedVectorD backsub_residual(const std::vector<std::complex<double>>& base_action,
                                 const RatMat& ad_u, const ExtendedVectorD& v,
                                 const ExtendedVectorD& w);

}  // namespace liekam
