#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace liekam {

// Real-valued trigonometric polynomial on the d-torus, stored by Fourier
// coefficients up to cutoff K. C^s norms are surrogated by the weighted
// coefficient sums sum_k (1+|k|^2)^{s/2} |c_k|.
struct TorusField {
  int d = 1, K = 8;
  std::map<std::vector<int>, std::complex<double>> coeffs;

  double norm_cs(double s) const;
  void validate() const;  // conjugate symmetry c_{-k} = conj(c_k)

  static TorusField single_mode(int d, const std::vector<int>& k, std::complex<double> c);
  static TorusField random(int d, int K, std::uint64_t seed);
};

TorusField smooth_cutoff(const TorusField& y, double t);  // sharp cutoff at |k| <= t

struct SmoothingBounds {
  TorusField smoothed;
  double lhs1 = 0, rhs1 = 0, c1 = 0;  // ||s_t Y||_{s+s'} vs t^{s'} ||Y||_s
  double lhs2 = 0, rhs2 = 0, c2 = 0;  // ||(I-s_t) Y||_{s-s'} vs t^{-s'} ||Y||_s
};

SmoothingBounds torus_smoothing(double t, const TorusField& y, double s, double sp);

// Hoelder interpolation ||v||_t <= ||v||_0^{1-t/s} ||v||_s^{t/s} with C = 1.
bool interpolation_check(double n0, double nt, double ns, double t, double s,
                         double rel_tol = 1e-9);

}  // namespace liekam
