#include "liekam/torus.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace liekam {

namespace {

double knorm2(const std::vector<int>& k) {
  double s = 0;
  for (int v : k) s += double(v) * v;
  return s;
}

std::vector<int> negated(std::vector<int> k) {
  for (auto& v : k) v = -v;
  return k;
}

}  // namespace

double TorusField::norm_cs(double s) const {
  double acc = 0;
  for (const auto& [k, c] : coeffs) acc += std::pow(1.0 + knorm2(k), s / 2) * std::abs(c);
  return acc;
}

void TorusField::validate() const {
  for (const auto& [k, c] : coeffs) {
    auto it = coeffs.find(negated(k));
    if (it == coeffs.end() || std::abs(it->second - std::conj(c)) > 1e-12)
      throw std::invalid_argument("torus field is not real (conjugate symmetry violated)");
  }
}

TorusField TorusField::single_mode(int d, const std::vector<int>& k, std::complex<double> c) {
  TorusField f;
  f.d = d;
  f.K = 0;
  for (int v : k) f.K = std::max(f.K, std::abs(v));
  f.coeffs[k] = c;
  f.coeffs[negated(k)] = std::conj(c);
  return f;
}

TorusField TorusField::random(int d, int K, std::uint64_t seed) {
  TorusField f;
  f.d = d;
  f.K = K;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<int> k(d, -K);
  for (;;) {
    if (f.coeffs.find(k) == f.coeffs.end()) {
      std::complex<double> c(amp(rng), amp(rng));
      bool self_conjugate = (k == negated(k));
      if (self_conjugate) c = std::complex<double>(c.real(), 0);
      f.coeffs[k] = c;
      f.coeffs[negated(k)] = std::conj(c);
    }
    int i = 0;
    while (i < d && k[i] == K) k[i++] = -K;
    if (i == d) break;
    ++k[i];
  }
  return f;
}

TorusField smooth_cutoff(const TorusField& y, double t) {
  TorusField out;
  out.d = y.d;
  out.K = y.K;
  for (const auto& [k, c] : y.coeffs)
    if (knorm2(k) <= t * t) out.coeffs[k] = c;
  return out;
}

SmoothingBounds torus_smoothing(double t, const TorusField& y, double s, double sp) {
  if (t <= 1) throw std::invalid_argument("torus_smoothing: needs t > 1");
  if (!(s >= sp && sp >= 0)) throw std::invalid_argument("torus_smoothing: needs s >= s' >= 0");
  SmoothingBounds out;
  out.smoothed = smooth_cutoff(y, t);
  TorusField rest;
  rest.d = y.d;
  rest.K = y.K;
  for (const auto& [k, c] : y.coeffs)
    if (out.smoothed.coeffs.find(k) == out.smoothed.coeffs.end()) rest.coeffs[k] = c;

  double base = y.norm_cs(s);
  out.lhs1 = out.smoothed.norm_cs(s + sp);
  out.rhs1 = std::pow(t, sp) * base;
  out.c1 = out.rhs1 > 0 ? out.lhs1 / out.rhs1 : 0;
  out.lhs2 = rest.norm_cs(s - sp);
  out.rhs2 = std::pow(t, -sp) * base;
  out.c2 = out.rhs2 > 0 ? out.lhs2 / out.rhs2 : 0;
  return out;
}

bool interpolation_check(double n0, double nt, double ns, double t, double s, double rel_tol) {
  if (t < 0 || t > s) throw std::invalid_argument("interpolation_check: needs 0 <= t <= s");
  if (s == 0) return nt <= n0 * (1 + rel_tol);
  double rhs = std::pow(n0, 1.0 - t / s) * std::pow(ns, t / s);
  return nt <= rhs * (1 + rel_tol);
}

}  // namespace liekam
