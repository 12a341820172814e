#pragma once

// Shared generators and independent oracles for the unit and acceptance
// tests. Everything here is deliberately naive.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "creutz/lattice.hpp"

namespace testing {

using creutz::CMatrix;
using creutz::CVector;
using creutz::cplx;
using creutz::LatticeParams;
using creutz::RVector;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline LatticeParams random_params(std::mt19937_64& rng, int l_min = 2, int l_max = 8) {
  LatticeParams p;
  p.L = uniform_int(rng, l_min, l_max);
  p.J = uniform(rng, 0.5, 2.0);
  p.m = uniform(rng, -3.0, 3.0);
  p.phi = uniform(rng, -2.0 * creutz::pi, 2.0 * creutz::pi);
  p.U = uniform(rng, 0.0, 10.0);
  p.boundary = rng() % 2 ? creutz::Boundary::open : creutz::Boundary::periodic;
  return p;
}

inline CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return 0.5 * (a + a.adjoint());
}

inline CVector random_state(int n, std::mt19937_64& rng) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return v.normalized();
}

// Classical fourth-order Runge-Kutta for i d/dt psi = H psi.
inline CVector rk4(const CMatrix& H, CVector psi, double t, double dt) {
  const cplx mi{0.0, -1.0};
  const int steps = static_cast<int>(std::ceil(t / dt - 1e-9));
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const CVector k1 = mi * (H * psi);
    const CVector k2 = mi * (H * (psi + 0.5 * h * k1));
    const CVector k3 = mi * (H * (psi + 0.5 * h * k2));
    const CVector k4 = mi * (H * (psi + h * k3));
    psi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

inline RVector sorted(RVector v) {
  std::sort(v.data(), v.data() + v.size());
  return v;
}

inline RVector eigenvalues(const CMatrix& H) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(H, Eigen::EigenvaluesOnly).eigenvalues();
}

inline double max_diff(const RVector& a, const RVector& b) {
  return (sorted(a) - sorted(b)).cwiseAbs().maxCoeff();
}

// Two-boson Hamiltonian from the symmetric projection of
// h (x) 1 + 1 (x) h + U sum_a |aa><aa|, built with plain Kronecker loops.
// Columns of the projector follow the a <= b lexicographic pair order.
inline CMatrix kronecker_two_boson(const CMatrix& h, double U) {
  const int n = static_cast<int>(h.rows());
  CMatrix big = CMatrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          cplx v = 0.0;
          if (b == d) v += h(a, c);
          if (a == c) v += h(b, d);
          big(a * n + b, c * n + d) = v;
        }
  for (int a = 0; a < n; ++a) big(a * n + a, a * n + a) += U;
  const int dim = n * (n + 1) / 2;
  CMatrix S = CMatrix::Zero(n * n, dim);
  int k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b, ++k) {
      if (a == b) {
        S(a * n + a, k) = 1.0;
      } else {
        S(a * n + b, k) = 1.0 / std::sqrt(2.0);
        S(b * n + a, k) = 1.0 / std::sqrt(2.0);
      }
    }
  return S.adjoint() * big * S;
}

}  // namespace testing
