#include "creutz/lattice.hpp"

#include <cmath>

#include "creutz/errors.hpp"

namespace creutz {

double canonical_phase(double phi) {
  if (phi >= -2.0 * pi && phi < 2.0 * pi) return phi;
  double r = phi - 4.0 * pi * std::floor((phi + 2.0 * pi) / (4.0 * pi));
  if (r >= 2.0 * pi) r -= 4.0 * pi;
  if (r < -2.0 * pi) r += 4.0 * pi;
  return r;
}

double flux_to_phase(double flux_ratio) { return canonical_phase(2.0 * pi * flux_ratio); }

LatticeParams canonical(LatticeParams p) {
  if (p.L < 2) throw InvalidParameter("L", "need at least 2 rungs, got " + std::to_string(p.L));
  if (!std::isfinite(p.J) || p.J <= 0.0) throw InvalidParameter("J", "must be positive and finite");
  if (!std::isfinite(p.m)) throw InvalidParameter("m", "must be finite");
  if (!std::isfinite(p.phi)) throw InvalidParameter("phi", "must be finite");
  if (!std::isfinite(p.U) || p.U < 0.0) throw InvalidParameter("U", "must be finite and >= 0");
  p.phi = canonical_phase(p.phi);
  return p;
}

std::string site_label(SiteIndex s) {
  return std::to_string(s.rung) + (s.leg == Leg::A ? "A" : "B");
}

CMatrix single_particle_hamiltonian(const LatticeParams& params) {
  const LatticeParams p = canonical(params);
  const int n = 2 * p.L;
  CMatrix h = CMatrix::Zero(n, n);

  // Adds amplitude * c_to^dagger c_from and its conjugate.
  const auto hop = [&h](int to, int from, cplx amplitude) {
    h(to, from) += amplitude;
    h(from, to) += std::conj(amplitude);
  };

  const int last = p.boundary == Boundary::periodic ? p.L : p.L - 1;
  for (int j = 1; j <= p.L; ++j) {
    for (Leg leg : {Leg::A, Leg::B}) {
      const int here = linear_index({j, leg});
      // m/2 c_{j,a}^dagger c_{j,abar} + h.c. for both legs: -m in total.
      hop(here, linear_index({j, opposite(leg)}), -0.5 * p.m);
      if (j > last) continue;
      const int next_rung = j == p.L ? 1 : j + 1;
      const cplx peierls = std::polar(1.0, leg_sign(leg) * p.phi / 2.0);
      hop(linear_index({next_rung, leg}), here, -p.J * peierls);
      hop(linear_index({next_rung, leg}), linear_index({j, opposite(leg)}), -p.J);
    }
  }
  return h;
}

double BlochPoint::norm() const { return std::sqrt(dx * dx + dy * dy + dz * dz); }

BlochPoint bloch_hamiltonian(const LatticeParams& params, double k) {
  const LatticeParams p = canonical(params);
  BlochPoint b;
  b.k = k;
  b.d0 = -2.0 * p.J * std::cos(k) * std::cos(p.phi / 2.0);
  b.dx = -p.m - 2.0 * p.J * std::cos(k);
  b.dy = 0.0;
  b.dz = 2.0 * p.J * std::sin(k) * std::sin(p.phi / 2.0);
  return b;
}

Eigen::Matrix2cd bloch_matrix(const BlochPoint& b) {
  Eigen::Matrix2cd h;
  h << b.d0 + b.dz, cplx(b.dx, -b.dy),
       cplx(b.dx, b.dy), b.d0 - b.dz;
  return h;
}

std::vector<double> k_grid(int n_k) {
  if (n_k < 1) throw InvalidParameter("n_k", "must be positive");
  std::vector<double> ks(n_k);
  for (int n = 0; n < n_k; ++n) ks[n] = -pi + 2.0 * pi * n / n_k;
  return ks;
}

Bands band_energies(const LatticeParams& p, std::span<const double> ks) {
  if (ks.empty()) throw InvalidParameter("k_grid", "must not be empty");
  Bands bands{RVector(ks.size()), RVector(ks.size())};
  for (std::size_t n = 0; n < ks.size(); ++n) {
    const BlochPoint b = bloch_hamiltonian(p, ks[n]);
    bands.lower[n] = b.lower();
    bands.upper[n] = b.upper();
  }
  return bands;
}

}  // namespace creutz
