#pragma once

#include <span>
#include <string>
#include <vector>

#include "creutz/types.hpp"

namespace creutz {

enum class Leg { A = 0, B = 1 };
enum class Boundary { open, periodic };

constexpr Leg opposite(Leg leg) { return leg == Leg::A ? Leg::B : Leg::A; }

/// +1 on leg A, -1 on leg B: the sign of the Peierls phase for a hop to the right.
constexpr int leg_sign(Leg leg) { return leg == Leg::A ? 1 : -1; }

/// Model parameters of the Creutz(-Hubbard) ladder. Energies are in units
/// of J (J = 1 by default), phi is the Peierls phase per plaquette.
struct LatticeParams {
  int L = 6;
  double J = 1.0;
  double m = 0.0;
  double phi = pi;
  double U = 0.0;
  Boundary boundary = Boundary::open;
};

/// Validates `p` and returns a copy with phi reduced to [-2pi, 2pi).
/// Throws InvalidParameter naming the first bad field.
LatticeParams canonical(LatticeParams p);

/// Reduces an angle to [-2pi, 2pi); the phase diagram is 4pi periodic.
/// Values already in range are returned unchanged (bit for bit).
double canonical_phase(double phi);

/// phi = 2 pi Phi / Phi_0, reduced to the canonical range.
double flux_to_phase(double flux_ratio);

/// A single-particle site |j, leg> with 1-based rung index j.
struct SiteIndex {
  int rung = 1;
  Leg leg = Leg::A;

  friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
};

/// 2(j-1) + (0 for A, 1 for B).
constexpr int linear_index(SiteIndex s) { return 2 * (s.rung - 1) + static_cast<int>(s.leg); }
constexpr SiteIndex site_from_index(int index) {
  return {index / 2 + 1, index % 2 == 0 ? Leg::A : Leg::B};
}

/// "3A", "12B".
std::string site_label(SiteIndex s);

/// Real-space single-particle Hamiltonian (2L x 2L) in the gauge where only
/// the horizontal intraleg hops carry the Peierls phase e^{i sigma phi/2}.
/// The rung element between |j,A> and |j,B> is -m in total.
CMatrix single_particle_hamiltonian(const LatticeParams& p);

/// H(k) = d0 + dx sigma_x + dy sigma_y + dz sigma_z at quasimomentum k.
struct BlochPoint {
  double k = 0.0;
  double d0 = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;

  double norm() const;
  double lower() const { return d0 - norm(); }
  double upper() const { return d0 + norm(); }
};

BlochPoint bloch_hamiltonian(const LatticeParams& p, double k);
Eigen::Matrix2cd bloch_matrix(const BlochPoint& b);

/// k_n = -pi + 2 pi n / n_k, n = 0..n_k-1: a uniform closed loop.
std::vector<double> k_grid(int n_k);

struct Bands {
  RVector lower;
  RVector upper;
};

Bands band_energies(const LatticeParams& p, std::span<const double> ks);

}  // namespace creutz
