#pragma once

#include <span>
#include <vector>

#include "creutz/dynamics.hpp"
#include "creutz/hubbard.hpp"
#include "creutz/lattice.hpp"

namespace creutz {

// Two bosons on the ladder as one particle on the Cartesian product of two
// ladders: site (i,alpha,j,beta) carries first-quantized amplitude
// lambda_{i alpha; j beta}. The leg pair is also labelled by
// zeta = 1..4 <-> (A,A), (A,B), (B,A), (B,B).

struct Lattice2DIndex {
  SiteIndex first;
  SiteIndex second;

  friend bool operator==(const Lattice2DIndex&, const Lattice2DIndex&) = default;
};

struct ZetaIndex {
  int i = 1;
  int j = 1;
  int zeta = 1;

  friend bool operator==(const ZetaIndex&, const ZetaIndex&) = default;
};

constexpr int zeta_of(Leg alpha, Leg beta) {
  return 1 + 2 * static_cast<int>(alpha) + static_cast<int>(beta);
}
ZetaIndex to_zeta(const Lattice2DIndex& s);
Lattice2DIndex from_zeta(const ZetaIndex& z);

/// Row-major position of (a, b) in the (2L)^2 lattice.
constexpr int index_2d(int a, int b, int n_sites) { return a * n_sites + b; }

/// H1 (x) 1 + 1 (x) H1 + U sum_a |a,a><a,a|.
CMatrix hamiltonian_2d(const LatticeParams& p);

/// Permutation (a,b) -> (b,a) as a dense 0/1 matrix.
RMatrix exchange_permutation(int n_sites);

/// Columns: orthonormal exchange-symmetric basis, ordered like TwoParticleBasis.
RMatrix symmetric_isometry(int n_sites);
/// Columns: orthonormal exchange-antisymmetric basis (a < b).
RMatrix antisymmetric_isometry(int n_sites);

/// Sorted spectrum of H_2D restricted to the (anti)symmetric subspace.
RVector symmetric_sector_spectrum(const LatticeParams& p);
RVector antisymmetric_sector_spectrum(const LatticeParams& p);

/// Max |E_sym - E_fock| between sorted spectra.
double symmetric_sector_spectrum_check(const LatticeParams& p);

struct Trajectory2D {
  std::vector<double> times;
  std::vector<CMatrix> lambdas;
  /// |lambda_ab(t)|^2, indexed [sample](a, b).
  std::vector<RMatrix> occupancy;
  /// sum_ab |lambda_ab - lambda_ba|^2 per sample.
  std::vector<double> symmetry_defect;
  LatticeParams params;
  std::string initial;
};

/// Single-particle evolution on H_2D. Throws SymmetryViolation unless
/// lambda0 is exchange symmetric to 1e-10.
Trajectory2D evolve_2d(const LatticeParams& p, const FirstQuantState& lambda0,
                       std::span<const double> times);

/// Fock-basis observables recovered from a 2D trajectory.
Trajectory to_fock_trajectory(const Trajectory2D& traj);

struct ZetaBond {
  ZetaIndex a;
  ZetaIndex b;
  cplx amplitude;  ///< <b|H_2D|a>
  bool nonlocal = false;
};

struct ZetaLayout {
  std::vector<ZetaBond> bonds;
  int nonlocal_per_cell = 0;
  int local_per_cell = 0;
  bool periodic_synthetic = false;
};

/// Position of zeta along the synthetic axis. The axis is ordered
/// (A,A), (A,B), (B,B), (B,A) so every leg-flip hop except (A,A)<->(B,A)
/// connects neighbouring positions.
int synthetic_position(int zeta);

/// Undirected bond list of H_2D over (i, j, zeta), each bond flagged nonlocal
/// when it spans more than one step of the synthetic axis (a ring of four
/// when `periodic_synthetic`). Per-cell counts refer to cell (1, 1).
ZetaLayout zeta_layout(const LatticeParams& p, bool periodic_synthetic = false);

}  // namespace creutz
