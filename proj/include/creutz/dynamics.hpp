#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "creutz/lattice.hpp"

namespace creutz {

/// Time evolution by full eigendecomposition: psi(t) = V e^{-iEt} V^dagger psi0.
/// Checks Hermiticity once at construction.
class Propagator {
 public:
  /// Throws NonHermitian if max |H - H^dagger| > 1e-10.
  explicit Propagator(const CMatrix& hamiltonian);

  Eigen::Index dimension() const { return energies_.size(); }
  const RVector& energies() const { return energies_; }
  const CMatrix& eigenvectors() const { return vectors_; }

  CVector apply(const CVector& psi0, double t) const;

 private:
  RVector energies_;
  CMatrix vectors_;
};

/// Sampled evolution. occupations is (samples x sites); for single-particle
/// runs the sites are the basis states, for two-particle runs the
/// single-particle sites of the ladder.
struct Trajectory {
  std::vector<double> times;
  std::vector<CVector> states;
  RMatrix occupations;
  std::optional<RMatrix> doublonness;
  LatticeParams params;
  std::string initial;
};

/// Throws DimensionMismatch, NonHermitian, or InvalidParameter for an
/// unnormalized psi0 or non-increasing times.
Trajectory evolve(const CMatrix& hamiltonian, const CVector& psi0, std::span<const double> times);

/// times_n = n * tmax / intervals, n = 0..intervals.
std::vector<double> uniform_times(double tmax, int intervals);

/// Per-sample per-site occupation; for single-particle runs |psi_site|^2.
RMatrix occupation_profile(const Trajectory& traj);

/// Sites whose occupation exceeds eps at any sample, ordered by linear index.
std::vector<SiteIndex> cage_support(const Trajectory& traj, double eps);

/// First interior minimum of the occupation of `site`, refined by a parabola
/// through the three samples around it. Throws NoMinimumFound.
double breathing_half_period(const Trajectory& traj, SiteIndex site);

/// The two mid-gap states of an open chain, localized to the left and right
/// ends by diagonalizing the rung position inside their span.
struct EdgeProfile {
  std::array<double, 2> energies{};
  std::array<CVector, 2> states;
  /// Per-site |psi|.
  std::array<RVector, 2> magnitudes;
  /// Per-rung sum of |psi|^2.
  std::array<RVector, 2> rung_weights;
  /// xi in w_j ~ exp(-j/xi), fitted over the half ladder nearest each edge.
  /// Zero when the weight is confined to a single rung.
  double decay_length = 0.0;
};

/// Throws NoMidgapState unless two eigenvalues lie in the central third of
/// the gap left between the remaining lower and upper halves of the spectrum.
EdgeProfile edge_profile_fit(const CMatrix& hamiltonian);

}  // namespace creutz
