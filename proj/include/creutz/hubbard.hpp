#pragma once

#include <span>
#include <utility>
#include <vector>

#include "creutz/dynamics.hpp"
#include "creutz/lattice.hpp"

namespace creutz {

/// Two-boson Fock basis: unordered site pairs a <= b under the site order
/// 1A < 1B < ... < LA < LB, listed lexicographically.
class TwoParticleBasis {
 public:
  explicit TwoParticleBasis(int n_sites);

  int n_sites() const { return n_sites_; }
  int size() const { return n_sites_ * (n_sites_ + 1) / 2; }

  /// Index of the pair {a, b}; order of a and b does not matter.
  int index(int a, int b) const;
  std::pair<int, int> pair(int index) const { return pairs_[index]; }
  int doublon_index(int site) const { return index(site, site); }

 private:
  int n_sites_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Amplitudes eta over TwoParticleBasis:
/// |psi> = sum_{a<=b} eta_ab |1_a 1_b>, with |1_a 1_a> = |2_a>.
struct FockState {
  CVector amplitudes;
};

/// First-quantized amplitudes lambda_ab over ordered pairs (N x N).
struct FirstQuantState {
  CMatrix lambda;
};

/// Creutz-Hubbard Hamiltonian restricted to two bosons, built from bosonic
/// operator algebra on occupation numbers.
CMatrix two_particle_hamiltonian(const LatticeParams& p);

/// eta_ab = sqrt(2) lambda_ab for a != b, eta_aa = lambda_aa.
FirstQuantState fock_to_first_quant(const FockState& fock);
/// Throws SymmetryViolation if lambda is not exchange symmetric to 1e-10.
FockState first_quant_to_fock(const FirstQuantState& fq);

/// |2_site>.
FockState doublon_state(const TwoParticleBasis& basis, int site);
/// |1_a 1_b> for a != b, |2_a> for a == b.
FockState pair_state(const TwoParticleBasis& basis, int a, int b);
/// Normalized bosonic symmetrization of two single-particle states.
FockState product_state(const TwoParticleBasis& basis, const CVector& first,
                        const CVector& second);

/// <n_a> = <c_a^dagger c_a> per site; sums to 2.
RVector occupation_expectation(const FockState& fock);

/// D_a = |lambda_aa|^2 / sum_b |lambda_ab|^2 per site, 0 where the site is
/// never occupied.
RVector doublonness(const FockState& fock);

/// Evolves psi0 under the two-particle Hamiltonian and attaches per-site
/// occupation and doublonness to each sample.
Trajectory two_particle_evolve(const LatticeParams& p, const FockState& psi0,
                               std::span<const double> times);

/// Adds occupation/doublonness observables to a trajectory whose states
/// are Fock amplitudes.
void attach_two_particle_observables(Trajectory& traj);

}  // namespace creutz
