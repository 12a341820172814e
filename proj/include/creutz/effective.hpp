#pragma once

#include <span>
#include <vector>

#include "creutz/hubbard.hpp"
#include "creutz/lattice.hpp"

namespace creutz {

/// Coefficients of the second-order doublon Hamiltonian written with
/// doublon operators d = c^2.
struct EffectiveDoublonParams {
  cplx leg_hopping_a;  ///< J_A^2 / U = J^2 e^{i phi} / U
  cplx leg_hopping_b;  ///< J_B^2 / U = J^2 e^{-i phi} / U
  double diagonal_hopping = 0.0;  ///< J^2 / U
  double rung_hopping = 0.0;      ///< m^2 / 2U per leg term (plus h.c.)
  double interaction = 0.0;       ///< U / 2
  double mu = 0.0;                ///< 2 J^2 / U
  double delta = 0.0;             ///< (2 m^2 + 8 J^2) / U
};

/// Throws InvalidParameter for U <= 0.
EffectiveDoublonParams effective_params(const LatticeParams& p);

struct EffectiveOptions {
  /// Keep the interaction energy and the uniform offset Delta.
  bool include_offset = true;
  /// Keep the end-site chemical potential (open ladders only).
  bool include_edge_potential = true;
};

/// Effective doublon Hamiltonian (2L x 2L) in the basis of normalized
/// doublon states |2_a>. Since d^dagger d = 2 on |2_a>, every d-bilinear
/// coefficient enters the matrix doubled; Delta is a c-number.
CMatrix effective_doublon_hamiltonian(const LatticeParams& p, EffectiveOptions options = {});

/// Restriction to and embedding from the doublon sector.
class DoublonProjector {
 public:
  explicit DoublonProjector(const TwoParticleBasis& basis);

  /// Doubly-occupied amplitudes (2L entries).
  CVector project(const FockState& state) const;
  FockState embed(const CVector& doublon_amplitudes) const;

 private:
  std::vector<int> doublon_rows_;
  int basis_size_;
};

struct FidelitySeries {
  std::vector<double> times;
  /// |<psi_eff(t)|P psi_full(t)>|^2
  std::vector<double> fidelity;
  /// 1 - ||P psi_full(t)||^2
  std::vector<double> leakage;
  /// Set when U < 10 J, outside the perturbative regime.
  bool perturbative_warning = false;

  double min_fidelity() const;
  double max_leakage() const;
};

/// Evolves psi0 under the effective model and its embedding under the full
/// two-particle Hamiltonian and compares them sample by sample.
FidelitySeries compare_effective_vs_full(const LatticeParams& p, const CVector& psi0_doublon,
                                         std::span<const double> times,
                                         EffectiveOptions options = {});

}  // namespace creutz
