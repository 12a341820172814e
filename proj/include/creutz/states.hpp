#pragma once

#include <array>

#include "creutz/hubbard.hpp"
#include "creutz/lattice.hpp"

namespace creutz {

// Closed-form states of the ladder. Single-particle states are amplitude
// vectors over the 2L sites in linear_index order.

enum class WannierSign { plus = +1, minus = -1 };
enum class Side { left, right };

/// Plaquette state |j+-> on rungs j, j+1 (wrapping for periodic ladders).
/// Requires the flat-band limit m = 0, phi = +-pi (FlatBandRequired) and
/// 1 <= j <= L-1 on open ladders with L >= 3 (BulkOnly).
CVector wannier_state(const LatticeParams& p, int rung, WannierSign sign);

struct WannierComponent {
  int rung = 1;
  WannierSign sign = WannierSign::plus;
  cplx coefficient;
};

/// Expansion of |j, leg> on the Wannier states of plaquettes j-1 and j,
/// obtained by projection. Bulk rungs only (1 < j < L).
std::array<WannierComponent, 4> site_in_wannier_basis(const LatticeParams& p, int rung, Leg leg);

/// Closed-form flat-band evolution of |j, leg>: the particle breathes into
/// its four first neighbours with frequency 2J and never leaves the cage.
CVector analytic_caged_evolution(const LatticeParams& p, int rung, Leg leg, double t);

/// Zero-energy edge state of the rungless open ladder:
/// left  (|1,A> - e^{i phi/2}|1,B>)/sqrt2, right (|L,A> - e^{-i phi/2}|L,B>)/sqrt2.
/// Throws RungsPresent for m != 0.
CVector edge_state(const LatticeParams& p, Side side);

/// Doublon edge state (|2_{1A}> - e^{i phi}|2_{1B}>)/sqrt2 and its mirror.
FockState doublon_edge_state(const LatticeParams& p, Side side);

/// Normalized |2L_phi> + |2R_phi>.
FockState noon_state(const LatticeParams& p);

/// Unit vector on one site.
CVector site_state(const LatticeParams& p, SiteIndex site);

}  // namespace creutz
