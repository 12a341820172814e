#include "creutz/effective.hpp"

#include <algorithm>
#include <cmath>

#include "creutz/errors.hpp"

namespace creutz {

EffectiveDoublonParams effective_params(const LatticeParams& p) {
  const LatticeParams q = canonical(p);
  if (!(q.U > 0.0)) throw InvalidParameter("U", "effective doublon model needs U > 0");
  const double j2u = q.J * q.J / q.U;
  EffectiveDoublonParams e;
  e.leg_hopping_a = j2u * std::polar(1.0, q.phi);
  e.leg_hopping_b = j2u * std::polar(1.0, -q.phi);
  e.diagonal_hopping = j2u;
  e.rung_hopping = q.m * q.m / (2.0 * q.U);
  e.interaction = q.U / 2.0;
  e.mu = 2.0 * j2u;
  e.delta = (2.0 * q.m * q.m + 8.0 * q.J * q.J) / q.U;
  return e;
}

CMatrix effective_doublon_hamiltonian(const LatticeParams& p, EffectiveOptions options) {
  const LatticeParams q = canonical(p);
  const EffectiveDoublonParams e = effective_params(q);
  const int n = 2 * q.L;
  CMatrix H = CMatrix::Zero(n, n);

  const auto hop = [&](SiteIndex to, SiteIndex from, cplx t) {
    H(linear_index(to), linear_index(from)) += t;
    H(linear_index(from), linear_index(to)) += std::conj(t);
  };
  // <2_a| d_a^dagger d_b |2_b> = 2, so each coefficient enters doubled.
  // The rung term appears once per leg plus its conjugate: 2 x 2 x m^2/2U.
  for (int j = 1; j <= q.L; ++j) hop({j, Leg::B}, {j, Leg::A}, 4.0 * e.rung_hopping);
  const int last = q.boundary == Boundary::periodic ? q.L : q.L - 1;
  for (int j = 1; j <= last; ++j) {
    const int next = j % q.L + 1;
    hop({next, Leg::A}, {j, Leg::A}, 2.0 * e.leg_hopping_a);
    hop({next, Leg::B}, {j, Leg::B}, 2.0 * e.leg_hopping_b);
    hop({next, Leg::B}, {j, Leg::A}, 2.0 * e.diagonal_hopping);
    hop({next, Leg::A}, {j, Leg::B}, 2.0 * e.diagonal_hopping);
  }

  for (int s = 0; s < n; ++s) {
    if (options.include_offset) H(s, s) += 2.0 * e.interaction + e.delta;
    const int rung = site_from_index(s).rung;
    const bool end = rung == 1 || rung == q.L;
    if (options.include_edge_potential && q.boundary == Boundary::open && end)
      H(s, s) -= 2.0 * e.mu;
  }
  return H;
}

DoublonProjector::DoublonProjector(const TwoParticleBasis& basis) : basis_size_(basis.size()) {
  for (int s = 0; s < basis.n_sites(); ++s) doublon_rows_.push_back(basis.doublon_index(s));
}

CVector DoublonProjector::project(const FockState& state) const {
  if (state.amplitudes.size() != basis_size_) throw DimensionMismatch("state does not match the basis");
  CVector out(static_cast<Eigen::Index>(doublon_rows_.size()));
  for (std::size_t s = 0; s < doublon_rows_.size(); ++s) out[s] = state.amplitudes[doublon_rows_[s]];
  return out;
}

FockState DoublonProjector::embed(const CVector& doublon_amplitudes) const {
  if (doublon_amplitudes.size() != static_cast<Eigen::Index>(doublon_rows_.size()))
    throw DimensionMismatch("expected one amplitude per site");
  FockState f{CVector::Zero(basis_size_)};
  for (std::size_t s = 0; s < doublon_rows_.size(); ++s) f.amplitudes[doublon_rows_[s]] = doublon_amplitudes[s];
  return f;
}

double FidelitySeries::min_fidelity() const {
  return fidelity.empty() ? 1.0 : *std::min_element(fidelity.begin(), fidelity.end());
}

double FidelitySeries::max_leakage() const {
  return leakage.empty() ? 0.0 : *std::max_element(leakage.begin(), leakage.end());
}

FidelitySeries compare_effective_vs_full(const LatticeParams& p, const CVector& psi0_doublon,
                                         std::span<const double> times, EffectiveOptions options) {
  const LatticeParams q = canonical(p);
  const CMatrix h_eff = effective_doublon_hamiltonian(q, options);
  const TwoParticleBasis basis(2 * q.L);
  const DoublonProjector projector(basis);

  const Trajectory eff = evolve(h_eff, psi0_doublon, times);
  const Trajectory full = evolve(two_particle_hamiltonian(q), projector.embed(psi0_doublon).amplitudes, times);

  FidelitySeries series;
  series.times.assign(times.begin(), times.end());
  series.perturbative_warning = q.U < 10.0 * q.J;
  for (std::size_t n = 0; n < times.size(); ++n) {
    const CVector projected = projector.project(FockState{full.states[n]});
    series.fidelity.push_back(std::norm(eff.states[n].dot(projected)));
    series.leakage.push_back(std::max(0.0, 1.0 - projected.squaredNorm()));
  }
  return series;
}

}  // namespace creutz
