#include "creutz/mapping2d.hpp"

#include <cmath>
#include <cstdlib>

#include "creutz/errors.hpp"

namespace creutz {

ZetaIndex to_zeta(const Lattice2DIndex& s) {
  return {s.first.rung, s.second.rung, zeta_of(s.first.leg, s.second.leg)};
}

Lattice2DIndex from_zeta(const ZetaIndex& z) {
  if (z.zeta < 1 || z.zeta > 4) throw InvalidParameter("zeta", "must be 1..4");
  const int code = z.zeta - 1;
  return {{z.i, code / 2 == 0 ? Leg::A : Leg::B}, {z.j, code % 2 == 0 ? Leg::A : Leg::B}};
}

CMatrix hamiltonian_2d(const LatticeParams& p) {
  const LatticeParams q = canonical(p);
  const CMatrix h = single_particle_hamiltonian(q);
  const int n = static_cast<int>(h.rows());
  CMatrix H = CMatrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // H1 acting on the first index, then on the second.
        H(index_2d(c, b, n), index_2d(a, b, n)) += h(c, a);
        H(index_2d(a, c, n), index_2d(a, b, n)) += h(c, b);
      }
  for (int a = 0; a < n; ++a) H(index_2d(a, a, n), index_2d(a, a, n)) += q.U;
  return H;
}

RMatrix exchange_permutation(int n_sites) {
  RMatrix P = RMatrix::Zero(n_sites * n_sites, n_sites * n_sites);
  for (int a = 0; a < n_sites; ++a)
    for (int b = 0; b < n_sites; ++b) P(index_2d(b, a, n_sites), index_2d(a, b, n_sites)) = 1.0;
  return P;
}

RMatrix symmetric_isometry(int n_sites) {
  const TwoParticleBasis basis(n_sites);
  RMatrix S = RMatrix::Zero(n_sites * n_sites, basis.size());
  for (int k = 0; k < basis.size(); ++k) {
    const auto [a, b] = basis.pair(k);
    if (a == b) {
      S(index_2d(a, a, n_sites), k) = 1.0;
    } else {
      S(index_2d(a, b, n_sites), k) = 1.0 / std::sqrt(2.0);
      S(index_2d(b, a, n_sites), k) = 1.0 / std::sqrt(2.0);
    }
  }
  return S;
}

RMatrix antisymmetric_isometry(int n_sites) {
  RMatrix A = RMatrix::Zero(n_sites * n_sites, n_sites * (n_sites - 1) / 2);
  int k = 0;
  for (int a = 0; a < n_sites; ++a)
    for (int b = a + 1; b < n_sites; ++b, ++k) {
      A(index_2d(a, b, n_sites), k) = 1.0 / std::sqrt(2.0);
      A(index_2d(b, a, n_sites), k) = -1.0 / std::sqrt(2.0);
    }
  return A;
}

namespace {

RVector sector_spectrum(const CMatrix& H, const RMatrix& isometry) {
  const CMatrix iso = isometry.cast<cplx>();
  const CMatrix block = iso.adjoint() * H * iso;
  return Eigen::SelfAdjointEigenSolver<CMatrix>(block, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace

RVector symmetric_sector_spectrum(const LatticeParams& p) {
  const LatticeParams q = canonical(p);
  return sector_spectrum(hamiltonian_2d(q), symmetric_isometry(2 * q.L));
}

RVector antisymmetric_sector_spectrum(const LatticeParams& p) {
  const LatticeParams q = canonical(p);
  return sector_spectrum(hamiltonian_2d(q), antisymmetric_isometry(2 * q.L));
}

double symmetric_sector_spectrum_check(const LatticeParams& p) {
  const RVector sym = symmetric_sector_spectrum(p);
  const RVector fock =
      Eigen::SelfAdjointEigenSolver<CMatrix>(two_particle_hamiltonian(p), Eigen::EigenvaluesOnly)
          .eigenvalues();
  if (sym.size() != fock.size()) throw DimensionMismatch("sector dimensions differ");
  return (sym - fock).cwiseAbs().maxCoeff();
}

namespace {

CVector flatten(const CMatrix& lambda) {
  const auto n = lambda.rows();
  CVector v(n * n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) v[a * n + b] = lambda(a, b);
  return v;
}

CMatrix unflatten(const CVector& v, Eigen::Index n) {
  CMatrix lambda(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) lambda(a, b) = v[a * n + b];
  return lambda;
}

}  // namespace

Trajectory2D evolve_2d(const LatticeParams& p, const FirstQuantState& lambda0,
                       std::span<const double> times) {
  const LatticeParams q = canonical(p);
  const Eigen::Index n = 2 * q.L;
  if (lambda0.lambda.rows() != n || lambda0.lambda.cols() != n)
    throw DimensionMismatch("lambda does not match the ladder");
  if ((lambda0.lambda - lambda0.lambda.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw SymmetryViolation("initial lambda is not exchange symmetric");

  const Trajectory flat = evolve(hamiltonian_2d(q), flatten(lambda0.lambda), times);
  Trajectory2D out;
  out.times = flat.times;
  out.params = q;
  for (const CVector& v : flat.states) {
    CMatrix lambda = unflatten(v, n);
    out.occupancy.emplace_back(lambda.cwiseAbs2());
    out.symmetry_defect.push_back((lambda - lambda.transpose()).cwiseAbs2().sum());
    out.lambdas.push_back(std::move(lambda));
  }
  return out;
}

Trajectory to_fock_trajectory(const Trajectory2D& traj) {
  Trajectory out;
  out.times = traj.times;
  out.params = traj.params;
  out.initial = traj.initial;
  for (const CMatrix& lambda : traj.lambdas) {
    // Symmetrize away round-off before the conversion check.
    const FirstQuantState fq{0.5 * (lambda + lambda.transpose())};
    out.states.push_back(first_quant_to_fock(fq).amplitudes);
  }
  attach_two_particle_observables(out);
  return out;
}

int synthetic_position(int zeta) {
  switch (zeta) {
    case 1:
      return 0;
    case 2:
      return 1;
    case 4:
      return 2;
    case 3:
      return 3;
    default:
      throw InvalidParameter("zeta", "must be 1..4");
  }
}

ZetaLayout zeta_layout(const LatticeParams& p, bool periodic_synthetic) {
  const LatticeParams q = canonical(p);
  const CMatrix H = hamiltonian_2d(q);
  const int n = 2 * q.L;
  ZetaLayout layout;
  layout.periodic_synthetic = periodic_synthetic;

  const auto zeta_at = [n](int flat) {
    return to_zeta({site_from_index(flat / n), site_from_index(flat % n)});
  };
  // A bond belongs to the cell it leaves in the forward direction.
  const auto owner = [&](const ZetaIndex& a, const ZetaIndex& b) {
    const int di = ((b.i - a.i) % q.L + q.L) % q.L;
    const int dj = ((b.j - a.j) % q.L + q.L) % q.L;
    if (di == q.L - 1 && q.L > 2) return std::pair{b.i, b.j};
    if (dj == q.L - 1 && q.L > 2) return std::pair{b.i, b.j};
    return std::pair{a.i, a.j};
  };

  for (int x = 0; x < n * n; ++x) {
    for (int y = x + 1; y < n * n; ++y) {
      const cplx amp = H(y, x);
      if (std::abs(amp) < 1e-14) continue;
      ZetaBond bond{zeta_at(x), zeta_at(y), amp, false};
      int step = std::abs(synthetic_position(bond.a.zeta) - synthetic_position(bond.b.zeta));
      if (periodic_synthetic) step = std::min(step, 4 - step);
      bond.nonlocal = step > 1;
      if (owner(bond.a, bond.b) == std::pair{1, 1}) {
        if (bond.nonlocal)
          ++layout.nonlocal_per_cell;
        else
          ++layout.local_per_cell;
      }
      layout.bonds.push_back(bond);
    }
  }
  return layout;
}

}  // namespace creutz
