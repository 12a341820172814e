#include "creutz/hubbard.hpp"

#include <cmath>
#include <map>

#include "creutz/errors.hpp"

namespace creutz {

TwoParticleBasis::TwoParticleBasis(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 1) throw InvalidParameter("n_sites", "must be positive");
  pairs_.reserve(size());
  for (int a = 0; a < n_sites; ++a)
    for (int b = a; b < n_sites; ++b) pairs_.emplace_back(a, b);
}

int TwoParticleBasis::index(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= n_sites_) throw InvalidParameter("site", "outside the ladder");
  return a * n_sites_ - a * (a - 1) / 2 + (b - a);
}

CMatrix two_particle_hamiltonian(const LatticeParams& p) {
  const LatticeParams q = canonical(p);
  const CMatrix h = single_particle_hamiltonian(q);
  const int n = static_cast<int>(h.rows());
  const TwoParticleBasis basis(n);
  CMatrix H = CMatrix::Zero(basis.size(), basis.size());

  for (int col = 0; col < basis.size(); ++col) {
    const auto [a, b] = basis.pair(col);
    std::map<int, int> occ{{a, 0}, {b, 0}};
    ++occ[a];
    ++occ[b];
    // c_x^dagger c_y on |n>: sqrt(n_y) sqrt(n_x + 1 after removal).
    for (const auto& [y, ny] : occ) {
      const int other = (y == a) ? b : a;
      for (int x = 0; x < n; ++x) {
        if (h(x, y) == cplx{0.0}) continue;
        const double nx_after = (x == other) ? 1.0 : 0.0;
        const double factor = std::sqrt(static_cast<double>(ny)) * std::sqrt(nx_after + 1.0);
        H(basis.index(x, other), col) += h(x, y) * factor;
      }
    }
    if (a == b) H(col, col) += q.U;  // (U/2) n (n - 1) with n = 2
  }
  return H;
}

FirstQuantState fock_to_first_quant(const FockState& fock) {
  const Eigen::Index dim = fock.amplitudes.size();
  const int n = static_cast<int>(std::lround((std::sqrt(8.0 * dim + 1.0) - 1.0) / 2.0));
  if (n * (n + 1) / 2 != dim) throw DimensionMismatch("amplitude count is not N(N+1)/2");
  const TwoParticleBasis basis(n);
  FirstQuantState fq{CMatrix::Zero(n, n)};
  for (int i = 0; i < basis.size(); ++i) {
    const auto [a, b] = basis.pair(i);
    if (a == b) {
      fq.lambda(a, a) = fock.amplitudes[i];
    } else {
      fq.lambda(a, b) = fock.amplitudes[i] / std::sqrt(2.0);
      fq.lambda(b, a) = fq.lambda(a, b);
    }
  }
  return fq;
}

FockState first_quant_to_fock(const FirstQuantState& fq) {
  const CMatrix& lambda = fq.lambda;
  if (lambda.rows() != lambda.cols()) throw DimensionMismatch("lambda is not square");
  if (lambda.size() > 0 && (lambda - lambda.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw SymmetryViolation("lambda is not exchange symmetric");
  const TwoParticleBasis basis(static_cast<int>(lambda.rows()));
  FockState fock{CVector::Zero(basis.size())};
  for (int i = 0; i < basis.size(); ++i) {
    const auto [a, b] = basis.pair(i);
    fock.amplitudes[i] = a == b ? lambda(a, a) : std::sqrt(2.0) * 0.5 * (lambda(a, b) + lambda(b, a));
  }
  return fock;
}

FockState doublon_state(const TwoParticleBasis& basis, int site) { return pair_state(basis, site, site); }

FockState pair_state(const TwoParticleBasis& basis, int a, int b) {
  FockState s{CVector::Zero(basis.size())};
  s.amplitudes[basis.index(a, b)] = 1.0;
  return s;
}

FockState product_state(const TwoParticleBasis& basis, const CVector& first, const CVector& second) {
  if (first.size() != basis.n_sites() || second.size() != basis.n_sites())
    throw DimensionMismatch("single-particle states do not match the basis");
  // lambda = (u v^T + v u^T) / 2, then normalize.
  const CMatrix outer = first * second.transpose();
  FirstQuantState fq{0.5 * (outer + outer.transpose())};
  FockState fock = first_quant_to_fock(fq);
  const double norm = fock.amplitudes.norm();
  if (norm < 1e-14) throw InvalidParameter("state", "symmetrized product vanishes");
  fock.amplitudes /= norm;
  return fock;
}

RVector occupation_expectation(const FockState& fock) {
  const CMatrix lambda = fock_to_first_quant(fock).lambda;
  return 2.0 * lambda.cwiseAbs2().rowwise().sum();
}

RVector doublonness(const FockState& fock) {
  const CMatrix lambda = fock_to_first_quant(fock).lambda;
  const RMatrix w = lambda.cwiseAbs2();
  RVector d = RVector::Zero(w.rows());
  for (Eigen::Index a = 0; a < w.rows(); ++a) {
    const double row = w.row(a).sum();
    if (row >= 1e-14) d[a] = w(a, a) / row;
  }
  return d;
}

void attach_two_particle_observables(Trajectory& traj) {
  if (traj.states.empty()) return;
  const FockState first{traj.states.front()};
  const Eigen::Index n_sites = occupation_expectation(first).size();
  const auto samples = static_cast<Eigen::Index>(traj.states.size());
  traj.occupations.resize(samples, n_sites);
  RMatrix d(samples, n_sites);
  for (Eigen::Index s = 0; s < samples; ++s) {
    const FockState f{traj.states[s]};
    traj.occupations.row(s) = occupation_expectation(f).transpose();
    d.row(s) = doublonness(f).transpose();
  }
  traj.doublonness = std::move(d);
}

Trajectory two_particle_evolve(const LatticeParams& p, const FockState& psi0,
                               std::span<const double> times) {
  const LatticeParams q = canonical(p);
  Trajectory traj = evolve(two_particle_hamiltonian(q), psi0.amplitudes, times);
  traj.params = q;
  attach_two_particle_observables(traj);
  return traj;
}

}  // namespace creutz
