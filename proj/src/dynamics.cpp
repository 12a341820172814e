#include "creutz/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "creutz/errors.hpp"

namespace creutz {

namespace {

constexpr double kHermiticityTolerance = 1e-10;
constexpr double kNormTolerance = 1e-8;

}  // namespace

Propagator::Propagator(const CMatrix& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw DimensionMismatch("Hamiltonian is not square");
  if (hamiltonian.size() > 0 &&
      (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTolerance)
    throw NonHermitian("Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hamiltonian);
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

CVector Propagator::apply(const CVector& psi0, double t) const {
  if (psi0.size() != dimension()) throw DimensionMismatch("state does not match Hamiltonian");
  if (t == 0.0) return psi0;
  CVector c = vectors_.adjoint() * psi0;
  for (Eigen::Index n = 0; n < c.size(); ++n) c[n] *= std::exp(-I * energies_[n] * t);
  return vectors_ * c;
}

Trajectory evolve(const CMatrix& hamiltonian, const CVector& psi0, std::span<const double> times) {
  const Propagator prop(hamiltonian);
  if (psi0.size() != prop.dimension()) throw DimensionMismatch("state does not match Hamiltonian");
  if (std::abs(psi0.norm() - 1.0) > kNormTolerance)
    throw InvalidParameter("psi0", "state is not normalized");
  if (times.empty()) throw InvalidParameter("times", "need at least one sample");
  for (std::size_t n = 1; n < times.size(); ++n)
    if (!(times[n] > times[n - 1])) throw InvalidParameter("times", "must be strictly increasing");

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.occupations.resize(static_cast<Eigen::Index>(times.size()), psi0.size());
  for (std::size_t n = 0; n < times.size(); ++n) {
    traj.states.push_back(prop.apply(psi0, times[n]));
    traj.occupations.row(static_cast<Eigen::Index>(n)) = traj.states.back().cwiseAbs2().transpose();
  }
  return traj;
}

std::vector<double> uniform_times(double tmax, int intervals) {
  if (!(tmax > 0.0) || !std::isfinite(tmax)) throw InvalidParameter("tmax", "must be positive");
  if (intervals < 1) throw InvalidParameter("samples", "must be at least 1");
  std::vector<double> t(intervals + 1);
  for (int n = 0; n <= intervals; ++n) t[n] = tmax * n / intervals;
  return t;
}

RMatrix occupation_profile(const Trajectory& traj) { return traj.occupations; }

std::vector<SiteIndex> cage_support(const Trajectory& traj, double eps) {
  std::vector<SiteIndex> sites;
  if (traj.occupations.rows() == 0) return sites;
  for (Eigen::Index s = 0; s < traj.occupations.cols(); ++s)
    if (traj.occupations.col(s).maxCoeff() > eps) sites.push_back(site_from_index(static_cast<int>(s)));
  return sites;
}

double breathing_half_period(const Trajectory& traj, SiteIndex site) {
  const int s = linear_index(site);
  if (s < 0 || s >= traj.occupations.cols())
    throw InvalidParameter("site", site_label(site) + " is not on the ladder");
  const auto& t = traj.times;
  const auto y = [&](std::size_t n) { return traj.occupations(static_cast<Eigen::Index>(n), s); };
  for (std::size_t n = 1; n + 1 < t.size(); ++n) {
    if (!(y(n) <= y(n - 1) && y(n) < y(n + 1))) continue;
    // Vertex of the parabola through the three samples.
    const double t0 = t[n - 1], t1 = t[n], t2 = t[n + 1];
    const double y0 = y(n - 1), y1 = y(n), y2 = y(n + 1);
    const double num = (t1 - t0) * (t1 - t0) * (y1 - y2) - (t1 - t2) * (t1 - t2) * (y1 - y0);
    const double den = (t1 - t0) * (y1 - y2) - (t1 - t2) * (y1 - y0);
    if (den == 0.0) return t1;
    return t1 - 0.5 * num / den;
  }
  throw NoMinimumFound("no interior minimum of the occupation at " + site_label(site));
}

namespace {

// Least-squares slope of log w against rung distance from the edge. Only
// weights within 1e-14 of the largest enter; returns 0 if fewer than two do.
double fit_decay(const RVector& weights, bool from_left) {
  const Eigen::Index n = weights.size();
  const Eigen::Index half = std::max<Eigen::Index>(2, n / 2);
  const double top = weights.maxCoeff();
  std::vector<double> xs, ys;
  for (Eigen::Index d = 0; d < half && d < n; ++d) {
    const double w = weights[from_left ? d : n - 1 - d];
    if (w > 1e-14 * top) {
      xs.push_back(static_cast<double>(d));
      ys.push_back(std::log(w));
    }
  }
  if (xs.size() < 2) return 0.0;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  return slope < 0.0 ? -1.0 / slope : 0.0;
}

}  // namespace

EdgeProfile edge_profile_fit(const CMatrix& hamiltonian) {
  const Propagator prop(hamiltonian);
  const Eigen::Index dim = prop.dimension();
  if (dim < 4 || dim % 2 != 0) throw DimensionMismatch("expected a ladder Hamiltonian");
  const Eigen::Index half = dim / 2;
  const RVector& e = prop.energies();
  const double below = e[half - 2];
  const double above = e[half + 1];
  const double third = (above - below) / 3.0;
  const bool inside = third > 0.0 && e[half - 1] > below + third && e[half] < above - third;
  if (!inside) throw NoMidgapState("no pair of eigenvalues in the central third of the bulk gap");

  CMatrix span(dim, 2);
  span.col(0) = prop.eigenvectors().col(half - 1);
  span.col(1) = prop.eigenvectors().col(half);
  RVector rung(dim);
  for (Eigen::Index s = 0; s < dim; ++s) rung[s] = static_cast<double>(s / 2 + 1);
  const CMatrix position = span.adjoint() * rung.asDiagonal() * span;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> local(Eigen::Matrix2cd{position});

  EdgeProfile out;
  const Eigen::Index L = half;
  for (int side = 0; side < 2; ++side) {
    CVector psi = span * local.eigenvectors().col(side);
    // Fix the global phase: largest component real positive.
    Eigen::Index top = 0;
    psi.cwiseAbs().maxCoeff(&top);
    psi *= std::conj(psi[top]) / std::abs(psi[top]);
    out.energies[side] = (psi.adjoint() * hamiltonian * psi)(0, 0).real();
    out.magnitudes[side] = psi.cwiseAbs();
    out.rung_weights[side] = RVector::Zero(L);
    for (Eigen::Index s = 0; s < dim; ++s) out.rung_weights[side][s / 2] += std::norm(psi[s]);
    out.states[side] = std::move(psi);
  }
  out.decay_length =
      0.5 * (fit_decay(out.rung_weights[0], true) + fit_decay(out.rung_weights[1], false));
  return out;
}

}  // namespace creutz
