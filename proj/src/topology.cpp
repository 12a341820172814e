#include "creutz/topology.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "creutz/errors.hpp"

namespace creutz {

const char* to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::trivial:
      return "trivial";
    case PhaseKind::topological:
      return "topological";
    case PhaseKind::metallic:
      return "metallic";
  }
  return "?";
}

double wilson_loop_phase(std::span<const CVector> loop) {
  if (loop.empty()) throw InvalidParameter("loop", "must not be empty");
  cplx product = 1.0;
  for (std::size_t n = 0; n < loop.size(); ++n) {
    const CVector& next = loop[(n + 1) % loop.size()];
    product *= loop[n].dot(next);  // <u_n|u_{n+1}>
  }
  // arg is in (-pi, pi], so -arg lands in [-pi, pi). Adding 0.0 turns -0 into +0.
  return -std::arg(product) + 0.0;
}

namespace {

void require_grid(int n_k, int minimum) {
  if (n_k < minimum)
    throw InvalidParameter("n_k", "need at least " + std::to_string(minimum) + " k points");
}

}  // namespace

std::vector<CVector> band_eigenvectors(const LatticeParams& p, Band band, int n_k) {
  std::vector<CVector> states;
  states.reserve(n_k);
  for (double k : k_grid(n_k)) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(bloch_matrix(bloch_hamiltonian(p, k)));
    states.emplace_back(solver.eigenvectors().col(band == Band::lower ? 0 : 1));
  }
  return states;
}

double min_gap(const LatticeParams& p, int n_k) {
  require_grid(n_k, 1);
  double gap = std::numeric_limits<double>::infinity();
  for (double k : k_grid(n_k)) {
    const BlochPoint b = bloch_hamiltonian(p, k);
    gap = std::min(gap, 2.0 * std::hypot(b.dx, b.dz));
  }
  return gap;
}

double continuum_min_gap(const LatticeParams& p) {
  // |d|^2 = (m + 2J c)^2 + 4J^2 s^2 (1 - c^2), c = cos k, s = sin(phi/2)
  const double s2 = std::pow(std::sin(p.phi / 2.0), 2);
  const auto gap2 = [&](double c) {
    return std::pow(p.m + 2.0 * p.J * c, 2) + 4.0 * p.J * p.J * s2 * (1.0 - c * c);
  };
  double best = std::min(gap2(-1.0), gap2(1.0));
  const double curvature = 4.0 * p.J * p.J * (1.0 - s2);
  if (curvature > 0.0) {
    const double c = -p.m / (2.0 * p.J * (1.0 - s2));
    if (std::abs(c) <= 1.0) best = std::min(best, gap2(c));
  }
  return 2.0 * std::sqrt(std::max(best, 0.0));
}

double zak_phase(const LatticeParams& p, Band band, int n_k) {
  require_grid(n_k, 8);
  const LatticeParams q = canonical(p);
  if (min_gap(q, n_k) < kMetallicGapTolerance * q.J)
    throw MetallicSystem("gap closes on the k grid; Zak phase undefined");
  const auto states = band_eigenvectors(q, band, n_k);
  return wilson_loop_phase(states);
}

int winding_number(const LatticeParams& p, int n_k) {
  require_grid(n_k, 8);
  const LatticeParams q = canonical(p);
  const double tolerance = 0.5 * kMetallicGapTolerance * q.J;
  double total = 0.0;
  double previous = 0.0;
  double first = 0.0;
  const auto ks = k_grid(n_k);
  const auto wrap = [](double d) { return std::remainder(d, 2.0 * pi); };
  for (std::size_t n = 0; n < ks.size(); ++n) {
    const BlochPoint b = bloch_hamiltonian(q, ks[n]);
    if (std::hypot(b.dx, b.dz) < tolerance)
      throw PathThroughOrigin("(dz, dx) passes through the origin; winding undefined");
    const double angle = std::atan2(b.dx, b.dz);
    if (n == 0)
      first = angle;
    else
      total += wrap(angle - previous);
    previous = angle;
  }
  total += wrap(first - previous);
  return static_cast<int>(std::lround(total / (2.0 * pi)));
}

PhaseClassification classify_phase(const LatticeParams& p, int n_k) {
  const LatticeParams q = canonical(p);
  const double gap = std::min(
      {min_gap(q, kGapProbePoints), min_gap(q, n_k), continuum_min_gap(q)});
  if (gap < kMetallicGapTolerance * q.J)
    return {PhaseKind::metallic, 0, std::numeric_limits<double>::quiet_NaN()};

  PhaseClassification c;
  c.nu = winding_number(q, n_k);
  c.zak = zak_phase(q, Band::lower, n_k);
  c.kind = c.nu == 0 ? PhaseKind::trivial : PhaseKind::topological;

  const bool zak_is_pi = pi - std::abs(c.zak) < 1e-4;
  const bool zak_is_zero = std::abs(c.zak) < 1e-4;
  if ((c.nu != 0 && !zak_is_pi) || (c.nu == 0 && !zak_is_zero))
    throw std::logic_error("Zak phase " + std::to_string(c.zak) + " inconsistent with winding " +
                           std::to_string(c.nu));
  return c;
}

std::vector<double> AxisRange::values() const {
  if (points < 1) throw InvalidParameter("resolution", "must be positive");
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i)
    v[i] = points == 1 ? min : min + (max - min) * static_cast<double>(i) / (points - 1);
  return v;
}

unsigned worker_count() {
  if (const char* env = std::getenv("CREUTZ_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PhaseDiagram phase_diagram_scan(const LatticeParams& base, const AxisRange& m_range,
                                const AxisRange& phi_range, int n_k, unsigned threads) {
  PhaseDiagram diagram;
  diagram.m_values = m_range.values();
  diagram.phi_values = phi_range.values();
  const std::size_t n_phi = diagram.phi_values.size();
  const std::size_t total = diagram.m_values.size() * n_phi;
  diagram.cells.resize(total);

  const LatticeParams checked = canonical(base);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t cell = next++; cell < total; cell = next++) {
      LatticeParams p = checked;
      p.m = diagram.m_values[cell / n_phi];
      p.phi = diagram.phi_values[cell % n_phi];
      diagram.cells[cell] = classify_phase(p, n_k);
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads == 0 ? worker_count() : threads, total));
  if (workers <= 1) {
    work();
    return diagram;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  return diagram;
}

}  // namespace creutz
