// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "creutz/dynamics.hpp"
#include "creutz/effective.hpp"
#include "creutz/hubbard.hpp"
#include "creutz/lattice.hpp"
#include "creutz/mapping2d.hpp"
#include "creutz/states.hpp"
#include "creutz/topology.hpp"
#include "golden_cases.hpp"
#include "testing.hpp"

using namespace creutz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string sci(double x) { return fmt("%.3g", x); }

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome(double& seconds)>& body) {
  double seconds = 0.0;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o = body(seconds);
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (seconds == 0.0)
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), seconds);
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int idx(int rung, Leg leg) { return linear_index({rung, leg}); }

Outcome flat_bands(double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const LatticeParams p{6, 1.0, 0.0, pi, 0.0, Boundary::periodic};
  const RVector e = testing::sorted(testing::eigenvalues(single_particle_hamiltonian(p)));
  double dev = 0.0;
  for (int i = 0; i < 12; ++i) dev = std::max(dev, std::abs(e[i] - (i < 6 ? -2.0 : 2.0)));
  seconds = since(t0);
  return {dev < 1e-10 && seconds < 1.0,
          "max |E - (+-2J)| = " + sci(dev) + " (< 1e-10), runtime < 1 s"};
}

Outcome breathing(double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const LatticeParams p{6, 1.0, 0.0, pi, 0.0, Boundary::open};
  const Trajectory traj =
      evolve(single_particle_hamiltonian(p), site_state(p, {3, Leg::A}), uniform_times(3.0, 3000));
  const double half = breathing_half_period(traj, {2, Leg::A});
  seconds = since(t0);
  const bool ok = std::abs(half - pi / 2) < 2e-3 && std::abs(half - 1.572) < 2e-3 && seconds < 5.0;
  return {ok, "T/2 = " + fmt("%.6f", half) + " vs pi/2 and 1.572 (tol 2e-3), runtime < 5 s"};
}

Outcome caging(double&) {
  const LatticeParams p{6, 1.0, 0.0, pi, 0.0, Boundary::open};
  const Trajectory traj =
      evolve(single_particle_hamiltonian(p), site_state(p, {3, Leg::A}), uniform_times(100.0, 10000));
  const std::vector<int> cage{idx(3, Leg::A), idx(2, Leg::A), idx(2, Leg::B), idx(4, Leg::A), idx(4, Leg::B)};
  double outside = 0.0;
  for (Eigen::Index n = 0; n < traj.occupations.rows(); ++n) {
    double w = 0.0;
    for (int s = 0; s < 12; ++s)
      if (std::find(cage.begin(), cage.end(), s) == cage.end()) w += traj.occupations(n, s);
    outside = std::max(outside, w);
  }

  LatticeParams rungs = p;
  rungs.m = 0.5;
  const Trajectory leak =
      evolve(single_particle_hamiltonian(rungs), site_state(rungs, {3, Leg::A}), uniform_times(20.0, 2000));
  double first_leak = INFINITY;
  for (Eigen::Index n = 0; n < leak.occupations.rows() && std::isinf(first_leak); ++n) {
    double w = 0.0;
    for (int s = 0; s < 12; ++s)
      if (std::find(cage.begin(), cage.end(), s) == cage.end()) w += leak.occupations(n, s);
    if (w > 1e-3) first_leak = leak.times[n];
  }
  return {outside < 1e-10 && first_leak < 20.0,
          "max outside cage (t <= 100) = " + sci(outside) + " (< 1e-10); m = 0.5 leaks past 1e-3 at t = " +
              fmt("%.2f", first_leak) + " (< 20)"};
}

Outcome phase_diagram(double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const PhaseDiagram d = phase_diagram_scan(LatticeParams{}, {-4.0, 4.0, 81}, {-2 * pi, 2 * pi, 81});
  seconds = since(t0);
  // Closed-form classification: the gap 2|d(k)| closes iff |m| = 2J, or
  // sin(phi/2) = 0 with |m| <= 2J; inside |m| < 2J, nu = sign sin(phi/2).
  int kind_errors = 0, zak_errors = 0, metallic = 0, plus = 0, minus = 0;
  for (std::size_t i = 0; i < d.m_values.size(); ++i)
    for (std::size_t k = 0; k < d.phi_values.size(); ++k) {
      const double m = d.m_values[i];
      const double s = std::sin(canonical_phase(d.phi_values[k]) / 2);
      const bool closed = std::abs(std::abs(m) - 2.0) < 1e-9 || (std::abs(s) < 1e-9 && std::abs(m) <= 2.0);
      const int nu = closed || std::abs(m) > 2.0 ? 0 : (s > 0 ? 1 : -1);
      const PhaseClassification& c = d.at(i, k);
      if (closed) {
        ++metallic;
        if (c.kind != PhaseKind::metallic) ++kind_errors;
        continue;
      }
      if (c.kind == PhaseKind::metallic || c.nu != nu) ++kind_errors;
      nu > 0 ? ++plus : nu < 0 ? ++minus : 0;
      const bool zak_pi = std::abs(std::abs(c.zak) - pi) < 1e-4;
      const bool zak_zero = std::abs(c.zak) < 1e-4;
      if (nu != 0 ? !zak_pi : !zak_zero) ++zak_errors;
    }
  return {kind_errors == 0 && zak_errors == 0 && seconds < 30.0,
          "81x81: " + std::to_string(kind_errors) + " class mismatches, " + std::to_string(zak_errors) +
              " Zak mismatches (tol 1e-4); " + std::to_string(metallic) + " metallic, " +
              std::to_string(plus) + " nu=+1, " + std::to_string(minus) + " nu=-1; runtime < 30 s"};
}

Outcome edge_states(double&) {
  double residual = 0.0;
  int bad_support = 0;
  for (int k = 0; k < 32; ++k) {
    const LatticeParams p{12, 1.0, 0.0, -2 * pi + 4 * pi * (k + 0.5) / 32, 0.0, Boundary::open};
    const CMatrix H = single_particle_hamiltonian(p);
    for (Side side : {Side::left, Side::right}) {
      const CVector psi = edge_state(p, side);
      residual = std::max(residual, (H * psi).norm());
      if ((psi.array().abs() > 0.0).count() != 2) ++bad_support;
    }
  }
  const LatticeParams s{12, 1.0, 1.0, pi, 0.0, Boundary::open};
  const int nu = classify_phase(s).nu;
  const EdgeProfile e = edge_profile_fit(single_particle_hamiltonian(s));
  // Count strictly decreasing steps away from each end.
  int left_steps = 0, right_steps = 0;
  while (left_steps + 1 < 12 && e.rung_weights[0][left_steps + 1] < e.rung_weights[0][left_steps]) ++left_steps;
  while (right_steps + 1 < 12 && e.rung_weights[1][10 - right_steps] < e.rung_weights[1][11 - right_steps])
    ++right_steps;
  const bool ok = residual < 1e-12 && bad_support == 0 && nu == 1 && left_steps >= 4 && right_steps >= 4;
  return {ok, "max ||H psi_edge|| over 32 phi = " + sci(residual) + " (< 1e-12), " +
                  std::to_string(bad_support) + " with support != 2; S point nu = " + std::to_string(nu) +
                  ", monotone rung decay over " + std::to_string(left_steps) + "/" +
                  std::to_string(right_steps) + " rungs (>= 4), xi = " + fmt("%.4f", e.decay_length)};
}

Outcome doublon_caging(double&) {
  const LatticeParams p{6, 1.0, 0.0, pi / 2, 20.0, Boundary::open};
  const TwoParticleBasis basis(12);
  const Trajectory traj =
      two_particle_evolve(p, doublon_state(basis, idx(3, Leg::A)), uniform_times(100.0, 2000));
  const std::vector<int> cage{idx(3, Leg::A), idx(2, Leg::A), idx(2, Leg::B), idx(4, Leg::A), idx(4, Leg::B)};
  double outside = 0.0;
  for (Eigen::Index n = 0; n < traj.occupations.rows(); ++n) {
    double w = 0.0;
    for (int s = 0; s < 12; ++s)
      if (std::find(cage.begin(), cage.end(), s) == cage.end()) w += traj.occupations(n, s);
    outside = std::max(outside, w / 2.0);
  }

  LatticeParams single = p;
  single.U = 0.0;
  const Trajectory free =
      evolve(single_particle_hamiltonian(single), site_state(single, {3, Leg::A}), uniform_times(10.0, 1000));
  const std::size_t support = cage_support(free, 1e-2).size();
  return {outside < 0.02 && support > 5,
          "pair weight outside the 5-site cage (t <= 100) = " + fmt("%.4f", outside) +
              " (< 0.02); single particle support at t <= 10 = " + std::to_string(support) + " sites (> 5)"};
}

Outcome collapse(double&) {
  const LatticeParams p{6, 1.0, 0.0, pi / 2, 1.0, Boundary::open};
  const TwoParticleBasis basis(12);
  const Trajectory traj =
      two_particle_evolve(p, doublon_state(basis, idx(3, Leg::A)), uniform_times(50.0, 5000));
  double when = INFINITY, lowest = 1.0;
  for (Eigen::Index n = 0; n < traj.doublonness->rows(); ++n) {
    const double top = traj.doublonness->row(n).maxCoeff();
    lowest = std::min(lowest, top);
    if (top < 0.5 && std::isinf(when)) when = traj.times[n];
  }
  return {when <= 50.0, "max_site D first below 0.5 at t = " + fmt("%.3f", when) + " (<= 50); lowest " +
                            fmt("%.4f", lowest)};
}

Outcome edge_stationarity(double&) {
  const LatticeParams p{6, 1.0, 0.0, pi / 2, 20.0, Boundary::open};
  const auto times = uniform_times(50.0, 1000);
  const auto drift = [&](const FockState& psi) {
    const Trajectory traj = two_particle_evolve(p, psi, times);
    double d = 0.0;
    for (Eigen::Index n = 0; n < traj.occupations.rows(); ++n)
      d = std::max(d, (traj.occupations.row(n) - traj.occupations.row(0)).cwiseAbs().maxCoeff());
    return d;
  };
  const double left = drift(doublon_edge_state(p, Side::left));
  const double right = drift(doublon_edge_state(p, Side::right));
  const double noon = drift(noon_state(p));
  const double worst = std::max({left, right, noon});
  return {worst < 1e-3, "max occupation drift (t <= 50, U = 20): left " + sci(left) + ", right " + sci(right) +
                            ", NOON " + sci(noon) + " (< 1e-3)"};
}

Outcome effective_fidelity(double&) {
  const LatticeParams p{6, 1.0, 0.0, pi / 2, 40.0, Boundary::open};
  CVector psi0 = CVector::Zero(12);
  psi0[idx(3, Leg::A)] = 1.0;
  const FidelitySeries series = compare_effective_vs_full(p, psi0, uniform_times(10.0 * p.U, 4000));
  const double bound = 4.0 * std::pow(2.0 / p.U, 2);

  LatticeParams ring = p;
  ring.boundary = Boundary::periodic;
  const RVector e = testing::sorted(testing::eigenvalues(effective_doublon_hamiltonian(ring)));
  const double spread = std::max(e[5] - e[0], e[11] - e[6]);

  const bool ok = series.min_fidelity() >= 0.98 && series.max_leakage() <= bound && spread < 1e-10;
  return {ok, "U = 40, t <= 400: min F = " + fmt("%.4f", series.min_fidelity()) + " (>= 0.98), max leakage = " +
                  fmt("%.5f", series.max_leakage()) + " (<= " + fmt("%.4f", bound) +
                  "); effective band spread at phi = pi/2 = " + sci(spread) + " (< 1e-10)"};
}

Outcome mapping(double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  double spectrum = 0.0, dynamics = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    LatticeParams p = testing::random_params(rng, 4, 4);
    spectrum = std::max(spectrum, symmetric_sector_spectrum_check(p));

    const TwoParticleBasis basis(2 * p.L);
    const FockState psi0{testing::random_state(basis.size(), rng)};
    const auto times = uniform_times(5.0, 10);
    const Trajectory fock = two_particle_evolve(p, psi0, times);
    const Trajectory back = to_fock_trajectory(evolve_2d(p, fock_to_first_quant(psi0), times));
    for (std::size_t n = 0; n < times.size(); ++n)
      dynamics = std::max(dynamics, (fock.states[n] - back.states[n]).cwiseAbs().maxCoeff());
  }
  seconds = since(t0);
  return {spectrum < 1e-9 && dynamics < 1e-8 && seconds < 60.0,
          "20 draws at L = 4: spectrum deviation " + sci(spectrum) + " (< 1e-9), 2D vs Fock evolution " +
              sci(dynamics) + " (< 1e-8), runtime < 60 s"};
}

Outcome determinism(double&) {
  int differing = 0, stale = 0, failed = 0;
  for (const auto& c : testing::golden_cases()) {
    int a = -1, b = -1;
    const std::string first = testing::run_golden(c, a);
    const std::string second = testing::run_golden(c, b);
    if (a != 0 || b != 0) ++failed;
    if (first != second) ++differing;
    if (first != testing::read_file(std::string(CREUTZ_GOLDEN_DIR) + "/" + c.file)) ++stale;
  }
  const int total = static_cast<int>(testing::golden_cases().size());
  return {differing == 0 && stale == 0 && failed == 0,
          std::to_string(total) + " golden cases: " + std::to_string(differing) + " differ between runs, " +
              std::to_string(stale) + " differ from the committed file, " + std::to_string(failed) +
              " nonzero exits"};
}

}  // namespace

int main() {
  criterion("flat-bands", flat_bands);
  criterion("breathing-half-period", breathing);
  criterion("exact-caging", caging);
  criterion("phase-diagram", phase_diagram);
  criterion("edge-states", edge_states);
  criterion("doublon-caging", doublon_caging);
  criterion("doublon-collapse", collapse);
  criterion("doublon-edge-noon-stationary", edge_stationarity);
  criterion("effective-fidelity", effective_fidelity);
  criterion("mapping-equivalence", mapping);
  criterion("determinism", determinism);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
