#pragma once

#include <span>
#include <vector>

#include "creutz/lattice.hpp"

namespace creutz {

enum class Band { lower, upper };
enum class PhaseKind { trivial, topological, metallic };

const char* to_string(PhaseKind kind);

/// A gap below this (in units of J) counts as closed.
inline constexpr double kMetallicGapTolerance = 1e-8;
/// Probe grid used by classify_phase for the gap test.
inline constexpr int kGapProbePoints = 1024;

/// Gauge-invariant Berry phase of a closed loop of states:
/// -arg prod_n <u_n|u_{n+1}>, with the last overlap wrapping to the first
/// state. Result in [-pi, pi).
double wilson_loop_phase(std::span<const CVector> loop);

/// Zak phase of one band on an n_k point Brillouin-zone loop.
/// Throws MetallicSystem if the gap closes on the grid.
double zak_phase(const LatticeParams& p, Band band, int n_k = 256);

/// Band eigenvectors on k_grid(n_k), in whatever gauge the eigensolver
/// returns. Exposed for gauge-invariance checks.
std::vector<CVector> band_eigenvectors(const LatticeParams& p, Band band, int n_k);

/// Signed winding of (dz(k), dx(k)) around the origin. Positive for
/// (m=0, phi=pi). Throws PathThroughOrigin if the curve touches the origin.
int winding_number(const LatticeParams& p, int n_k = 256);

/// min over k_grid(n_k) of the direct gap 2|d(k)|.
double min_gap(const LatticeParams& p, int n_k = kGapProbePoints);

/// Exact minimum of 2|d(k)| over the continuous Brillouin zone. |d|^2 is a
/// quadratic in cos k, so this catches closings that fall between grid
/// points (e.g. the whole phi = 0 line).
double continuum_min_gap(const LatticeParams& p);

struct PhaseClassification {
  PhaseKind kind = PhaseKind::metallic;
  int nu = 0;
  /// Zak phase of the lower band in [-pi, pi); NaN for metallic systems.
  double zak = 0.0;
};

PhaseClassification classify_phase(const LatticeParams& p, int n_k = 256);

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int points = 1;

  /// Inclusive linspace; a single point sits at `min`.
  std::vector<double> values() const;
};

struct PhaseDiagram {
  std::vector<double> m_values;
  std::vector<double> phi_values;
  /// Row-major: cells[i_m * phi_values.size() + i_phi].
  std::vector<PhaseClassification> cells;

  const PhaseClassification& at(std::size_t i_m, std::size_t i_phi) const {
    return cells[i_m * phi_values.size() + i_phi];
  }
};

/// Raster of classify_phase over (m, phi). `base` supplies J. Grid points are
/// evaluated on up to `threads` workers (0 = worker_count()); the result
/// does not depend on the number of workers.
PhaseDiagram phase_diagram_scan(const LatticeParams& base, const AxisRange& m_range,
                                const AxisRange& phi_range, int n_k = 256,
                                unsigned threads = 0);

/// Worker count for parallel sweeps: CREUTZ_THREADS if set, else the
/// hardware concurrency.
unsigned worker_count();

}  // namespace creutz
