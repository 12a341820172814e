#pragma once

#include <string>

#include <json.hpp>

#include "creutz/effective.hpp"
#include "creutz/mapping2d.hpp"
#include "creutz/topology.hpp"

namespace creutz::io {

using nlohmann::json;

/// printf("%.17g"): round-trip exact for doubles.
std::string format_double(double x);

json params_json(const LatticeParams& p);

/// Row-major list of rows, each entry an [re, im] pair.
json matrix_json(const CMatrix& m);
/// List of [re, im] pairs.
json amplitudes_json(const CVector& v);
/// Inverse of amplitudes_json. Throws InvalidParameter (field "amplitudes").
CVector amplitudes_from_json(const json& j);

/// {params, initial, times[], occupations[][], doublonness[][]?, support_set[]}
json trajectory_json(const Trajectory& traj, double support_eps);
/// Header t,site,occupation[,doublonness]; one row per (t, site).
std::string trajectory_csv(const Trajectory& traj);

/// Header m,phi,kind,nu,zak; zak is "nan" for metallic cells.
std::string phase_diagram_csv(const PhaseDiagram& diagram);
json phase_diagram_json(const PhaseDiagram& diagram);

/// Header t,F,leakage.
std::string fidelity_csv(const FidelitySeries& series);
json fidelity_json(const FidelitySeries& series);

/// {params, times[], dims{L, sites_per_axis, zeta}, occupancy[t][i][j][zeta],
///  symmetry_defect[]}; i and j run over rungs (0-based in the arrays).
json occupancy2d_json(const Trajectory2D& traj);

/// Header site_a,site_b,re,im,kind with sites written as i:j:zeta.
std::string layout_csv(const ZetaLayout& layout);

}  // namespace creutz::io
