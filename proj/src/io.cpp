#include "creutz/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "creutz/errors.hpp"

namespace creutz::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json params_json(const LatticeParams& p) {
  return {{"L", p.L},
          {"J", p.J},
          {"m", p.m},
          {"phi", p.phi},
          {"U", p.U},
          {"bc", p.boundary == Boundary::open ? "open" : "periodic"}};
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json amplitudes_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v[i].real(), v[i].imag()});
  return out;
}

CVector amplitudes_from_json(const json& j) {
  if (!j.is_array()) throw InvalidParameter("amplitudes", "expected a list of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (e.is_number()) {
      v[i] = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      v[i] = cplx{e[0].get<double>(), e[1].get<double>()};
    } else {
      throw InvalidParameter("amplitudes", "entry " + std::to_string(i) + " is not a number or [re, im]");
    }
  }
  return v;
}

namespace {

json rows_json(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json trajectory_json(const Trajectory& traj, double support_eps) {
  json j;
  j["params"] = params_json(traj.params);
  j["initial"] = traj.initial;
  j["times"] = traj.times;
  j["occupations"] = rows_json(traj.occupations);
  if (traj.doublonness) j["doublonness"] = rows_json(*traj.doublonness);
  json support = json::array();
  for (SiteIndex s : cage_support(traj, support_eps)) support.push_back(site_label(s));
  j["support_set"] = std::move(support);
  return j;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t,site,occupation" << (traj.doublonness ? ",doublonness" : "") << '\n';
  for (Eigen::Index n = 0; n < traj.occupations.rows(); ++n)
    for (Eigen::Index s = 0; s < traj.occupations.cols(); ++s) {
      out << format_double(traj.times[n]) << ',' << site_label(site_from_index(static_cast<int>(s)))
          << ',' << format_double(traj.occupations(n, s));
      if (traj.doublonness) out << ',' << format_double((*traj.doublonness)(n, s));
      out << '\n';
    }
  return out.str();
}

std::string phase_diagram_csv(const PhaseDiagram& diagram) {
  std::ostringstream out;
  out << "m,phi,kind,nu,zak\n";
  for (std::size_t i = 0; i < diagram.m_values.size(); ++i)
    for (std::size_t k = 0; k < diagram.phi_values.size(); ++k) {
      const PhaseClassification& c = diagram.at(i, k);
      out << format_double(diagram.m_values[i]) << ',' << format_double(diagram.phi_values[k]) << ','
          << to_string(c.kind) << ',' << c.nu << ',' << format_double(c.zak) << '\n';
    }
  return out.str();
}

json phase_diagram_json(const PhaseDiagram& diagram) {
  json kind = json::array(), nu = json::array(), zak = json::array();
  for (std::size_t i = 0; i < diagram.m_values.size(); ++i) {
    json kr = json::array(), nr = json::array(), zr = json::array();
    for (std::size_t k = 0; k < diagram.phi_values.size(); ++k) {
      const PhaseClassification& c = diagram.at(i, k);
      kr.push_back(to_string(c.kind));
      nr.push_back(c.nu);
      if (std::isnan(c.zak))
        zr.push_back(nullptr);
      else
        zr.push_back(c.zak);
    }
    kind.push_back(std::move(kr));
    nu.push_back(std::move(nr));
    zak.push_back(std::move(zr));
  }
  return {{"m_values", diagram.m_values},
          {"phi_values", diagram.phi_values},
          {"kind", std::move(kind)},
          {"nu", std::move(nu)},
          {"zak", std::move(zak)}};
}

std::string fidelity_csv(const FidelitySeries& series) {
  std::ostringstream out;
  out << "t,F,leakage\n";
  for (std::size_t n = 0; n < series.times.size(); ++n)
    out << format_double(series.times[n]) << ',' << format_double(series.fidelity[n]) << ','
        << format_double(series.leakage[n]) << '\n';
  return out.str();
}

json fidelity_json(const FidelitySeries& series) {
  return {{"times", series.times},
          {"fidelity", series.fidelity},
          {"leakage", series.leakage},
          {"min_fidelity", series.min_fidelity()},
          {"max_leakage", series.max_leakage()},
          {"perturbative_warning", series.perturbative_warning}};
}

json occupancy2d_json(const Trajectory2D& traj) {
  const int L = traj.params.L;
  json frames = json::array();
  for (const RMatrix& occ : traj.occupancy) {
    json grid = json::array();
    for (int i = 1; i <= L; ++i) {
      json row = json::array();
      for (int j = 1; j <= L; ++j) {
        json cell = json::array();
        for (int zeta = 1; zeta <= 4; ++zeta) {
          const Lattice2DIndex s = from_zeta({i, j, zeta});
          cell.push_back(occ(linear_index(s.first), linear_index(s.second)));
        }
        row.push_back(std::move(cell));
      }
      grid.push_back(std::move(row));
    }
    frames.push_back(std::move(grid));
  }
  return {{"params", params_json(traj.params)},
          {"initial", traj.initial},
          {"times", traj.times},
          {"dims", {{"L", L}, {"sites_per_axis", 2 * L}, {"zeta", 4}}},
          {"occupancy", std::move(frames)},
          {"symmetry_defect", traj.symmetry_defect}};
}

std::string layout_csv(const ZetaLayout& layout) {
  std::ostringstream out;
  out << "site_a,site_b,re,im,kind\n";
  const auto label = [](const ZetaIndex& z) {
    return std::to_string(z.i) + ':' + std::to_string(z.j) + ':' + std::to_string(z.zeta);
  };
  for (const ZetaBond& b : layout.bonds)
    out << label(b.a) << ',' << label(b.b) << ',' << format_double(b.amplitude.real()) << ','
        << format_double(b.amplitude.imag()) << ',' << (b.nonlocal ? "nonlocal" : "local") << '\n';
  return out.str();
}

}  // namespace creutz::io
