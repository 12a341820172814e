#include "creutz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "creutz/angle.hpp"
#include "creutz/effective.hpp"
#include "creutz/errors.hpp"
#include "creutz/io.hpp"
#include "creutz/mapping2d.hpp"
#include "creutz/states.hpp"
#include "creutz/topology.hpp"

namespace creutz {

namespace {

using io::json;

// Raw option values; angles stay strings until parse_angle sees them so the
// error names the field.
struct Common {
  int L = 6;
  double J = 1.0;
  double m = 0.0;
  std::string phi = "pi";
  std::optional<double> U;
  std::string bc = "open";
  std::string output;
  std::string format;
};

struct Options {
  Common common;
  // spectrum
  std::string model;
  bool vectors = false;
  // zak
  std::string band = "lower";
  int nk = 256;
  // phase-diagram
  int res = 81;
  double m_min = -3.0;
  double m_max = 3.0;
  std::string phi_min = "-2pi";
  std::string phi_max = "2pi";
  // evolve / effective-compare
  std::string init;
  std::string space = "1d";
  std::optional<double> tmax;
  int samples = 1000;
  double eps = 1e-8;
  std::string probe;
  bool no_mu = false;
  bool no_offset = false;
  // layout
  bool periodic_zeta = false;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--L", c.L, "number of rungs")->capture_default_str();
  sub.add_option("--J", c.J, "leg and diagonal hopping")->capture_default_str();
  sub.add_option("--m", c.m, "rung hopping")->capture_default_str();
  sub.add_option("--phi", c.phi, "Peierls phase: pi, pi/2, -3pi/2 or radians")->capture_default_str();
  sub.add_option("--U", c.U, "on-site interaction");
  sub.add_option("--bc", c.bc, "boundary condition")
      ->check(CLI::IsMember({"open", "periodic"}))
      ->capture_default_str();
  sub.add_option("-o,--output", c.output, "output file (default stdout)");
  sub.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

LatticeParams lattice_params(const Common& c, double default_U) {
  LatticeParams p;
  p.L = c.L;
  p.J = c.J;
  p.m = c.m;
  p.phi = parse_angle(c.phi, "phi");
  p.U = c.U.value_or(default_U);
  p.boundary = c.bc == "periodic" ? Boundary::periodic : Boundary::open;
  return canonical(p);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw InvalidParameter("output", "cannot open '" + c.output + "' for writing");
  file << text;
}

std::string format_or(const Common& c, const std::string& fallback) {
  return c.format.empty() ? fallback : c.format;
}

// ---- initial-state grammar ------------------------------------------------

int parse_int(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidParameter(field, "expected an integer, got '" + s + "'");
}

// "j,leg"
SiteIndex parse_site(const std::string& text, const LatticeParams& p) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidParameter("init", "site must be written j,leg");
  const int rung = parse_int(text.substr(0, comma), "init");
  const std::string leg = text.substr(comma + 1);
  if (leg != "A" && leg != "B") throw InvalidParameter("init", "leg must be A or B");
  if (rung < 1 || rung > p.L) throw InvalidParameter("init", "rung " + std::to_string(rung) + " is off the ladder");
  return {rung, leg == "A" ? Leg::A : Leg::B};
}

Side parse_side(const std::string& text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw InvalidParameter("init", "side must be left or right, got '" + text + "'");
}

struct Initial {
  bool two_particle = false;
  CVector amplitudes;  // single-particle (2L) or Fock (L(2L+1))
};

CVector single_factor(const std::string& token, const LatticeParams& p) {
  if (token == "edgeL") return edge_state(p, Side::left);
  if (token == "edgeR") return edge_state(p, Side::right);
  if (token.rfind("site:", 0) == 0) return site_state(p, parse_site(token.substr(5), p));
  throw InvalidParameter("init", "unknown product factor '" + token + "'");
}

Initial parse_initial(const std::string& text, const LatticeParams& p) {
  const TwoParticleBasis basis(2 * p.L);
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (kind == "site") return {false, site_state(p, parse_site(rest, p))};
  if (kind == "doublon") return {true, doublon_state(basis, linear_index(parse_site(rest, p))).amplitudes};
  if (kind == "edge") return {false, edge_state(p, parse_side(rest))};
  if (kind == "doublon-edge") return {true, doublon_edge_state(p, parse_side(rest)).amplitudes};
  if (kind == "noon" && rest.empty()) return {true, noon_state(p).amplitudes};
  if (kind == "product") {
    // Two factors: edgeL | edgeR | site:j,leg, comma separated.
    std::vector<std::string> parts;
    std::stringstream ss(rest);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].rfind("site:", 0) == 0 && i + 1 < parts.size())
        factors.push_back(parts[i] + "," + parts[i + 1]), ++i;
      else
        factors.push_back(parts[i]);
    }
    if (factors.size() != 2) throw InvalidParameter("init", "product needs exactly two factors");
    return {true, product_state(basis, single_factor(factors[0], p), single_factor(factors[1], p)).amplitudes};
  }
  if (kind == "file") {
    std::ifstream file(rest);
    if (!file) throw InvalidParameter("init", "cannot read '" + rest + "'");
    json j;
    try {
      j = json::parse(file);
    } catch (const json::exception& e) {
      throw InvalidParameter("init", std::string("bad JSON: ") + e.what());
    }
    CVector v = io::amplitudes_from_json(j.is_object() && j.contains("amplitudes") ? j["amplitudes"] : j);
    if (v.size() == 2 * p.L) return {false, v};
    if (v.size() == basis.size()) return {true, v};
    throw InvalidParameter("init", "amplitude count matches neither 2L nor the two-particle basis");
  }
  throw InvalidParameter("init", "unknown initial state '" + text + "'");
}

// ---- subcommands ----------------------------------------------------------

std::string cmd_spectrum(const Options& o) {
  const std::string model = o.model.empty() ? "single" : o.model;
  const LatticeParams p = lattice_params(o.common, 0.0);
  CMatrix H;
  if (model == "single")
    H = single_particle_hamiltonian(p);
  else if (model == "two")
    H = two_particle_hamiltonian(p);
  else if (model == "effective")
    H = effective_doublon_hamiltonian(p);
  else
    H = hamiltonian_2d(p);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(
      H, o.vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  const RVector& e = solver.eigenvalues();
  json j;
  j["params"] = io::params_json(p);
  j["model"] = model;
  j["dimension"] = H.rows();
  j["energies"] = std::vector<double>(e.data(), e.data() + e.size());
  if (o.vectors) j["vectors"] = io::matrix_json(solver.eigenvectors().transpose());
  return dump(j);
}

std::string cmd_zak(const Options& o) {
  const LatticeParams p = lattice_params(o.common, 0.0);
  const Band band = o.band == "upper" ? Band::upper : Band::lower;
  const double zak = zak_phase(p, band, o.nk);
  const PhaseClassification c = classify_phase(p, o.nk);
  json j;
  j["params"] = io::params_json(p);
  j["band"] = o.band;
  j["n_k"] = o.nk;
  j["zak"] = zak;
  j["winding"] = c.nu;
  j["kind"] = to_string(c.kind);
  return dump(j);
}

std::string cmd_phase_diagram(const Options& o) {
  const LatticeParams base = lattice_params(o.common, 0.0);
  if (o.res < 1) throw InvalidParameter("res", "must be positive");
  const AxisRange m_range{o.m_min, o.m_max, o.res};
  const AxisRange phi_range{parse_angle(o.phi_min, "phi-min"), parse_angle(o.phi_max, "phi-max"), o.res};
  const PhaseDiagram d = phase_diagram_scan(base, m_range, phi_range, o.nk);
  if (format_or(o.common, "csv") == "csv") return io::phase_diagram_csv(d);
  json j = io::phase_diagram_json(d);
  j["params"] = io::params_json(base);
  return dump(j);
}

std::vector<double> sample_times(const Options& o, double default_tmax) {
  return uniform_times(o.tmax.value_or(default_tmax), o.samples);
}

std::string cmd_evolve(const Options& o, std::ostream& err) {
  LatticeParams p = lattice_params(o.common, 0.0);
  if (o.init.empty()) throw InvalidParameter("init", "an initial state is required");
  const Initial init = parse_initial(o.init, p);
  // Two-particle runs default to the strongly interacting regime.
  if (init.two_particle && !o.common.U) p.U = 20.0;
  if (!o.model.empty() && o.model != "single" && o.model != "two")
    throw InvalidParameter("model", "evolve supports single or two");
  if ((o.model == "single" && init.two_particle) || (o.model == "two" && !init.two_particle))
    throw InvalidParameter("init", "initial state does not match --model " + o.model);
  const auto times = sample_times(o, 10.0);

  if (o.space == "2d") {
    if (!init.two_particle) throw InvalidParameter("space", "the 2D picture needs a two-particle state");
    Trajectory2D traj = evolve_2d(p, fock_to_first_quant(FockState{init.amplitudes}), times);
    traj.initial = o.init;
    return dump(io::occupancy2d_json(traj));
  }

  Trajectory traj = init.two_particle ? two_particle_evolve(p, FockState{init.amplitudes}, times)
                                      : evolve(single_particle_hamiltonian(p), init.amplitudes, times);
  traj.params = p;
  traj.initial = o.init;

  std::optional<double> half_period;
  if (!o.probe.empty()) half_period = breathing_half_period(traj, parse_site(o.probe, p));

  if (format_or(o.common, "json") == "csv") {
    if (half_period) err << "half_period " << io::format_double(*half_period) << "\n";
    return io::trajectory_csv(traj);
  }
  json j = io::trajectory_json(traj, o.eps);
  if (half_period) {
    j["probe"] = o.probe;
    j["half_period"] = *half_period;
  }
  return dump(j);
}

std::string cmd_effective_compare(const Options& o, std::ostream& err) {
  const LatticeParams p = lattice_params(o.common, 40.0);
  const EffectiveDoublonParams e = effective_params(p);
  if (p.U < 10.0 * p.J)
    err << "warning: U = " << p.U << " is below 10 J; the effective model is perturbative in J/U\n";
  const Initial init = parse_initial(o.init.empty() ? "doublon:3,A" : o.init, p);
  const TwoParticleBasis basis(2 * p.L);
  CVector psi0 = init.amplitudes;
  // A file with 2L amplitudes is read as doublon amplitudes; named
  // single-particle states are not.
  if (!init.two_particle && !o.init.starts_with("file:"))
    throw InvalidParameter("init", "effective-compare needs a doublon-sector state");
  if (init.two_particle) {
    const DoublonProjector projector(basis);
    psi0 = projector.project(FockState{init.amplitudes});
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
      throw InvalidParameter("init", "initial state must lie in the doublon subspace");
  }
  EffectiveOptions options;
  options.include_edge_potential = !o.no_mu;
  options.include_offset = !o.no_offset;
  const auto times = sample_times(o, 10.0 * p.U / (p.J * p.J));
  const FidelitySeries series = compare_effective_vs_full(p, psi0, times, options);

  if (format_or(o.common, "json") == "csv") return io::fidelity_csv(series);
  json j = io::fidelity_json(series);
  j["params"] = io::params_json(p);
  j["initial"] = o.init.empty() ? "doublon:3,A" : o.init;
  j["mu"] = e.mu;
  j["delta"] = e.delta;
  return dump(j);
}

std::string cmd_map2d_check(const Options& o) {
  const LatticeParams p = lattice_params(o.common, 0.0);
  LatticeParams free = p;
  free.U = 0.0;
  const RVector anti = antisymmetric_sector_spectrum(p);
  const RVector anti_free = antisymmetric_sector_spectrum(free);
  json j;
  j["params"] = io::params_json(p);
  j["dimension"] = (2 * p.L) * (2 * p.L);
  j["symmetric_dimension"] = p.L * (2 * p.L + 1);
  j["symmetric_deviation"] = symmetric_sector_spectrum_check(p);
  j["antisymmetric_u_shift"] = (anti - anti_free).cwiseAbs().maxCoeff();
  return dump(j);
}

std::string cmd_layout(const Options& o) {
  const LatticeParams p = lattice_params(o.common, 0.0);
  const ZetaLayout layout = zeta_layout(p, o.periodic_zeta);
  if (format_or(o.common, "csv") == "csv") return io::layout_csv(layout);
  json bonds = json::array();
  for (const ZetaBond& b : layout.bonds)
    bonds.push_back({{"a", {b.a.i, b.a.j, b.a.zeta}},
                     {"b", {b.b.i, b.b.j, b.b.zeta}},
                     {"amplitude", {b.amplitude.real(), b.amplitude.imag()}},
                     {"kind", b.nonlocal ? "nonlocal" : "local"}});
  json j;
  j["params"] = io::params_json(p);
  j["periodic_synthetic"] = layout.periodic_synthetic;
  j["nonlocal_per_cell"] = layout.nonlocal_per_cell;
  j["local_per_cell"] = layout.local_per_cell;
  j["bonds"] = std::move(bonds);
  return dump(j);
}

// ---- config file ----------------------------------------------------------

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key = value lines become "--key value" (a bare key or "true" is a flag,
// "false" drops it); '#' starts a comment.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InvalidParameter("config", "cannot read '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int number = 0;
  while (std::getline(file, line)) {
    ++number;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string key = trim(line.substr(0, eq));
    const std::string value = eq == std::string::npos ? "true" : trim(line.substr(eq + 1));
    if (key.empty()) throw InvalidParameter("config", "line " + std::to_string(number) + " has no key");
    if (value == "false") continue;
    args.push_back("--" + key);
    if (value != "true") args.push_back(value);
  }
  return args;
}

// Splices the --config file's arguments in right after the subcommand so
// that later command-line flags take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!path) return args;
  const auto injected = read_config(*path);
  const auto sub = std::find_if(args.begin(), args.end(),
                                [](const std::string& a) { return !a.empty() && a.front() != '-'; });
  const auto at = sub == args.end() ? args.end() : sub + 1;
  args.insert(at, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Creutz ladder and two-boson Creutz-Hubbard simulations", "creutz"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "sorted eigenvalues of a model Hamiltonian");
  add_common(*spectrum, o.common);
  spectrum->add_option("--model", o.model, "single, two, effective or map2d")
      ->check(CLI::IsMember({"single", "two", "effective", "map2d"}));
  spectrum->add_flag("--vectors", o.vectors, "also write eigenvectors (one row per eigenvalue)");

  auto* zak = app.add_subcommand("zak", "Zak phase and winding number");
  add_common(*zak, o.common);
  zak->add_option("--band", o.band)->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
  zak->add_option("--nk", o.nk, "k points on the Brillouin-zone loop")->capture_default_str();

  auto* diagram = app.add_subcommand("phase-diagram", "classification raster over (m, phi)");
  add_common(*diagram, o.common);
  diagram->add_option("--res", o.res, "grid points per axis")->capture_default_str();
  diagram->add_option("--m-min", o.m_min)->capture_default_str();
  diagram->add_option("--m-max", o.m_max)->capture_default_str();
  diagram->add_option("--phi-min", o.phi_min)->capture_default_str();
  diagram->add_option("--phi-max", o.phi_max)->capture_default_str();
  diagram->add_option("--nk", o.nk)->capture_default_str();

  auto* evolve_cmd = app.add_subcommand("evolve", "time evolution of an initial state");
  add_common(*evolve_cmd, o.common);
  evolve_cmd->add_option("--model", o.model, "single or two (default: from --init)")
      ->check(CLI::IsMember({"single", "two"}));
  evolve_cmd->add_option("--init", o.init,
                         "site:j,leg | doublon:j,leg | edge:left|right | doublon-edge:left|right | "
                         "noon | product:edgeL,site:j,leg | file:path");
  evolve_cmd->add_option("--space", o.space, "1d, or 2d for the two-ladder product picture")
      ->check(CLI::IsMember({"1d", "2d"}));
  evolve_cmd->add_option("--tmax", o.tmax, "final time in 1/J (default 10)");
  evolve_cmd->add_option("--samples", o.samples, "number of time intervals")->capture_default_str();
  evolve_cmd->add_option("--eps", o.eps, "support threshold")->capture_default_str();
  evolve_cmd->add_option("--probe", o.probe, "site j,leg for the breathing half-period");

  auto* compare = app.add_subcommand("effective-compare", "effective doublon model vs full dynamics");
  add_common(*compare, o.common);
  compare->add_option("--init", o.init, "doublon:j,leg | doublon-edge:left|right | noon | file:path");
  compare->add_option("--tmax", o.tmax, "final time (default 10 U/J^2)");
  compare->add_option("--samples", o.samples)->capture_default_str();
  compare->add_flag("--no-mu", o.no_mu, "drop the end-site chemical potential");
  compare->add_flag("--no-offset", o.no_offset, "drop U and the uniform offset");

  auto* map2d = app.add_subcommand("map2d-check", "two-ladder product picture vs Fock spectrum");
  add_common(*map2d, o.common);

  auto* layout = app.add_subcommand("layout", "bond list of the (i, j, zeta) layout");
  add_common(*layout, o.common);
  layout->add_flag("--periodic-zeta", o.periodic_zeta, "close the synthetic axis into a ring");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::vector<std::string> argv_store{"creutz"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    std::string text;
    if (spectrum->parsed())
      text = cmd_spectrum(o);
    else if (zak->parsed())
      text = cmd_zak(o);
    else if (diagram->parsed())
      text = cmd_phase_diagram(o);
    else if (evolve_cmd->parsed())
      text = cmd_evolve(o, err);
    else if (compare->parsed())
      text = cmd_effective_compare(o, err);
    else if (map2d->parsed())
      text = cmd_map2d_check(o);
    else
      text = cmd_layout(o);
    emit(o.common, text, out);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace creutz
