#include "creutz/states.hpp"

#include <cmath>

#include "creutz/errors.hpp"

namespace creutz {

namespace {

constexpr double kFlatTolerance = 1e-12;

// chi = sin(phi/2) = +1 at phi = pi and -1 at phi = -pi. The phi = -pi forms
// are the complex conjugates of the phi = pi ones.
double flat_band_chi(const LatticeParams& p) {
  if (std::abs(p.m) > kFlatTolerance || std::abs(std::cos(p.phi / 2.0)) > kFlatTolerance)
    throw FlatBandRequired("needs m = 0 and phi = +-pi");
  return std::sin(p.phi / 2.0) > 0.0 ? 1.0 : -1.0;
}

int wrap_rung(const LatticeParams& p, int rung) {
  if (p.boundary == Boundary::periodic) return (rung - 1 + p.L) % p.L + 1;
  return rung;
}

void require_bulk_site(const LatticeParams& p, int rung) {
  if (p.boundary == Boundary::periodic) {
    if (rung < 1 || rung > p.L) throw InvalidParameter("rung", "outside the ladder");
    return;
  }
  if (rung <= 1 || rung >= p.L) throw BulkOnly("rung " + std::to_string(rung) + " is not a bulk rung");
}

int index_of(int rung, Leg leg) { return linear_index({rung, leg}); }

}  // namespace

CVector site_state(const LatticeParams& p, SiteIndex site) {
  const LatticeParams q = canonical(p);
  if (site.rung < 1 || site.rung > q.L) throw InvalidParameter("site", site_label(site) + " is not on the ladder");
  CVector v = CVector::Zero(2 * q.L);
  v[linear_index(site)] = 1.0;
  return v;
}

CVector wannier_state(const LatticeParams& p, int rung, WannierSign sign) {
  const LatticeParams q = canonical(p);
  const double chi = flat_band_chi(q);
  if (q.boundary == Boundary::open) {
    if (q.L == 2) throw BulkOnly("a two-rung open ladder has no bulk plaquettes");
    if (rung < 1 || rung > q.L - 1) throw BulkOnly("plaquette " + std::to_string(rung) + " is off the ladder");
  } else if (rung < 1 || rung > q.L) {
    throw InvalidParameter("rung", "outside the ladder");
  }
  const double s = static_cast<double>(sign);
  const int next = wrap_rung(q, rung + 1);
  CVector v = CVector::Zero(2 * q.L);
  v[index_of(rung, Leg::A)] += 0.5;
  v[index_of(rung, Leg::B)] += 0.5 * I * chi;
  v[index_of(next, Leg::A)] += -0.5 * s * I * chi;
  v[index_of(next, Leg::B)] += -0.5 * s;
  return v;
}

std::array<WannierComponent, 4> site_in_wannier_basis(const LatticeParams& p, int rung, Leg leg) {
  const LatticeParams q = canonical(p);
  flat_band_chi(q);
  require_bulk_site(q, rung);
  const CVector site = site_state(q, {rung, leg});
  std::array<WannierComponent, 4> out;
  std::size_t k = 0;
  for (int plaquette : {wrap_rung(q, rung - 1), rung}) {
    for (WannierSign sign : {WannierSign::minus, WannierSign::plus}) {
      out[k++] = {plaquette, sign, wannier_state(q, plaquette, sign).dot(site)};
    }
  }
  return out;
}

CVector analytic_caged_evolution(const LatticeParams& p, int rung, Leg leg, double t) {
  const LatticeParams q = canonical(p);
  const double chi = flat_band_chi(q);
  require_bulk_site(q, rung);
  const double sa = chi * leg_sign(leg);
  const Leg other = opposite(leg);
  const int up = wrap_rung(q, rung + 1);
  const int down = wrap_rung(q, rung - 1);
  const double s = 0.5 * std::sin(2.0 * q.J * t);
  CVector v = CVector::Zero(2 * q.L);
  v[index_of(up, leg)] += -s * sa;
  v[index_of(up, other)] += s * I;
  v[index_of(down, leg)] += s * sa;
  v[index_of(down, other)] += s * I;
  v[index_of(rung, leg)] += std::cos(2.0 * q.J * t);
  return v;
}

namespace {

void require_rungless_open(const LatticeParams& q) {
  if (q.boundary != Boundary::open) throw InvalidParameter("bc", "edge states need an open ladder");
  if (q.m != 0.0) throw RungsPresent("closed-form edge states need m = 0");
}

}  // namespace

CVector edge_state(const LatticeParams& p, Side side) {
  const LatticeParams q = canonical(p);
  require_rungless_open(q);
  const int rung = side == Side::left ? 1 : q.L;
  const double phase = side == Side::left ? q.phi / 2.0 : -q.phi / 2.0;
  CVector v = CVector::Zero(2 * q.L);
  v[index_of(rung, Leg::A)] = 1.0 / std::sqrt(2.0);
  v[index_of(rung, Leg::B)] = -std::polar(1.0, phase) / std::sqrt(2.0);
  return v;
}

FockState doublon_edge_state(const LatticeParams& p, Side side) {
  const LatticeParams q = canonical(p);
  require_rungless_open(q);
  const TwoParticleBasis basis(2 * q.L);
  const int rung = side == Side::left ? 1 : q.L;
  const double phase = side == Side::left ? q.phi : -q.phi;
  FockState f{CVector::Zero(basis.size())};
  f.amplitudes[basis.doublon_index(index_of(rung, Leg::A))] = 1.0 / std::sqrt(2.0);
  f.amplitudes[basis.doublon_index(index_of(rung, Leg::B))] = -std::polar(1.0, phase) / std::sqrt(2.0);
  return f;
}

FockState noon_state(const LatticeParams& p) {
  FockState f = doublon_edge_state(p, Side::left);
  f.amplitudes += doublon_edge_state(p, Side::right).amplitudes;
  f.amplitudes.normalize();
  return f;
}

}  // namespace creutz
