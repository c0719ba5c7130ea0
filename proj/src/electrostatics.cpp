#include "alfvac/electrostatics.hpp"

#include <algorithm>
#include <numbers>

#include "alfvac/classical.hpp"
#include "alfvac/ladder.hpp"

namespace alfvac::electrostatics {

namespace {

void check_lmax(int lmax) {
  if (lmax < 0 || lmax > kMaxDegree)
    throw std::invalid_argument("lmax must lie in [0, " + std::to_string(kMaxDegree) + "]");
}

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

NumericHalfPower ladder_legendre(int ell) {
  LadderALF top = build(ell, ell);
  if (auto p = top.normalized_poly()) return NumericHalfPower({*p, 0});
  return NumericHalfPower(top.g, 1.0 / std::sqrt(top.c_squared.to_double()));
}

// Accumulates q r'^l P_l(cos theta') into terms[0..lmax] for one source.
void accumulate_charge(const LegendreBasis& basis, const Vec3& unit, const PointCharge& c, int lmax,
                       double* terms) {
  const double rp = c.position.norm();
  if (rp == 0.0) {
    terms[0] += c.charge;
    return;
  }
  const double cosine = clamp_unit(dot(unit, c.position) / rp);
  double power = 1.0;
  for (int l = 0; l <= lmax; ++l) {
    terms[l] += c.charge * power * basis(l, cosine);
    power *= rp;
  }
}

struct LoopNode {
  Vec3 position;
  Vec3 dl;
};

LoopNode loop_node(const CurrentLoop& loop, int k, int n) {
  const double t = 2.0 * std::numbers::pi * k / n;
  const double c = std::cos(t), s = std::sin(t);
  const double w = 2.0 * std::numbers::pi * loop.radius / n;
  return {{loop.radius * c, loop.radius * s, 0.0}, {-w * s, w * c, 0.0}};
}

void accumulate_loop_node(const LegendreBasis& basis, const Vec3& unit, const LoopNode& node,
                          double a, int lmax, double* tx, double* ty, double* tz) {
  const double cosine = clamp_unit(dot(unit, node.position) / a);
  double power = 1.0;
  for (int l = 0; l <= lmax; ++l) {
    const double w = power * basis(l, cosine);
    tx[l] += w * node.dl.x;
    ty[l] += w * node.dl.y;
    tz[l] += w * node.dl.z;
    power *= a;
  }
}

}  // namespace

Constants Constants::si() {
  return {1.0 / (4.0 * std::numbers::pi * kVacuumPermittivity), kVacuumPermeability / (4.0 * std::numbers::pi)};
}

ChargeSystem::ChargeSystem(std::vector<PointCharge> charges) : charges_(std::move(charges)) {
  if (charges_.empty()) throw std::invalid_argument("charge system needs at least one charge");
  for (const auto& c : charges_) {
    if (!std::isfinite(c.charge) || !std::isfinite(c.position.x) || !std::isfinite(c.position.y) ||
        !std::isfinite(c.position.z))
      throw std::invalid_argument("charge with non-finite data");
    extent_ = std::max(extent_, c.position.norm());
  }
}

ChargeSystem ChargeSystem::merged(const ChargeSystem& other) const {
  auto all = charges_;
  all.insert(all.end(), other.charges_.begin(), other.charges_.end());
  return ChargeSystem(std::move(all));
}

CurrentLoop::CurrentLoop(double radius_, double current_) : radius(radius_), current(current_) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("loop radius must be positive");
  if (!std::isfinite(current)) throw std::invalid_argument("loop current must be finite");
}

FieldPoint::FieldPoint(double r_, double theta_, double phi_) : r(r_), theta(theta_), phi(phi_) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("field point needs r > 0");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw std::invalid_argument("field point needs 0 <= theta <= pi");
  if (!std::isfinite(phi)) throw std::invalid_argument("field point needs finite phi");
}

Vec3 FieldPoint::unit() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Vec3 FieldPoint::cartesian() const { return r * unit(); }

LegendreBasis::LegendreBasis(int lmax, LegendreSource source) {
  check_lmax(lmax);
  polys_.reserve(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l)
    polys_.push_back(source == LegendreSource::ladder ? ladder_legendre(l)
                                                      : NumericHalfPower({classical::legendre_poly(l), 0}));
}

const LegendreBasis& legendre_basis(int lmax, LegendreSource source) {
  check_lmax(lmax);
  if (source == LegendreSource::ladder) {
    static const LegendreBasis ladder(kMaxDegree, LegendreSource::ladder);
    return ladder;
  }
  static const LegendreBasis classic(kMaxDegree, LegendreSource::classical);
  return classic;
}

double sphere_potential(double Q, double R, double E0, const FieldPoint& p, const Constants& constants) {
  if (!(R > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  if (p.r < R) throw inside_conductor_error("field point lies inside the conducting sphere");
  static const NumericHalfPower one_node = [] {
    LadderALF f = build(1, 1);
    return NumericHalfPower(f.g, 1.0 / std::sqrt(f.c_squared.to_double()));
  }();
  const double angular = one_node(clamp_unit(std::cos(p.theta)));
  return constants.coulomb * Q / p.r - E0 * (p.r - R * R * R / (p.r * p.r)) * angular;
}

ScalarExpansion multipole_scalar(const ChargeSystem& sys, const FieldPoint& p, int lmax,
                                 const ExpansionOptions& options) {
  check_lmax(lmax);
  if (!(p.r > sys.extent()))
    throw convergence_domain_error("field point must lie outside every charge (r > extent)");
  const LegendreBasis& basis = legendre_basis(lmax, options.source);
  const Vec3 unit = p.unit();
  std::vector<double> terms(static_cast<std::size_t>(lmax) + 1, 0.0);
  const auto& charges = sys.charges();
  const long n = static_cast<long>(charges.size());
  double* t = terms.data();
  if (options.execution == Execution::parallel) {
#pragma omp parallel for reduction(+ : t[:lmax + 1]) schedule(static)
    for (long i = 0; i < n; ++i) accumulate_charge(basis, unit, charges[static_cast<std::size_t>(i)], lmax, t);
  } else {
    for (long i = 0; i < n; ++i) accumulate_charge(basis, unit, charges[static_cast<std::size_t>(i)], lmax, t);
  }
  ScalarExpansion out;
  out.table.lmax = lmax;
  out.table.terms.resize(terms.size());
  double inv_r = 1.0 / p.r;
  double radial = inv_r;
  for (int l = 0; l <= lmax; ++l) {
    out.table.terms[l] = options.constants.coulomb * terms[l];
    out.value += out.table.terms[l] * radial;
    radial *= inv_r;
  }
  return out;
}

double direct_coulomb(const ChargeSystem& sys, const FieldPoint& p, const ExpansionOptions& options) {
  const Vec3 x = p.cartesian();
  const auto& charges = sys.charges();
  const long n = static_cast<long>(charges.size());
  for (const auto& c : charges)
    if ((x - c.position).norm() == 0.0) throw singularity_error("field point coincides with a charge");
  double sum = 0.0;
  if (options.execution == Execution::parallel) {
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& c = charges[static_cast<std::size_t>(i)];
      sum += c.charge / (x - c.position).norm();
    }
  } else {
    for (const auto& c : charges) sum += c.charge / (x - c.position).norm();
  }
  return options.constants.coulomb * sum;
}

VectorExpansion multipole_vector_loop(const CurrentLoop& loop, const FieldPoint& p, int lmax, int quad_points,
                                      const ExpansionOptions& options) {
  check_lmax(lmax);
  if (quad_points < 64) throw std::invalid_argument("loop expansion needs at least 64 quadrature points");
  if (!(p.r > loop.radius)) throw convergence_domain_error("field point must lie outside the loop radius");
  const LegendreBasis& basis = legendre_basis(lmax, options.source);
  const Vec3 unit = p.unit();
  const auto size = static_cast<std::size_t>(lmax) + 1;
  std::vector<double> ax(size, 0.0), ay(size, 0.0), az(size, 0.0);
  double* tx = ax.data();
  double* ty = ay.data();
  double* tz = az.data();
  const double a = loop.radius;
  if (options.execution == Execution::parallel) {
#pragma omp parallel for reduction(+ : tx[:lmax + 1], ty[:lmax + 1], tz[:lmax + 1]) schedule(static)
    for (int k = 0; k < quad_points; ++k)
      accumulate_loop_node(basis, unit, loop_node(loop, k, quad_points), a, lmax, tx, ty, tz);
  } else {
    for (int k = 0; k < quad_points; ++k)
      accumulate_loop_node(basis, unit, loop_node(loop, k, quad_points), a, lmax, tx, ty, tz);
  }
  const double prefactor = options.constants.mu0_over_4pi * loop.current;
  VectorExpansion out;
  out.lmax = lmax;
  out.terms.resize(size);
  double inv_r = 1.0 / p.r;
  double radial = inv_r;
  for (std::size_t l = 0; l < size; ++l) {
    out.terms[l] = prefactor * Vec3{ax[l], ay[l], az[l]};
    out.value += radial * out.terms[l];
    radial *= inv_r;
  }
  return out;
}

Vec3 loop_reference(const CurrentLoop& loop, const FieldPoint& p, int quad_points, const ExpansionOptions& options) {
  if (quad_points < 1) throw std::invalid_argument("loop quadrature needs at least one point");
  const Vec3 x = p.cartesian();
  const double rho = std::hypot(x.x, x.y);
  if (std::hypot(rho - loop.radius, x.z) <= 1e-12 * loop.radius)
    throw singularity_error("field point lies on the current loop");
  double sx = 0.0, sy = 0.0, sz = 0.0;
  auto add = [&](int k, double& ax, double& ay, double& az) {
    LoopNode node = loop_node(loop, k, quad_points);
    const double inv = 1.0 / (x - node.position).norm();
    ax += inv * node.dl.x;
    ay += inv * node.dl.y;
    az += inv * node.dl.z;
  };
  if (options.execution == Execution::parallel) {
#pragma omp parallel for reduction(+ : sx, sy, sz) schedule(static)
    for (int k = 0; k < quad_points; ++k) add(k, sx, sy, sz);
  } else {
    for (int k = 0; k < quad_points; ++k) add(k, sx, sy, sz);
  }
  return (options.constants.mu0_over_4pi * loop.current) * Vec3{sx, sy, sz};
}

double loop_dipole_aphi(const CurrentLoop& loop, const FieldPoint& p, const Constants& constants) {
  const double moment = loop.current * std::numbers::pi * loop.radius * loop.radius;
  return constants.mu0_over_4pi * moment * std::sin(p.theta) / (p.r * p.r);
}

double relative_error(double value, double reference) {
  const double diff = std::fabs(value - reference);
  return reference == 0.0 ? diff : diff / std::fabs(reference);
}

double relative_error(const Vec3& value, const Vec3& reference) {
  const double diff = (value - reference).norm();
  const double scale = reference.norm();
  return scale == 0.0 ? diff : diff / scale;
}

}  // namespace alfvac::electrostatics
