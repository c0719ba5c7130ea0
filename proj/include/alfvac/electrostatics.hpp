#ifndef ALFVAC_ELECTROSTATICS_HPP
#define ALFVAC_ELECTROSTATICS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "alfvac/half_power.hpp"

namespace alfvac::electrostatics {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3& operator+=(const Vec3& o) {
    x += o.x, y += o.y, z += o.z;
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
};

/// Evaluation point outside the region where the exterior expansion converges.
class convergence_domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation point on a source (charge position, loop wire, conductor interior).
class singularity_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation point inside the conductor.
class inside_conductor_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct Constants {
  double coulomb;       // k_c = 1 / (4 pi eps0)
  double mu0_over_4pi;  // mu0 / (4 pi)

  /// CODATA 2018 vacuum permittivity and permeability.
  static Constants si();
  /// k_c = mu0/(4 pi) = 1.
  static Constants dimensionless() { return {1.0, 1.0}; }
};

inline constexpr double kVacuumPermittivity = 8.8541878128e-12;
inline constexpr double kVacuumPermeability = 1.25663706212e-6;

enum class Execution { serial, parallel };

/// Where the P_l(cos theta') factors come from. Both yield the same
/// polynomials, so results are bit-identical.
enum class LegendreSource { ladder, classical };

inline constexpr int kMaxDegree = 40;

struct ExpansionOptions {
  Constants constants = Constants::si();
  LegendreSource source = LegendreSource::ladder;
  Execution execution = Execution::serial;
};

struct PointCharge {
  Vec3 position;
  double charge = 0;
};

class ChargeSystem {
public:
  explicit ChargeSystem(std::vector<PointCharge> charges);

  const std::vector<PointCharge>& charges() const { return charges_; }
  /// Largest distance of a charge from the origin.
  double extent() const { return extent_; }
  ChargeSystem merged(const ChargeSystem& other) const;

private:
  std::vector<PointCharge> charges_;
  double extent_ = 0;
};

/// Circular loop of radius a in the z = 0 plane, centred on the origin.
struct CurrentLoop {
  double radius;
  double current;

  CurrentLoop(double radius, double current);
};

struct FieldPoint {
  double r;
  double theta;
  double phi = 0;

  FieldPoint(double r, double theta, double phi = 0);
  Vec3 cartesian() const;
  Vec3 unit() const;
  Vec3 phi_hat() const { return {-std::sin(phi), std::cos(phi), 0.0}; }
};

/// Legendre polynomials P_0..P_lmax sampled in double precision.
class LegendreBasis {
public:
  LegendreBasis(int lmax, LegendreSource source);

  int lmax() const { return static_cast<int>(polys_.size()) - 1; }
  double operator()(int ell, double x) const { return polys_[static_cast<std::size_t>(ell)](x); }
  const NumericHalfPower& poly(int ell) const { return polys_[static_cast<std::size_t>(ell)]; }

private:
  std::vector<NumericHalfPower> polys_;
};

/// Shared basis for (lmax, source); built once and reused.
const LegendreBasis& legendre_basis(int lmax, LegendreSource source);

/// Coefficients c_l of r^-(l+1), l = 0..lmax.
struct MultipoleTable {
  int lmax = 0;
  std::vector<double> terms;
};

struct ScalarExpansion {
  double value = 0;
  MultipoleTable table;
};

struct VectorExpansion {
  Vec3 value;
  int lmax = 0;
  std::vector<Vec3> terms;  // vector coefficient of r^-(l+1)
};

/// Potential outside a conducting sphere of charge Q and radius R in the
/// uniform field E0 z-hat. The angular factor of the field term is the
/// one-node ALF of degree 1 built by the ladder.
double sphere_potential(double Q, double R, double E0, const FieldPoint& p,
                        const Constants& constants = Constants::si());

ScalarExpansion multipole_scalar(const ChargeSystem& sys, const FieldPoint& p, int lmax,
                                 const ExpansionOptions& options = {});

double direct_coulomb(const ChargeSystem& sys, const FieldPoint& p,
                      const ExpansionOptions& options = {});

inline constexpr int kDefaultQuadPoints = 512;

VectorExpansion multipole_vector_loop(const CurrentLoop& loop, const FieldPoint& p, int lmax,
                                      int quad_points = kDefaultQuadPoints,
                                      const ExpansionOptions& options = {});

Vec3 loop_reference(const CurrentLoop& loop, const FieldPoint& p,
                    int quad_points = kDefaultQuadPoints, const ExpansionOptions& options = {});

/// Far-field A_phi of a loop, mu0 I pi a^2 sin(theta) / (4 pi r^2).
double loop_dipole_aphi(const CurrentLoop& loop, const FieldPoint& p, const Constants& constants);

double relative_error(double value, double reference);
double relative_error(const Vec3& value, const Vec3& reference);

}  // namespace alfvac::electrostatics

#endif
