#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "stokes0/errors.hpp"

namespace stokes0 {

/// The three rotational coordinate systems supported by the library.
/// Each maps meridian coordinates (mu, nu) plus an azimuth phi onto
/// Cartesian space through a profile (rho(mu,nu), z(mu,nu)) revolved
/// about the z axis.
enum class SystemId { Parabolic, TangentSphere, Cardioid };

inline std::string_view system_name(SystemId system) {
  switch (system) {
    case SystemId::Parabolic:
      return "parabolic";
    case SystemId::TangentSphere:
      return "tangent_sphere";
    case SystemId::Cardioid:
      return "cardioid";
  }
  return "unknown";
}

inline SystemId system_from_name(std::string_view name) {
  if (name == "parabolic") return SystemId::Parabolic;
  if (name == "tangent_sphere" || name == "tangent-sphere")
    return SystemId::TangentSphere;
  if (name == "cardioid") return SystemId::Cardioid;
  throw domain_error("unknown coordinate system name: " + std::string(name));
}

/// A point (mu, nu, phi) in one of the rotational systems. phi is carried
/// for interface completeness; no axisymmetric quantity depends on it.
struct CoordPoint {
  double mu = 0.0;
  double nu = 0.0;
  double phi = 0.0;
};

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Metric coefficients h1 (along mu), h2 (along nu) and the radial
/// cylindrical coordinate varpi = |rho|. The h are the reciprocals of the
/// arc-length scale factors, so h -> infinity marks a degenerate point.
struct MetricData {
  double h1 = 0.0;
  double h2 = 0.0;
  double varpi = 0.0;
};

/// Threshold on singular denominators below which evaluation is refused.
inline constexpr double kSingularEps = 1e-12;

namespace detail {

/// Meridian profile (rho, z) with first partials, used by the Cartesian
/// map, the Newton inversion, and the metric tests.
struct MeridianJet {
  double rho, z;
  double rho_mu, rho_nu;
  double z_mu, z_nu;
};

inline MeridianJet meridian_jet(SystemId system, double mu, double nu) {
  MeridianJet j{};
  switch (system) {
    case SystemId::Parabolic: {
      j.rho = mu * nu;
      j.z = 0.5 * (mu * mu - nu * nu);
      j.rho_mu = nu;
      j.rho_nu = mu;
      j.z_mu = mu;
      j.z_nu = -nu;
      break;
    }
    case SystemId::TangentSphere: {
      const double s = mu * mu + nu * nu;
      const double s2 = s * s;
      j.rho = mu / s;
      j.z = nu / s;
      j.rho_mu = (nu * nu - mu * mu) / s2;
      j.rho_nu = -2.0 * mu * nu / s2;
      j.z_mu = -2.0 * mu * nu / s2;
      j.z_nu = (mu * mu - nu * nu) / s2;
      break;
    }
    case SystemId::Cardioid: {
      const double s = mu * mu + nu * nu;
      const double s2 = s * s;
      const double s3 = s2 * s;
      j.rho = mu * nu / s2;
      j.z = 0.5 * (mu * mu - nu * nu) / s2;
      j.rho_mu = nu * (nu * nu - 3.0 * mu * mu) / s3;
      j.rho_nu = mu * (mu * mu - 3.0 * nu * nu) / s3;
      j.z_mu = mu * (3.0 * nu * nu - mu * mu) / s3;
      j.z_nu = -nu * (3.0 * mu * mu - nu * nu) / s3;
      break;
    }
  }
  return j;
}

}  // namespace detail

/// Checks the system's domain invariants; throws domain_error on violation.
inline void validate_point(SystemId system, const CoordPoint& p) {
  if (!std::isfinite(p.mu) || !std::isfinite(p.nu) || !std::isfinite(p.phi))
    throw domain_error("coordinate point has non-finite components");
  if (p.phi < 0.0 || p.phi >= 2.0 * std::numbers::pi)
    throw domain_error("phi outside [0, 2*pi)");
  switch (system) {
    case SystemId::Parabolic:
      if (p.mu < 0.0 || p.nu < 0.0)
        throw domain_error("parabolic coordinates require mu >= 0 and nu >= 0");
      break;
    case SystemId::TangentSphere:
      if (p.mu <= 0.0)
        throw domain_error("tangent-sphere coordinates require mu > 0");
      break;
    case SystemId::Cardioid:
      if (p.mu < 0.0 || p.nu < 0.0)
        throw domain_error("cardioid coordinates require mu >= 0 and nu >= 0");
      if (p.mu == 0.0 && p.nu == 0.0)
        throw domain_error("cardioid map is singular at mu = nu = 0");
      break;
  }
}

inline CartesianPoint to_cartesian(SystemId system, const CoordPoint& p) {
  validate_point(system, p);
  const auto j = detail::meridian_jet(system, p.mu, p.nu);
  return {j.rho * std::cos(p.phi), j.rho * std::sin(p.phi), j.z};
}

/// Closed-form metric coefficients, hard-coded per system. The meridian
/// maps are conformal, so h1 = h2 everywhere.
inline MetricData metric_coefficients(SystemId system, const CoordPoint& p) {
  validate_point(system, p);
  const double s = p.mu * p.mu + p.nu * p.nu;
  if (s <= kSingularEps)
    throw singular_point_error("metric coefficients singular at mu = nu = 0");
  MetricData m{};
  switch (system) {
    case SystemId::Parabolic:
      m.h1 = m.h2 = 1.0 / std::sqrt(s);
      break;
    case SystemId::TangentSphere:
      m.h1 = m.h2 = s;
      break;
    case SystemId::Cardioid:
      m.h1 = m.h2 = s * std::sqrt(s);
      break;
  }
  m.varpi = std::abs(detail::meridian_jet(system, p.mu, p.nu).rho);
  return m;
}

inline double euclidean_distance(SystemId system, const CoordPoint& p) {
  const CartesianPoint c = to_cartesian(system, p);
  return std::hypot(c.x, c.y, c.z);
}

struct InversionConfig {
  double tolerance = 1e-12;
  int max_iterations = 50;
};

/// Inverts the coordinate map by damped Newton iteration on the meridian
/// (rho, z) pair, starting from a caller-supplied guess. phi is recovered
/// from atan2(y, x) and normalized to [0, 2*pi).
inline CoordPoint from_cartesian(SystemId system, const CartesianPoint& c,
                                 const CoordPoint& guess,
                                 const InversionConfig& cfg = {}) {
  if (!std::isfinite(guess.mu) || !std::isfinite(guess.nu))
    throw domain_error("inversion guess has non-finite components");
  const double rho_target = std::hypot(c.x, c.y);
  const double z_target = c.z;

  auto clamp_domain = [&](double& mu, double& nu) {
    switch (system) {
      case SystemId::Parabolic:
        mu = std::max(mu, 0.0);
        nu = std::max(nu, 0.0);
        break;
      case SystemId::TangentSphere:
        mu = std::max(mu, 1e-14);
        break;
      case SystemId::Cardioid:
        mu = std::max(mu, 0.0);
        nu = std::max(nu, 0.0);
        if (mu == 0.0 && nu == 0.0) mu = 1e-14;
        break;
    }
  };

  double mu = guess.mu, nu = guess.nu;
  clamp_domain(mu, nu);

  auto residual_norm = [&](double m, double n) {
    const auto j = detail::meridian_jet(system, m, n);
    return std::hypot(j.rho - rho_target, j.z - z_target);
  };

  double res = residual_norm(mu, nu);
  for (int it = 0; it < cfg.max_iterations && res > cfg.tolerance; ++it) {
    const auto j = detail::meridian_jet(system, mu, nu);
    const double f1 = j.rho - rho_target;
    const double f2 = j.z - z_target;
    const double det = j.rho_mu * j.z_nu - j.rho_nu * j.z_mu;
    if (std::abs(det) < 1e-300)
      throw convergence_error("inversion Jacobian is singular", res);
    const double dmu = -(f1 * j.z_nu - f2 * j.rho_nu) / det;
    const double dnu = -(j.rho_mu * f2 - j.z_mu * f1) / det;

    double t = 1.0;
    double new_mu = mu, new_nu = nu, new_res = res;
    for (int k = 0; k < 30; ++k) {
      new_mu = mu + t * dmu;
      new_nu = nu + t * dnu;
      clamp_domain(new_mu, new_nu);
      new_res = residual_norm(new_mu, new_nu);
      if (new_res < res) break;
      t *= 0.5;
    }
    if (new_res >= res)
      throw convergence_error("inversion stalled", res);
    mu = new_mu;
    nu = new_nu;
    res = new_res;
  }
  if (res > cfg.tolerance)
    throw convergence_error("inversion did not converge", res);

  double phi = std::atan2(c.y, c.x);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  return {mu, nu, phi};
}

}  // namespace stokes0
