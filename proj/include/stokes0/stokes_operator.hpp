#pragma once

#include <array>
#include <cmath>
#include <concepts>

#include "stokes0/coords.hpp"
#include "stokes0/errors.hpp"

namespace stokes0 {

enum class StencilScheme { Centered2 };

struct StencilConfig {
  double step_mu = 1e-4;
  double step_nu = 1e-4;
  StencilScheme scheme = StencilScheme::Centered2;
};

/// Value and meridian partials of a scalar field at one point.
struct FieldDerivs {
  double value = 0.0;
  double d_mu = 0.0;
  double d_nu = 0.0;
  double d_mumu = 0.0;
  double d_nunu = 0.0;
};

/// The four expanded operator terms at a point:
/// prefactor * {d2/dmu2, c_mu * d/dmu, c_nu * d/dnu, d2/dnu2} applied to f.
/// scale() is the normalizer used for residual reporting.
struct OperatorTerms {
  std::array<double, 4> term{};

  double sum() const { return term[0] + term[1] + term[2] + term[3]; }
  double scale() const {
    double s = 0.0;
    for (double t : term) s = std::max(s, std::abs(t));
    return s;
  }
};

/// Specialized second-order form of the operator, one per system.
inline OperatorTerms analytic_terms(SystemId system, const FieldDerivs& f,
                                    const CoordPoint& p) {
  validate_point(system, p);
  const double mu = p.mu, nu = p.nu;
  const double s = mu * mu + nu * nu;
  OperatorTerms out{};
  switch (system) {
    case SystemId::Parabolic: {
      if (std::abs(mu) <= kSingularEps || std::abs(nu) <= kSingularEps)
        throw singular_point_error("parabolic operator coefficients singular at mu = 0 or nu = 0");
      const double pref = 1.0 / s;
      out.term = {pref * f.d_mumu, -pref * f.d_mu / mu, -pref * f.d_nu / nu,
                  pref * f.d_nunu};
      break;
    }
    case SystemId::TangentSphere: {
      if (std::abs(mu) <= kSingularEps)
        throw singular_point_error("tangent-sphere operator coefficient singular at mu = 0");
      const double pref = s * s;
      out.term = {pref * f.d_mumu,
                  pref * (mu * mu - nu * nu) / (mu * s) * f.d_mu,
                  pref * 2.0 * nu / s * f.d_nu, pref * f.d_nunu};
      break;
    }
    case SystemId::Cardioid: {
      if (std::abs(mu) <= kSingularEps || std::abs(nu) <= kSingularEps)
        throw singular_point_error("cardioid operator coefficients singular at mu = 0 or nu = 0");
      const double pref = s * s * s;
      out.term = {pref * f.d_mumu,
                  pref * (3.0 * mu * mu - nu * nu) / (mu * s) * f.d_mu,
                  pref * (3.0 * nu * nu - mu * mu) / (nu * s) * f.d_nu,
                  pref * f.d_nunu};
      break;
    }
  }
  return out;
}

inline double apply_analytic(SystemId system, const FieldDerivs& f,
                             const CoordPoint& p) {
  return analytic_terms(system, f, p).sum();
}

/// Generic divergence form evaluated with centered differences. The outer
/// derivatives use 3-point stencils with the metric factors at stencil
/// midpoints, which keeps the self-adjoint structure; only the coordinate
/// maps enter, making this an independent cross-check of analytic_terms.
template <class F>
  requires std::invocable<F, double, double>
double apply_generic(SystemId system, F&& field, const CoordPoint& p,
                     const StencilConfig& cfg) {
  if (!(cfg.step_mu > 0.0) || !(cfg.step_nu > 0.0))
    throw domain_error("stencil steps must be positive");
  const double hm = cfg.step_mu, hn = cfg.step_nu;

  auto ratio_mu = [&](double mu, double nu) {  // h1/(h2 varpi)
    const MetricData m = metric_coefficients(system, {mu, nu, p.phi});
    if (m.varpi <= kSingularEps)
      throw singular_point_error("stencil touches the symmetry axis");
    return m.h1 / (m.h2 * m.varpi);
  };
  auto ratio_nu = [&](double mu, double nu) {  // h2/(h1 varpi)
    const MetricData m = metric_coefficients(system, {mu, nu, p.phi});
    if (m.varpi <= kSingularEps)
      throw singular_point_error("stencil touches the symmetry axis");
    return m.h2 / (m.h1 * m.varpi);
  };

  // Domain check at the stencil extremes.
  validate_point(system, {p.mu - hm, p.nu, p.phi});
  validate_point(system, {p.mu + hm, p.nu, p.phi});
  validate_point(system, {p.mu, p.nu - hn, p.phi});
  validate_point(system, {p.mu, p.nu + hn, p.phi});

  const double fc = field(p.mu, p.nu);
  const double t_mu =
      (ratio_mu(p.mu + 0.5 * hm, p.nu) * (field(p.mu + hm, p.nu) - fc) -
       ratio_mu(p.mu - 0.5 * hm, p.nu) * (fc - field(p.mu - hm, p.nu))) /
      (hm * hm);
  const double t_nu =
      (ratio_nu(p.mu, p.nu + 0.5 * hn) * (field(p.mu, p.nu + hn) - fc) -
       ratio_nu(p.mu, p.nu - 0.5 * hn) * (fc - field(p.mu, p.nu - hn))) /
      (hn * hn);

  const MetricData mc = metric_coefficients(system, p);
  return mc.h1 * mc.h2 * mc.varpi * (t_mu + t_nu);
}

}  // namespace stokes0
