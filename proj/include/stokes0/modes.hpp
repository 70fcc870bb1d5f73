#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "stokes0/bessel.hpp"
#include "stokes0/coords.hpp"
#include "stokes0/errors.hpp"
#include "stokes0/stokes_operator.hpp"

namespace stokes0 {

/// mu-factor of a separable mode: M(mu) = mu * I1(n mu) or mu * K1(n mu).
enum class RadialKind { I1, K1 };

/// nu-factor: nu * J1(n nu) / nu * Y1(n nu) for the parabolic and cardioid
/// systems, cos(n nu) / sin(n nu) for the tangent-sphere system.
enum class AngularKind { J1, Y1, Cos, Sin };

inline std::string_view radial_name(RadialKind k) {
  return k == RadialKind::I1 ? "I1" : "K1";
}

inline std::string_view angular_name(AngularKind k) {
  switch (k) {
    case AngularKind::J1: return "J1";
    case AngularKind::Y1: return "Y1";
    case AngularKind::Cos: return "cos";
    case AngularKind::Sin: return "sin";
  }
  return "?";
}

inline RadialKind radial_from_name(std::string_view s) {
  if (s == "I1") return RadialKind::I1;
  if (s == "K1") return RadialKind::K1;
  throw domain_error("unknown radial kind: " + std::string(s));
}

inline AngularKind angular_from_name(std::string_view s) {
  if (s == "J1") return AngularKind::J1;
  if (s == "Y1") return AngularKind::Y1;
  if (s == "cos") return AngularKind::Cos;
  if (s == "sin") return AngularKind::Sin;
  throw domain_error("unknown angular kind: " + std::string(s));
}

inline bool angular_kind_valid(SystemId system, AngularKind k) {
  if (system == SystemId::TangentSphere)
    return k == AngularKind::Cos || k == AngularKind::Sin;
  return k == AngularKind::J1 || k == AngularKind::Y1;
}

/// One separable eigenfunction: system, separation parameter n > 0 (the
/// separation constant is n^2; nonpositive branches are rejected), and the
/// radial/angular factor selectors.
struct ModeSpec {
  SystemId system;
  double n;
  RadialKind radial;
  AngularKind angular;

  static ModeSpec make(SystemId system, double n, RadialKind radial,
                       AngularKind angular) {
    if (!(n > 0.0) || !std::isfinite(n))
      throw domain_error("mode parameter n must be positive and finite");
    if (!angular_kind_valid(system, angular))
      throw domain_error("angular kind does not match the coordinate system");
    return {system, n, radial, angular};
  }

  std::string description() const {
    return std::string(system_name(system)) + " mode n=" +
           std::to_string(n) + " " + std::string(radial_name(radial)) + "x" +
           std::string(angular_name(angular));
  }
};

/// One series term: [a mu I1(n mu) + b mu K1(n mu)] * [c g1(n nu) + d g2(n nu)]
/// with (g1, g2) the system's angular pair.
struct SeriesTerm {
  double n = 1.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

/// A truncated eigenfunction series. Terms carry distinct n values; the
/// whole sum is divided by the system's R prefactor.
class SeriesExpansion {
 public:
  SeriesExpansion(SystemId system, std::vector<SeriesTerm> terms)
      : system_(system), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const SeriesTerm& t = terms_[i];
      if (!(t.n > 0.0) || !std::isfinite(t.n))
        throw domain_error("series term n must be positive and finite");
      if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c) ||
          !std::isfinite(t.d))
        throw domain_error("series term coefficients must be finite");
      for (std::size_t k = 0; k < i; ++k)
        if (terms_[k].n == t.n)
          throw domain_error("series terms must carry distinct n values");
    }
  }

  SystemId system() const { return system_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }

 private:
  SystemId system_;
  std::vector<SeriesTerm> terms_;
};

/// Expansion holding a single product mode scaled by `coefficient`.
inline SeriesExpansion single_mode_expansion(const ModeSpec& mode,
                                             double coefficient = 1.0) {
  SeriesTerm t;
  t.n = mode.n;
  (mode.radial == RadialKind::I1 ? t.a : t.b) = coefficient;
  ((mode.angular == AngularKind::J1 || mode.angular == AngularKind::Cos)
       ? t.c
       : t.d) = 1.0;
  return SeriesExpansion(mode.system, {t});
}

/// R-separation prefactor: mode and series values are divided by it.
/// Parabolic separates plainly (R = 1); tangent sphere uses
/// R = sqrt(mu^2+nu^2); cardioid uses R = sqrt(2) (mu^2+nu^2).
inline double r_factor(SystemId system, const CoordPoint& p) {
  validate_point(system, p);
  const double s = p.mu * p.mu + p.nu * p.nu;
  switch (system) {
    case SystemId::Parabolic:
      return 1.0;
    case SystemId::TangentSphere:
      return std::sqrt(s);
    case SystemId::Cardioid:
      // The sqrt(2) normalization follows the R definition; it is a constant
      // absorbable into series coefficients.
      return std::numbers::sqrt2 * s;
  }
  throw domain_error("unknown system");
}

namespace detail::modes {

struct FactorJet {
  double v, d1, d2;
};

/// M(mu) = mu u(n mu) with u = I1 or K1; derivatives via the chain rule on
/// the library Bessel derivatives.
inline FactorJet radial_jet(RadialKind kind, double n, double mu) {
  const BesselKind bk = kind == RadialKind::I1 ? BesselKind::I1 : BesselKind::K1;
  const double t = n * mu;
  const double u = bessel_eval(bk, t);
  const double u1 = bessel_derivative(bk, t, 1);
  const double u2 = bessel_derivative(bk, t, 2);
  return {mu * u, u + n * mu * u1, 2.0 * n * u1 + n * n * mu * u2};
}

inline FactorJet angular_jet(AngularKind kind, double n, double nu) {
  switch (kind) {
    case AngularKind::J1:
    case AngularKind::Y1: {
      const BesselKind bk =
          kind == AngularKind::J1 ? BesselKind::J1 : BesselKind::Y1;
      const double t = n * nu;
      const double v = bessel_eval(bk, t);
      const double v1 = bessel_derivative(bk, t, 1);
      const double v2 = bessel_derivative(bk, t, 2);
      return {nu * v, v + n * nu * v1, 2.0 * n * v1 + n * n * nu * v2};
    }
    case AngularKind::Cos: {
      const double cv = std::cos(n * nu), sv = std::sin(n * nu);
      return {cv, -n * sv, -n * n * cv};
    }
    case AngularKind::Sin: {
      const double cv = std::cos(n * nu), sv = std::sin(n * nu);
      return {sv, n * cv, -n * n * sv};
    }
  }
  throw domain_error("unknown angular kind");
}

/// w = 1/R with meridian partials.
struct PrefactorJet {
  double w, w_mu, w_nu, w_mumu, w_nunu;
};

inline PrefactorJet prefactor_jet(SystemId system, double mu, double nu) {
  switch (system) {
    case SystemId::Parabolic:
      return {1.0, 0.0, 0.0, 0.0, 0.0};
    case SystemId::TangentSphere: {
      const double s = mu * mu + nu * nu;
      const double s12 = std::sqrt(s);
      const double s32 = s * s12, s52 = s * s32;
      return {1.0 / s12, -mu / s32, -nu / s32,
              -1.0 / s32 + 3.0 * mu * mu / s52,
              -1.0 / s32 + 3.0 * nu * nu / s52};
    }
    case SystemId::Cardioid: {
      const double s = mu * mu + nu * nu;
      const double c = 1.0 / std::numbers::sqrt2;
      const double s2 = s * s, s3 = s2 * s;
      return {c / s, -2.0 * c * mu / s2, -2.0 * c * nu / s2,
              c * (-2.0 / s2 + 8.0 * mu * mu / s3),
              c * (-2.0 / s2 + 8.0 * nu * nu / s3)};
    }
  }
  throw domain_error("unknown system");
}

inline FieldDerivs product_derivs(const FactorJet& m, const FactorJet& nj,
                                  const PrefactorJet& w) {
  FieldDerivs f;
  f.value = m.v * nj.v * w.w;
  f.d_mu = m.d1 * nj.v * w.w + m.v * nj.v * w.w_mu;
  f.d_nu = m.v * nj.d1 * w.w + m.v * nj.v * w.w_nu;
  f.d_mumu = m.d2 * nj.v * w.w + 2.0 * m.d1 * nj.v * w.w_mu +
             m.v * nj.v * w.w_mumu;
  f.d_nunu = m.v * nj.d2 * w.w + 2.0 * m.v * nj.d1 * w.w_nu +
             m.v * nj.v * w.w_nunu;
  return f;
}

/// Effective radial/angular jets of a full series term.
inline FieldDerivs term_derivs(SystemId system, const SeriesTerm& t,
                               double mu, double nu) {
  FactorJet m{0.0, 0.0, 0.0};
  if (t.a != 0.0) {
    const FactorJet mi = radial_jet(RadialKind::I1, t.n, mu);
    m.v += t.a * mi.v;
    m.d1 += t.a * mi.d1;
    m.d2 += t.a * mi.d2;
  }
  if (t.b != 0.0) {
    const FactorJet mk = radial_jet(RadialKind::K1, t.n, mu);
    m.v += t.b * mk.v;
    m.d1 += t.b * mk.d1;
    m.d2 += t.b * mk.d2;
  }
  const bool ts = system == SystemId::TangentSphere;
  FactorJet nj{0.0, 0.0, 0.0};
  if (t.c != 0.0) {
    const FactorJet n1 =
        angular_jet(ts ? AngularKind::Cos : AngularKind::J1, t.n, nu);
    nj.v += t.c * n1.v;
    nj.d1 += t.c * n1.d1;
    nj.d2 += t.c * n1.d2;
  }
  if (t.d != 0.0) {
    const FactorJet n2 =
        angular_jet(ts ? AngularKind::Sin : AngularKind::Y1, t.n, nu);
    nj.v += t.d * n2.v;
    nj.d1 += t.d * n2.d1;
    nj.d2 += t.d * n2.d2;
  }
  return product_derivs(m, nj, prefactor_jet(system, mu, nu));
}

}  // namespace detail::modes

/// M(mu) N(nu) / R(mu, nu) at p. Bessel domain violations propagate.
inline double eval_mode(const ModeSpec& mode, const CoordPoint& p) {
  validate_point(mode.system, p);
  const auto m = detail::modes::radial_jet(mode.radial, mode.n, p.mu);
  const auto nj = detail::modes::angular_jet(mode.angular, mode.n, p.nu);
  return m.v * nj.v * detail::modes::prefactor_jet(mode.system, p.mu, p.nu).w;
}

/// Value and meridian partials of the R-divided product, all analytic.
inline FieldDerivs eval_mode_derivatives(const ModeSpec& mode,
                                         const CoordPoint& p) {
  validate_point(mode.system, p);
  const auto m = detail::modes::radial_jet(mode.radial, mode.n, p.mu);
  const auto nj = detail::modes::angular_jet(mode.angular, mode.n, p.nu);
  const auto w = detail::modes::prefactor_jet(mode.system, p.mu, p.nu);
  return detail::modes::product_derivs(m, nj, w);
}

inline FieldDerivs eval_series_derivatives(const SeriesExpansion& s,
                                           const CoordPoint& p) {
  validate_point(s.system(), p);
  FieldDerivs acc;
  for (const SeriesTerm& t : s.terms()) {
    const FieldDerivs f = detail::modes::term_derivs(s.system(), t, p.mu, p.nu);
    acc.value += f.value;
    acc.d_mu += f.d_mu;
    acc.d_nu += f.d_nu;
    acc.d_mumu += f.d_mumu;
    acc.d_nunu += f.d_nunu;
  }
  return acc;
}

inline double eval_series(const SeriesExpansion& s, const CoordPoint& p) {
  validate_point(s.system(), p);
  double acc = 0.0;
  for (const SeriesTerm& t : s.terms())
    acc += detail::modes::term_derivs(s.system(), t, p.mu, p.nu).value;
  return acc;
}

struct Velocity {
  double v_mu = 0.0;
  double v_nu = 0.0;
};

/// Stream-function kinematics: v_mu = (h2/varpi) dpsi/dnu,
/// v_nu = -(h1/varpi) dpsi/dmu. The sign convention makes the flow follow
/// level sets of psi counterclockwise in the (mu, nu) plane.
inline Velocity velocity_field(const SeriesExpansion& s, const CoordPoint& p) {
  const MetricData m = metric_coefficients(s.system(), p);
  if (m.varpi <= kSingularEps)
    throw singular_point_error("velocity undefined on the symmetry axis");
  const FieldDerivs f = eval_series_derivatives(s, p);
  return {m.h2 / m.varpi * f.d_nu, -m.h1 / m.varpi * f.d_mu};
}

inline Velocity velocity_field(const ModeSpec& mode, const CoordPoint& p) {
  return velocity_field(single_mode_expansion(mode), p);
}

}  // namespace stokes0
