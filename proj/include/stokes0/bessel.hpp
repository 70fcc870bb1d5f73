#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "stokes0/errors.hpp"

namespace stokes0 {

/// First-order Bessel (J1, Y1) and modified Bessel (I1, K1) functions.
enum class BesselKind { J1, Y1, I1, K1 };

namespace detail::bessel {

inline constexpr long double kPi = std::numbers::pi_v<long double>;
inline constexpr long double kEulerGamma =
    0.5772156649015328606065120900824024310422L;

// Branch crossovers. Chosen so every branch keeps the relative error of the
// order-0/1 pair below ~1e-15 of the local envelope; the sweep tests in the
// suite exercise a dense grid across each boundary.
inline constexpr long double kCylSeriesMax = 10.0L;     // J/Y long double series
inline constexpr long double kCylSeriesQuadMax = 20.0L; // J/Y quad series band
inline constexpr long double kModSeriesMax = 30.0L;     // I series
inline constexpr long double kKSeriesMax = 2.0L;        // K log-series

template <class Real>
inline Real real_abs(Real v) {
  return v < Real(0) ? -v : v;
}

struct Pair01 {
  long double f0;  // order 0
  long double f1;  // order 1
};

// Ascending-series sums shared by J/Y and I/K:
//   sum0 = sum_k u^k/(k!)^2            sum1 = sum_k u^k/(k!(k+1)!)
//   sum0h = sum_{k>=1} H_k u^k/(k!)^2  sum1h = sum_{k>=0} (H_k+H_{k+1}) u^k/(k!(k+1)!)
// with u = -x^2/4 for the cylindrical pair, u = +x^2/4 for the modified one.
// Splitting the Euler-gamma part out of the harmonic sums keeps gamma and
// log(x/2) out of the cancellation-prone accumulations, so long-double
// constants suffice even when Real is __float128.
template <class Real>
struct SeriesSums {
  Real sum0, sum1, sum0h, sum1h;
};

template <class Real>
inline SeriesSums<Real> ascending_sums(long double x, bool modified) {
  const Real t = Real(x) * Real(x) / Real(4);
  const Real u = modified ? t : -t;
  Real term0 = Real(1);
  Real term1 = Real(1);
  Real h = Real(0);        // H_k
  Real hnext = Real(1);    // H_{k+1}
  SeriesSums<Real> s{Real(1), Real(1), Real(0), hnext * term1};
  Real max0 = real_abs(term0);
  for (int k = 1; k < 400; ++k) {
    term0 *= u / (Real(k) * Real(k));
    term1 *= u / (Real(k) * Real(k + 1));
    h += Real(1) / Real(k);
    hnext += Real(1) / Real(k + 1);
    s.sum0 += term0;
    s.sum1 += term1;
    s.sum0h += h * term0;
    s.sum1h += (h + hnext) * term1;
    const Real a0 = real_abs(term0);
    if (a0 > max0) max0 = a0;
    if (a0 < max0 * Real(1e-45L) && k > 4) break;
  }
  return s;
}

template <class Real>
inline void cyl_series_eval(long double x, Pair01& j, Pair01& y, bool need_y) {
  const auto s = ascending_sums<Real>(x, false);
  j.f0 = static_cast<long double>(s.sum0);
  j.f1 = 0.5L * x * static_cast<long double>(s.sum1);
  if (!need_y) return;
  const long double lg = std::log(0.5L * x);
  // sum0h carries H_k u^k/(k!)^2 with u=-t, i.e. (-1)^k H_k t^k/(k!)^2;
  // the series wants (-1)^{k+1}, hence the minus sign.
  y.f0 = (2.0L / kPi) *
         ((lg + kEulerGamma) * j.f0 - static_cast<long double>(s.sum0h));
  const long double bracket =
      static_cast<long double>(s.sum1h) -
      2.0L * kEulerGamma * static_cast<long double>(s.sum1);
  y.f1 = (2.0L / kPi) * lg * j.f1 - 2.0L / (kPi * x) -
         (x / (2.0L * kPi)) * bracket;
}

// Hankel asymptotic expansion: J_nu, Y_nu = sqrt(2/(pi x)) (P, Q) rotated by
// chi = x - (2 nu + 1) pi/4. P + iQ = sum_m i^m c_m / x^m with
// c_m = prod_{j<=m} (4 nu^2 - (2j-1)^2) / (8 m), truncated at the smallest
// term.
inline void hankel_pq(long double x, long double mu4, long double& p,
                      long double& q) {
  p = 1.0L;
  q = 0.0L;
  long double term = 1.0L;
  long double prev = std::numeric_limits<long double>::max();
  for (int m = 1; m <= 60; ++m) {
    const long double f = 2.0L * m - 1.0L;
    term *= (mu4 - f * f) / (8.0L * m * x);
    if (real_abs(term) >= prev) break;
    prev = real_abs(term);
    switch (m & 3) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (prev < 1e-22L) break;
  }
}

inline void cyl_asymptotic(long double x, Pair01& j, Pair01& y) {
  const long double amp = std::sqrt(2.0L / (kPi * x));
  long double p0, q0, p1, q1;
  hankel_pq(x, 0.0L, p0, q0);
  hankel_pq(x, 4.0L, p1, q1);
  const long double chi0 = x - 0.25L * kPi;
  const long double chi1 = x - 0.75L * kPi;
  const long double c0 = std::cos(chi0), s0 = std::sin(chi0);
  const long double c1 = std::cos(chi1), s1 = std::sin(chi1);
  j.f0 = amp * (p0 * c0 - q0 * s0);
  y.f0 = amp * (p0 * s0 + q0 * c0);
  j.f1 = amp * (p1 * c1 - q1 * s1);
  y.f1 = amp * (p1 * s1 + q1 * c1);
}

/// J0 and J1; Y0 and Y1 on demand. x >= 0 (x > 0 when need_y).
inline void cyl_pair(long double x, Pair01& j, Pair01& y, bool need_y) {
  if (x <= kCylSeriesMax) {
    cyl_series_eval<long double>(x, j, y, need_y);
  } else if (x <= kCylSeriesQuadMax) {
    cyl_series_eval<__float128>(x, j, y, need_y);
  } else {
    cyl_asymptotic(x, j, y);
  }
}

inline Pair01 mod_i_pair(long double x) {
  if (x <= kModSeriesMax) {
    const auto s = ascending_sums<long double>(x, true);
    return {s.sum0, 0.5L * x * s.sum1};
  }
  // I_nu ~ e^x/sqrt(2 pi x) sum_m (-1)^m c_m/x^m; the e^{-x} reflection term
  // is below 1e-26 relative for x > 30.
  const long double amp = std::exp(x) / std::sqrt(2.0L * kPi * x);
  long double sums[2];
  for (int nu = 0; nu <= 1; ++nu) {
    const long double mu4 = 4.0L * nu * nu;
    long double sum = 1.0L, term = 1.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int m = 1; m <= 60; ++m) {
      const long double f = 2.0L * m - 1.0L;
      term *= -(mu4 - f * f) / (8.0L * m * x);
      if (real_abs(term) >= prev) break;
      prev = real_abs(term);
      sum += term;
      if (prev < 1e-22L) break;
    }
    sums[nu] = sum;
  }
  return {amp * sums[0], amp * sums[1]};
}

// Steed's continued fraction for K0, K1 (x > kKSeriesMax).
inline Pair01 mod_k_cf2(long double x) {
  const long double a1 = 0.25L;
  long double b = 2.0L * (1.0L + x);
  long double d = 1.0L / b;
  long double h = d, delh = d;
  long double q1 = 0.0L, q2 = 1.0L;
  long double q = a1, c = a1;
  long double a = -a1;
  long double s = 1.0L + q * delh;
  for (int i = 2; i <= 10000; ++i) {
    a -= 2.0L * (i - 1);
    c = -a * c / i;
    const long double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0L;
    d = 1.0L / (b + a * d);
    delh = (b * d - 1.0L) * delh;
    h += delh;
    const long double dels = q * delh;
    s += dels;
    if (real_abs(dels / s) < 1e-21L) break;
  }
  h = a1 * h;
  const long double k0 = std::sqrt(kPi / (2.0L * x)) * std::exp(-x) / s;
  return {k0, k0 * (x + 0.5L - h) / x};
}

inline Pair01 mod_k_pair(long double x) {
  if (x > kKSeriesMax) return mod_k_cf2(x);
  const auto s = ascending_sums<long double>(x, true);
  const long double i0 = s.sum0;
  const long double i1 = 0.5L * x * s.sum1;
  const long double lg = std::log(0.5L * x);
  const long double k0 = -(lg + kEulerGamma) * i0 + s.sum0h;
  const long double k1 =
      lg * i1 + 1.0L / x - 0.25L * x * (s.sum1h - 2.0L * kEulerGamma * s.sum1);
  return {k0, k1};
}

/// Order 0 and 1 values of the selected family, in long double.
inline Pair01 family_pair(BesselKind kind, long double x) {
  Pair01 j{}, y{};
  switch (kind) {
    case BesselKind::J1:
      cyl_pair(x, j, y, false);
      return j;
    case BesselKind::Y1:
      cyl_pair(x, j, y, true);
      return y;
    case BesselKind::I1:
      return mod_i_pair(x);
    case BesselKind::K1:
      return mod_k_pair(x);
  }
  throw domain_error("unknown Bessel kind");
}

inline void check_domain(BesselKind kind, double x) {
  if (!std::isfinite(x)) throw domain_error("Bessel argument must be finite");
  if (kind == BesselKind::Y1 || kind == BesselKind::K1) {
    if (x <= 0.0) throw domain_error("Y1/K1 require x > 0");
  } else if (x < 0.0) {
    throw domain_error("J1/I1 require x >= 0");
  }
}

inline double to_double_checked(long double v, const char* what) {
  if (real_abs(v) > static_cast<long double>(std::numeric_limits<double>::max()))
    throw overflow_error(what);
  return static_cast<double>(v);
}

}  // namespace detail::bessel

/// Function value. Relative accuracy ~1e-13 or better on (0, 50].
inline double bessel_eval(BesselKind kind, double x) {
  namespace db = detail::bessel;
  db::check_domain(kind, x);
  if (x == 0.0) return 0.0;  // J1(0) = I1(0) = 0
  const db::Pair01 f = db::family_pair(kind, x);
  return db::to_double_checked(f.f1, "Bessel value overflows double");
}

/// First or second derivative via the order-0/1 recurrence identities
/// (e.g. J1' = J0 - J1/x, J1'' = 2 J1/x^2 - J0/x - J1). The 1/x^2 terms
/// lose accuracy below x ~ 1e-2; x = 0 returns the exact limits.
inline double bessel_derivative(BesselKind kind, double x, int order) {
  namespace db = detail::bessel;
  if (order != 1 && order != 2) throw domain_error("derivative order must be 1 or 2");
  db::check_domain(kind, x);
  if (x == 0.0) return order == 1 ? 0.5 : 0.0;  // J1, I1 limits
  const long double lx = x;
  const db::Pair01 f = db::family_pair(kind, lx);
  long double r = 0.0L;
  switch (kind) {
    case BesselKind::J1:
    case BesselKind::Y1:
      r = order == 1 ? f.f0 - f.f1 / lx
                     : 2.0L * f.f1 / (lx * lx) - f.f0 / lx - f.f1;
      break;
    case BesselKind::I1:
      r = order == 1 ? f.f0 - f.f1 / lx
                     : f.f1 - f.f0 / lx + 2.0L * f.f1 / (lx * lx);
      break;
    case BesselKind::K1:
      r = order == 1 ? -f.f0 - f.f1 / lx
                     : f.f1 + f.f0 / lx + 2.0L * f.f1 / (lx * lx);
      break;
  }
  return db::to_double_checked(r, "Bessel derivative overflows double");
}

}  // namespace stokes0
