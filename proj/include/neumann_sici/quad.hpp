#pragma once
// Adaptive Gauss-Kronrod quadrature, a Longman/Euler scheme for oscillatory
// tails, and one routine per integral identity of the Si/Ci expansions.
//
// The semi-infinite integrals all have the shape w(t) F1(t) F2(t) where each
// factor is u(t) + Re(v(t) e^{it}) for large t with u, v slowly varying.
// Beyond a cut b the product is split exactly into a smooth part plus
// Re(h1 e^{it}) + Re(h2 e^{2it}); the smooth part is integrated after t = b/s^2
// and each harmonic goes through the Longman/Euler engine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "acceleration.hpp"
#include "errors.hpp"
#include "specfun.hpp"

namespace neumann_sici::quad {

enum class QuadStatus {
  converged,
  roundoff_limited,  // error estimate stuck at the rounding floor above tol
  max_subdivisions,
  acceleration_stalled,
  nan_integrand,
};

inline const char* to_string(QuadStatus s) {
  switch (s) {
    case QuadStatus::converged: return "converged";
    case QuadStatus::roundoff_limited: return "roundoff_limited";
    case QuadStatus::max_subdivisions: return "max_subdivisions";
    case QuadStatus::acceleration_stalled: return "acceleration_stalled";
    case QuadStatus::nan_integrand: return "nan_integrand";
  }
  return "unknown";
}

struct QuadResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  int subdivisions = 0;
  int partitions_used = 0;
  QuadStatus status = QuadStatus::converged;

  bool ok() const { return status == QuadStatus::converged || status == QuadStatus::roundoff_limited; }
};

/// A real integrand with optional removable-limit values at the interval endpoints.
struct Integrand {
  std::function<double(double)> f;
  std::optional<double> left_limit;
  std::optional<double> right_limit;
};

inline constexpr double kFiniteTol = 1e-12;
inline constexpr double kOscillatoryTol = 1e-7;
inline constexpr double kLogOscillatoryTol = 1e-6;

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double result;
  double error;
  double floor;  // rounding floor of the error estimate
};

struct Evaluator {
  const Integrand& in;
  double lo;
  double hi;
  bool bad = false;

  double operator()(double x) {
    double v;
    if (in.left_limit && std::abs(x - lo) <= 1e-300) v = *in.left_limit;
    else if (in.right_limit && std::abs(x - hi) <= 1e-300) v = *in.right_limit;
    else v = in.f(x);
    if (!std::isfinite(v)) bad = true;
    return v;
  }
};

// QUADPACK qk15 with a 10 eps rounding floor.
inline Segment gk15(Evaluator& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double fc = f(centr);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);
  double fv1[7];
  double fv2[7];
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * xgk[jtw];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += wg[j] * (f1 + f2);
    resk += wgk[jtw] * (f1 + f2);
    resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * xgk[jtwm1];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += wgk[jtwm1] * (f1 + f2);
    resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double result = resk * hlgth;
  resabs *= std::abs(hlgth);
  resasc *= std::abs(hlgth);
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  const double floor = 10.0 * kEps * resabs;
  abserr = std::max(abserr, floor);
  return {a, b, result, abserr, floor};
}

}  // namespace detail

/// Adaptive 15-point Gauss-Kronrod on [a, b], bisecting the segment with the
/// largest error estimate until the total estimate is at most tol.
inline QuadResult integrate_finite(const Integrand& f, double a, double b, double tol, int max_subdivisions = 2000) {
  neumann_sici::detail::require(static_cast<bool>(f.f), "integrate_finite: empty integrand");
  neumann_sici::detail::require(std::isfinite(a) && std::isfinite(b) && a < b, "integrate_finite: need finite a < b");
  neumann_sici::detail::require(tol > 0.0, "integrate_finite: tol must be > 0");
  detail::Evaluator ev{f, a, b};
  std::vector<detail::Segment> segs{detail::gk15(ev, a, b)};
  QuadResult r;
  auto totals = [&] {
    accel::CompensatedSum v;
    double e = 0.0;
    for (const auto& s : segs) {
      v.add(s.result);
      e += s.error;
    }
    r.value = v.value();
    r.abs_err_estimate = e;
  };
  totals();
  while (r.abs_err_estimate > tol) {
    if (ev.bad) break;
    if (r.subdivisions >= max_subdivisions) {
      r.status = QuadStatus::max_subdivisions;
      break;
    }
    auto worst = std::max_element(segs.begin(), segs.end(),
                                  [](const auto& l, const auto& rr) { return l.error < rr.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (worst->error <= 1.0001 * worst->floor || mid <= worst->a || mid >= worst->b) {
      r.status = QuadStatus::roundoff_limited;
      break;
    }
    const auto left = detail::gk15(ev, worst->a, mid);
    const auto right = detail::gk15(ev, mid, worst->b);
    *worst = left;
    segs.push_back(right);
    ++r.subdivisions;
    totals();
  }
  if (ev.bad) {
    r.status = QuadStatus::nan_integrand;
    r.value = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Oscillatory tails

struct OscillatoryOptions {
  int levels = 40;
  int max_partitions = 400;
  int check_every = 5;
  double segment_tol = 1e-15;
};

namespace detail {

inline QuadStatus combine(QuadStatus a, QuadStatus b) {
  auto rank = [](QuadStatus s) {
    switch (s) {
      case QuadStatus::converged: return 0;
      case QuadStatus::roundoff_limited: return 1;
      case QuadStatus::max_subdivisions: return 2;
      case QuadStatus::acceleration_stalled: return 3;
      case QuadStatus::nan_integrand: return 4;
    }
    return 4;
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace detail

/// integral_start^inf f(t) dt for eventually alternating partition integrals over
/// [start + m*spacing, start + (m+1)*spacing], accelerated by Euler averaging.
inline QuadResult longman_tail(const std::function<double(double)>& f, double start, double spacing, double tol,
                               const OscillatoryOptions& opts = {}) {
  neumann_sici::detail::require(spacing > 0.0 && std::isfinite(start), "longman_tail: bad partition");
  neumann_sici::detail::require(tol > 0.0, "longman_tail: tol must be > 0");
  neumann_sici::detail::require(opts.levels >= 1 && opts.max_partitions > opts.levels + 1,
                                "longman_tail: bad acceleration options");
  const Integrand in{f, std::nullopt, std::nullopt};
  QuadResult r;
  accel::CompensatedSum s;
  std::vector<double> partial;
  partial.reserve(static_cast<std::size_t>(opts.max_partitions));
  double quad_err = 0.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  accel::Accelerated best{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()};
  const int window = opts.levels + 2;
  for (int m = 0; m < opts.max_partitions; ++m) {
    const double a = start + m * spacing;
    const auto seg = integrate_finite(in, a, a + spacing, opts.segment_tol);
    if (seg.status == QuadStatus::nan_integrand) {
      r.status = QuadStatus::nan_integrand;
      r.value = seg.value;
      r.partitions_used = m + 1;
      return r;
    }
    s.add(seg.value);
    quad_err += seg.abs_err_estimate;
    r.subdivisions += seg.subdivisions;
    partial.push_back(s.value());
    const int count = m + 1;
    if (count >= window && count % opts.check_every == 0) {
      const auto acc = accel::euler_average(std::span<const double>(partial).last(static_cast<std::size_t>(window)),
                                            opts.levels);
      double err = acc.error;
      err = std::isnan(prev) ? std::max(err, std::abs(acc.value - partial.back()))
                             : std::max(err, std::abs(acc.value - prev));
      prev = acc.value;
      best = {acc.value, err};
      r.partitions_used = count;
      if (err + quad_err <= tol) {
        r.value = acc.value;
        r.abs_err_estimate = err + quad_err;
        r.status = QuadStatus::converged;
        return r;
      }
    }
  }
  r.value = best.value;
  r.abs_err_estimate = best.error + quad_err;
  r.partitions_used = opts.max_partitions;
  r.status = QuadStatus::acceleration_stalled;
  return r;
}

/// integral_0^inf f(t) dt: adaptive quadrature up to first_boundary, then
/// Longman partitions of length spacing (half the asymptotic period).
inline QuadResult oscillatory_semiinf(const Integrand& f, double spacing, double first_boundary, double tol,
                                      const OscillatoryOptions& opts = {}) {
  neumann_sici::detail::require(first_boundary > 0.0, "oscillatory_semiinf: first_boundary must be > 0");
  const auto head = integrate_finite(f, 0.0, first_boundary, 0.25 * tol);
  const auto tail = longman_tail(f.f, first_boundary, spacing, 0.75 * tol, opts);
  QuadResult r;
  r.value = head.value + tail.value;
  r.abs_err_estimate = head.abs_err_estimate + tail.abs_err_estimate;
  r.subdivisions = head.subdivisions + tail.subdivisions;
  r.partitions_used = tail.partitions_used;
  r.status = detail::combine(head.status, tail.status);
  if (r.status == QuadStatus::roundoff_limited && r.abs_err_estimate <= tol) r.status = QuadStatus::converged;
  return r;
}

/// Bessel-integrand convenience: partitions at the approximate zeros
/// (m + order/2 + 3/4) pi of J_order.
inline QuadResult oscillatory_semiinf_bessel(const Integrand& f, int order, double tol,
                                             const OscillatoryOptions& opts = {}) {
  neumann_sici::detail::require(order >= 0, "oscillatory_semiinf_bessel: order must be >= 0");
  double first = (order / 2.0 + 0.75) * std::numbers::pi;
  while (first < 2.0 * order + 10.0) first += std::numbers::pi;
  return oscillatory_semiinf(f, std::numbers::pi, first, tol, opts);
}

// ---------------------------------------------------------------------------
// Split tails

/// w(t) [u1 + Re(v1 e^{it})] [u2 + Re(v2 e^{it})] at one t.
struct TailFactors {
  double w;
  double u1;
  std::complex<double> v1;
  double u2;
  std::complex<double> v2;
};

using TailModel = std::function<TailFactors(double)>;

namespace detail {

inline double smooth_part(const TailFactors& f) {
  return f.w * (f.u1 * f.u2 + 0.5 * (f.v1 * std::conj(f.v2)).real());
}
inline std::complex<double> first_harmonic(const TailFactors& f) { return f.w * (f.u1 * f.v2 + f.u2 * f.v1); }
inline std::complex<double> second_harmonic(const TailFactors& f) { return 0.5 * f.w * f.v1 * f.v2; }

inline double cut_for_order(int order) { return 30.0 + 2.0 * order; }

}  // namespace detail

/// integral_0^inf of an integrand given directly on [0, b] and by its
/// factor model on [b, inf).
inline QuadResult split_product_integral(const Integrand& head, const TailModel& tail, double b, double tol,
                                         const OscillatoryOptions& opts = {}) {
  neumann_sici::detail::require(b > 0.0 && tol > 0.0, "split_product_integral: need b > 0 and tol > 0");
  const double ctol = 0.2 * std::min(tol, 1e-9);

  const auto h = integrate_finite(head, 0.0, b, ctol);

  const Integrand smooth{[&](double s) {
                           const double t = b / (s * s);
                           if (!(t < 1e30)) return 0.0;
                           return detail::smooth_part(tail(t)) * 2.0 * b / (s * s * s);
                         },
                         0.0, std::nullopt};
  const auto sm = integrate_finite(smooth, 0.0, 1.0, ctol);

  const auto h1 = longman_tail(
      [&](double t) { return (detail::first_harmonic(tail(t)) * std::complex<double>(std::cos(t), std::sin(t))).real(); },
      b, std::numbers::pi, ctol, opts);
  const auto h2 = longman_tail(
      [&](double t) {
        return (detail::second_harmonic(tail(t)) * std::complex<double>(std::cos(2.0 * t), std::sin(2.0 * t))).real();
      },
      b, 0.5 * std::numbers::pi, ctol, opts);

  QuadResult r;
  r.value = h.value + sm.value + h1.value + h2.value;
  r.abs_err_estimate = h.abs_err_estimate + sm.abs_err_estimate + h1.abs_err_estimate + h2.abs_err_estimate;
  r.subdivisions = h.subdivisions + sm.subdivisions + h1.subdivisions + h2.subdivisions;
  r.partitions_used = h1.partitions_used + h2.partitions_used;
  r.status = detail::combine(detail::combine(h.status, sm.status), detail::combine(h1.status, h2.status));
  if (r.status != QuadStatus::nan_integrand) {
    r.status = r.abs_err_estimate <= tol ? QuadStatus::converged
               : r.status == QuadStatus::converged ? QuadStatus::roundoff_limited
                                                   : r.status;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Factor models

namespace factors {

struct UV {
  double u;
  std::complex<double> v;
};

/// Si(t) = pi/2 + Re((-f + i g) e^{it})
inline UV si(double t) {
  const auto a = specfun::sici_auxiliary(t);
  return {0.5 * std::numbers::pi, {-a.f, a.g}};
}

/// gamma + log t - Ci(t) = gamma + log t + Re((g + i f) e^{it})
inline UV gamma_log_minus_ci(double t) {
  const auto a = specfun::sici_auxiliary(t);
  return {specfun::constants.euler_gamma + std::log(t), {a.g, a.f}};
}

/// J_m(t) = Re(H_m(t) e^{-it} e^{it})
inline UV bessel_j(int m, double t) { return {0.0, specfun::hankel_amplitude(m, t)}; }

}  // namespace factors

// ---------------------------------------------------------------------------
// Small-t series for the Bessel brackets

namespace detail {

// pi/2 Y_0(t) - log(t/2) J_0(t) = gamma J_0 + sum_{k>=1} (-1)^{k+1} H_k (t^2/4)^k / (k!)^2
inline double y0_bracket_series(double t) {
  const double q = 0.25 * t * t;
  double term = 1.0;
  double hk = 0.0;
  double s = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    const double add = -hk * term;
    s += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(s)) break;
  }
  return specfun::constants.euler_gamma * specfun::bessel_j(0, t) + s;
}

// log(t/2) J_1 - pi/2 Y_1 - J_0/t = (1 - J_0)/t + (t/4) sum_k [psi(k+1) + psi(k+2)] (-t^2/4)^k / (k!(k+1)!)
inline double y1_bracket_series(double t) {
  const double q = 0.25 * t * t;
  const double g = specfun::constants.euler_gamma;
  // (1 - J_0)/t = sum_{k>=1} (-1)^{k+1} (t^2/4)^k / (k!)^2 / t
  double term = 1.0;
  double one_minus_j0 = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    one_minus_j0 -= term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(one_minus_j0)) break;
  }
  double s = 0.0;
  term = 1.0;
  double hk = 0.0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      term *= -q / (static_cast<double>(k) * (k + 1));
      hk += 1.0 / k;
    }
    const double add = (2.0 * hk + 1.0 / (k + 1) - 2.0 * g) * term;
    s += add;
    if (k > 0 && std::abs(add) <= 0.25 * kEps * std::abs(s)) break;
  }
  return one_minus_j0 / t + 0.25 * t * s;
}

inline constexpr double kBracketSeriesCut = 2.0;

}  // namespace detail

/// pi/2 Y_0(t) - log(t/2) J_0(t), evaluated as one combined bracket.
inline double y0_bracket(double t) {
  if (t < detail::kBracketSeriesCut) return detail::y0_bracket_series(t);
  return 0.5 * std::numbers::pi * specfun::bessel_y(0, t) - std::log(0.5 * t) * specfun::bessel_j(0, t);
}

/// log(t/2) J_1(t) - pi/2 Y_1(t) - J_0(t)/t, evaluated as one combined bracket.
inline double y1_bracket(double t) {
  if (t < detail::kBracketSeriesCut) return detail::y1_bracket_series(t);
  return std::log(0.5 * t) * specfun::bessel_j(1, t) - 0.5 * std::numbers::pi * specfun::bessel_y(1, t) -
         specfun::bessel_j(0, t) / t;
}

// ---------------------------------------------------------------------------
// Finite integrals on [0, pi/2]

/// integral_0^{pi/2} sin((2n+1)t) cot t dt
inline QuadResult lemma1_integral(int n, double tol = kFiniteTol) {
  neumann_sici::detail::require(n >= 0, "lemma1_integral: n must be >= 0");
  const double m = 2.0 * n + 1.0;
  const Integrand f{[m](double t) { return std::sin(m * t) * std::cos(t) / std::sin(t); }, m, 0.0};
  return integrate_finite(f, 0.0, 0.5 * std::numbers::pi, tol);
}

/// integral_0^{pi/2} [1 - cos(2nt)] cot t dt, with 1 - cos 2nt = 2 sin^2(nt)
inline QuadResult lemma3_integral(int n, double tol = kFiniteTol) {
  neumann_sici::detail::require(n >= 1, "lemma3_integral: n must be >= 1");
  const double nd = n;
  const Integrand f{[nd](double t) {
                      const double s = std::sin(nd * t);
                      return 2.0 * s * s * std::cos(t) / std::sin(t);
                    },
                    0.0, 0.0};
  return integrate_finite(f, 0.0, 0.5 * std::numbers::pi, tol);
}

/// integral_0^{pi/2} sin(a sin t) cot t dt = Si(a)
inline QuadResult si_transform_integral(double a, double tol = kFiniteTol) {
  neumann_sici::detail::require(std::isfinite(a) && a >= 0.0, "si_transform_integral: a must be >= 0");
  const Integrand f{[a](double t) { return std::sin(a * std::sin(t)) * std::cos(t) / std::sin(t); }, a, 0.0};
  return integrate_finite(f, 0.0, 0.5 * std::numbers::pi, tol);
}

/// integral_0^{pi/2} [1 - cos(a sin t)] cot t dt = gamma + log a - Ci(a)
inline QuadResult ci_transform_integral(double a, double tol = kFiniteTol) {
  neumann_sici::detail::require(std::isfinite(a) && a > 0.0, "ci_transform_integral: a must be > 0");
  const Integrand f{[a](double t) {
                      const double st = std::sin(t);
                      const double s = std::sin(0.5 * a * st);
                      return 2.0 * s * s * std::cos(t) / st;
                    },
                    0.0, 0.0};
  return integrate_finite(f, 0.0, 0.5 * std::numbers::pi, tol);
}

/// integral_0^{pi/2} [zeta(2k+3) - Cl_{2k+3}(2t)] cot t dt
inline QuadResult clausen_cot_integral(int k, double tol = kFiniteTol) {
  neumann_sici::detail::require(k >= 0, "clausen_cot_integral: k must be >= 0");
  const int w = 2 * k + 3;
  const double z = specfun::zeta(w);
  const Integrand f{[w, z](double t) { return (z - specfun::clausen_odd(w, 2.0 * t)) * std::cos(t) / std::sin(t); },
                    0.0, 0.0};
  return integrate_finite(f, 0.0, 0.5 * std::numbers::pi, tol);
}

// ---------------------------------------------------------------------------
// Semi-infinite integrals

/// integral_0^inf J_1(t)/t dt = 1, through the plain Longman engine.
inline QuadResult j1_over_t_integral(double tol = 1e-9) {
  const Integrand f{[](double t) { return specfun::bessel_j(1, t) / t; }, 0.5, std::nullopt};
  return oscillatory_semiinf_bessel(f, 1, tol);
}

/// integral_0^inf Si(t) J_{2n+1}(t) dt/t
inline QuadResult si_bessel_integral(int n, double tol = kOscillatoryTol) {
  neumann_sici::detail::require(n >= 0, "si_bessel_integral: n must be >= 0");
  const int m = 2 * n + 1;
  const Integrand head{[m](double t) { return specfun::si(t) / t * specfun::bessel_j(m, t); }, 0.0, std::nullopt};
  const TailModel tail = [m](double t) {
    const auto s = factors::si(t);
    const auto j = factors::bessel_j(m, t);
    return TailFactors{1.0 / t, s.u, s.v, j.u, j.v};
  };
  return split_product_integral(head, tail, detail::cut_for_order(m), tol);
}

namespace detail {

inline QuadResult glmc_bessel_integral(int m, double tol) {
  const Integrand head{[m](double t) { return specfun::gamma_log_minus_ci(t) / t * specfun::bessel_j(m, t); }, 0.0,
                       std::nullopt};
  const TailModel tail = [m](double t) {
    const auto c = factors::gamma_log_minus_ci(t);
    const auto j = factors::bessel_j(m, t);
    return TailFactors{1.0 / t, c.u, c.v, j.u, j.v};
  };
  return split_product_integral(head, tail, cut_for_order(m), tol);
}

}  // namespace detail

/// integral_0^inf [gamma + log t - Ci(t)] J_{2n}(t) dt/t
inline QuadResult ci_bessel_integral(int n, double tol = kLogOscillatoryTol) {
  neumann_sici::detail::require(n >= 1, "ci_bessel_integral: n must be >= 1");
  return detail::glmc_bessel_integral(2 * n, tol);
}

/// integral_0^inf [gamma + log t - Ci(t)] J_0(t) dt/t, which vanishes.
inline QuadResult j0_orthogonality_integral(double tol = kLogOscillatoryTol) {
  return detail::glmc_bessel_integral(0, tol);
}

/// ((gamma + log t - Ci(t))/t) (pi/2 Y_0(t) - log(t/2) J_0(t))
inline double example2_integrand(double t) {
  neumann_sici::detail::require(t > 0.0, "example2_integrand: t must be > 0");
  return specfun::gamma_log_minus_ci(t) / t * y0_bracket(t);
}

inline QuadResult example2_integral(double tol = kLogOscillatoryTol) {
  const Integrand head{example2_integrand, 0.0, std::nullopt};
  const TailModel tail = [](double t) {
    const auto c = factors::gamma_log_minus_ci(t);
    const std::complex<double> v = specfun::hankel_amplitude(0, t) *
                                   std::complex<double>(-std::log(0.5 * t), -0.5 * std::numbers::pi);
    return TailFactors{1.0 / t, c.u, c.v, 0.0, v};
  };
  return split_product_integral(head, tail, detail::cut_for_order(0), tol);
}

namespace detail {

inline QuadResult si_y1_bracket_integral(double shift, double tol) {
  const Integrand head{[shift](double t) {
                         return specfun::si(t) / t * (y1_bracket(t) + shift * specfun::bessel_j(1, t));
                       },
                       0.0, std::nullopt};
  const TailModel tail = [shift](double t) {
    const auto s = factors::si(t);
    const std::complex<double> v =
        specfun::hankel_amplitude(1, t) * std::complex<double>(std::log(0.5 * t) + shift, 0.5 * std::numbers::pi) -
        specfun::hankel_amplitude(0, t) / t;
    return TailFactors{1.0 / t, s.u, s.v, 0.0, v};
  };
  return split_product_integral(head, tail, cut_for_order(1), tol);
}

}  // namespace detail

/// integral_0^inf Si(t) (log(t/2) J_1(t) - pi/2 Y_1(t) - J_0(t)/t) dt/t
inline QuadResult corollary6_integral(double tol = kLogOscillatoryTol) {
  return detail::si_y1_bracket_integral(0.0, tol);
}

/// integral_0^inf Si(t) [(log(t/2) + gamma - 1) J_1 - pi/2 Y_1 - J_0/t] dt/t
inline QuadResult corollary6_intermediate_integral(double tol = kLogOscillatoryTol) {
  return detail::si_y1_bracket_integral(specfun::constants.euler_gamma - 1.0, tol);
}

/// integral_0^inf [gamma + log t - Ci(t)] J_0(sqrt(a^2 + t^2)) dt/t
inline QuadResult corollary5_integral(double a, double tol = kLogOscillatoryTol) {
  neumann_sici::detail::require(std::isfinite(a), "corollary5_integral: a must be finite");
  const double a2 = a * a;
  const Integrand head{[a2](double t) {
                         return specfun::gamma_log_minus_ci(t) / t * specfun::bessel_j(0, std::sqrt(a2 + t * t));
                       },
                       0.0, std::nullopt};
  const TailModel tail = [a2](double t) {
    const auto c = factors::gamma_log_minus_ci(t);
    const double r = std::sqrt(a2 + t * t);
    const double shift = a2 / (r + t);
    const std::complex<double> v =
        specfun::hankel_amplitude(0, r) * std::complex<double>(std::cos(shift), std::sin(shift));
    return TailFactors{1.0 / t, c.u, c.v, 0.0, v};
  };
  return split_product_integral(head, tail, detail::cut_for_order(0) + std::abs(a), tol);
}

/// 2 integral_0^inf [gamma + log t - Ci(t)] J_0(sqrt(a^2 + t^2)) dt/t; this is twice the series, see corollary5_integral.
inline QuadResult corollary5_rhs(double a, double tol = kLogOscillatoryTol) {
  auto r = corollary5_integral(a, 0.5 * tol);
  r.value *= 2.0;
  r.abs_err_estimate *= 2.0;
  return r;
}

}  // namespace neumann_sici::quad
