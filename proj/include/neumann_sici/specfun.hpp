#pragma once
// Double-precision special function kernels: integer-order Bessel J and Y,
// the sine and cosine integrals, odd-index Clausen functions, zeta and eta.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace neumann_sici::specfun {

struct EvalOptions {
  double target_abs_tol = 1e-14;
  std::int64_t max_terms = 100'000'000;

  void validate() const {
    detail::require(target_abs_tol > 0.0, "EvalOptions: target_abs_tol must be > 0");
    detail::require(max_terms >= 1, "EvalOptions: max_terms must be >= 1");
  }
};

struct Constants {
  double euler_gamma;
  double catalan_g;
  double log2;
  double zeta3;
  double pi;
};

inline constexpr Constants constants{
    std::numbers::egamma,
    0.915965594177219015054603514932384110774,
    std::numbers::ln2,
    1.202056903159594285399738161511449990765,
    std::numbers::pi,
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// zeta(2) .. zeta(30)
inline constexpr std::array<double, 29> kZetaTable = {
    1.64493406684822643647, 1.2020569031595942854,  1.08232323371113819152,
    1.03692775514336992633, 1.01734306198444913971, 1.00834927738192282684,
    1.00407735619794433938, 1.00200839282608221442, 1.00099457512781808534,
    1.00049418860411946456, 1.0002460865533080483,  1.00012271334757848915,
    1.00006124813505870483, 1.00003058823630702049, 1.00001528225940865187,
    1.00000763719763789976, 1.00000381729326499984, 1.00000190821271655394,
    1.0000009539620338728,  1.00000047693298678781, 1.00000023845050272773,
    1.00000011921992596531, 1.00000005960818905126, 1.00000002980350351465,
    1.00000001490155482837, 1.00000000745071178984, 1.00000000372533402479,
    1.00000000186265972351, 1.00000000093132743242,
};

// eta(1) .. eta(30); eta(1) = log 2
inline constexpr std::array<double, 30> kEtaTable = {
    0.693147180559945309417, 0.822467033424113218236, 0.90154267736969571405,
    0.947032829497245917577, 0.972119770446909305936, 0.985551091297435104098,
    0.99259381992283028267,  0.996233001852647899227, 0.998094297541605330768,
    0.999039507598271565639, 0.999517143498060754144, 0.999757685143858190853,
    0.999878542763265115492, 0.999939170345979718171, 0.999969551213099238083,
    0.999984764214906106442, 0.999992378292041011977, 0.99999618786961011348,
    0.999998093508171675107, 0.999999046611581522115, 0.999999523258215542816,
    0.999999761613230822548, 0.999999880801318439503, 0.999999940398892394628,
    0.999999970198856962834, 0.999999985099231996569, 0.999999992549550484964,
    0.999999996274753400109, 0.999999998137369418112, 0.999999999068682281454,
};

inline void require_finite(double x, const char* what) {
  neumann_sici::detail::require(std::isfinite(x), what);
}

// J_n(x) from the defining power series; used for x <= 2.
inline double bessel_j_series(int order, double x) {
  const double h = 0.5 * x;
  double lead = 1.0;
  for (int k = 1; k <= order && lead != 0.0; ++k) lead *= h / k;
  if (lead == 0.0) return 0.0;
  const double q = -h * h;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (static_cast<double>(k) * (order + k));
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return lead * sum;
}

// Miller backward recurrence normalized by J_0 + 2 sum J_2k = 1. Fills out[0..max_order].
inline void bessel_j_miller(int max_order, double x, std::vector<double>& out) {
  constexpr double kBig = 1e250;
  constexpr double kRescale = 1e-250;
  int start = max_order + static_cast<int>(std::ceil(1.5 * x)) + 40;
  if (start % 2 != 0) ++start;
  out.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
  double next = 0.0;
  double cur = 1.0;
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    if (k <= max_order) out[static_cast<std::size_t>(k)] = cur;
    if (k % 2 == 0) norm += 2.0 * cur;
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig) {
      cur *= kRescale;
      next *= kRescale;
      norm *= kRescale;
      for (int i = std::max(k, 1); i <= max_order; ++i) out[static_cast<std::size_t>(i)] *= kRescale;
    }
  }
  out[0] = cur;
  norm += cur;
  for (auto& v : out) v /= norm;
}

// Single-order Miller recurrence without storing the whole sequence.
inline double bessel_j_miller_single(int order, double x) {
  constexpr double kBig = 1e250;
  constexpr double kRescale = 1e-250;
  int start = order + static_cast<int>(std::ceil(1.5 * x)) + 40;
  if (start % 2 != 0) ++start;
  double next = 0.0;
  double cur = 1.0;
  double norm = 0.0;
  double held = 0.0;
  for (int k = start; k >= 1; --k) {
    if (k == order) held = cur;
    if (k % 2 == 0) norm += 2.0 * cur;
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig) {
      cur *= kRescale;
      next *= kRescale;
      norm *= kRescale;
      held *= kRescale;
    }
  }
  norm += cur;
  if (order == 0) held = cur;
  return held / norm;
}

struct HankelPQ {
  double p = 1.0;
  double q = 0.0;
  bool converged = false;
};

// Hankel's asymptotic P and Q for order nu; converged when the smallest
// term falls below double precision before the series starts to diverge.
inline HankelPQ hankel_pq(int order, double x) {
  const double mu = 4.0 * order * order;
  const double z8 = 8.0 * x;
  HankelPQ r;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * z8);
    const double mag = std::abs(term);
    if (mag > last) break;
    if (k % 2 == 1) {
      r.q += ((k - 1) / 2) % 2 == 0 ? term : -term;
    } else {
      r.p += (k / 2) % 2 == 0 ? term : -term;
    }
    if (mag <= 0.5 * kEps * std::abs(r.p)) {
      r.converged = true;
      break;
    }
    last = mag;
  }
  return r;
}

// cos and sin of (2 order + 1) pi / 4.
inline std::pair<double, double> bessel_phase(int order) {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  switch ((2 * order + 1) % 8) {
    case 1: return {h, h};
    case 3: return {-h, h};
    case 5: return {-h, -h};
    default: return {h, -h};
  }
}

// (J_order, Y_order) from the Hankel expansion; caller checks pq.converged.
inline std::pair<double, double> bessel_jy_asymptotic(int order, double x, const HankelPQ& pq) {
  const auto [cphi, sphi] = bessel_phase(order);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cchi = cx * cphi + sx * sphi;
  const double schi = sx * cphi - cx * sphi;
  const double scale = std::sqrt(2.0 / (std::numbers::pi * x));
  return {scale * (pq.p * cchi - pq.q * schi), scale * (pq.p * schi + pq.q * cchi)};
}

// Y_0, Y_1 from the logarithmic power series (x < 2).
inline std::pair<double, double> bessel_y01_series(double x) {
  const double g = constants.euler_gamma;
  const double h = 0.5 * x;
  const double q = h * h;
  const double lg = std::log(h);
  const double j0 = bessel_j_series(0, x);
  const double j1 = bessel_j_series(1, x);

  double y0sum = 0.0;
  double t = 1.0;
  double hk = 0.0;
  for (int k = 1; k < 200; ++k) {
    t *= -q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    const double add = -hk * t;
    y0sum += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(y0sum)) break;
  }
  const double y0 = (2.0 / std::numbers::pi) * ((lg + g) * j0 + y0sum);

  // psi(k+1) + psi(k+2) = H_k + H_{k+1} - 2 gamma
  double y1sum = 0.0;
  t = 1.0;
  hk = 0.0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      t *= -q / (static_cast<double>(k) * (k + 1));
      hk += 1.0 / k;
    }
    const double add = (2.0 * hk + 1.0 / (k + 1) - 2.0 * g) * t;
    y1sum += add;
    if (k > 0 && std::abs(add) <= 0.25 * kEps * std::abs(y1sum)) break;
  }
  const double y1 = -2.0 / (std::numbers::pi * x) + (2.0 / std::numbers::pi) * lg * j1 -
                    (1.0 / std::numbers::pi) * h * y1sum;
  return {y0, y1};
}

// Y_0, Y_1 by Steed's method (CF1 for J'/J, Temme's complex CF2 for p + iq); x >= 2.
inline std::pair<double, double> bessel_y01_steed(double x) {
  constexpr int kMaxIt = 100000;
  constexpr double kFpMin = 1e-300;
  constexpr double kCfEps = 1e-16;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / std::numbers::pi;

  int isign = 1;
  double h = kFpMin;
  double b = 0.0;
  double d = 0.0;
  double c = h;
  for (int i = 1; i <= kMaxIt; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kCfEps) break;
  }
  const double rjl = isign * kFpMin;
  const double rjpl = h * rjl;
  const double f = rjpl / rjl;

  double a = 0.25;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (int i = 2; i <= kMaxIt; ++i) {
    a += 2.0 * (i - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < kCfEps) break;
  }
  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  const double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  return {rymu, -rymup};
}

inline std::pair<double, double> bessel_y01(double x) {
  if (x < 2.0) return bessel_y01_series(x);
  if (x > 25.0) {
    const auto pq0 = hankel_pq(0, x);
    const auto pq1 = hankel_pq(1, x);
    if (pq0.converged && pq1.converged)
      return {bessel_jy_asymptotic(0, x, pq0).second, bessel_jy_asymptotic(1, x, pq1).second};
  }
  return bessel_y01_steed(x);
}

// (Si, gamma + log x - Ci) by power series; accurate for x <= 4.
inline std::pair<double, double> sici_series(double x) {
  const double q = x * x;
  double t = x;
  double si = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double add = t / (2.0 * n - 1.0);
    si += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(si)) break;
    t *= -q / ((2.0 * n) * (2.0 * n + 1.0));
  }
  double u = 0.5 * q;
  double glmc = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double add = u / (2.0 * n);
    glmc += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(glmc)) break;
    u *= -q / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
  }
  return {si, glmc};
}

// e^{ix} E1(ix) = g(x) - i f(x) by the modified Lentz continued fraction; x > 2.
inline std::complex<double> expint_e1_scaled(double x) {
  constexpr double kFpMin = 1e-300;
  std::complex<double> b(1.0, x);
  std::complex<double> c = 1.0 / kFpMin;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
  }
  return h;
}

inline constexpr double kSiciCrossover = 4.0;

}  // namespace detail

// ---------------------------------------------------------------------------
// zeta / eta

inline double zeta(int s, const EvalOptions& opts = {}) {
  neumann_sici::detail::require(s >= 2, "zeta: s must be >= 2");
  if (s <= 30) return detail::kZetaTable[static_cast<std::size_t>(s - 2)];
  opts.validate();
  double sum = 1.0;
  for (std::int64_t n = 2; n <= opts.max_terms; ++n) {
    const double term = std::pow(static_cast<double>(n), -s);
    sum += term;
    if (term < 0.25 * detail::kEps) break;
  }
  return sum;
}

inline double eta(int s, const EvalOptions& opts = {}) {
  neumann_sici::detail::require(s >= 1, "eta: s must be >= 1");
  if (s <= 30) return detail::kEtaTable[static_cast<std::size_t>(s - 1)];
  opts.validate();
  double sum = 1.0;
  for (std::int64_t n = 2; n <= opts.max_terms; ++n) {
    const double term = std::pow(static_cast<double>(n), -s);
    sum += (n % 2 == 0) ? -term : term;
    if (term < 0.25 * detail::kEps) break;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Bessel functions

/// J_order(x) for integer order >= 0 and x >= 0. Power series for x <= 2,
/// Hankel expansion for orders 0 and 1 beyond x = 25, Miller recurrence otherwise.
inline double bessel_j(int order, double x) {
  detail::require_finite(x, "bessel_j: x must be finite");
  neumann_sici::detail::require(x >= 0.0, "bessel_j: x must be >= 0");
  neumann_sici::detail::require(order >= 0, "bessel_j: order must be >= 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x <= 2.0) return detail::bessel_j_series(order, x);
  if (order <= 1 && x > 25.0) {
    const auto pq = detail::hankel_pq(order, x);
    if (pq.converged) return detail::bessel_jy_asymptotic(order, x, pq).first;
  }
  return detail::bessel_j_miller_single(order, x);
}

/// J_0(x) .. J_max_order(x) in one pass.
inline std::vector<double> bessel_j_sequence(int max_order, double x) {
  detail::require_finite(x, "bessel_j_sequence: x must be finite");
  neumann_sici::detail::require(x >= 0.0, "bessel_j_sequence: x must be >= 0");
  neumann_sici::detail::require(max_order >= 0, "bessel_j_sequence: max_order must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (x <= 2.0) {
    for (int n = 0; n <= max_order; ++n) out[static_cast<std::size_t>(n)] = detail::bessel_j_series(n, x);
    return out;
  }
  detail::bessel_j_miller(max_order, x, out);
  return out;
}

/// Y_0(x) or Y_1(x) for x > 0.
inline double bessel_y(int order, double x) {
  detail::require_finite(x, "bessel_y: x must be finite");
  neumann_sici::detail::require(order == 0 || order == 1, "bessel_y: order must be 0 or 1");
  neumann_sici::detail::require(x > 0.0, "bessel_y: x must be > 0");
  const auto [y0, y1] = detail::bessel_y01(x);
  return order == 0 ? y0 : y1;
}

/// Y_order(x) for any integer order >= 0 by forward recurrence from Y_0, Y_1.
inline double bessel_yn(int order, double x) {
  neumann_sici::detail::require(order >= 0, "bessel_yn: order must be >= 0");
  if (order <= 1) return bessel_y(order, x);
  detail::require_finite(x, "bessel_yn: x must be finite");
  neumann_sici::detail::require(x > 0.0, "bessel_yn: x must be > 0");
  auto [ym1, y] = detail::bessel_y01(x);
  for (int k = 1; k < order; ++k) {
    const double yp1 = (2.0 * k / x) * y - ym1;
    ym1 = y;
    y = yp1;
  }
  return y;
}

/// H^(1)_order(x) e^{-ix}: the slowly varying amplitude with
/// J_order(x) = Re(A e^{ix}) and Y_order(x) = Im(A e^{ix}).
inline std::complex<double> hankel_amplitude(int order, double x) {
  detail::require_finite(x, "hankel_amplitude: x must be finite");
  neumann_sici::detail::require(order >= 0, "hankel_amplitude: order must be >= 0");
  neumann_sici::detail::require(x > 0.0, "hankel_amplitude: x must be > 0");
  if (x > 25.0) {
    const auto pq = detail::hankel_pq(order, x);
    if (pq.converged) {
      const auto [cphi, sphi] = detail::bessel_phase(order);
      const double scale = std::sqrt(2.0 / (std::numbers::pi * x));
      return scale * std::complex<double>(pq.p, pq.q) * std::complex<double>(cphi, -sphi);
    }
  }
  const std::complex<double> h(bessel_j(order, x), bessel_yn(order, x));
  return h * std::complex<double>(std::cos(x), -std::sin(x));
}

// ---------------------------------------------------------------------------
// Sine and cosine integrals

inline double si(double x) {
  detail::require_finite(x, "si: x must be finite");
  neumann_sici::detail::require(x >= 0.0, "si: x must be >= 0");
  if (x <= detail::kSiciCrossover) return detail::sici_series(x).first;
  const auto h = detail::expint_e1_scaled(x);
  const double f = -h.imag();
  const double g = h.real();
  return 0.5 * std::numbers::pi - f * std::cos(x) - g * std::sin(x);
}

/// gamma + log x - Ci(x), evaluated without cancellation near 0.
inline double gamma_log_minus_ci(double x) {
  detail::require_finite(x, "gamma_log_minus_ci: x must be finite");
  neumann_sici::detail::require(x >= 0.0, "gamma_log_minus_ci: x must be >= 0");
  if (x <= detail::kSiciCrossover) return detail::sici_series(x).second;
  const auto h = detail::expint_e1_scaled(x);
  const double f = -h.imag();
  const double g = h.real();
  const double ci = f * std::sin(x) - g * std::cos(x);
  return constants.euler_gamma + std::log(x) - ci;
}

inline double ci(double x) {
  detail::require_finite(x, "ci: x must be finite");
  neumann_sici::detail::require(x > 0.0, "ci: x must be > 0");
  if (x <= detail::kSiciCrossover)
    return constants.euler_gamma + std::log(x) - detail::sici_series(x).second;
  const auto h = detail::expint_e1_scaled(x);
  return -h.imag() * std::sin(x) - h.real() * std::cos(x);
}

/// Auxiliary functions with Si(x) = pi/2 - f cos x - g sin x and Ci(x) = f sin x - g cos x.
struct SiCiAuxiliary {
  double f;
  double g;
};

inline SiCiAuxiliary sici_auxiliary(double x) {
  detail::require_finite(x, "sici_auxiliary: x must be finite");
  neumann_sici::detail::require(x > 0.0, "sici_auxiliary: x must be > 0");
  if (x > detail::kSiciCrossover) {
    const auto h = detail::expint_e1_scaled(x);
    return {-h.imag(), h.real()};
  }
  const double s = 0.5 * std::numbers::pi - si(x);
  const double c = ci(x);
  return {s * std::cos(x) + c * std::sin(x), s * std::sin(x) - c * std::cos(x)};
}

// ---------------------------------------------------------------------------
// Clausen functions of odd index

namespace detail {

// d^m/dx^m [cos(theta x) x^{-k}]
inline double clausen_term_derivative(int m, int k, double theta, double x) {
  const double c = std::cos(theta * x);
  const double s = std::sin(theta * x);
  double total = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= m; ++j) {
    double trig = 0.0;
    switch (j % 4) {
      case 0: trig = c; break;
      case 1: trig = -s; break;
      case 2: trig = -c; break;
      default: trig = s; break;
    }
    const int i = m - j;
    double power = 1.0;
    for (int r = 0; r < i; ++r) power *= -(k + r);
    total += binom * std::pow(theta, j) * trig * power * std::pow(x, -(k + i));
    binom = binom * (m - j) / (j + 1);
  }
  return total;
}

// integral_N^inf cos(theta x) x^{-k} dx for k >= 2 via the upward recurrence
// seeded by integral_z^inf cos(u)/u du = -Ci(z) and integral_z^inf sin(u)/u du = pi/2 - Si(z).
inline double clausen_tail_integral(int k, double theta, double n) {
  if (theta == 0.0) return std::pow(n, 1.0 - k) / (k - 1.0);
  const double z = n * theta;
  const auto aux = sici_auxiliary(z);
  const double cz = std::cos(z);
  const double sz = std::sin(z);
  double c = aux.g * cz - aux.f * sz;
  double s = aux.f * cz + aux.g * sz;
  for (int j = 2; j <= k; ++j) {
    const double zp = std::pow(z, j - 1);
    const double cn = cz / ((j - 1) * zp) - s / (j - 1);
    const double sn = sz / ((j - 1) * zp) + c / (j - 1);
    c = cn;
    s = sn;
  }
  return std::pow(theta, k - 1) * c;
}

inline constexpr std::int64_t kClausenDirectTerms = 100'000;

}  // namespace detail

/// Cl_weight(theta) = sum cos(n theta) / n^weight for odd weight >= 3:
/// direct summation followed by an Euler-Maclaurin tail with two derivative corrections.
inline double clausen_odd(int weight, double theta, const EvalOptions& opts = {}) {
  neumann_sici::detail::require(weight >= 3 && weight % 2 == 1, "clausen_odd: weight must be odd and >= 3");
  detail::require_finite(theta, "clausen_odd: theta must be finite");
  opts.validate();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(std::abs(theta), two_pi);
  if (t > std::numbers::pi) t = two_pi - t;
  if (t == 0.0) return zeta(weight);

  const std::int64_t terms = std::min(detail::kClausenDirectTerms, opts.max_terms);
  const double cr = std::cos(t);
  const double sr = std::sin(t);
  double c = 0.0;
  double s = 0.0;
  double sum = 0.0;
  for (std::int64_t n = 1; n <= terms; ++n) {
    if ((n & 1023) == 1) {
      c = std::cos(static_cast<double>(n) * t);
      s = std::sin(static_cast<double>(n) * t);
    } else {
      const double cn = c * cr - s * sr;
      s = s * cr + c * sr;
      c = cn;
    }
    const double nn = static_cast<double>(n);
    double inv = 1.0 / nn;
    double p = inv;
    for (int r = 1; r < weight; ++r) p *= inv;
    sum += c * p;
  }
  const double nd = static_cast<double>(terms);
  const double tail = detail::clausen_tail_integral(weight, t, nd) -
                      0.5 * detail::clausen_term_derivative(0, weight, t, nd) -
                      detail::clausen_term_derivative(1, weight, t, nd) / 12.0 +
                      detail::clausen_term_derivative(3, weight, t, nd) / 720.0;
  return sum + tail;
}

}  // namespace neumann_sici::specfun
