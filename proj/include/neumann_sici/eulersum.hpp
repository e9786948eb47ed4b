#pragma once
// Closed forms for the linear Euler sums behind the Ci-coefficient integrals,
// and independent partial-sum oracles for each of them.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "acceleration.hpp"
#include "coeffs.hpp"
#include "errors.hpp"
#include "specfun.hpp"

namespace neumann_sici::eulersum {

struct AssemblyTerm {
  std::string name;
  double coefficient;
  double value;
};

/// A closed form together with the constant terms it was assembled from.
struct ClosedFormValue {
  double value = 0.0;
  std::vector<AssemblyTerm> assembly;

  void add(std::string name, double coefficient, double v) {
    value += coefficient * v;
    assembly.push_back({std::move(name), coefficient, v});
  }
};

namespace detail {

inline std::string zname(int s) { return "zeta(" + std::to_string(s) + ")"; }
inline std::string ename(int s) { return "eta(" + std::to_string(s) + ")"; }

inline void add_zeta(ClosedFormValue& c, double coef, int s) { c.add(zname(s), coef, specfun::zeta(s)); }
inline void add_eta(ClosedFormValue& c, double coef, int s) { c.add(ename(s), coef, specfun::eta(s)); }
inline void add_zz(ClosedFormValue& c, double coef, int s, int t) {
  c.add(zname(s) + "*" + zname(t), coef, specfun::zeta(s) * specfun::zeta(t));
}
inline void add_ee(ClosedFormValue& c, double coef, int s, int t) {
  c.add(ename(s) + "*" + ename(t), coef, specfun::eta(s) * specfun::eta(t));
}
inline void add_ze(ClosedFormValue& c, double coef, int s, int t) {
  c.add(zname(s) + "*" + ename(t), coef, specfun::zeta(s) * specfun::eta(t));
}
inline void add_ez(ClosedFormValue& c, double coef, int s, int t) {
  c.add(ename(s) + "*" + zname(t), coef, specfun::eta(s) * specfun::zeta(t));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed forms

/// 2 sum H_{n-1}/n^k = k zeta(k+1) - sum_{j=1}^{k-2} zeta(k-j) zeta(j+1)
inline ClosedFormValue euler_linear_sum(int k) {
  neumann_sici::detail::require(k >= 2, "euler_linear_sum: k must be >= 2");
  ClosedFormValue c;
  detail::add_zeta(c, k, k + 1);
  for (int j = 1; j <= k - 2; ++j) detail::add_zz(c, -1.0, k - j, j + 1);
  return c;
}

/// 2 sum A_{n-1}/n^k = 2 log2 zeta(k) - k zeta(k+1) + sum_{j=1}^{k} eta(k+1-j) eta(j)
inline ClosedFormValue nielsen_sum(int k) {
  neumann_sici::detail::require(k >= 2, "nielsen_sum: k must be >= 2");
  ClosedFormValue c;
  c.add("log2*" + detail::zname(k), 2.0, specfun::constants.log2 * specfun::zeta(k));
  detail::add_zeta(c, -k, k + 1);
  for (int j = 1; j <= k; ++j) detail::add_ee(c, 1.0, k + 1 - j, j);
  return c;
}

/// 2 sum (-1)^n H_{n-1}/n^{2k} = zeta(2k+1) - (2k-1) eta(2k+1) + 2 sum_{j=1}^{k-1} zeta(2k+1-2j) eta(2j)
inline ClosedFormValue sitaramachandrarao_h(int k) {
  neumann_sici::detail::require(k >= 1, "sitaramachandrarao_h: k must be >= 1");
  ClosedFormValue c;
  detail::add_zeta(c, 1.0, 2 * k + 1);
  detail::add_eta(c, -(2.0 * k - 1.0), 2 * k + 1);
  for (int j = 1; j <= k - 1; ++j) detail::add_ze(c, 2.0, 2 * k + 1 - 2 * j, 2 * j);
  return c;
}

/// 2 sum (-1)^n A_{n-1}/n^{2k} = zeta(2k+1) + (2k+1) eta(2k+1) - 2 eta(1) eta(2k)
///                               - 2 sum_{j=1}^{k} eta(2k+1-2j) zeta(2j)
inline ClosedFormValue sitaramachandrarao_a(int k) {
  neumann_sici::detail::require(k >= 1, "sitaramachandrarao_a: k must be >= 1");
  ClosedFormValue c;
  detail::add_zeta(c, 1.0, 2 * k + 1);
  detail::add_eta(c, 2.0 * k + 1.0, 2 * k + 1);
  detail::add_ee(c, -2.0, 1, 2 * k);
  for (int j = 1; j <= k; ++j) detail::add_ez(c, -2.0, 2 * k + 1 - 2 * j, 2 * j);
  return c;
}

/// Closed form of 2 sum beta_n / n^{k+1}.
inline ClosedFormValue corollary3_rhs(int k) {
  neumann_sici::detail::require(k >= 1, "corollary3_rhs: k must be >= 1");
  ClosedFormValue c;
  c.add("log2*" + detail::zname(k + 1), 2.0, specfun::constants.log2 * specfun::zeta(k + 1));
  detail::add_zeta(c, 1.0, k + 2);
  detail::add_eta(c, 1.0, k + 2);
  for (int j = 1; j <= k + 1; ++j) detail::add_ee(c, 1.0, k + 2 - j, j);
  for (int j = 1; j <= k - 1; ++j) detail::add_zz(c, -1.0, k + 1 - j, j + 1);
  return c;
}

/// Closed form of 2 sum (-1)^n beta_n / n^{2k}.
inline ClosedFormValue corollary4_rhs(int k) {
  neumann_sici::detail::require(k >= 1, "corollary4_rhs: k must be >= 1");
  ClosedFormValue c;
  detail::add_zeta(c, 1.0, 2 * k + 1);
  detail::add_eta(c, 1.0, 2 * k + 1);
  detail::add_ee(c, -2.0, 1, 2 * k);
  for (int j = 1; j <= k - 1; ++j) detail::add_ze(c, 2.0, 2 * k + 1 - 2 * j, 2 * j);
  for (int j = 1; j <= k; ++j) detail::add_ez(c, -2.0, 2 * k + 1 - 2 * j, 2 * j);
  return c;
}

/// 4 - 4G - gamma
inline ClosedFormValue corollary6_rhs() {
  ClosedFormValue c;
  c.add("1", 4.0, 1.0);
  c.add("catalan_g", -4.0, specfun::constants.catalan_g);
  c.add("euler_gamma", -1.0, specfun::constants.euler_gamma);
  return c;
}

/// 3 - 4G, the value of sum (-1)^n alpha_n / (n(n+1)).
inline ClosedFormValue catalan_series_rhs() {
  ClosedFormValue c;
  c.add("1", 3.0, 1.0);
  c.add("catalan_g", -4.0, specfun::constants.catalan_g);
  return c;
}

/// (pi^2/4) log 2 - (7/8) zeta(3)
inline ClosedFormValue example2_rhs() {
  ClosedFormValue c;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  c.add("pi^2*log2", 0.25, pi2 * specfun::constants.log2);
  detail::add_zeta(c, -7.0 / 8.0, 3);
  return c;
}

/// integral_0^{pi/2} [zeta(2k+3) - Cl_{2k+3}(2t)] cot t dt, half of corollary3_rhs(2k+2).
inline ClosedFormValue clausen_integral_rhs(int k) {
  neumann_sici::detail::require(k >= 0, "clausen_integral_rhs: k must be >= 0");
  auto c = corollary3_rhs(2 * k + 2);
  c.value *= 0.5;
  for (auto& t : c.assembly) t.coefficient *= 0.5;
  return c;
}

/// (7/4) log 2 zeta(3), the k = 0 instance in its simplified form.
inline ClosedFormValue clausen_integral_k0_simplified() {
  ClosedFormValue c;
  c.add("log2*zeta(3)", 7.0 / 4.0, specfun::constants.log2 * specfun::zeta(3));
  return c;
}

// ---------------------------------------------------------------------------
// Partial-sum oracles

struct OracleResult {
  double value = 0.0;
  double error = 0.0;
  std::int64_t terms = 0;
};

struct OracleOptions {
  std::int64_t direct_terms = 1'000'000;  // non-alternating sums
  std::int64_t alternating_terms = 10'000;
  int euler_levels = 30;
  int averaged_sums = 60;
};

namespace detail {

using accel::LogMonomial;

inline std::vector<LogMonomial> scaled(std::vector<LogMonomial> m, double extra_power, double factor) {
  for (auto& t : m) {
    t.power += extra_power;
    t.coef *= factor;
  }
  return m;
}

// Running-sum oracle: partial sums of term(n) up to n_max; the trailing
// partial sums are corrected by the Euler-Maclaurin tail of the term's
// non-alternating component, then Euler-averaged.
template <class Term>
OracleResult accelerated_sum(Term&& term, const std::vector<LogMonomial>& smooth, std::int64_t n_max,
                             const OracleOptions& opts) {
  neumann_sici::detail::require(n_max > opts.averaged_sums, "oracle: too few terms");
  accel::CompensatedSum s;
  std::vector<double> tail_sums;
  tail_sums.reserve(static_cast<std::size_t>(opts.averaged_sums));
  double em_err = 0.0;
  const std::int64_t first_recorded = n_max - opts.averaged_sums + 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    s.add(term(n));
    if (n >= first_recorded) {
      const auto t = smooth.empty() ? accel::Accelerated{0.0, 0.0}
                                    : accel::em_tail(std::span<const LogMonomial>(smooth), static_cast<double>(n));
      em_err = std::max(em_err, t.error);
      tail_sums.push_back(s.value() + t.value);
    }
  }
  const auto acc = accel::euler_average(tail_sums, opts.euler_levels);
  // Next-order size of the truncated asymptotic model at n_max.
  double model_err = 0.0;
  if (!smooth.empty()) {
    const auto& last = smooth.back();
    const LogMonomial next{last.coef, last.log_power, last.power + 2.0};
    model_err = std::abs(accel::em_tail({next}, static_cast<double>(n_max)).value);
  }
  return {acc.value, acc.error + em_err + model_err + 64.0 * specfun::detail::kEps * std::abs(acc.value), n_max};
}

enum class Weight { harmonic_prev, alt_harmonic_prev, beta };

// Asymptotic model of the weight, split as smooth(n) + (-1)^n osc(n).
inline std::vector<LogMonomial> smooth_model(Weight w) {
  const double g = specfun::constants.euler_gamma;
  const double l2 = specfun::constants.log2;
  switch (w) {
    case Weight::harmonic_prev:
      // H_{n-1} = log n + gamma - 1/(2n) - 1/(12n^2) + 1/(120n^4)
      return {{1.0, 1, 0.0}, {g, 0, 0.0}, {-0.5, 0, 1.0}, {-1.0 / 12.0, 0, 2.0}, {1.0 / 120.0, 0, 4.0}};
    case Weight::alt_harmonic_prev:
      return {{l2, 0, 0.0}};
    case Weight::beta:
      // beta_n = log n + log 2 + gamma - 1/(12n^2) + 1/(120n^4) + (-1)^n(...)
      return {{1.0, 1, 0.0}, {l2 + g, 0, 0.0}, {-1.0 / 12.0, 0, 2.0}, {1.0 / 120.0, 0, 4.0}};
  }
  return {};
}

inline std::vector<LogMonomial> osc_model(Weight w) {
  switch (w) {
    case Weight::harmonic_prev:
      return {};
    case Weight::alt_harmonic_prev:
      // A_{n-1} - log 2 = (-1)^n (1/(2n) + 1/(4n^2) - 1/(8n^4))
      return {{0.5, 0, 1.0}, {0.25, 0, 2.0}, {-0.125, 0, 4.0}};
    case Weight::beta:
      return {{0.25, 0, 2.0}, {-0.125, 0, 4.0}};
  }
  return {};
}

// 2 sum_{n>=1} (+-1)^n w_n / n^p
inline OracleResult weighted_sum(Weight w, int p, bool alternating, const OracleOptions& opts) {
  neumann_sici::detail::require(p >= (alternating ? 1 : 2), "weighted_sum: exponent too small");
  const auto non_alt = alternating ? osc_model(w) : smooth_model(w);
  const auto model = scaled(non_alt, p, 2.0);
  double h = 0.0;  // H_{n-1}
  double a = 0.0;  // A_{n-1}
  auto term = [&](std::int64_t n) {
    const double nd = static_cast<double>(n);
    double weight = 0.0;
    switch (w) {
      case Weight::harmonic_prev: weight = h; break;
      case Weight::alt_harmonic_prev: weight = a; break;
      case Weight::beta: {
        const double half = 0.5 / nd;
        weight = h + a + half + ((n % 2 == 1) ? half : -half);
        break;
      }
    }
    h += 1.0 / nd;
    a += (n % 2 == 1) ? 1.0 / nd : -1.0 / nd;
    double inv = 1.0;
    for (int r = 0; r < p; ++r) inv /= nd;
    const double v = 2.0 * weight * inv;
    return (alternating && n % 2 == 1) ? -v : v;
  };
  const std::int64_t n_max = alternating ? opts.alternating_terms : opts.direct_terms;
  return accelerated_sum(term, model, n_max, opts);
}

}  // namespace detail

/// 2 sum H_{n-1}/n^k
inline OracleResult euler_linear_oracle(int k, const OracleOptions& opts = {}) {
  neumann_sici::detail::require(k >= 2, "euler_linear_oracle: k must be >= 2");
  return detail::weighted_sum(detail::Weight::harmonic_prev, k, false, opts);
}

/// 2 sum A_{n-1}/n^k
inline OracleResult nielsen_oracle(int k, const OracleOptions& opts = {}) {
  neumann_sici::detail::require(k >= 2, "nielsen_oracle: k must be >= 2");
  return detail::weighted_sum(detail::Weight::alt_harmonic_prev, k, false, opts);
}

/// 2 sum (-1)^n H_{n-1}/n^{2k}
inline OracleResult sitaramachandrarao_h_oracle(int k, const OracleOptions& opts = {}) {
  neumann_sici::detail::require(k >= 1, "sitaramachandrarao_h_oracle: k must be >= 1");
  return detail::weighted_sum(detail::Weight::harmonic_prev, 2 * k, true, opts);
}

/// 2 sum (-1)^n A_{n-1}/n^{2k}
inline OracleResult sitaramachandrarao_a_oracle(int k, const OracleOptions& opts = {}) {
  neumann_sici::detail::require(k >= 1, "sitaramachandrarao_a_oracle: k must be >= 1");
  return detail::weighted_sum(detail::Weight::alt_harmonic_prev, 2 * k, true, opts);
}

/// The n-th summand 2 (+-1)^n beta_n / n^p, exactly then rounded.
inline double beta_weighted_term(int n, int p, bool alternating) {
  neumann_sici::detail::require(n >= 1 && p >= 0, "beta_weighted_term: need n >= 1, p >= 0");
  coeffs::ExactRational t = 2 * coeffs::beta(n);
  for (int i = 0; i < p; ++i) t /= n;
  if (alternating && n % 2 == 1) t = -t;
  return coeffs::to_double(t);
}

/// 2 sum (+-1)^n beta_n / n^p with its error estimate.
inline OracleResult beta_weighted_sum_detailed(int p, bool alternating, const OracleOptions& opts = {}) {
  return detail::weighted_sum(detail::Weight::beta, p, alternating, opts);
}

/// 2 sum beta_n / n^p, or 2 sum (-1)^n beta_n / n^p when alternating.
/// Throws convergence_error if the error estimate exceeds tol.
inline double beta_weighted_sum(int p, bool alternating, double tol, const OracleOptions& opts = {}) {
  neumann_sici::detail::require(tol > 0.0, "beta_weighted_sum: tol must be > 0");
  neumann_sici::detail::require(alternating ? p >= 1 : p >= 2, "beta_weighted_sum: exponent too small");
  const auto r = beta_weighted_sum_detailed(p, alternating, opts);
  if (!(r.error <= tol)) throw convergence_error("beta_weighted_sum: tolerance not reached");
  return r.value;
}

/// sum (-1)^n alpha_n / (n(n+1)) with alpha_n = 2 L_n + (-1)^n/(2n+1).
inline OracleResult catalan_alpha_sum_detailed(const OracleOptions& opts = {}) {
  double l = 0.0;
  auto term = [&](std::int64_t n) {
    const double nd = static_cast<double>(n);
    l += (n % 2 == 1) ? 1.0 / (2.0 * nd - 1.0) : -1.0 / (2.0 * nd - 1.0);
    const double alpha = 2.0 * l + ((n % 2 == 0) ? 1.0 : -1.0) / (2.0 * nd + 1.0);
    const double v = alpha / (nd * (nd + 1.0));
    return (n % 2 == 1) ? -v : v;
  };
  // alpha_n - pi/2 = (-1)^n (-1/(2n+1)^2 + 2/(2n+1)^4 + ...), expanded against 1/(n(n+1))
  const std::vector<accel::LogMonomial> smooth{{-0.25, 0, 4.0}, {0.5, 0, 5.0}, {-9.0 / 16.0, 0, 6.0}};
  return detail::accelerated_sum(term, smooth, opts.alternating_terms, opts);
}

inline double catalan_alpha_sum(double tol, const OracleOptions& opts = {}) {
  neumann_sici::detail::require(tol > 0.0, "catalan_alpha_sum: tol must be > 0");
  const auto r = catalan_alpha_sum_detailed(opts);
  if (!(r.error <= tol)) throw convergence_error("catalan_alpha_sum: tolerance not reached");
  return r.value;
}

/// sum (-1)^n / n * sum_{k=1}^n (-1)^{k-1}/(2k-1)
inline OracleResult catalan_aux_sum(const OracleOptions& opts = {}) {
  double l = 0.0;
  auto term = [&](std::int64_t n) {
    const double nd = static_cast<double>(n);
    l += (n % 2 == 1) ? 1.0 / (2.0 * nd - 1.0) : -1.0 / (2.0 * nd - 1.0);
    const double v = l / nd;
    return (n % 2 == 1) ? -v : v;
  };
  // L_n = pi/4 - (-1)^n (1/(4n) - 1/(16n^3) + ...)
  const std::vector<accel::LogMonomial> smooth{{-0.25, 0, 2.0}, {1.0 / 16.0, 0, 4.0}};
  return detail::accelerated_sum(term, smooth, opts.alternating_terms, opts);
}

}  // namespace neumann_sici::eulersum
