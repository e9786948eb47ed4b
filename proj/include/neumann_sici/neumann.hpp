#pragma once
// Truncated Neumann expansions of Si and Ci in Bessel functions of the
// first kind, with tail bounds from |J_m(a)| <= (a/2)^m / m!.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "coeffs.hpp"
#include "errors.hpp"
#include "specfun.hpp"

namespace neumann_sici::neumann {

struct SeriesEval {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// One term coefficient * J_order(a) of an expansion.
struct NeumannTerm {
  int order;
  double coefficient;
  double bessel;
};

inline constexpr int kDefaultMaxTerms = 100000;

namespace detail {

// log of (a/2)^m / m!, the majorant of |J_m(a)|; -inf at a = 0, m > 0.
inline double log_bessel_majorant(int m, double a) {
  if (m == 0) return 0.0;
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  return m * std::log(0.5 * a) - std::lgamma(m + 1.0);
}

// Sum of b_n for n >= first, where log_b gives log b_n and ratio(n) bounds
// b_{m+1}/b_m for every m >= n. Explicit terms until the ratio drops below 1/2,
// then a geometric majorant.
template <class LogTerm, class Ratio>
double tail_sum(int first, LogTerm log_b, Ratio ratio) {
  double s = 0.0;
  for (int n = first; n < first + 10'000'000; ++n) {
    const double b = std::exp(log_b(n));
    const double r = ratio(n);
    if (r <= 0.5) return s + b / (1.0 - r);
    s += b;
  }
  return std::numeric_limits<double>::infinity();
}

// Si: b_n = 2 (a/2)^{2n+1}/(2n+1)! (pi/2 + 3/(2n+1))
inline double si_tail(int first, double a) {
  if (a == 0.0) return 0.0;
  const double q = 0.25 * a * a;
  return tail_sum(
      first,
      [a](int n) {
        return std::log(2.0) + log_bessel_majorant(2 * n + 1, a) +
               std::log(0.5 * std::numbers::pi + 3.0 / (2.0 * n + 1.0));
      },
      [q](int n) { return q / ((2.0 * n + 2.0) * (2.0 * n + 3.0)); });
}

// beta_n <= H_n + A_n + 1/n <= log n + 2 + 1/n; its growth ratio is at most 1 + 1/(2n).
inline double beta_majorant(int n) { return std::log(static_cast<double>(n)) + 2.0 + 1.0 / n; }

// Ci: b_n = 2 (a/2)^{2n}/(2n)! beta-majorant(n), n >= 1
inline double ci_tail(int first, double a) {
  if (a == 0.0) return 0.0;
  const double q = 0.25 * a * a;
  return tail_sum(
      std::max(first, 1),
      [a](int n) { return std::log(2.0) + log_bessel_majorant(2 * n, a) + std::log(beta_majorant(n)); },
      [q](int n) { return q / ((2.0 * n + 1.0) * (2.0 * n + 2.0)) * (1.0 + 0.5 / n); });
}

// addition-identity series: b_n = (a/2)^{2n}/(2n)! beta-majorant(n)/n
inline double c5_tail(int first, double a) {
  if (a == 0.0) return 0.0;
  const double q = 0.25 * a * a;
  return tail_sum(
      std::max(first, 1),
      [a](int n) { return log_bessel_majorant(2 * n, a) + std::log(beta_majorant(n) / n); },
      [q](int n) { return q / ((2.0 * n + 1.0) * (2.0 * n + 2.0)) * (1.0 + 0.5 / n); });
}

// Smallest last index N >= min_n with tail(N + 1) <= tol, capped at max_terms.
template <class Tail>
std::pair<int, double> choose_truncation(int min_n, double tol, int max_terms, Tail tail) {
  for (int n = min_n; n <= max_terms; ++n) {
    const double t = tail(n + 1);
    if (t <= tol) return {n, t};
  }
  return {max_terms, tail(max_terms + 1)};
}

inline void require_tol(double tol) {
  neumann_sici::detail::require(tol > 0.0 && std::isfinite(tol), "tol must be positive and finite");
}

inline double beta_double(const std::vector<coeffs::ExactRational>& seq, int n) {
  return coeffs::to_double(seq[static_cast<std::size_t>(n)]);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Term generators

/// Terms alpha_n J_{2n+1}(a), n = 0..last (without the leading factor 2).
inline std::vector<NeumannTerm> si_terms(double a, int last) {
  neumann_sici::detail::require(std::isfinite(a) && a >= 0.0, "si_terms: a must be >= 0");
  neumann_sici::detail::require(last >= 0, "si_terms: last must be >= 0");
  const auto alphas = coeffs::alpha_sequence(last);
  const auto j = specfun::bessel_j_sequence(2 * last + 1, a);
  std::vector<NeumannTerm> out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  for (int n = 0; n <= last; ++n) {
    const int m = 2 * n + 1;
    out.push_back({m, coeffs::to_double(alphas[static_cast<std::size_t>(n)]), j[static_cast<std::size_t>(m)]});
  }
  return out;
}

/// Terms beta_n J_{2n}(a), n = 1..last.
inline std::vector<NeumannTerm> ci_terms(double a, int last) {
  neumann_sici::detail::require(std::isfinite(a) && a >= 0.0, "ci_terms: a must be >= 0");
  neumann_sici::detail::require(last >= 0, "ci_terms: last must be >= 0");
  std::vector<NeumannTerm> out;
  if (last == 0) return out;
  const auto betas = coeffs::beta_sequence(last);
  const auto j = specfun::bessel_j_sequence(2 * last, a);
  out.reserve(static_cast<std::size_t>(last));
  for (int n = 1; n <= last; ++n) {
    const int m = 2 * n;
    out.push_back({m, detail::beta_double(betas, n), j[static_cast<std::size_t>(m)]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Si

/// 2 sum_{n=0}^{last} J_{2n+1}(a) alpha_n with the bound on the omitted terms.
inline SeriesEval si_neumann_partial(double a, int last, double tol = std::numeric_limits<double>::infinity()) {
  SeriesEval r;
  double s = 0.0;
  for (const auto& t : si_terms(a, last)) s += t.coefficient * t.bessel;
  r.value = 2.0 * s;
  r.terms_used = last + 1;
  r.tail_bound = detail::si_tail(last + 1, a);
  r.converged = r.tail_bound <= tol;
  return r;
}

inline SeriesEval si_neumann(double a, double tol, int max_terms = kDefaultMaxTerms) {
  neumann_sici::detail::require(std::isfinite(a) && a >= 0.0, "si_neumann: a must be >= 0");
  detail::require_tol(tol);
  const auto [last, tail] = detail::choose_truncation(0, tol, max_terms, [a](int f) { return detail::si_tail(f, a); });
  (void)tail;
  return si_neumann_partial(a, last, tol);
}

// ---------------------------------------------------------------------------
// Ci

/// gamma + log a - 2 sum_{n=1}^{last} J_{2n}(a) beta_n with the bound on the omitted terms.
inline SeriesEval ci_neumann_partial(double a, int last, double tol = std::numeric_limits<double>::infinity()) {
  neumann_sici::detail::require(std::isfinite(a) && a > 0.0, "ci_neumann: a must be > 0");
  SeriesEval r;
  double s = 0.0;
  for (const auto& t : ci_terms(a, last)) s += t.coefficient * t.bessel;
  r.value = specfun::constants.euler_gamma + std::log(a) - 2.0 * s;
  r.terms_used = last;
  r.tail_bound = detail::ci_tail(last + 1, a);
  r.converged = r.tail_bound <= tol;
  return r;
}

inline SeriesEval ci_neumann(double a, double tol, int max_terms = kDefaultMaxTerms) {
  neumann_sici::detail::require(std::isfinite(a) && a > 0.0, "ci_neumann: a must be > 0");
  detail::require_tol(tol);
  const auto [last, tail] = detail::choose_truncation(1, tol, max_terms, [a](int f) { return detail::ci_tail(f, a); });
  (void)tail;
  return ci_neumann_partial(a, last, tol);
}

// ---------------------------------------------------------------------------
// Bessel addition series and the addition theorem

/// sum_{n=1}^{last} (-1)^n J_{2n}(a) beta_n / n
inline SeriesEval corollary5_series_partial(double a, int last,
                                            double tol = std::numeric_limits<double>::infinity()) {
  neumann_sici::detail::require(std::isfinite(a), "corollary5_series: a must be finite");
  const double x = std::abs(a);
  SeriesEval r;
  double s = 0.0;
  for (const auto& t : ci_terms(x, last)) {
    const int n = t.order / 2;
    const double v = t.coefficient * t.bessel / n;
    s += (n % 2 == 0) ? v : -v;
  }
  r.value = s;
  r.terms_used = last;
  r.tail_bound = detail::c5_tail(last + 1, x);
  r.converged = r.tail_bound <= tol;
  return r;
}

inline SeriesEval corollary5_series(double a, double tol, int max_terms = kDefaultMaxTerms) {
  neumann_sici::detail::require(std::isfinite(a), "corollary5_series: a must be finite");
  detail::require_tol(tol);
  const double x = std::abs(a);
  const auto [last, tail] = detail::choose_truncation(1, tol, max_terms, [x](int f) { return detail::c5_tail(f, x); });
  (void)tail;
  return corollary5_series_partial(a, last, tol);
}

struct AdditionCheck {
  double lhs;
  double rhs;
};

/// lhs = J_0(sqrt(a^2 + t^2)) - J_0(a) J_0(t); rhs = sum_{n=1}^{terms} (-1)^n J_{2n}(a) J_{2n}(t),
/// the bare sum, without the factor 2 the addition theorem requires.
inline AdditionCheck addition_theorem_check(double a, double t, int terms = 40) {
  neumann_sici::detail::require(std::isfinite(a) && std::isfinite(t), "addition_theorem_check: arguments must be finite");
  neumann_sici::detail::require(terms >= 1, "addition_theorem_check: terms must be >= 1");
  const double x = std::abs(a);
  const double y = std::abs(t);
  const auto ja = specfun::bessel_j_sequence(2 * terms, x);
  const auto jt = specfun::bessel_j_sequence(2 * terms, y);
  AdditionCheck c{};
  c.lhs = specfun::bessel_j(0, std::hypot(x, y)) - ja[0] * jt[0];
  double s = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const double v = ja[static_cast<std::size_t>(2 * n)] * jt[static_cast<std::size_t>(2 * n)];
    s += (n % 2 == 0) ? v : -v;
  }
  c.rhs = s;
  return c;
}

// ---------------------------------------------------------------------------
// Convergence tables

struct ConvergenceRow {
  double a;
  int n;
  double abs_error;
  double tail_bound;
};

/// Error of the Si expansion truncated after index N against the Si kernel,
/// for every (a, N) pair, sorted by (a, N).
inline std::vector<ConvergenceRow> convergence_table(const std::vector<double>& a_grid, const std::vector<int>& n_grid) {
  neumann_sici::detail::require(!a_grid.empty() && !n_grid.empty(), "convergence_table: grids must be nonempty");
  std::vector<ConvergenceRow> rows;
  rows.reserve(a_grid.size() * n_grid.size());
  for (double a : a_grid) {
    neumann_sici::detail::require(std::isfinite(a) && a >= 0.0, "convergence_table: a must be >= 0");
    const double ref = specfun::si(a);
    for (int n : n_grid) {
      neumann_sici::detail::require(n >= 0, "convergence_table: N must be >= 0");
      const auto e = si_neumann_partial(a, n);
      rows.push_back({a, n, std::abs(e.value - ref), e.tail_bound});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ConvergenceRow& l, const ConvergenceRow& r) {
    return l.a != r.a ? l.a < r.a : l.n < r.n;
  });
  return rows;
}

inline void write_convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& os) {
  const auto old = os.precision(17);
  os << "a,N,abs_error,tail_bound\n";
  for (const auto& r : rows) os << r.a << ',' << r.n << ',' << r.abs_error << ',' << r.tail_bound << '\n';
  os.precision(old);
}

}  // namespace neumann_sici::neumann
