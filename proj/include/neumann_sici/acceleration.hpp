#pragma once
// Summation helpers shared by the series oracles and the oscillatory quadrature:
// compensated summation, Euler averaging of alternating partial sums, and
// Euler-Maclaurin tails of smooth log-monomial series.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace neumann_sici::accel {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Accelerated {
  double value;
  double error;
};

/// Repeated pairwise averaging of the trailing partial sums of an
/// eventually alternating series. The error is the larger of the change
/// between the last two levels and the spread of the final level.
inline Accelerated euler_average(std::span<const double> partial_sums, int levels) {
  detail::require(!partial_sums.empty(), "euler_average: no partial sums");
  detail::require(levels >= 0, "euler_average: levels must be >= 0");
  std::vector<double> row(partial_sums.begin(), partial_sums.end());
  const int usable = std::min<int>(levels, static_cast<int>(row.size()) - 1);
  double prev_last = row.back();
  for (int l = 0; l < usable; ++l) {
    prev_last = row.back();
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  const double last = row.back();
  double spread = std::abs(last - prev_last);
  if (row.size() >= 2) spread = std::max(spread, std::abs(last - row[row.size() - 2]));
  return {last, spread};
}

/// c * log(x)^log_power * x^{-power}, log_power in {0, 1}.
struct LogMonomial {
  double coef;
  int log_power;
  double power;
};

namespace detail {

inline double eval(const LogMonomial& m, double x) {
  const double base = m.coef * std::pow(x, -m.power);
  return m.log_power == 0 ? base : base * std::log(x);
}

inline double derivative(const LogMonomial& m, double x) {
  const double q = m.power;
  const double base = m.coef * std::pow(x, -q - 1.0);
  return m.log_power == 0 ? -q * base : base * (1.0 - q * std::log(x));
}

// Third derivative, used only for the remainder estimate.
inline double third_derivative(const LogMonomial& m, double x) {
  const double q = m.power;
  const double base = m.coef * std::pow(x, -q - 3.0);
  const double poly = -q * (q + 1.0) * (q + 2.0);
  if (m.log_power == 0) return poly * base;
  return base * (poly * std::log(x) + 3.0 * q * q + 6.0 * q + 2.0);
}

// integral_N^inf of the monomial; requires power > 1.
inline double tail_integral(const LogMonomial& m, double n) {
  const double q1 = m.power - 1.0;
  const double p = std::pow(n, -q1);
  if (m.log_power == 0) return m.coef * p / q1;
  return m.coef * p * (std::log(n) / q1 + 1.0 / (q1 * q1));
}

}  // namespace detail

/// sum_{n > N} f(n) for f a sum of log-monomials, by Euler-Maclaurin with
/// two correction terms; error is the size of the first omitted correction.
inline Accelerated em_tail(std::span<const LogMonomial> f, double n) {
  double integral = 0.0;
  double f0 = 0.0;
  double f1 = 0.0;
  double f3 = 0.0;
  for (const auto& m : f) {
    neumann_sici::detail::require(m.power > 1.0, "em_tail: power must exceed 1");
    integral += detail::tail_integral(m, n);
    f0 += detail::eval(m, n);
    f1 += detail::derivative(m, n);
    f3 += detail::third_derivative(m, n);
  }
  return {integral - 0.5 * f0 - f1 / 12.0, std::abs(f3) / 720.0};
}

inline Accelerated em_tail(std::initializer_list<LogMonomial> f, double n) {
  return em_tail(std::span<const LogMonomial>(f.begin(), f.size()), n);
}

}  // namespace neumann_sici::accel
