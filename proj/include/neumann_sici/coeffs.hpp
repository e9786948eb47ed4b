#pragma once
// Exact Neumann coefficients of the Si and Ci expansions and their
// alternative closed and factorial forms.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace neumann_sici::coeffs {

using ExactRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const ExactRational& r) { return r.convert_to<double>(); }

/// H_n = sum_{k=1}^n 1/k
inline ExactRational harmonic(int n) {
  detail::require(n >= 0, "harmonic: n must be >= 0");
  ExactRational s = 0;
  for (int k = 1; k <= n; ++k) s += ExactRational(1, k);
  return s;
}

/// A_n = sum_{k=1}^n (-1)^{k-1}/k
inline ExactRational alt_harmonic(int n) {
  detail::require(n >= 0, "alt_harmonic: n must be >= 0");
  ExactRational s = 0;
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == 1) s += ExactRational(1, k);
    else s -= ExactRational(1, k);
  }
  return s;
}

/// L_n = sum_{k=1}^n (-1)^{k-1}/(2k-1), the Leibniz partial sum.
inline ExactRational leibniz_partial(int n) {
  detail::require(n >= 0, "leibniz_partial: n must be >= 0");
  ExactRational s = 0;
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == 1) s += ExactRational(1, 2 * k - 1);
    else s -= ExactRational(1, 2 * k - 1);
  }
  return s;
}

/// alpha_n = 2 L_n + (-1)^n/(2n+1)
inline ExactRational alpha(int n) {
  detail::require(n >= 0, "alpha: n must be >= 0");
  const ExactRational last(n % 2 == 0 ? 1 : -1, 2 * n + 1);
  return 2 * leibniz_partial(n) + last;
}

/// alpha_0 .. alpha_{max_n}, built incrementally.
inline std::vector<ExactRational> alpha_sequence(int max_n) {
  detail::require(max_n >= 0, "alpha_sequence: max_n must be >= 0");
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  ExactRational l = 0;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) l += ExactRational(n % 2 == 1 ? 1 : -1, 2 * n - 1);
    out.push_back(2 * l + ExactRational(n % 2 == 0 ? 1 : -1, 2 * n + 1));
  }
  return out;
}

/// beta_n = H_n + A_n - 1/(2n) - (-1)^{n-1}/(2n), n >= 1
inline ExactRational beta(int n) {
  detail::require(n >= 1, "beta: n must be >= 1");
  const ExactRational h(1, 2 * n);
  const ExactRational sgn = (n % 2 == 1) ? h : -h;
  return harmonic(n) + alt_harmonic(n) - h - sgn;
}

/// beta_n = H_{n-1} + A_{n-1} + 1/(2n) + (-1)^{n-1}/(2n)
inline ExactRational beta_shifted_form(int n) {
  detail::require(n >= 1, "beta_shifted_form: n must be >= 1");
  const ExactRational h(1, 2 * n);
  const ExactRational sgn = (n % 2 == 1) ? h : -h;
  return harmonic(n - 1) + alt_harmonic(n - 1) + h + sgn;
}

/// beta_1 .. beta_{max_n}; index 0 holds 0 as a placeholder.
inline std::vector<ExactRational> beta_sequence(int max_n) {
  detail::require(max_n >= 0, "beta_sequence: max_n must be >= 0");
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  out.emplace_back(0);
  ExactRational h = 0;
  ExactRational a = 0;
  for (int n = 1; n <= max_n; ++n) {
    h += ExactRational(1, n);
    a += ExactRational(n % 2 == 1 ? 1 : -1, n);
    const ExactRational half(1, 2 * n);
    out.push_back(h + a - half - ((n % 2 == 1) ? half : -half));
  }
  return out;
}

/// 1 - 2 sum_{k=1}^n (-1)^k/(4k^2 - 1)
inline ExactRational lemma1_closed(int n) {
  detail::require(n >= 0, "lemma1_closed: n must be >= 0");
  ExactRational s = 0;
  for (int k = 1; k <= n; ++k) {
    const ExactRational t(1, 4 * k * k - 1);
    if (k % 2 == 0) s += t;
    else s -= t;
  }
  return 1 - 2 * s;
}

/// sum_{k=0}^n (n+k)!/(n-k)! 4^k (-1)^k / ((2k+1)(2k+1)!)
inline ExactRational alpha_factorial_form(int n) {
  detail::require(n >= 0, "alpha_factorial_form: n must be >= 0");
  BigInt ratio = 1;  // (n+k)!/(n-k)!
  BigInt fact = 1;   // (2k+1)!
  BigInt pow4 = 1;
  ExactRational s = 0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      ratio *= BigInt(n + k) * BigInt(n - k + 1);
      fact *= BigInt(2 * k) * BigInt(2 * k + 1);
      pow4 *= 4;
    }
    ExactRational term(ratio * pow4, fact * (2 * k + 1));
    if (k % 2 == 1) s -= term;
    else s += term;
  }
  return s;
}

/// sum_{j=0}^{n-1} (-1)^j 4^j / ((j+1)(2j+2)!) * (n+j)!/(n-j-1)!
inline ExactRational beta_factorial_form(int n) {
  detail::require(n >= 1, "beta_factorial_form: n must be >= 1");
  BigInt ratio = n;  // (n+j)!/(n-j-1)!
  BigInt fact = 2;   // (2j+2)!
  BigInt pow4 = 1;
  ExactRational s = 0;
  for (int j = 0; j <= n - 1; ++j) {
    if (j > 0) {
      ratio *= BigInt(n + j) * BigInt(n - j);
      fact *= BigInt(2 * j + 1) * BigInt(2 * j + 2);
      pow4 *= 4;
    }
    ExactRational term(ratio * pow4, fact * (j + 1));
    if (j % 2 == 1) s -= term;
    else s += term;
  }
  return s;
}

}  // namespace neumann_sici::coeffs
