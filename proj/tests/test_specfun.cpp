#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "neumann_sici/quad.hpp"
#include "neumann_sici/specfun.hpp"

namespace sf = neumann_sici::specfun;
using std::numbers::pi;

namespace {

// J_n(x) from the defining power series in long double.
long double j_series(int n, long double x, int terms = 50) {
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= x / (2.0L * i);
  long double sum = 0.0L;
  const long double q = -x * x / 4.0L;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= q / ((k + 1.0L) * (k + 1.0L + n));
  }
  return sum;
}

}  // namespace

TEST(BesselJ, Examples) {
  EXPECT_EQ(sf::bessel_j(0, 0.0), 1.0);
  EXPECT_EQ(sf::bessel_j(1, 0.0), 0.0);
  EXPECT_NEAR(sf::bessel_j(0, 2.0), static_cast<double>(j_series(0, 2.0L)), 1e-13);
}

TEST(BesselJ, AgreesWithPowerSeries) {
  for (int n : {0, 1, 2, 5, 10, 30})
    for (double x : {0.1, 0.7, 1.5, 3.0, 6.0, 9.0})
      EXPECT_NEAR(sf::bessel_j(n, x), static_cast<double>(j_series(n, x, 80)), 1e-13) << n << " " << x;
}

TEST(BesselJ, FrozenReferenceValues) {
  // mpmath, 30 digits
  EXPECT_NEAR(sf::bessel_j(0, 1.0), 0.765197686557966551, 1e-15);
  EXPECT_NEAR(sf::bessel_j(1, 2.5), 0.497094102464274038, 1e-15);
  EXPECT_NEAR(sf::bessel_j(5, 10.0), -0.234061528186793640, 1e-14);
  EXPECT_NEAR(sf::bessel_j(20, 30.0), 0.00483101999340406454, 1e-14);
  EXPECT_NEAR(sf::bessel_j(0, 50.0), 0.0558123276692518150, 1e-14);
  EXPECT_NEAR(sf::bessel_j(3, 0.1), 2.0820315754756264895e-5, 1e-18);
  EXPECT_NEAR(sf::bessel_j(100, 80.0), 4.60655306482347735e-6, 1e-16);
}

TEST(BesselJ, RejectsNegativeArgument) {
  EXPECT_THROW(sf::bessel_j(0, -1.0), neumann_sici::domain_error);
  EXPECT_THROW(sf::bessel_j(-1, 1.0), neumann_sici::domain_error);
}

TEST(BesselJ, Normalization) {
  for (double a : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const int n_max = static_cast<int>(std::ceil(a)) + 40;
    double s = sf::bessel_j(0, a);
    for (int n = 1; n <= n_max; ++n) s += 2.0 * sf::bessel_j(2 * n, a);
    EXPECT_NEAR(s, 1.0, 1e-12) << a;
  }
}

TEST(BesselJ, ThreeTermRecurrence) {
  for (double x : {0.1, 0.5, 1.0, 3.7, 10.0, 25.0, 50.0}) {
    const auto j = sf::bessel_j_sequence(101, x);
    for (int n = 1; n <= 100; ++n) {
      const double lhs = j[n - 1] + j[n + 1];
      const double rhs = 2.0 * n / x * j[n];
      const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
      // relative, except where all three values have underflowed together
      if (std::abs(j[n - 1]) < 1e-290) continue;
      EXPECT_LE(std::abs(lhs - rhs) / scale, 1e-11) << x << " " << n;
    }
  }
}

TEST(BesselJ, SequenceMatchesSingle) {
  for (double x : {0.3, 4.0, 40.0, 90.0}) {
    const auto j = sf::bessel_j_sequence(60, x);
    for (int n = 0; n <= 60; ++n) EXPECT_NEAR(j[n], sf::bessel_j(n, x), 1e-14) << x << " " << n;
  }
}

TEST(BesselY, SmallArgumentLogLimit) {
  const double g = sf::constants.euler_gamma;
  double prev = 1.0;
  for (double x : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    const double d = std::abs(sf::bessel_y(0, x) - 2.0 / pi * (std::log(x / 2.0) + g));
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 1e-11);
}

TEST(BesselY, FirstZeroOfY0) {
  double lo = 0.5, hi = 1.5;
  ASSERT_LT(sf::bessel_y(0, lo), 0.0);
  ASSERT_GT(sf::bessel_y(0, hi), 0.0);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sf::bessel_y(0, mid) < 0.0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(lo, 0.893576966279167522, 1e-13);
  EXPECT_NEAR(sf::bessel_y(0, 0.893576966279167522), 0.0, 1e-14);
}

TEST(BesselY, Y1IsMinusY0Derivative) {
  const double x = 5.0, h = 1e-5;
  const double d = (sf::bessel_y(0, x + h) - sf::bessel_y(0, x - h)) / (2.0 * h);
  EXPECT_NEAR(sf::bessel_y(1, x), -d, 1e-6);
}

TEST(BesselY, FrozenReferenceValues) {
  EXPECT_NEAR(sf::bessel_y(0, 0.5), -0.444518733506706557, 1e-14);
  EXPECT_NEAR(sf::bessel_y(0, 5.0), -0.308517625249033780, 1e-14);
  EXPECT_NEAR(sf::bessel_y(0, 30.0), -0.117295731686664025, 1e-14);
  EXPECT_NEAR(sf::bessel_y(1, 0.5), -1.47147239267024307, 1e-14);
  EXPECT_NEAR(sf::bessel_y(1, 5.0), 0.147863143391226845, 1e-14);
  EXPECT_NEAR(sf::bessel_y(1, 60.0), 0.0918696093698668953, 1e-14);
}

TEST(BesselY, CrossesRegimesSmoothly) {
  // Wronskian J1 Y0 - J0 Y1 = 2/(pi x) across all three evaluation paths
  for (double x = 0.05; x < 100.0; x *= 1.13) {
    const double w = sf::bessel_j(1, x) * sf::bessel_y(0, x) - sf::bessel_j(0, x) * sf::bessel_y(1, x);
    EXPECT_NEAR(w * pi * x / 2.0, 1.0, 1e-12) << x;
  }
}

TEST(BesselY, Domain) {
  EXPECT_THROW(sf::bessel_y(0, 0.0), neumann_sici::domain_error);
  EXPECT_THROW(sf::bessel_y(1, -2.0), neumann_sici::domain_error);
  EXPECT_THROW(sf::bessel_y(2, 1.0), neumann_sici::domain_error);
}

TEST(SiCi, Examples) {
  EXPECT_EQ(sf::si(0.0), 0.0);
  EXPECT_EQ(sf::gamma_log_minus_ci(0.0), 0.0);
  EXPECT_LT(sf::gamma_log_minus_ci(1e-8), 1e-16);
  const auto q = neumann_sici::quad::integrate_finite({[](double t) { return std::sin(t) / t; }, 1.0, std::nullopt},
                                                      0.0, pi, 1e-14);
  EXPECT_NEAR(sf::si(pi), q.value, 1e-12);
}

TEST(SiCi, FrozenReferenceValues) {
  struct Row {
    double x, si, ci;
  };
  const Row rows[] = {{0.5, 0.493107418043066689, -0.177784078806612901},
                      {3.0, 1.84865252799946826, 0.119629786008000328},
                      {4.0, 1.75820313894905306, -0.140981697886930412},
                      {7.0, 1.45459661424809359, 0.0766952784821845184},
                      {30.0, 1.56675654003035111, -0.0330324172820711438},
                      {50.0, 1.55161707248593589, -0.00562838632411630544}};
  for (const auto& r : rows) {
    EXPECT_NEAR(sf::si(r.x), r.si, 1e-13) << r.x;
    EXPECT_NEAR(sf::ci(r.x), r.ci, 1e-13) << r.x;
  }
}

TEST(SiCi, ContinuousAcrossCrossover) {
  const double x = 4.0;
  for (double d : {1e-9, 1e-6}) {
    EXPECT_NEAR(sf::si(x - d), sf::si(x + d), 3.0 * d);
    EXPECT_NEAR(sf::ci(x - d), sf::ci(x + d), 3.0 * d);
  }
}

TEST(SiCi, SeriesIsOdd) {
  for (double x : {0.1, 0.9, 2.3, 3.9}) {
    const auto p = sf::detail::sici_series(x);
    const auto m = sf::detail::sici_series(-x);
    EXPECT_EQ(m.first, -p.first);
    EXPECT_EQ(m.second, p.second);
  }
}

TEST(SiCi, GammaLogMinusCiIsNonnegativeAndIncreasing) {
  double prev = 0.0;
  for (int i = 1; i <= 400; ++i) {
    const double x = pi * i / 400.0;
    const double v = sf::gamma_log_minus_ci(x);
    if (x <= 2.0) {
      EXPECT_GE(v, 0.0);
    }
    EXPECT_GT(v, prev) << x;
    prev = v;
  }
}

TEST(SiCi, AuxiliaryFunctionsReproduceSiCi) {
  for (double x : {0.5, 3.0, 8.0, 40.0}) {
    const auto a = sf::sici_auxiliary(x);
    EXPECT_NEAR(pi / 2 - a.f * std::cos(x) - a.g * std::sin(x), sf::si(x), 1e-14);
    EXPECT_NEAR(a.f * std::sin(x) - a.g * std::cos(x), sf::ci(x), 1e-14);
  }
}

TEST(SiCi, Domain) {
  EXPECT_THROW(sf::si(-1.0), neumann_sici::domain_error);
  EXPECT_THROW(sf::ci(0.0), neumann_sici::domain_error);
}

TEST(Clausen, Examples) {
  EXPECT_NEAR(sf::clausen_odd(3, 0.0), sf::zeta(3), 1e-15);
  EXPECT_NEAR(sf::clausen_odd(3, pi), -0.75 * sf::zeta(3), 1e-13);
  // 10^6-term brute force; the neglected tail is below 1e-24
  double brute = 0.0;
  for (int n = 1000000; n >= 1; --n) brute += std::cos(n * (pi / 2)) / std::pow(static_cast<double>(n), 5);
  EXPECT_NEAR(sf::clausen_odd(5, pi / 2), brute, 1e-12);
  EXPECT_NEAR(sf::clausen_odd(5, pi / 2), -0.0303787428264659158, 1e-14);
  EXPECT_NEAR(sf::clausen_odd(3, 1.0), 0.448573007280017398, 1e-12);
  EXPECT_NEAR(sf::clausen_odd(7, 2.0), -0.420831146020814784, 1e-12);
}

TEST(Clausen, Symmetries) {
  for (int k : {3, 5, 7})
    for (double t : {0.3, 1.1, 2.0, 2.9}) {
      EXPECT_NEAR(sf::clausen_odd(k, -t), sf::clausen_odd(k, t), 1e-14);
      EXPECT_NEAR(sf::clausen_odd(k, 2 * pi - t), sf::clausen_odd(k, t), 1e-12);
    }
}

TEST(Clausen, Domain) {
  EXPECT_THROW(sf::clausen_odd(4, 1.0), neumann_sici::domain_error);
  EXPECT_THROW(sf::clausen_odd(1, 1.0), neumann_sici::domain_error);
}

TEST(ZetaEta, Examples) {
  EXPECT_NEAR(sf::zeta(2), pi * pi / 6, 1e-15);
  EXPECT_EQ(sf::eta(1), std::numbers::ln2);
  EXPECT_NEAR(sf::eta(3), 0.75 * sf::zeta(3), 1e-15);
  EXPECT_NEAR(sf::zeta(4), std::pow(pi, 4) / 90, 1e-15);
  EXPECT_THROW(sf::zeta(1), neumann_sici::domain_error);
  EXPECT_THROW(sf::eta(0), neumann_sici::domain_error);
}

TEST(ZetaEta, EtaZetaRelation) {
  for (int s = 2; s <= 40; ++s) EXPECT_NEAR(sf::eta(s), (1.0 - std::pow(2.0, 1 - s)) * sf::zeta(s), 1e-15) << s;
}

TEST(ZetaEta, BeyondTable) {
  for (int s : {31, 35, 50}) {
    double z = 0.0;
    for (int n = 30; n >= 1; --n) z += std::pow(static_cast<double>(n), -s);
    EXPECT_NEAR(sf::zeta(s), z, 1e-16);
  }
}

TEST(Constants, Values) {
  EXPECT_EQ(sf::constants.euler_gamma, std::numbers::egamma);
  EXPECT_NEAR(sf::constants.catalan_g, 0.915965594177219015, 1e-16);
  EXPECT_EQ(sf::constants.log2, std::numbers::ln2);
  EXPECT_NEAR(sf::constants.zeta3, 1.20205690315959429, 1e-16);
  EXPECT_EQ(sf::constants.pi, pi);
}

TEST(EvalOptions, Validation) {
  sf::EvalOptions bad;
  bad.target_abs_tol = 0.0;
  EXPECT_THROW(sf::zeta(40, bad), neumann_sici::domain_error);
}
