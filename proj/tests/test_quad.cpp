#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "neumann_sici/coeffs.hpp"
#include "neumann_sici/eulersum.hpp"
#include "neumann_sici/quad.hpp"
#include "neumann_sici/specfun.hpp"

namespace qd = neumann_sici::quad;
namespace sf = neumann_sici::specfun;
namespace cf = neumann_sici::coeffs;
using std::numbers::pi;

namespace {

double alpha(int n) { return cf::to_double(cf::alpha(n)); }
double beta(int n) { return cf::to_double(cf::beta(n)); }

qd::Integrand plain(std::function<double(double)> f) { return {std::move(f), std::nullopt, std::nullopt}; }

void expect_honest(const qd::QuadResult& r, double target, const char* what) {
  EXPECT_TRUE(r.ok()) << what << " " << qd::to_string(r.status);
  EXPECT_GE(r.abs_err_estimate, 0.0) << what;
  EXPECT_LE(std::abs(r.value - target), 5.0 * r.abs_err_estimate) << what;
}

}  // namespace

TEST(Finite, Examples) {
  EXPECT_NEAR(qd::integrate_finite(plain([](double t) { return std::cos(t); }), 0, pi / 2, 1e-14).value, 1.0, 1e-14);
  const auto r = qd::integrate_finite(plain([](double t) { return std::cos(t) * std::cos(6 * t); }), 0, pi / 2, 1e-14);
  EXPECT_NEAR(r.value, 1.0 / 35.0, 1e-14);
  const auto s = qd::integrate_finite(plain([](double t) { return 2 * std::cos(t) * std::sin(3 * t); }), 0, pi / 2, 1e-14);
  EXPECT_NEAR(s.value, 1.0, 1e-14);
}

TEST(Finite, ElementaryBuildingBlocks) {
  // int_0^{pi/2} cos t cos(2kt) dt = -cos(k pi)/(4k^2 - 1)
  for (int k = 0; k <= 20; ++k) {
    const auto r = qd::integrate_finite(plain([k](double t) { return std::cos(t) * std::cos(2 * k * t); }), 0, pi / 2,
                                        1e-14);
    EXPECT_NEAR(r.value, -std::cos(k * pi) / (4.0 * k * k - 1.0), 1e-13) << k;
  }
  // int_0^{pi/2} 2 cos t sin((2k-1)t) dt = (1 - cos(pi k))/(2k) + (1 + cos(pi k))/(2k - 2), k >= 2
  for (int k = 2; k <= 20; ++k) {
    const auto r = qd::integrate_finite(plain([k](double t) { return 2 * std::cos(t) * std::sin((2 * k - 1) * t); }),
                                        0, pi / 2, 1e-14);
    const double c = std::cos(pi * k);
    EXPECT_NEAR(r.value, (1 - c) / (2.0 * k) + (1 + c) / (2.0 * k - 2.0), 1e-13) << k;
  }
}

TEST(Finite, EndpointLimitsAreUsed) {
  qd::Integrand f{[](double t) { return std::sin(t) / t; }, 1.0, std::nullopt};
  const auto r = qd::integrate_finite(f, 0.0, 1.0, 1e-14);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_NEAR(r.value, sf::si(1.0), 1e-14);
}

TEST(Finite, Errors) {
  EXPECT_THROW(qd::integrate_finite(plain([](double) { return 1.0; }), 1.0, 0.0, 1e-10), neumann_sici::domain_error);
  const auto n = qd::integrate_finite(plain([](double t) { return t > 0.5 ? std::nan("") : 1.0; }), 0.0, 1.0, 1e-10);
  EXPECT_EQ(n.status, qd::QuadStatus::nan_integrand);
  EXPECT_FALSE(n.ok());
  const auto m = qd::integrate_finite(plain([](double t) { return std::sin(1.0 / (t + 1e-6)); }), 0.0, 1.0, 1e-15, 5);
  EXPECT_EQ(m.status, qd::QuadStatus::max_subdivisions);
}

TEST(CotSineIntegral, Examples) {
  EXPECT_NEAR(qd::lemma1_integral(0).value, 1.0, 1e-12);
  EXPECT_NEAR(qd::lemma1_integral(1).value, 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(qd::lemma1_integral(25).value, alpha(25), 1e-11);
}

TEST(CotCosineIntegral, Examples) {
  EXPECT_NEAR(qd::lemma3_integral(1).value, 1.0, 1e-12);
  EXPECT_NEAR(qd::lemma3_integral(2).value, 2.0, 1e-12);
  EXPECT_NEAR(qd::lemma3_integral(30).value, beta(30), 1e-11);
  EXPECT_THROW(qd::lemma3_integral(0), neumann_sici::domain_error);
}

TEST(CotIntegrals, AllOrdersToFiftyAreHonest) {
  for (int n = 0; n <= 50; ++n) {
    const auto r = qd::lemma1_integral(n);
    EXPECT_NEAR(r.value, alpha(n), 1e-11) << n;
    expect_honest(r, alpha(n), "sin cot");
  }
  for (int n = 1; n <= 50; ++n) {
    const auto r = qd::lemma3_integral(n);
    EXPECT_NEAR(r.value, beta(n), 1e-11) << n;
    expect_honest(r, beta(n), "cos cot");
  }
}

TEST(Transforms, Examples) {
  EXPECT_EQ(qd::si_transform_integral(0.0).value, 0.0);
  EXPECT_NEAR(qd::si_transform_integral(1.0).value, sf::si(1.0), 1e-12);
  EXPECT_NEAR(qd::si_transform_integral(12.0).value, sf::si(12.0), 1e-11);
  EXPECT_NEAR(qd::ci_transform_integral(1e-6).value, 0.0, 1e-12);
  EXPECT_NEAR(qd::ci_transform_integral(1.0).value, sf::constants.euler_gamma - sf::ci(1.0), 1e-12);
  EXPECT_NEAR(qd::ci_transform_integral(20.0).value, sf::gamma_log_minus_ci(20.0), 1e-11);
}

TEST(Oscillatory, EngineSelfTest) {
  const qd::Integrand f{[](double t) { return sf::bessel_j(1, t) / t; }, 0.5, std::nullopt};
  const auto r = qd::oscillatory_semiinf_bessel(f, 1, 1e-10);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  expect_honest(r, 1.0, "plain J1/t");
  const auto s = qd::j1_over_t_integral();
  EXPECT_NEAR(s.value, 1.0, 1e-9);
  EXPECT_GT(s.partitions_used, 0);
}

TEST(Oscillatory, LongmanOnSlowAlgebraicDecay) {
  // int_pi^inf sin(t)/(1 + c t) dt in closed form through Si and Ci of pi + 1/c
  const double c = 1.0 / 50.0;
  const double s0 = pi + 1.0 / c;
  const double exact = (std::cos(1.0 / c) * (pi / 2 - sf::si(s0)) + std::sin(1.0 / c) * sf::ci(s0)) / c;
  const auto r = qd::longman_tail([c](double t) { return std::sin(t) / (1.0 + c * t); }, pi, pi, 1e-10);
  EXPECT_EQ(r.status, qd::QuadStatus::converged);
  EXPECT_NEAR(r.value, exact, 1e-10);
  expect_honest(r, exact, "longman");
}

TEST(Oscillatory, StallIsReported) {
  qd::OscillatoryOptions few;
  few.levels = 4;
  few.max_partitions = 10;
  const auto r = qd::longman_tail([](double t) { return std::sin(t) / std::sqrt(t); }, pi, pi, 1e-14, few);
  EXPECT_EQ(r.status, qd::QuadStatus::acceleration_stalled);
  EXPECT_FALSE(r.ok());
}

TEST(Oscillatory, SiBessel) {
  EXPECT_NEAR(qd::si_bessel_integral(0).value, 1.0, 1e-8);
  EXPECT_NEAR(qd::si_bessel_integral(1).value, 5.0 / 9.0, 1e-8);
  EXPECT_NEAR(qd::si_bessel_integral(4).value, alpha(4) / 9.0, 1e-8);
  for (int n = 0; n <= 10; ++n) {
    const auto r = qd::si_bessel_integral(n);
    const double target = alpha(n) / (2 * n + 1);
    EXPECT_NEAR(r.value, target, 1e-7) << n;
    expect_honest(r, target, "si_bessel");
  }
}

TEST(Oscillatory, CiBessel) {
  EXPECT_NEAR(qd::ci_bessel_integral(1).value, 0.5, 1e-8);
  EXPECT_NEAR(qd::ci_bessel_integral(2).value, 0.5, 1e-8);
  EXPECT_NEAR(qd::ci_bessel_integral(6).value, beta(6) / 12.0, 1e-8);
  for (int n = 1; n <= 10; ++n) {
    const auto r = qd::ci_bessel_integral(n);
    const double target = beta(n) / (2 * n);
    EXPECT_NEAR(r.value, target, 1e-7) << n;
    expect_honest(r, target, "ci_bessel");
  }
  EXPECT_THROW(qd::ci_bessel_integral(0), neumann_sici::domain_error);
}

TEST(Oscillatory, J0Orthogonality) {
  const auto r = qd::j0_orthogonality_integral();
  EXPECT_NEAR(r.value, 0.0, 1e-6);
  expect_honest(r, 0.0, "j0");
}

TEST(Y0Integral, Examples) {
  const double target = sf::constants.pi * sf::constants.pi / 4 * sf::constants.log2 - 7.0 / 8.0 * sf::zeta(3);
  EXPECT_NEAR(neumann_sici::eulersum::example2_rhs().value, target, 1e-15);
  const auto r = qd::example2_integral();
  EXPECT_NEAR(r.value, target, 1e-5);
  expect_honest(r, target, "Y0 integral");
  // leading behaviour near 0: (t/4) * gamma
  const double t = 1e-8;
  const double lead = t / 4.0 * sf::constants.euler_gamma;
  EXPECT_NEAR(qd::example2_integrand(t) / lead, 1.0, 1e-6);
}

TEST(Clausen, Examples) {
  const auto r0 = qd::clausen_cot_integral(0);
  const double t0 = 1.75 * sf::constants.log2 * sf::zeta(3);
  EXPECT_NEAR(r0.value, t0, 1e-9);
  expect_honest(r0, t0, "clausen k=0");
  const auto r1 = qd::clausen_cot_integral(1);
  const double t1 = neumann_sici::eulersum::clausen_integral_rhs(1).value;
  EXPECT_NEAR(r1.value, t1, 1e-9);
  expect_honest(r1, t1, "clausen k=1");
}

TEST(AdditionIntegral, Examples) {
  EXPECT_NEAR(qd::corollary5_rhs(0.0).value, 0.0, 2e-6);
  const auto r = qd::corollary5_integral(5.0, 1e-9);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(qd::corollary5_integral(-5.0, 1e-9).value, r.value);
}

TEST(Catalan, Examples) {
  const auto r = qd::corollary6_integral();
  const double target = neumann_sici::eulersum::corollary6_rhs().value;
  EXPECT_NEAR(r.value, target, 1e-4);
  expect_honest(r, target, "catalan");
  const auto m = qd::corollary6_intermediate_integral();
  EXPECT_NEAR(m.value, 3 - 4 * sf::constants.catalan_g, 1e-4);
  expect_honest(m, 3 - 4 * sf::constants.catalan_g, "catalan intermediate");
}

TEST(Brackets, SeriesMatchesDirectEvaluation) {
  for (double t : {0.5, 1.0, 1.9}) {
    const double y0 = pi / 2 * sf::bessel_y(0, t) - std::log(t / 2) * sf::bessel_j(0, t);
    const double y1 = std::log(t / 2) * sf::bessel_j(1, t) - pi / 2 * sf::bessel_y(1, t) - sf::bessel_j(0, t) / t;
    EXPECT_NEAR(qd::y0_bracket(t), y0, 1e-13) << t;
    EXPECT_NEAR(qd::y1_bracket(t), y1, 1e-13) << t;
  }
}
