#pragma once
// Identity registry, parallel runner, configuration and convergence-table emission.

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "coeffs.hpp"
#include "eulersum.hpp"
#include "neumann.hpp"
#include "quad.hpp"
#include "report.hpp"
#include "specfun.hpp"

namespace neumann_sici::harness {

/// Bad filter, bad option or unreadable configuration (exit status 2).
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a check computes: both sides, their error estimates, and optionally
/// an exact verdict that overrides the numeric comparison.
struct Evaluation {
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_error = 0.0;
  double rhs_error = 0.0;
  std::optional<bool> exact_equal;
  std::string note;
  std::vector<AssemblyEntry> assembly;
};

struct IdentityCheck {
  std::string id;
  std::string description;
  std::string lhs_recipe;
  std::string rhs_recipe;
  double tolerance = 0.0;  // 0 for exact-rational checks
  std::function<Evaluation()> evaluate;
};

struct RegistryOptions {
  int max_n = 100;
  double tol_scale = 1.0;
};

namespace detail {

inline std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::vector<AssemblyEntry> to_entries(const eulersum::ClosedFormValue& c) {
  std::vector<AssemblyEntry> out;
  for (const auto& t : c.assembly) out.push_back({t.name, t.coefficient, t.value});
  return out;
}

inline Evaluation numeric(double lhs, double rhs, double lhs_error = 0.0, double rhs_error = 0.0) {
  Evaluation e;
  e.lhs = lhs;
  e.rhs = rhs;
  e.lhs_error = lhs_error;
  e.rhs_error = rhs_error;
  return e;
}

inline Evaluation exact(const coeffs::ExactRational& l, const coeffs::ExactRational& r) {
  Evaluation e;
  e.lhs = coeffs::to_double(l);
  e.rhs = coeffs::to_double(r);
  e.exact_equal = (l == r);
  if (!*e.exact_equal) e.note = "rational mismatch: " + l.str() + " vs " + r.str();
  return e;
}

inline void note_quad(Evaluation& e, const quad::QuadResult& q) {
  if (!q.ok()) e.note = std::string("quadrature status ") + quad::to_string(q.status);
}

inline Evaluation quad_vs(const quad::QuadResult& q, double rhs, double rhs_error = 0.0) {
  Evaluation e;
  e.lhs = q.value;
  e.lhs_error = q.abs_err_estimate;
  e.rhs = rhs;
  e.rhs_error = rhs_error;
  note_quad(e, q);
  return e;
}

inline Evaluation closed_vs_oracle(const eulersum::ClosedFormValue& c, const eulersum::OracleResult& o) {
  Evaluation e;
  e.lhs = o.value;
  e.lhs_error = o.error;
  e.rhs = c.value;
  e.assembly = to_entries(c);
  return e;
}

}  // namespace detail

/// Every registered identity, in report order.
inline std::vector<IdentityCheck> build_registry(const RegistryOptions& opts = {}) {
  using coeffs::ExactRational;
  std::vector<IdentityCheck> reg;
  const double sc = opts.tol_scale;
  const int max_n = std::max(opts.max_n, 1);
  auto add = [&](std::string id, std::string desc, std::string lhs, std::string rhs, double tol,
                 std::function<Evaluation()> f) {
    reg.push_back({std::move(id), std::move(desc), std::move(lhs), std::move(rhs), tol * sc, std::move(f)});
  };

  // Exact coefficient identities.
  const int nc = std::min(max_n, 100);
  for (int n = 0; n <= nc; ++n) {
    const auto s = std::to_string(n);
    add("coeffs.lemma1_closed.n=" + s, "1 - 2 sum_{k<=n} (-1)^k/(4k^2-1) equals alpha_n exactly",
        "coeffs::lemma1_closed(" + s + ")", "coeffs::alpha(" + s + ")", 0.0,
        [n] { return detail::exact(coeffs::lemma1_closed(n), coeffs::alpha(n)); });
  }
  for (int n = 0; n <= nc; ++n) {
    const auto s = std::to_string(n);
    add("coeffs.alpha_factorial.n=" + s, "factorial finite sum equals alpha_n/(2n+1) exactly",
        "coeffs::alpha_factorial_form(" + s + ")", "coeffs::alpha(" + s + ")/(2n+1)", 0.0,
        [n] { return detail::exact(coeffs::alpha_factorial_form(n), coeffs::alpha(n) / ExactRational(2 * n + 1)); });
  }
  for (int n = 1; n <= nc; ++n) {
    const auto s = std::to_string(n);
    add("coeffs.beta_factorial.n=" + s, "factorial finite sum equals beta_n/(2n) exactly",
        "coeffs::beta_factorial_form(" + s + ")", "coeffs::beta(" + s + ")/(2n)", 0.0,
        [n] { return detail::exact(coeffs::beta_factorial_form(n), coeffs::beta(n) / ExactRational(2 * n)); });
  }
  for (int n = 1; n <= nc; ++n) {
    const auto s = std::to_string(n);
    add("coeffs.beta_forms.n=" + s, "H_n + A_n - 1/(2n) - (-1)^(n-1)/(2n) equals H_(n-1) + A_(n-1) + 1/(2n) + (-1)^(n-1)/(2n)",
        "coeffs::beta(" + s + ")", "coeffs::beta_shifted_form(" + s + ")", 0.0,
        [n] { return detail::exact(coeffs::beta(n), coeffs::beta_shifted_form(n)); });
  }

  // Cot-weighted integrals on [0, pi/2].
  const int nl = std::min(max_n, 50);
  for (int n = 0; n <= nl; ++n) {
    const auto s = std::to_string(n);
    add("lemma1.n=" + s, "int_0^{pi/2} sin((2n+1)t) cot t dt = alpha_n", "quad::lemma1_integral(" + s + ")",
        "coeffs::alpha(" + s + ")", 1e-11, [n] {
          return detail::quad_vs(quad::lemma1_integral(n, 1e-13), coeffs::to_double(coeffs::alpha(n)));
        });
  }
  for (int n = 1; n <= nl; ++n) {
    const auto s = std::to_string(n);
    add("lemma3.n=" + s, "int_0^{pi/2} [1 - cos(2nt)] cot t dt = beta_n", "quad::lemma3_integral(" + s + ")",
        "coeffs::beta(" + s + ")", 1e-11, [n] {
          return detail::quad_vs(quad::lemma3_integral(n, 1e-13), coeffs::to_double(coeffs::beta(n)));
        });
  }

  // Neumann expansions against the independent kernels.
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto s = detail::num(a);
    add("si_series.a=" + s, "Si(a) = 2 sum J_(2n+1)(a) alpha_n", "neumann::si_neumann(" + s + ", 1e-12)",
        "specfun::si(" + s + ")", 1e-10, [a] {
          const auto r = neumann::si_neumann(a, 1e-12);
          auto e = detail::numeric(r.value, specfun::si(a), r.tail_bound, 0.0);
          if (!r.converged) e.note = "series did not reach its tolerance";
          return e;
        });
    add("ci_series.a=" + s, "Ci(a) = gamma + log a - 2 sum J_(2n)(a) beta_n", "neumann::ci_neumann(" + s + ", 1e-12)",
        "specfun::ci(" + s + ")", 1e-10, [a] {
          const auto r = neumann::ci_neumann(a, 1e-12);
          auto e = detail::numeric(r.value, specfun::ci(a), r.tail_bound, 0.0);
          if (!r.converged) e.note = "series did not reach its tolerance";
          return e;
        });
  }

  // Integral representations of Si and gamma + log a - Ci.
  for (double a : {1.0, 12.0}) {
    const auto s = detail::num(a);
    add("si_transform.a=" + s, "Si(a) = int_0^{pi/2} sin(a sin t) cot t dt", "quad::si_transform_integral(" + s + ")",
        "specfun::si(" + s + ")", 1e-11,
        [a] { return detail::quad_vs(quad::si_transform_integral(a, 1e-13), specfun::si(a)); });
  }
  for (double a : {1.0, 20.0}) {
    const auto s = detail::num(a);
    add("ci_transform.a=" + s, "int_0^{pi/2} [1 - cos(a sin t)] cot t dt = gamma + log a - Ci(a)",
        "quad::ci_transform_integral(" + s + ")", "specfun::gamma_log_minus_ci(" + s + ")", 1e-11,
        [a] { return detail::quad_vs(quad::ci_transform_integral(a, 1e-13), specfun::gamma_log_minus_ci(a)); });
  }

  // Oscillatory Bessel integrals.
  const int no = std::min(max_n, 10);
  for (int n = 0; n <= no; ++n) {
    const auto s = std::to_string(n);
    add("si_coeff_integral.n=" + s, "int_0^inf Si(t) J_(2n+1)(t) dt/t = alpha_n/(2n+1)",
        "quad::si_bessel_integral(" + s + ")", "coeffs::alpha(" + s + ")/(2n+1)", 1e-7, [n] {
          return detail::quad_vs(quad::si_bessel_integral(n, 1e-9), coeffs::to_double(coeffs::alpha(n)) / (2 * n + 1));
        });
  }
  for (int n = 1; n <= no; ++n) {
    const auto s = std::to_string(n);
    add("ci_coeff_integral.n=" + s, "int_0^inf [gamma + log t - Ci(t)] J_(2n)(t) dt/t = beta_n/(2n)",
        "quad::ci_bessel_integral(" + s + ")", "coeffs::beta(" + s + ")/(2n)", 1e-7, [n] {
          return detail::quad_vs(quad::ci_bessel_integral(n, 1e-9), coeffs::to_double(coeffs::beta(n)) / (2 * n));
        });
  }
  add("j0_orthogonality", "int_0^inf [gamma + log t - Ci(t)] J_0(t) dt/t = 0 (the n -> 0 limit)",
      "quad::j0_orthogonality_integral()", "0", 1e-6,
      [] { return detail::quad_vs(quad::j0_orthogonality_integral(1e-9), 0.0); });
  add("j1_self_test", "engine self-test: int_0^inf J_1(t)/t dt = 1", "quad::j1_over_t_integral()", "1", 1e-9,
      [] { return detail::quad_vs(quad::j1_over_t_integral(1e-10), 1.0); });

  // Euler sums.
  for (int k = 1; k <= 4; ++k) {
    const auto s = std::to_string(k);
    add("euler_sum_even.k=" + s, "2 sum beta_n/n^(k+1) against its zeta/eta closed form",
        "eulersum::beta_weighted_sum(" + std::to_string(k + 1) + ", non-alternating)",
        "eulersum::corollary3_rhs(" + s + ")", 1e-8,
        [k] { return detail::closed_vs_oracle(eulersum::corollary3_rhs(k), eulersum::beta_weighted_sum_detailed(k + 1, false)); });
  }
  for (int k = 1; k <= 3; ++k) {
    const auto s = std::to_string(k);
    add("euler_sum_alt.k=" + s, "2 sum (-1)^n beta_n/n^(2k) against its zeta/eta closed form",
        "eulersum::beta_weighted_sum(" + std::to_string(2 * k) + ", alternating)",
        "eulersum::corollary4_rhs(" + s + ")", 1e-8,
        [k] { return detail::closed_vs_oracle(eulersum::corollary4_rhs(k), eulersum::beta_weighted_sum_detailed(2 * k, true)); });
  }
  for (int k = 2; k <= 5; ++k) {
    const auto s = std::to_string(k);
    add("euler_linear.k=" + s, "Euler: 2 sum H_(n-1)/n^k = k zeta(k+1) - sum zeta(k-j) zeta(j+1)",
        "eulersum::euler_linear_oracle(" + s + ")", "eulersum::euler_linear_sum(" + s + ")", 1e-9,
        [k] { return detail::closed_vs_oracle(eulersum::euler_linear_sum(k), eulersum::euler_linear_oracle(k)); });
    add("nielsen.k=" + s, "Nielsen: 2 sum A_(n-1)/n^k = 2 log2 zeta(k) - k zeta(k+1) + sum eta(k+1-j) eta(j)",
        "eulersum::nielsen_oracle(" + s + ")", "eulersum::nielsen_sum(" + s + ")", 1e-9,
        [k] { return detail::closed_vs_oracle(eulersum::nielsen_sum(k), eulersum::nielsen_oracle(k)); });
  }
  for (int k = 1; k <= 3; ++k) {
    const auto s = std::to_string(k);
    add("sitaramachandrarao_h.k=" + s, "Sitaramachandrarao: 2 sum (-1)^n H_(n-1)/n^(2k)",
        "eulersum::sitaramachandrarao_h_oracle(" + s + ")", "eulersum::sitaramachandrarao_h(" + s + ")", 1e-9,
        [k] { return detail::closed_vs_oracle(eulersum::sitaramachandrarao_h(k), eulersum::sitaramachandrarao_h_oracle(k)); });
    add("sitaramachandrarao_a.k=" + s, "Sitaramachandrarao: 2 sum (-1)^n A_(n-1)/n^(2k)",
        "eulersum::sitaramachandrarao_a_oracle(" + s + ")", "eulersum::sitaramachandrarao_a(" + s + ")", 1e-9,
        [k] { return detail::closed_vs_oracle(eulersum::sitaramachandrarao_a(k), eulersum::sitaramachandrarao_a_oracle(k)); });
    add("euler_sum_alt_decomposition.k=" + s,
        "2 sum (-1)^n beta_n/n^(2k) = [H form] + [A form] - zeta(2k+1) - eta(2k+1)",
        "eulersum::beta_weighted_sum(" + std::to_string(2 * k) + ", alternating)",
        "sitaramachandrarao_h + sitaramachandrarao_a - zeta - eta", 1e-9, [k] {
          const auto o = eulersum::beta_weighted_sum_detailed(2 * k, true);
          const double rhs = eulersum::sitaramachandrarao_h(k).value + eulersum::sitaramachandrarao_a(k).value -
                             specfun::zeta(2 * k + 1) - specfun::eta(2 * k + 1);
          return detail::numeric(o.value, rhs, o.error, 0.0);
        });
  }

  // Addition-theorem relations, checked in their corrected form (factor 2).
  for (double a : {0.0, 2.0, 5.0}) {
    const auto s = detail::num(a);
    add("addition_identity.a=" + s,
        "sum (-1)^n J_(2n)(a) beta_n/n equals the single integral int_0^inf [gamma + log t - Ci(t)] J_0(sqrt(a^2+t^2)) dt/t "
        "(the doubled integral does not equal the series)",
        "neumann::corollary5_series(" + s + ")", "quad::corollary5_integral(" + s + ")", 1e-6, [a] {
          const auto ser = neumann::corollary5_series(a, 1e-13);
          const auto q = quad::corollary5_integral(a, 1e-9);
          auto e = detail::numeric(ser.value, q.value, ser.tail_bound, q.abs_err_estimate);
          detail::note_quad(e, q);
          return e;
        });
  }
  for (auto [a, t] : {std::pair{2.0, 3.0}, {1.0, 5.0}, {4.0, 0.5}}) {
    const auto s = detail::num(a) + ",t=" + detail::num(t);
    add("addition_theorem.a=" + s,
        "J_0(sqrt(a^2+t^2)) - J_0(a) J_0(t) = 2 sum (-1)^n J_(2n)(a) J_(2n)(t) "
        "(the bare sum without the 2 does not hold)",
        "J_0(sqrt(a^2+t^2)) - J_0(a)J_0(t)", "2 * neumann::addition_theorem_check(a, t).rhs", 1e-12, [a, t] {
          const auto c = neumann::addition_theorem_check(a, t, 40);
          return detail::numeric(c.lhs, 2.0 * c.rhs);
        });
  }

  // Named constants.
  add("catalan_eval", "int_0^inf Si(t) (log(t/2) J_1 - pi/2 Y_1 - J_0/t) dt/t = 4 - 4G - gamma",
      "quad::corollary6_integral()", "eulersum::corollary6_rhs()", 1e-4, [] {
        auto e = detail::quad_vs(quad::corollary6_integral(1e-9), eulersum::corollary6_rhs().value);
        e.assembly = detail::to_entries(eulersum::corollary6_rhs());
        return e;
      });
  add("catalan_eval.intermediate", "int_0^inf Si(t) [(log(t/2) + gamma - 1) J_1 - pi/2 Y_1 - J_0/t] dt/t = 3 - 4G",
      "quad::corollary6_intermediate_integral()", "3 - 4G", 1e-4, [] {
        auto e = detail::quad_vs(quad::corollary6_intermediate_integral(1e-9), eulersum::catalan_series_rhs().value);
        e.assembly = detail::to_entries(eulersum::catalan_series_rhs());
        return e;
      });
  add("catalan_eval.series", "sum (-1)^n alpha_n/(n(n+1)) = 3 - 4G", "eulersum::catalan_alpha_sum()", "3 - 4G", 1e-10,
      [] { return detail::closed_vs_oracle(eulersum::catalan_series_rhs(), eulersum::catalan_alpha_sum_detailed()); });
  add("catalan_eval.aux", "sum (-1)^n/n sum_{k<=n} (-1)^(k-1)/(2k-1) = -G", "eulersum::catalan_aux_sum()", "-G", 1e-10,
      [] {
        const auto o = eulersum::catalan_aux_sum();
        return detail::numeric(o.value, -specfun::constants.catalan_g, o.error, 0.0);
      });
  add("example2", "int_0^inf ((gamma + log t - Ci(t))/t)(pi/2 Y_0(t) - log(t/2) J_0(t)) dt = (pi^2/4) log 2 - (7/8) zeta(3)",
      "quad::example2_integral()", "eulersum::example2_rhs()", 1e-5, [] {
        auto e = detail::quad_vs(quad::example2_integral(1e-9), eulersum::example2_rhs().value);
        e.assembly = detail::to_entries(eulersum::example2_rhs());
        return e;
      });
  add("clausen_integral.k=0", "int_0^{pi/2} [zeta(3) - Cl_3(2t)] cot t dt = (7/4) log 2 zeta(3)",
      "quad::clausen_cot_integral(0)", "(7/4) log2 zeta(3)", 1e-9, [] {
        auto e = detail::quad_vs(quad::clausen_cot_integral(0, 1e-12), eulersum::clausen_integral_k0_simplified().value);
        e.assembly = detail::to_entries(eulersum::clausen_integral_k0_simplified());
        return e;
      });
  add("clausen_integral.k=1", "int_0^{pi/2} [zeta(5) - Cl_5(2t)] cot t dt = half the beta_n/n^5 closed form",
      "quad::clausen_cot_integral(1)", "eulersum::clausen_integral_rhs(1)", 1e-9, [] {
        auto e = detail::quad_vs(quad::clausen_cot_integral(1, 1e-12), eulersum::clausen_integral_rhs(1).value);
        e.assembly = detail::to_entries(eulersum::clausen_integral_rhs(1));
        return e;
      });
  return reg;
}

// ---------------------------------------------------------------------------
// Running

inline bool glob_match(const std::string& pattern, const std::string& id) {
  return ::fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Runs one check; exceptions become an error outcome.
inline CheckOutcome run_check(const IdentityCheck& c, std::optional<double> tolerance_override = std::nullopt) {
  CheckOutcome o;
  o.id = c.id;
  o.description = c.description;
  o.lhs_recipe = c.lhs_recipe;
  o.rhs_recipe = c.rhs_recipe;
  o.tolerance = tolerance_override.value_or(c.tolerance);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Evaluation e = c.evaluate();
    o.lhs = e.lhs;
    o.rhs = e.rhs;
    o.lhs_error = e.lhs_error;
    o.rhs_error = e.rhs_error;
    o.abs_diff = std::abs(e.lhs - e.rhs);
    o.message = e.note;
    o.assembly = e.assembly;
    bool pass = false;
    if (e.exact_equal) {
      pass = *e.exact_equal;
      if (pass) o.abs_diff = 0.0;
    } else {
      pass = std::isfinite(o.abs_diff) && o.abs_diff <= o.tolerance;
    }
    o.status = pass ? CheckStatus::pass : CheckStatus::fail;
  } catch (const std::exception& ex) {
    o.status = CheckStatus::error;
    o.message = ex.what();
  }
  o.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

struct RunOptions {
  std::string filter = "*";
  std::map<std::string, double> tolerance_overrides;
  int jobs = 0;  // 0: hardware concurrency
  std::map<std::string, std::string> echo;
};

/// Executes the matching checks on a bounded worker pool; outcomes keep registry order.
inline Report run_registry(const std::vector<IdentityCheck>& registry, const RunOptions& opts) {
  std::vector<const IdentityCheck*> selected;
  for (const auto& c : registry)
    if (glob_match(opts.filter, c.id)) selected.push_back(&c);
  if (selected.empty()) throw usage_error("no registered check matches filter '" + opts.filter + "'");
  for (const auto& [id, tol] : opts.tolerance_overrides) {
    const bool known = std::any_of(registry.begin(), registry.end(), [&](const auto& c) { return c.id == id; });
    if (!known) throw usage_error("tolerance override for unknown check '" + id + "'");
    if (!(tol >= 0.0)) throw usage_error("tolerance override for '" + id + "' must be >= 0");
  }

  Report r;
  r.timestamp = utc_timestamp();
  r.options = opts.echo;
  r.checks.resize(selected.size());
  unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs) : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(selected.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const auto* c = selected[i];
      const auto it = opts.tolerance_overrides.find(c->id);
      r.checks[i] = run_check(*c, it == opts.tolerance_overrides.end() ? std::nullopt : std::optional(it->second));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  r.summary = tally(r.checks);
  return r;
}

/// Report with no checks, for a run that selected nothing.
inline Report empty_report(const std::map<std::string, std::string>& echo = {}) {
  Report r;
  r.timestamp = utc_timestamp();
  r.options = echo;
  return r;
}

// ---------------------------------------------------------------------------
// Configuration

/// NEUMANN_SICI_TOL_SCALE, or 1 when unset.
inline double tolerance_scale_from_env() {
  const char* v = std::getenv("NEUMANN_SICI_TOL_SCALE");
  if (v == nullptr || *v == '\0') return 1.0;
  char* end = nullptr;
  const double x = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(x > 0.0) || !std::isfinite(x))
    throw usage_error(std::string("NEUMANN_SICI_TOL_SCALE must be a positive number, got '") + v + "'");
  return x;
}

/// Flat `key = value` lines; '#' starts a comment. Repeated keys accumulate.
inline std::multimap<std::string, std::string> parse_config(std::istream& in) {
  std::multimap<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw usage_error("config line " + std::to_string(lineno) + ": empty key");
    out.emplace(key, value);
  }
  return out;
}

inline std::multimap<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read config file '" + path + "'");
  return parse_config(in);
}

/// Parses "id=value" tolerance overrides.
inline std::pair<std::string, double> parse_tolerance_override(const std::string& spec) {
  const auto eq = spec.rfind('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
    throw usage_error("tolerance override must look like <id>=<value>, got '" + spec + "'");
  const auto id = spec.substr(0, eq);
  const auto val = spec.substr(eq + 1);
  char* end = nullptr;
  const double x = std::strtod(val.c_str(), &end);
  if (end == val.c_str() || *end != '\0') throw usage_error("bad tolerance value in '" + spec + "'");
  return {id, x};
}

// ---------------------------------------------------------------------------
// Convergence tables

inline const std::vector<double>& default_table_a_grid() {
  static const std::vector<double> g{0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  return g;
}

inline const std::vector<int>& default_table_n_grid() {
  static const std::vector<int> g{0, 1, 2, 4, 6, 8, 10, 15, 20, 25, 30, 40};
  return g;
}

inline void emit_convergence_tables(const std::vector<double>& a_grid, const std::vector<int>& n_grid,
                                    std::ostream& os) {
  neumann::write_convergence_csv(neumann::convergence_table(a_grid, n_grid), os);
}

inline void emit_convergence_tables(const std::vector<double>& a_grid, const std::vector<int>& n_grid,
                                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write '" + path + "'");
  emit_convergence_tables(a_grid, n_grid, out);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace neumann_sici::harness
