#pragma once
// Check outcomes, reports, and their text / JSON / CSV forms.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace neumann_sici::harness {

inline constexpr const char* kToolVersion = "1.0.0";

enum class CheckStatus { pass, fail, error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "error";
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  return CheckStatus::error;
}

struct AssemblyEntry {
  std::string name;
  double coefficient = 0.0;
  double value = 0.0;
  bool operator==(const AssemblyEntry&) const = default;
};

struct CheckOutcome {
  std::string id;
  std::string description;
  std::string lhs_recipe;
  std::string rhs_recipe;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::error;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double abs_diff = std::numeric_limits<double>::quiet_NaN();
  double lhs_error = 0.0;
  double rhs_error = 0.0;
  std::string message;
  std::int64_t runtime_ms = 0;
  std::vector<AssemblyEntry> assembly;
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int errored = 0;
  bool operator==(const Summary&) const = default;
};

struct Report {
  std::string tool_version = kToolVersion;
  std::string timestamp;
  std::map<std::string, std::string> options;
  std::vector<CheckOutcome> checks;
  Summary summary;

  bool all_passed() const { return summary.failed == 0 && summary.errored == 0; }
};

inline Summary tally(const std::vector<CheckOutcome>& checks) {
  Summary s;
  s.total = static_cast<int>(checks.size());
  for (const auto& c : checks) {
    if (c.status == CheckStatus::pass) ++s.passed;
    else if (c.status == CheckStatus::fail) ++s.failed;
    else ++s.errored;
  }
  return s;
}

namespace detail {

inline bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

inline nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

inline double number_from(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace detail

/// Structural equality with NaN == NaN, the contract of the JSON round trip.
inline bool same_outcome(const CheckOutcome& a, const CheckOutcome& b) {
  using detail::same_number;
  return a.id == b.id && a.description == b.description && a.lhs_recipe == b.lhs_recipe &&
         a.rhs_recipe == b.rhs_recipe && same_number(a.tolerance, b.tolerance) && a.status == b.status &&
         same_number(a.lhs, b.lhs) && same_number(a.rhs, b.rhs) && same_number(a.abs_diff, b.abs_diff) &&
         same_number(a.lhs_error, b.lhs_error) && same_number(a.rhs_error, b.rhs_error) && a.message == b.message &&
         a.runtime_ms == b.runtime_ms && a.assembly == b.assembly;
}

inline bool same_report(const Report& a, const Report& b) {
  if (a.tool_version != b.tool_version || a.timestamp != b.timestamp || a.options != b.options ||
      !(a.summary == b.summary) || a.checks.size() != b.checks.size())
    return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    if (!same_outcome(a.checks[i], b.checks[i])) return false;
  return true;
}

/// Equality of everything except timings and the timestamp.
inline bool same_numeric_fields(const Report& a, const Report& b) {
  if (a.checks.size() != b.checks.size() || !(a.summary == b.summary)) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    auto x = a.checks[i];
    auto y = b.checks[i];
    x.runtime_ms = y.runtime_ms = 0;
    if (!same_outcome(x, y)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const CheckOutcome& c) {
  using detail::number;
  nlohmann::json assembly = nlohmann::json::array();
  for (const auto& t : c.assembly)
    assembly.push_back({{"name", t.name}, {"coefficient", number(t.coefficient)}, {"value", number(t.value)}});
  return {{"id", c.id},
          {"description", c.description},
          {"lhs_recipe", c.lhs_recipe},
          {"rhs_recipe", c.rhs_recipe},
          {"tolerance", number(c.tolerance)},
          {"status", to_string(c.status)},
          {"lhs", number(c.lhs)},
          {"rhs", number(c.rhs)},
          {"abs_diff", number(c.abs_diff)},
          {"lhs_error", number(c.lhs_error)},
          {"rhs_error", number(c.rhs_error)},
          {"message", c.message},
          {"runtime_ms", c.runtime_ms},
          {"assembly", assembly}};
}

inline CheckOutcome outcome_from_json(const nlohmann::json& j) {
  using detail::number_from;
  CheckOutcome c;
  c.id = j.at("id").get<std::string>();
  c.description = j.at("description").get<std::string>();
  c.lhs_recipe = j.at("lhs_recipe").get<std::string>();
  c.rhs_recipe = j.at("rhs_recipe").get<std::string>();
  c.tolerance = number_from(j.at("tolerance"));
  c.status = check_status_from_string(j.at("status").get<std::string>());
  c.lhs = number_from(j.at("lhs"));
  c.rhs = number_from(j.at("rhs"));
  c.abs_diff = number_from(j.at("abs_diff"));
  c.lhs_error = number_from(j.at("lhs_error"));
  c.rhs_error = number_from(j.at("rhs_error"));
  c.message = j.at("message").get<std::string>();
  c.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  for (const auto& t : j.at("assembly"))
    c.assembly.push_back({t.at("name").get<std::string>(), number_from(t.at("coefficient")), number_from(t.at("value"))});
  return c;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"tool_version", r.tool_version},
          {"timestamp", r.timestamp},
          {"options", r.options},
          {"checks", checks},
          {"summary",
           {{"total", r.summary.total},
            {"passed", r.summary.passed},
            {"failed", r.summary.failed},
            {"errored", r.summary.errored}}}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.options = j.at("options").get<std::map<std::string, std::string>>();
  for (const auto& c : j.at("checks")) r.checks.push_back(outcome_from_json(c));
  const auto& s = j.at("summary");
  r.summary = {s.at("total").get<int>(), s.at("passed").get<int>(), s.at("failed").get<int>(),
               s.at("errored").get<int>()};
  return r;
}

// ---------------------------------------------------------------------------
// CSV and text

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

inline std::string fmt(double x, int digits = 17) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace detail

inline void write_csv(const Report& r, std::ostream& os) {
  os << "id,description,lhs,rhs,abs_diff,tolerance,status,runtime_ms\n";
  for (const auto& c : r.checks) {
    os << detail::csv_field(c.id) << ',' << detail::csv_field(c.description) << ',' << detail::fmt(c.lhs) << ','
       << detail::fmt(c.rhs) << ',' << detail::fmt(c.abs_diff) << ',' << detail::fmt(c.tolerance) << ','
       << to_string(c.status) << ',' << c.runtime_ms << '\n';
  }
}

inline void write_text(const Report& r, std::ostream& os) {
  std::size_t width = 8;
  for (const auto& c : r.checks) width = std::max(width, c.id.size());
  os << "neumann_sici " << r.tool_version << "  " << r.timestamp << '\n';
  os << std::left << std::setw(static_cast<int>(width)) << "id" << "  status  " << std::setw(24) << "lhs"
     << std::setw(24) << "rhs" << std::setw(11) << "|diff|" << std::setw(11) << "tol" << "ms\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(6) << to_string(c.status)
       << "  " << std::setw(24) << detail::fmt(c.lhs, 17) << std::setw(24) << detail::fmt(c.rhs, 17) << std::setw(11)
       << detail::fmt(c.abs_diff, 3) << std::setw(11) << detail::fmt(c.tolerance, 3) << c.runtime_ms << '\n';
    if (c.status != CheckStatus::pass && !c.message.empty()) os << "    " << c.message << '\n';
  }
  os << "---\n"
     << r.summary.total << " checks: " << r.summary.passed << " passed, " << r.summary.failed << " failed, "
     << r.summary.errored << " errors\n";
}

}  // namespace neumann_sici::harness
