// Command-line front end: runs the identity registry and writes reports or convergence tables.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "neumann_sici/harness.hpp"

namespace ns = neumann_sici::harness;

namespace {

enum ExitCode { kAllPass = 0, kSomeFail = 1, kUsage = 2 };

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !(is >> std::ws).eof()) throw ns::usage_error(std::string("bad value in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ns::usage_error(std::string(what) + " is empty");
  return out;
}

void emit(const ns::Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") os << ns::to_json(r).dump(2) << '\n';
  else if (format == "csv") ns::write_csv(r, os);
  else ns::write_text(r, os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks Neumann-series identities for Si and Ci against independent numerics."};
  app.set_version_flag("--version", ns::kToolVersion);

  std::string filter = "*";
  std::vector<std::string> overrides;
  std::string format = "text";
  std::string out_path;
  int max_n = 100;
  int jobs = 0;
  std::string config_path;
  bool list = false;

  app.add_option("--check", filter, "glob over check ids");
  app.add_option("--tol-override", overrides, "<id>=<tolerance>, repeatable");
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--max-n", max_n, "largest coefficient index in the registry")->check(CLI::Range(1, 100000));
  app.add_option("--jobs", jobs, "worker threads (default: logical cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--config", config_path, "file of `key = value` defaults; flags win");
  app.add_flag("--list", list, "print the matching check ids and exit");

  auto* tables = app.add_subcommand("tables", "write the Si expansion convergence table as CSV");
  std::string a_grid_s;
  std::string n_grid_s;
  std::string tables_out;
  tables->add_option("--a-grid", a_grid_s, "comma-separated a values");
  tables->add_option("--n-grid", n_grid_s, "comma-separated truncation orders");
  tables->add_option("--out", tables_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*tables) {
      const auto a = a_grid_s.empty() ? ns::default_table_a_grid() : parse_list<double>(a_grid_s, "--a-grid");
      const auto n = n_grid_s.empty() ? ns::default_table_n_grid() : parse_list<int>(n_grid_s, "--n-grid");
      for (int v : n)
        if (v < 0) throw ns::usage_error("--n-grid entries must be >= 0");
      if (tables_out.empty()) ns::emit_convergence_tables(a, n, std::cout);
      else ns::emit_convergence_tables(a, n, tables_out);
      return kAllPass;
    }

    if (!config_path.empty()) {
      const auto cfg = ns::load_config(config_path);
      auto given = [&](const char* flag) { return app.count(flag) > 0; };
      for (const auto& [key, value] : cfg) {
        if (key == "check") {
          if (!given("--check")) filter = value;
        } else if (key == "format") {
          if (value != "text" && value != "json" && value != "csv") throw ns::usage_error("config: bad format '" + value + "'");
          if (!given("--format")) format = value;
        } else if (key == "out") {
          if (!given("--out")) out_path = value;
        } else if (key == "max_n" || key == "max-n") {
          if (!given("--max-n")) max_n = parse_list<int>(value, "max_n").at(0);
        } else if (key == "jobs") {
          if (!given("--jobs")) jobs = parse_list<int>(value, "jobs").at(0);
        } else if (key == "tol_override" || key == "tol-override") {
          // flags override file entries for the same id, applied below
          overrides.insert(overrides.begin(), value);
        } else {
          throw ns::usage_error("config: unknown key '" + key + "'");
        }
      }
      if (max_n < 1) throw ns::usage_error("max_n must be >= 1");
      if (jobs < 0) throw ns::usage_error("jobs must be >= 0");
    }

    ns::RegistryOptions ropts;
    ropts.max_n = max_n;
    ropts.tol_scale = ns::tolerance_scale_from_env();
    const auto registry = ns::build_registry(ropts);

    if (list) {
      int shown = 0;
      for (const auto& c : registry)
        if (ns::glob_match(filter, c.id)) {
          std::cout << c.id << '\n';
          ++shown;
        }
      if (shown == 0) throw ns::usage_error("no registered check matches filter '" + filter + "'");
      return kAllPass;
    }

    ns::RunOptions opts;
    opts.filter = filter;
    opts.jobs = jobs;
    for (const auto& o : overrides) {
      const auto [id, tol] = ns::parse_tolerance_override(o);
      opts.tolerance_overrides[id] = tol;
    }
    opts.echo = {{"check", filter},
                 {"format", format},
                 {"max_n", std::to_string(max_n)},
                 {"tol_scale", std::to_string(ropts.tol_scale)},
                 {"tol_overrides", std::to_string(opts.tolerance_overrides.size())}};

    const auto report = ns::run_registry(registry, opts);
    if (out_path.empty()) {
      emit(report, format, std::cout);
    } else {
      std::ofstream os(out_path);
      if (!os) throw ns::usage_error("cannot write '" + out_path + "'");
      emit(report, format, os);
      if (!os) throw std::runtime_error("write failed for '" + out_path + "'");
    }
    return report.all_passed() ? kAllPass : kSomeFail;
  } catch (const ns::usage_error& e) {
    std::cerr << "neumann_sici: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "neumann_sici: " << e.what() << '\n';
    return kUsage;
  }
}
