// hermlab command-line tool: verification suites, curvature reports,
// critical-point search, sectional-curvature surveys, and scalar scans for
// the invariant Hermitian family on S^{2n+1} x S^{2p+1}.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "hermlab/io.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

// HERMLAB_SEED overrides --seed when present
bool apply_seed_env(std::uint64_t& seed) {
  const char* env = std::getenv("HERMLAB_SEED");
  if (env == nullptr) return true;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    std::cerr << "error: HERMLAB_SEED is not an unsigned integer\n";
    return false;
  }
  seed = static_cast<std::uint64_t>(v);
  return true;
}

struct CommonOpts {
  std::string output_format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c, const std::string& default_format = "json") {
  c.output_format = default_format;
  cmd->add_option("--output", c.output_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out_path, "output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant Hermitian structures on S^{2n+1} x S^{2p+1}"};
  app.require_subcommand(1);

  // verify
  int v_n = -1, v_p = -1, v_nmax = 3, v_pmax = 3;
  std::uint64_t v_seed = 42;
  double v_tol = 1e-8;
  int v_samples = 10000;
  CommonOpts v_common;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant checks over a grid");
  verify->add_option("--n", v_n, "check a single n (with --p)");
  verify->add_option("--p", v_p, "check a single p (with --n)");
  verify->add_option("--n-max", v_nmax, "grid upper bound for n (default 3)");
  verify->add_option("--p-max", v_pmax, "grid upper bound for p (default 3)");
  verify->add_option("--seed", v_seed, "random seed (default 42)");
  verify->add_option("--tolerance", v_tol, "residual tolerance (default 1e-8)");
  verify->add_option("--samples", v_samples, "random 2-planes per sectional check");
  add_common(verify, v_common);

  // report
  int r_n = 1, r_p = 1;
  double r_a = 0.0, r_c = 1.0;
  CommonOpts r_common;
  CLI::App* report = app.add_subcommand("report", "curvature report for one metric g(a,c)");
  report->add_option("--n", r_n, "first sphere parameter")->required();
  report->add_option("--p", r_p, "second sphere parameter")->required();
  report->add_option("--a", r_a, "metric parameter a (default 0)");
  report->add_option("--c", r_c, "metric parameter c > 0 (default 1)");
  add_common(report, r_common);

  // optimize
  int o_n = 1, o_p = 1;
  std::string o_method = "closed_form";
  double o_start_a = 1.0, o_start_c = 1.0;
  CommonOpts o_common;
  CLI::App* optimize =
      app.add_subcommand("optimize", "critical point of the scalar-curvature functional");
  optimize->add_option("--n", o_n, "first sphere parameter")->required();
  optimize->add_option("--p", o_p, "second sphere parameter")->required();
  optimize->add_option("--method", o_method, "closed_form or ascent")
      ->check(CLI::IsMember({"closed_form", "ascent"}));
  optimize->add_option("--start-a", o_start_a, "ascent start a (default 1)");
  optimize->add_option("--start-c", o_start_c, "ascent start c (default 1)");
  add_common(optimize, o_common);

  // sectional
  int s_n = 1, s_p = 1, s_samples = 10000;
  std::uint64_t s_seed = 42;
  CommonOpts s_common;
  CLI::App* sectional =
      app.add_subcommand("sectional", "sectional-curvature bounds of g(0, sqrt(n/p))");
  sectional->add_option("--n", s_n, "first sphere parameter (1 <= n <= p)")->required();
  sectional->add_option("--p", s_p, "second sphere parameter")->required();
  sectional->add_option("--samples", s_samples, "random 2-planes (default 10000)");
  sectional->add_option("--seed", s_seed, "random seed (default 42)");
  add_common(sectional, s_common);

  // scan
  int g_n = 1, g_p = 1, g_asteps = 61, g_csteps = 50;
  double g_amin = -3.0, g_amax = 3.0, g_cmin = 0.1, g_cmax = 5.0;
  CommonOpts g_common;
  CLI::App* scan = app.add_subcommand("scan", "grid of s(a,c) values for plotting");
  scan->add_option("--n", g_n, "first sphere parameter")->required();
  scan->add_option("--p", g_p, "second sphere parameter")->required();
  scan->add_option("--a-min", g_amin, "left edge of a (default -3)");
  scan->add_option("--a-max", g_amax, "right edge of a (default 3)");
  scan->add_option("--c-min", g_cmin, "bottom edge of c (default 0.1)");
  scan->add_option("--c-max", g_cmax, "top edge of c (default 5)");
  scan->add_option("--a-steps", g_asteps, "grid points in a (default 61)");
  scan->add_option("--c-steps", g_csteps, "grid points in c (default 50)");
  add_common(scan, g_common, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (!apply_seed_env(v_seed)) return 2;
      std::vector<hermlab::SpaceParams> grid;
      if (verify->count("--n") || verify->count("--p")) {
        if (!(verify->count("--n") && verify->count("--p"))) {
          std::cerr << "error: --n and --p must be given together\n";
          return 2;
        }
        grid.emplace_back(v_n, v_p);
      } else {
        grid = hermlab::space_grid(v_nmax, v_pmax);
      }
      hermlab::VerifyOptions opt;
      opt.tolerance = v_tol;
      opt.seed = v_seed;
      opt.sectional_samples = v_samples;
      const auto checks = hermlab::run_verification(grid, opt);
      const std::string text = v_common.output_format == "csv"
                                   ? hermlab::verify_to_csv(checks)
                                   : hermlab::verify_to_json(grid, opt, checks);
      const int wr = write_output(text, v_common.out_path);
      if (wr != 0) return wr;
      for (const auto& c : checks)
        if (!c.pass) return 1;
      return 0;
    }

    if (report->parsed()) {
      const hermlab::SpaceParams sp(r_n, r_p);
      const hermlab::MetricParams m(r_a, r_c);
      hermlab::Algebra alg(sp);
      const hermlab::Curvature curv(alg, m);
      const hermlab::CurvatureReport rep = curv.report();
      const std::string text = r_common.output_format == "csv"
                                   ? hermlab::report_to_csv(sp, m, rep)
                                   : hermlab::report_to_json(sp, m, rep);
      return write_output(text, r_common.out_path);
    }

    if (optimize->parsed()) {
      hermlab::SpaceParams sp(o_n, o_p);  // validates the pair
      const auto method = o_method == "ascent" ? hermlab::CriticalPointMethod::ascent
                                               : hermlab::CriticalPointMethod::closed_form;
      hermlab::AscentOptions aopt;
      aopt.start_a = o_start_a;
      aopt.start_c = o_start_c;
      const auto res = hermlab::find_critical_point(o_n, o_p, method, aopt);
      const std::string text = o_common.output_format == "csv"
                                   ? hermlab::critical_point_to_csv(o_n, o_p, method, res)
                                   : hermlab::critical_point_to_json(o_n, o_p, method, res);
      const int wr = write_output(text, o_common.out_path);
      if (wr != 0) return wr;
      if (!res.exists) {
        std::cerr << "no critical points: the functional has none when n or p is zero\n";
        return 1;
      }
      return 0;
    }

    if (sectional->parsed()) {
      if (!apply_seed_env(s_seed)) return 2;
      const hermlab::SpaceParams sp(s_n, s_p);
      const hermlab::SectionalReport rep = hermlab::sectional_extremes(sp, s_samples, s_seed);
      const std::string text = s_common.output_format == "csv"
                                   ? hermlab::sectional_to_csv(sp, s_samples, s_seed, rep)
                                   : hermlab::sectional_to_json(sp, s_samples, s_seed, rep);
      return write_output(text, s_common.out_path);
    }

    if (scan->parsed()) {
      hermlab::SpaceParams sp(g_n, g_p);
      if (g_asteps < 1 || g_csteps < 1 || !(g_cmin > 0.0) || g_cmax < g_cmin ||
          g_amax < g_amin) {
        std::cerr << "error: invalid scan rectangle\n";
        return 2;
      }
      std::vector<hermlab::ScanRow> rows;
      rows.reserve(static_cast<size_t>(g_asteps) * g_csteps);
      for (int ia = 0; ia < g_asteps; ++ia) {
        const double a =
            g_asteps == 1 ? g_amin : g_amin + ia * (g_amax - g_amin) / (g_asteps - 1);
        for (int ic = 0; ic < g_csteps; ++ic) {
          const double c =
              g_csteps == 1 ? g_cmin : g_cmin + ic * (g_cmax - g_cmin) / (g_csteps - 1);
          rows.push_back({a, c, hermlab::scalar_functional(g_n, g_p, a, c)});
        }
      }
      const std::string text = g_common.output_format == "json"
                                   ? hermlab::scan_to_json(g_n, g_p, rows)
                                   : hermlab::scan_to_csv(rows);
      return write_output(text, g_common.out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
