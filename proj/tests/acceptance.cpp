// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its own tolerance; nothing is configurable.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hermlab/io.hpp"
#include "hermlab/verify.hpp"

using namespace hermlab;

namespace {

int g_failures = 0;

void line(const std::string& name, bool pass, double residual, double tol,
          const std::string& note = "") {
  std::printf("[%s] %-34s residual %.3e  (tol %.1e)%s%s\n", pass ? "PASS" : "FAIL",
              name.c_str(), residual, tol, note.empty() ? "" : "  ", note.c_str());
  if (!pass) ++g_failures;
}

Eigen::VectorXd unit(int dim, int k) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(k) = 1.0;
  return v;
}

std::string run_command(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// 1. the bracket table, exactly, over the grid
void criterion_bracket_table() {
  const double tol = 1e-12;
  double worst = 0.0;
  for (const SpaceParams& sp : space_grid(3, 3))
    worst = std::max(worst, bracket_table_residual(Algebra(sp)));
  line("bracket_table", worst < tol, worst, tol);
}

// 2. positive association across the family, with an injected fault
void criterion_positive_associated() {
  const double tol = 1e-10;
  bool pass = true;
  double worst = 0.0;
  Sampler rng(4242);
  for (const SpaceParams& sp : {SpaceParams(1, 1), SpaceParams(2, 1), SpaceParams(0, 2)}) {
    const TwoForm w = omega(sp);
    for (int t = 0; t < 50; ++t) {
      const MetricParams m(rng.uniform(-5.0, 5.0), rng.uniform(0.05, 10.0));
      const AssociationReport rep =
          check_positive_associated(w, complex_structure(sp, m).mat);
      worst = std::max(worst, rep.compatibility_residual);
      pass = pass && rep.compatible && rep.positive;
    }
    Eigen::MatrixXd bad = complex_structure(sp, MetricParams(0.0, 1.0)).mat;
    const int odd = sp.n() >= 1 ? sp.ix_y1(1) : sp.ix_y2(1);
    const int even = sp.n() >= 1 ? sp.ix_y1(2) : sp.ix_y2(2);
    bad.col(odd) *= -1.0;
    bad.col(even) *= -1.0;
    pass = pass && !check_positive_associated(w, bad).positive;
  }
  line("positive_associated", pass && worst < tol, worst, tol);
}

// 3. U from its defining identity vs the table; torsion; compatibility; Z = 0
void criterion_connection() {
  const double tol = 1e-10;
  double worst = 0.0;
  Sampler rng(777);
  for (const SpaceParams& sp : space_grid(3, 3)) {
    Algebra alg(sp);
    const int d = sp.p_dim();
    for (int t = 0; t < 5; ++t) {
      const MetricParams m(rng.uniform(-3.0, 3.0), rng.uniform(0.1, 5.0));
      Connection conn(alg, m);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          worst = std::max(worst, (conn.u_solve(unit(d, i), unit(d, j)) -
                                   conn.u_closed_form(i, j))
                                      .cwiseAbs()
                                      .maxCoeff());
      const auto table = conn.table();
      const Eigen::MatrixXd& g = conn.gram();
      for (int i = 0; i < d; ++i) {
        const Eigen::MatrixXd& L = table.lambda[static_cast<size_t>(i)];
        worst = std::max(worst, (L.transpose() * g + g * L).cwiseAbs().maxCoeff());
        for (int j = 0; j < d; ++j)
          worst = std::max(worst, (L.col(j) - table.lambda[static_cast<size_t>(j)].col(i) -
                                   alg.p_bracket_p(i).col(j))
                                      .cwiseAbs()
                                      .maxCoeff());
      }
      Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
      for (const Eigen::VectorXd& zi : orthonormal_frame(sp, m)) z += conn.u_solve(zi, zi);
      worst = std::max(worst, z.cwiseAbs().maxCoeff());
    }
  }
  line("connection_u_tensor", worst < tol, worst, tol);
}

// 4. closed-form Ricci = frame formula = Riemann trace; scalar both ways
void criterion_ricci_three_way() {
  const double tol_entry = 1e-8;
  const double tol_scalar = 1e-9;
  double worst_entry = 0.0;
  double worst_scalar = 0.0;
  Sampler rng(90210);
  for (const SpaceParams& sp : space_grid(3, 3)) {
    Algebra alg(sp);
    for (int t = 0; t < 20; ++t) {
      const MetricParams m(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 4.0));
      const Curvature curv(alg, m);
      const Eigen::MatrixXd closed = curv.ricci_closed_form_matrix();
      worst_entry = std::max(
          worst_entry, (curv.ricci_formula_matrix() - closed).cwiseAbs().maxCoeff());
      worst_entry = std::max(
          worst_entry, (curv.ricci_trace_matrix() - closed).cwiseAbs().maxCoeff());
      const auto s = curv.scalar_curvature();
      worst_scalar = std::max(worst_scalar, std::abs(s.first - s.second));
    }
  }
  line("ricci_three_way", worst_entry < tol_entry && worst_scalar < tol_scalar,
       std::max(worst_entry, worst_scalar), tol_entry,
       "scalar residual " + format_double(worst_scalar));
}

// 5. gradient, ascent-vs-closed-form, maximal value, degenerate strata,
//    Hermitian Ricci at the critical metric with a generic control
void criterion_critical_point() {
  bool pass = true;
  double worst = 0.0;  // gradient FD relative residual
  Sampler rng(31337);
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= 4; ++p) {
      for (int t = 0; t < 25; ++t) {
        const double a = rng.uniform(-3.0, 3.0);
        const double c = rng.uniform(0.25, 4.0);
        const Gradient ga = scalar_gradient(n, p, a, c);
        const Gradient gf = scalar_gradient_fd(n, p, a, c);
        const double scale = std::max(1.0, ga.norm());
        worst = std::max(worst, std::max(std::abs(ga.ds_da - gf.ds_da),
                                         std::abs(ga.ds_dc - gf.ds_dc)) /
                                    scale);
      }
      const auto closed = find_critical_point(n, p, CriticalPointMethod::closed_form);
      const auto ascent = find_critical_point(n, p, CriticalPointMethod::ascent);
      pass = pass && closed.exists && ascent.exists;
      pass = pass && std::abs(closed.a_star - ascent.a_star) < 1e-7 &&
             std::abs(closed.c_star - ascent.c_star) < 1e-7;
      const double s_expected = 4.0 * n * (n + 1.0) + 4.0 * p * (1.0 + p) -
                                4.0 * std::sqrt(static_cast<double>(n) * p);
      pass = pass && std::abs(closed.s_star - s_expected) < 1e-9;
      pass = pass && std::abs(ascent.s_star - s_expected) < 1e-9;
      pass = pass && closed.kind == CriticalPointResult::Kind::maximum &&
             ascent.gradient_norm_at_star < 1e-8;
      pass = pass && hermitian_ricci_report(n, p, 1e-9);
    }
  pass = pass && !find_critical_point(0, 2, CriticalPointMethod::closed_form).exists;
  pass = pass && !find_critical_point(3, 0, CriticalPointMethod::closed_form).exists;
  // the Hermitian-Ricci identity must fail away from the critical point
  pass = pass && hermitian_ricci_residual(SpaceParams(1, 1), MetricParams(1.0, 1.0)) > 1e-3;
  pass = pass && hermitian_ricci_residual(SpaceParams(2, 3), MetricParams(0.5, 2.0)) > 1e-3;
  line("critical_point", pass && worst < 1e-6, worst, 1e-6);
}

// 6. Einstein exactly when n = p at (a,c) = (0,1); never at the critical
//    metric when n != p
void criterion_einstein() {
  const double tol = 1e-9;
  bool pass = true;
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    SpaceParams sp(n, n);
    Algebra alg(sp);
    const Curvature curv(alg, MetricParams(0.0, 1.0));
    worst = std::max(worst, (curv.ricci_closed_form_matrix() - 2.0 * n * curv.gram())
                                .cwiseAbs()
                                .maxCoeff());
    const auto lam = curv.einstein_check(tol);
    pass = pass && lam.has_value() && std::abs(*lam - 2.0 * n) < tol;
  }
  for (const auto& np : {std::pair{1, 2}, {2, 3}, {1, 4}}) {
    SpaceParams sp(np.first, np.second);
    Algebra alg(sp);
    const MetricParams crit(0.0, std::sqrt(static_cast<double>(np.first) / np.second));
    pass = pass && !Curvature(alg, crit).einstein_check(tol).has_value();
  }
  line("einstein_remark", pass && worst < tol, worst, tol);
}

// 7. sectional bounds: named bivectors achieve them, sampled planes obey them
void criterion_sectional() {
  const double tol = 1e-8;
  bool pass = true;
  double worst = 0.0;
  const std::array<std::pair<int, int>, 4> cases{
      std::pair{1, 16}, {1, 4}, {3, 4}, {2, 2}};
  const std::array<int, 4> regimes{1, 2, 3, 3};
  for (size_t k = 0; k < cases.size(); ++k) {
    const SpaceParams sp(cases[k].first, cases[k].second);
    const SectionalReport rep = sectional_extremes(sp, 10000, 42);
    pass = pass && rep.regime == regimes[k];
    worst = std::max(worst, std::abs(rep.observed_min - rep.bound_low));
    worst = std::max(worst, std::abs(rep.observed_max - rep.bound_high));
    pass = pass && rep.samples_in_bounds == 1.0;
  }
  // spot values: (1,16) spans [-8, 4]; (1,4) spans [-2, 2.5]
  {
    const SectionalReport r = sectional_extremes(SpaceParams(1, 16), 0, 1);
    worst = std::max(worst, std::abs(r.bound_low + 8.0));
    worst = std::max(worst, std::abs(r.bound_high - 4.0));
    const SectionalReport r2 = sectional_extremes(SpaceParams(1, 4), 0, 1);
    worst = std::max(worst, std::abs(r2.bound_low + 2.0));
    worst = std::max(worst, std::abs(r2.bound_high - 2.5));
  }
  line("sectional_bounds", pass && worst < tol, worst, tol);
}

// 8. oracle self-tests: antisymmetry, pair symmetry, first Bianchi, plane
//    invariance of K
void criterion_oracle() {
  const double tol = 1e-9;
  double worst = 0.0;
  Sampler rng(5150);
  for (const SpaceParams& sp : {SpaceParams(1, 1), SpaceParams(2, 1), SpaceParams(1, 3),
                                SpaceParams(0, 2), SpaceParams(3, 3)}) {
    Algebra alg(sp);
    worst = std::max(worst, curvature_oracle_residual(alg, rng, 10));
  }
  line("curvature_oracle", worst < tol, worst, tol);
}

// 9. the CLI is deterministic under a fixed seed
void criterion_determinism() {
  const char* cli = std::getenv("HERMLAB_CLI");
  if (cli == nullptr) {
    line("cli_determinism", false, 0.0, 0.0, "HERMLAB_CLI not set");
    return;
  }
  const std::string base = std::string("'") + cli + "' ";
  const std::array<std::string, 5> commands{
      "verify --n-max 1 --p-max 2 --samples 500 --seed 42",
      "report --n 2 --p 2 --a 0.5 --c 1.25",
      "optimize --n 3 --p 2 --method ascent",
      "sectional --n 2 --p 3 --samples 2000 --seed 42",
      "scan --n 1 --p 2 --a-steps 11 --c-steps 7"};
  bool pass = true;
  std::string note;
  for (const std::string& cmd : commands) {
    int code1 = 0, code2 = 0;
    const std::string out1 = run_command(base + cmd, code1);
    const std::string out2 = run_command(base + cmd, code2);
    if (out1 != out2 || code1 != code2 || out1.empty()) {
      pass = false;
      note = "divergent: " + cmd;
      break;
    }
  }
  line("cli_determinism", pass, 0.0, 0.0, note);
}

}  // namespace

int main() {
  criterion_bracket_table();
  criterion_positive_associated();
  criterion_connection();
  criterion_ricci_three_way();
  criterion_critical_point();
  criterion_einstein();
  criterion_sectional();
  criterion_oracle();
  criterion_determinism();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
