#ifndef HERMLAB_VERIFY_HPP
#define HERMLAB_VERIFY_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hermlab/algebra.hpp"
#include "hermlab/connection.hpp"
#include "hermlab/curvature.hpp"
#include "hermlab/optimize.hpp"
#include "hermlab/sampling.hpp"
#include "hermlab/structures.hpp"

namespace hermlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
};

struct VerifyOptions {
  double tolerance = 1e-8;
  std::uint64_t seed = 42;
  int metric_draws = 20;     // random (a,c) per space
  int sectional_samples = 10000;
  int element_draws = 50;    // random algebra elements / vectors
};

namespace detail {

inline int h_index(const Algebra& alg, BasisTag tag, int nu, int mu) {
  for (const BasisVector& b : alg.basis())
    if (b.tag == tag && b.nu == nu && b.mu == mu) return b.index;
  throw std::logic_error("h_index: generator not found");
}

inline Eigen::VectorXd unit(int dim, int k) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(k) = 1.0;
  return v;
}

// expected coefficients of Z_{nu,mu} with unordered indices: Z(mu,nu) = -Z(nu,mu)
inline void add_z(const Algebra& alg, BasisTag ztag, int nu, int mu, double w,
                  Eigen::VectorXd& out) {
  if (nu == mu) return;
  if (nu > mu)
    out(h_index(alg, ztag, nu, mu)) += w;
  else
    out(h_index(alg, ztag, mu, nu)) -= w;
}

// expected coefficients of iT_{nu,mu}, symmetric in the indices
inline void add_t(const Algebra& alg, BasisTag ttag, int nu, int mu, double w,
                  Eigen::VectorXd& out) {
  if (nu >= mu)
    out(h_index(alg, ttag, nu, mu)) += w;
  else
    out(h_index(alg, ttag, mu, nu)) += w;
}

inline MetricParams draw_metric(Sampler& rng, double a_lo, double a_hi, double c_lo,
                                double c_hi) {
  return MetricParams(rng.uniform(a_lo, a_hi), rng.uniform(c_lo, c_hi));
}

}  // namespace detail

// --- the full bracket table of the sphere basis, checked exactly -----------

inline double bracket_table_residual(const Algebra& alg) {
  const SpaceParams& sp = alg.space();
  const int dg = alg.dim_g();
  double worst = 0.0;
  auto check = [&](int i, int j, const Eigen::VectorXd& expected) {
    const Eigen::VectorXd got =
        alg.bracket(detail::unit(dg, i), detail::unit(dg, j));
    worst = std::max(worst, (got - expected).cwiseAbs().maxCoeff());
  };

  struct BlockIdx {
    int x;
    BasisTag ztag, ttag;
    int count;
    std::function<int(int)> y;
  };
  const BlockIdx blocks[2] = {
      {sp.ix_x1(), BasisTag::Z1, BasisTag::T1, sp.n(),
       [&sp](int i) { return sp.ix_y1(i); }},
      {sp.ix_x2(), BasisTag::Z2, BasisTag::T2, sp.p(),
       [&sp](int i) { return sp.ix_y2(i); }}};

  for (const BlockIdx& blk : blocks) {
    for (int nu = 1; nu <= blk.count; ++nu) {
      // [X, Y_{2v-1}] = -Y_{2v},  [X, Y_{2v}] = Y_{2v-1}
      check(blk.x, blk.y(2 * nu - 1), -detail::unit(dg, blk.y(2 * nu)));
      check(blk.x, blk.y(2 * nu), detail::unit(dg, blk.y(2 * nu - 1)));
      // [Y_{2v-1}, Y_{2v}] = -2X + iT_{v,v}
      Eigen::VectorXd e = Eigen::VectorXd::Zero(dg);
      e(blk.x) = -2.0;
      detail::add_t(alg, blk.ttag, nu, nu, 1.0, e);
      check(blk.y(2 * nu - 1), blk.y(2 * nu), e);
      for (int mu = 1; mu <= blk.count; ++mu) {
        if (mu == nu) continue;
        // [Y_{2v}, Y_{2u}] = -Z_{v,u} = [Y_{2v-1}, Y_{2u-1}], and
        // [Y_{2v}, Y_{2u-1}] = -iT_{v,u} (both land in the isotropy part)
        Eigen::VectorXd ez = Eigen::VectorXd::Zero(dg);
        detail::add_z(alg, blk.ztag, nu, mu, -1.0, ez);
        check(blk.y(2 * nu), blk.y(2 * mu), ez);
        check(blk.y(2 * nu - 1), blk.y(2 * mu - 1), ez);
        Eigen::VectorXd et = Eigen::VectorXd::Zero(dg);
        detail::add_t(alg, blk.ttag, nu, mu, -1.0, et);
        check(blk.y(2 * nu), blk.y(2 * mu - 1), et);
      }
    }
  }

  // the two factors commute
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dg);
  for (int i = 0; i <= 2 * sp.n(); ++i)
    for (int j = 0; j <= 2 * sp.p(); ++j) check(i, sp.ix_x2() + j, zero);
  return worst;
}

// antisymmetry, Jacobi, projections, duality, reductivity on random elements
inline double algebra_identity_residual(const Algebra& alg, Sampler& rng, int draws) {
  const int dg = alg.dim_g();
  double worst = 0.0;
  for (int t = 0; t < draws; ++t) {
    const Eigen::VectorXd A = rng.normal_vector(dg);
    const Eigen::VectorXd B = rng.normal_vector(dg);
    const Eigen::VectorXd C = rng.normal_vector(dg);
    const Eigen::VectorXd ab = alg.bracket(A, B);
    worst = std::max(worst, (ab + alg.bracket(B, A)).cwiseAbs().maxCoeff());
    const Eigen::VectorXd jac = alg.bracket(A, alg.bracket(B, C)) +
                                alg.bracket(B, alg.bracket(C, A)) +
                                alg.bracket(C, ab);
    worst = std::max(worst, jac.cwiseAbs().maxCoeff());
    worst = std::max(
        worst, (alg.project_p(A) + alg.project_h(A) - A).cwiseAbs().maxCoeff());
    worst = std::max(worst, (alg.coeffs(alg.blocks(A)) - A).cwiseAbs().maxCoeff());
    worst = std::max(worst, alg.skew_hermitian_residual(alg.blocks(A)));
  }
  // [h, p] stays in p
  for (int m = 0; m < alg.dim_h(); ++m)
    for (int l = 0; l < alg.dim_p(); ++l) {
      const Eigen::VectorXd br = alg.bracket(detail::unit(dg, alg.dim_p() + m),
                                             detail::unit(dg, l));
      worst = std::max(worst, alg.take_h(br).cwiseAbs().maxCoeff());
    }
  return worst;
}

// compatibility and positivity of omega(., I.), with an injected fault control
inline CheckResult check_positive_associated_family(const SpaceParams& sp, Sampler& rng,
                                                    int draws, double tol) {
  CheckResult res{"positive_associated", true, 0.0, tol};
  const TwoForm w = omega(sp);
  for (int t = 0; t < draws; ++t) {
    const MetricParams m = detail::draw_metric(rng, -5.0, 5.0, 0.05, 10.0);
    const AssociationReport rep = check_positive_associated(w, complex_structure(sp, m).mat);
    res.worst_residual = std::max(res.worst_residual, rep.compatibility_residual);
    if (!rep.compatible || !rep.positive) res.pass = false;
  }
  // control: flipping the action on one Y-pair must break positivity
  Eigen::MatrixXd bad = complex_structure(sp, MetricParams(0.0, 1.0)).mat;
  const int odd = (sp.n() >= 1) ? sp.ix_y1(1) : sp.ix_y2(1);
  const int even = (sp.n() >= 1) ? sp.ix_y1(2) : sp.ix_y2(2);
  bad.col(odd) *= -1.0;
  bad.col(even) *= -1.0;
  if (check_positive_associated(w, bad).positive) res.pass = false;
  if (res.worst_residual >= tol) res.pass = false;
  return res;
}

// I^2 = -Id, the metric table, frame orthonormality, Hermitian symmetry,
// and the projected Nijenhuis expression
inline double hermitian_structure_residual(const Algebra& alg, Sampler& rng, int draws) {
  const SpaceParams& sp = alg.space();
  const int d = sp.p_dim();
  double worst = 0.0;
  for (int t = 0; t < draws; ++t) {
    const MetricParams m = detail::draw_metric(rng, -3.0, 3.0, 0.1, 5.0);
    const EndomorphismField I = complex_structure(sp, m);
    worst = std::max(worst, I.square_plus_id_residual());

    const Eigen::MatrixXd g = associated_metric(sp, m).sym;
    worst = std::max(worst, (g - metric_table(sp, m).sym).cwiseAbs().maxCoeff());

    const Eigen::MatrixXd F = frame_matrix(sp, m);
    worst = std::max(
        worst,
        (F.transpose() * g * F - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff());

    worst = std::max(worst, (I.mat.transpose() * g * I.mat - g).cwiseAbs().maxCoeff());

    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const Eigen::VectorXd nij =
            nijenhuis_p(alg, m, detail::unit(d, i), detail::unit(d, j));
        worst = std::max(worst, nij.size() ? nij.cwiseAbs().maxCoeff() : 0.0);
      }
  }
  return worst;
}

// U from the defining identity against the closed-form table; torsion,
// metric compatibility, and the vanishing frame trace
inline double connection_residual(const Algebra& alg, Sampler& rng, int draws) {
  const SpaceParams& sp = alg.space();
  const int d = sp.p_dim();
  double worst = 0.0;
  for (int t = 0; t < draws; ++t) {
    const MetricParams m = detail::draw_metric(rng, -3.0, 3.0, 0.1, 5.0);
    const Connection conn(alg, m);
    const Eigen::MatrixXd& g = conn.gram();

    std::vector<Eigen::MatrixXd> lambda = conn.table().lambda;
    for (int i = 0; i < d; ++i) {
      const Eigen::VectorXd ei = detail::unit(d, i);
      for (int j = 0; j < d; ++j) {
        const Eigen::VectorXd ej = detail::unit(d, j);
        worst = std::max(worst, (conn.u_solve(ei, ej) - conn.u_closed_form(i, j))
                                    .cwiseAbs()
                                    .maxCoeff());
        // torsion: D_i e_j - D_j e_i = [e_i, e_j]_p
        const Eigen::VectorXd tor = lambda[static_cast<size_t>(i)].col(j) -
                                    lambda[static_cast<size_t>(j)].col(i) -
                                    alg.p_bracket_p(i).col(j);
        worst = std::max(worst, tor.cwiseAbs().maxCoeff());
      }
      // compatibility: g(D_i e_j, e_k) + g(e_j, D_i e_k) = 0 for all j, k
      const Eigen::MatrixXd comp = lambda[static_cast<size_t>(i)].transpose() * g +
                                   g * lambda[static_cast<size_t>(i)];
      worst = std::max(worst, comp.cwiseAbs().maxCoeff());
    }

    // U symmetry on random vectors (bilinear extension)
    for (int q = 0; q < 5; ++q) {
      const Eigen::VectorXd x = rng.normal_vector(d);
      const Eigen::VectorXd y = rng.normal_vector(d);
      worst = std::max(worst,
                       (conn.u_solve(x, y) - conn.u_solve(y, x)).cwiseAbs().maxCoeff());
    }

    // Z = sum_i U(Z_i, Z_i) vanishes
    Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
    for (const Eigen::VectorXd& zi : orthonormal_frame(sp, m)) z += conn.u_solve(zi, zi);
    worst = std::max(worst, z.cwiseAbs().maxCoeff());
  }
  return worst;
}

// closed-form Ricci table vs the orthonormal-frame formula vs the trace of
// the Riemann route, entrywise; scalar curvature both ways; spectra
inline double ricci_three_way_residual(const Algebra& alg, Sampler& rng, int draws) {
  const SpaceParams& sp = alg.space();
  double worst = 0.0;
  for (int t = 0; t < draws; ++t) {
    const MetricParams m = detail::draw_metric(rng, -2.0, 2.0, 0.1, 4.0);
    const Curvature curv(alg, m);
    const Eigen::MatrixXd closed = curv.ricci_closed_form_matrix();
    worst = std::max(worst, (curv.ricci_formula_matrix() - closed).cwiseAbs().maxCoeff());
    worst = std::max(worst, (curv.ricci_trace_matrix() - closed).cwiseAbs().maxCoeff());

    const auto s = curv.scalar_curvature();
    worst = std::max(worst, std::abs(s.first - s.second));

    // block values agree with a generic symmetric eigensolver
    const RicciSpectrum spec = curv.ricci_eigenvalues();
    Eigen::Matrix2d blockR;
    blockR << closed(sp.ix_x1(), sp.ix_x1()), closed(sp.ix_x1(), sp.ix_x2()),
        closed(sp.ix_x2(), sp.ix_x1()), closed(sp.ix_x2(), sp.ix_x2());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es2(blockR);
    worst = std::max(worst, std::abs(spec.coordinate_values[0] - es2.eigenvalues()(1)));
    worst = std::max(worst, std::abs(spec.coordinate_values[1] - es2.eigenvalues()(0)));

    // operator spectrum = generalized block eigenvalues + the Y values
    Eigen::Matrix2d blockG;
    const Eigen::MatrixXd& g = curv.gram();
    blockG << g(sp.ix_x1(), sp.ix_x1()), g(sp.ix_x1(), sp.ix_x2()),
        g(sp.ix_x2(), sp.ix_x1()), g(sp.ix_x2(), sp.ix_x2());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> ges(blockR, blockG);
    std::vector<double> expected{ges.eigenvalues()(0), ges.eigenvalues()(1)};
    for (int j = 0; j < 2 * sp.n(); ++j)
      expected.push_back(closed(sp.ix_y1(1 + j), sp.ix_y1(1 + j)));
    for (int k = 0; k < 2 * sp.p(); ++k)
      expected.push_back(closed(sp.ix_y2(1 + k), sp.ix_y2(1 + k)));
    std::sort(expected.begin(), expected.end());
    std::vector<double> got = spec.operator_spectrum;
    std::sort(got.begin(), got.end());
    for (size_t k = 0; k < expected.size(); ++k)
      worst = std::max(worst, std::abs(expected[k] - got[k]));
  }

  // where the basis is g-orthonormal the two spectra must be one list
  {
    const Curvature curv(alg, MetricParams(0.0, 1.0));
    const RicciSpectrum spec = curv.ricci_eigenvalues();
    std::vector<double> a = spec.coordinate_values;
    std::vector<double> b = spec.operator_spectrum;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t k = 0; k < a.size(); ++k)
      worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

// Ric = 2n g at (a,c) = (0,1) when n = p; no Einstein constant at the
// distinguished metric when n != p
inline CheckResult check_einstein_family(const std::vector<SpaceParams>& grid, double tol) {
  CheckResult res{"einstein_family", true, 0.0, tol};
  for (const SpaceParams& sp : grid) {
    Algebra alg(sp);
    if (sp.n() == sp.p()) {
      const Curvature curv(alg, MetricParams(0.0, 1.0));
      const double lam = 2.0 * sp.n();
      res.worst_residual =
          std::max(res.worst_residual, (curv.ricci_closed_form_matrix() - lam * curv.gram())
                                           .cwiseAbs()
                                           .maxCoeff());
      const auto found = curv.einstein_check(tol);
      if (!found || std::abs(*found - lam) > tol) res.pass = false;
    } else if (sp.n() >= 1 && sp.p() >= 1) {
      const MetricParams crit(0.0, std::sqrt(static_cast<double>(sp.n()) / sp.p()));
      const Curvature curv(alg, crit);
      if (curv.einstein_check(tol).has_value()) res.pass = false;
    }
  }
  if (res.worst_residual >= tol) res.pass = false;
  return res;
}

// gradient against finite differences, ascent against the closed form,
// the maximal value, sampled maximality, sign agreement of the zero set,
// and the Hermitian-Ricci property at the critical point (with control)
inline CheckResult check_critical_point(const SpaceParams& sp, Sampler& rng, int draws,
                                        double tol) {
  CheckResult res{"critical_point", true, 0.0, tol};
  const int n = sp.n();
  const int p = sp.p();

  if (n == 0 || p == 0) {
    const auto cp = find_critical_point(n, p, CriticalPointMethod::closed_form);
    if (cp.exists) res.pass = false;
    // the gradient never vanishes on this stratum
    for (int t = 0; t < draws; ++t) {
      const double a = rng.uniform(-3.0, 3.0);
      const double c = rng.uniform(0.1, 5.0);
      if (scalar_gradient(n, p, a, c).norm() < 1e-6) res.pass = false;
    }
    return res;
  }

  for (int t = 0; t < draws; ++t) {
    const double a = rng.uniform(-3.0, 3.0);
    const double c = rng.uniform(0.25, 4.0);
    const Gradient ga = scalar_gradient(n, p, a, c);
    const Gradient gf = scalar_gradient_fd(n, p, a, c);
    const double scale = std::max(1.0, ga.norm());
    res.worst_residual = std::max(
        res.worst_residual,
        std::max(std::abs(ga.ds_da - gf.ds_da), std::abs(ga.ds_dc - gf.ds_dc)) / scale);
    // same zero set and signs as the printed partial derivatives
    auto sgn = [](double v) { return v > 1e-12 ? 1 : (v < -1e-12 ? -1 : 0); };
    if (sgn(ga.ds_da) != sgn(-p * a / c)) res.pass = false;
    if (sgn(ga.ds_dc) != sgn((n - p * (c * c - a * a)) / (2.0 * c * c))) res.pass = false;
  }

  const auto closed = find_critical_point(n, p, CriticalPointMethod::closed_form);
  const auto ascent = find_critical_point(n, p, CriticalPointMethod::ascent);
  if (!closed.exists || !ascent.exists) res.pass = false;
  if (closed.kind != CriticalPointResult::Kind::maximum ||
      ascent.kind != CriticalPointResult::Kind::maximum)
    res.pass = false;
  const double dx = std::max(std::abs(closed.a_star - ascent.a_star),
                             std::abs(closed.c_star - ascent.c_star));
  if (dx > 1e-7) res.pass = false;
  const double s_expected =
      4.0 * n * (n + 1.0) + 4.0 * p * (1.0 + p) - 4.0 * std::sqrt(static_cast<double>(n) * p);
  res.worst_residual = std::max(res.worst_residual, std::abs(closed.s_star - s_expected));

  for (int t = 0; t < 200; ++t) {
    const double a = rng.uniform(-6.0, 6.0);
    const double c = rng.uniform(0.01, 10.0);
    if (scalar_functional(n, p, a, c) > closed.s_star + 1e-9) res.pass = false;
  }

  if (!hermitian_ricci_report(n, p)) res.pass = false;
  // control: generic a != 0 must fail the Hermitian-Ricci test
  if (hermitian_ricci_residual(sp, MetricParams(1.0, 1.0)) < 1e-3) res.pass = false;

  if (res.worst_residual >= tol) res.pass = false;
  return res;
}

// the three bound regimes for g(0, sqrt(n/p)); named bivectors achieve the
// bounds and every sampled plane respects them
inline CheckResult check_sectional_bounds(const SpaceParams& sp, int samples,
                                          std::uint64_t seed, double tol) {
  CheckResult res{"sectional_bounds", true, 0.0, tol};
  const SectionalReport rep = sectional_extremes(sp, samples, seed);

  res.worst_residual = std::max(std::abs(rep.observed_min - rep.bound_low),
                                std::abs(rep.observed_max - rep.bound_high));
  if (rep.samples_in_bounds != 1.0) res.pass = false;

  // bound achievement on the stated bivector families
  const MetricParams m(0.0, std::sqrt(static_cast<double>(sp.n()) / sp.p()));
  Algebra alg(sp);
  const Curvature curv(alg, m);
  const int d = sp.p_dim();
  auto K = [&](int i, int j) {
    return curv.sectional(detail::unit(d, i), detail::unit(d, j));
  };
  double min_family = std::numeric_limits<double>::infinity();
  double max_family = -std::numeric_limits<double>::infinity();
  if (rep.regime == 1 || rep.regime == 2) {
    for (int l = 1; l <= sp.n(); ++l)
      min_family = std::min(min_family, K(sp.ix_y1(2 * l - 1), sp.ix_y1(2 * l)));
    if (rep.regime == 1) {
      for (int i = 1; i <= 2 * sp.n(); ++i)
        max_family = std::max(max_family, K(sp.ix_x1(), sp.ix_y1(i)));
    } else {
      for (int mm = 1; mm <= sp.p(); ++mm)
        max_family = std::max(max_family, K(sp.ix_y2(2 * mm - 1), sp.ix_y2(2 * mm)));
    }
  } else {
    min_family = K(sp.ix_x1(), sp.ix_x2());
    for (int l = 1; l <= sp.n(); ++l)
      for (int mm = 1; mm <= sp.p(); ++mm) {
        min_family = std::min(min_family, K(sp.ix_y1(2 * l - 1), sp.ix_y2(2 * mm - 1)));
        min_family = std::min(min_family, K(sp.ix_y1(2 * l), sp.ix_y2(2 * mm)));
      }
    for (int mm = 1; mm <= sp.p(); ++mm)
      max_family = std::max(max_family, K(sp.ix_y2(2 * mm - 1), sp.ix_y2(2 * mm)));
  }
  res.worst_residual = std::max(res.worst_residual, std::abs(min_family - rep.bound_low));
  res.worst_residual = std::max(res.worst_residual, std::abs(max_family - rep.bound_high));
  if (res.worst_residual >= tol) res.pass = false;
  return res;
}

// antisymmetry, pair symmetry, first Bianchi, and plane invariance of K
inline double curvature_oracle_residual(const Algebra& alg, Sampler& rng, int draws) {
  const int d = alg.dim_p();
  double worst = 0.0;
  for (int t = 0; t < draws; ++t) {
    const MetricParams m = detail::draw_metric(rng, -2.0, 2.0, 0.2, 5.0);
    const Curvature curv(alg, m);
    const Eigen::VectorXd x = rng.normal_vector(d).normalized();
    const Eigen::VectorXd y = rng.normal_vector(d).normalized();
    const Eigen::VectorXd w = rng.normal_vector(d).normalized();
    const Eigen::VectorXd v = rng.normal_vector(d).normalized();

    const Eigen::MatrixXd Rxy = curv.riemann_operator(x, y);
    worst = std::max(worst, (Rxy + curv.riemann_operator(y, x)).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(curv.inner(Rxy * w, v) -
                                     curv.inner(curv.riemann(w, v, x), y)));
    const Eigen::VectorXd bianchi =
        Rxy * w + curv.riemann(y, w, x) + curv.riemann(w, x, y);
    worst = std::max(worst, bianchi.cwiseAbs().maxCoeff());

    // K depends only on the plane
    const double k0 = curv.sectional(x, y);
    const double k1 = curv.sectional(x + 0.5 * y, y);
    const double k2 = curv.sectional(2.0 * x, y - 0.25 * x);
    worst = std::max(worst, std::max(std::abs(k1 - k0), std::abs(k2 - k0)));
  }
  return worst;
}

// --- the aggregated verification run ---------------------------------------

inline std::vector<CheckResult> run_verification(const std::vector<SpaceParams>& grid,
                                                 const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const double tol = opt.tolerance;

  CheckResult brackets{"bracket_relations", true, 0.0, tol};
  CheckResult identities{"algebra_identities", true, 0.0, tol};
  CheckResult assoc{"positive_associated", true, 0.0, tol};
  CheckResult structures{"hermitian_structures", true, 0.0, tol};
  CheckResult connection{"connection_u_tensor", true, 0.0, tol};
  CheckResult ricci{"ricci_three_way", true, 0.0, tol};
  CheckResult critical{"critical_point", true, 0.0, tol};
  CheckResult sectional{"sectional_bounds", true, 0.0, tol};
  CheckResult oracle{"curvature_oracle", true, 0.0, tol};

  for (const SpaceParams& sp : grid) {
    Algebra alg(sp);
    Sampler rng(opt.seed ^ (static_cast<std::uint64_t>(sp.n()) << 32 |
                            static_cast<std::uint64_t>(sp.p())));

    brackets.worst_residual = std::max(brackets.worst_residual, bracket_table_residual(alg));
    identities.worst_residual =
        std::max(identities.worst_residual, algebra_identity_residual(alg, rng, 20));

    const CheckResult a = check_positive_associated_family(sp, rng, 50, tol);
    assoc.pass = assoc.pass && a.pass;
    assoc.worst_residual = std::max(assoc.worst_residual, a.worst_residual);

    structures.worst_residual =
        std::max(structures.worst_residual, hermitian_structure_residual(alg, rng, 10));
    connection.worst_residual =
        std::max(connection.worst_residual, connection_residual(alg, rng, 10));
    ricci.worst_residual =
        std::max(ricci.worst_residual, ricci_three_way_residual(alg, rng, opt.metric_draws));

    const CheckResult cp = check_critical_point(sp, rng, 30, tol);
    critical.pass = critical.pass && cp.pass;
    critical.worst_residual = std::max(critical.worst_residual, cp.worst_residual);

    if (sp.n() >= 1 && sp.n() <= sp.p()) {
      const CheckResult sec = check_sectional_bounds(sp, opt.sectional_samples, opt.seed, tol);
      sectional.pass = sectional.pass && sec.pass;
      sectional.worst_residual = std::max(sectional.worst_residual, sec.worst_residual);
    }

    oracle.worst_residual =
        std::max(oracle.worst_residual, curvature_oracle_residual(alg, rng, 10));
  }

  CheckResult einstein = check_einstein_family(grid, tol);

  for (CheckResult* c : {&brackets, &identities, &structures, &connection, &ricci, &oracle})
    c->pass = c->worst_residual < tol;
  assoc.pass = assoc.pass && assoc.worst_residual < tol;
  critical.pass = critical.pass && critical.worst_residual < tol;
  sectional.pass = sectional.pass && sectional.worst_residual < tol;

  out.push_back(brackets);
  out.push_back(identities);
  out.push_back(assoc);
  out.push_back(structures);
  out.push_back(connection);
  out.push_back(ricci);
  out.push_back(einstein);
  out.push_back(critical);
  out.push_back(sectional);
  out.push_back(oracle);
  return out;
}

// every pair (n, p) with 0 <= n <= n_max, 0 <= p <= p_max except (0, 0)
inline std::vector<SpaceParams> space_grid(int n_max, int p_max) {
  if (n_max < 0 || p_max < 0 || (n_max == 0 && p_max == 0))
    throw std::invalid_argument("space_grid: need n_max, p_max >= 0, not both zero");
  std::vector<SpaceParams> grid;
  for (int n = 0; n <= n_max; ++n)
    for (int p = 0; p <= p_max; ++p)
      if (n + p > 0) grid.emplace_back(n, p);
  return grid;
}

}  // namespace hermlab

#endif
