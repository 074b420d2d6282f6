#ifndef HERMLAB_CURVATURE_HPP
#define HERMLAB_CURVATURE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hermlab/algebra.hpp"
#include "hermlab/connection.hpp"
#include "hermlab/sampling.hpp"
#include "hermlab/structures.hpp"

namespace hermlab {

struct RicciSpectrum {
  std::vector<double> coordinate_values;  // eigenvalues of the coordinate matrix of Ric
  std::vector<double> operator_spectrum;  // eigenvalues of g^{-1} Ric
};

struct CurvatureReport {
  BilinearForm ricci;  // closed-form table
  double scalar_trace = 0.0;
  double scalar_closed_form = 0.0;
  std::vector<double> ricci_eigen_coordinate;
  std::vector<double> ricci_operator_spectrum;
  std::optional<double> einstein_constant;
};

struct SectionalReport {
  int regime = 0;  // 1, 2 or 3 by the ratio n/p against 1/9 and 9/16
  double bound_low = 0.0;
  double bound_high = 0.0;
  double observed_min = 0.0;
  double observed_max = 0.0;
  std::string argmin_bivector;
  std::string argmax_bivector;
  double samples_in_bounds = 0.0;  // fraction of random 2-planes inside the bounds
};

// Curvature of the invariant connection. The Riemann operator
//   R(X,Y) = [L(X), L(Y)] - L([X,Y]_p) - ad([X,Y]_h)
// with L(X) = D_X is the structure-constants route; the Ricci table and the
// orthonormal-frame Ricci formula are the closed-form routes. The three are
// compared against each other in the verification suite.
class Curvature {
public:
  Curvature(const Algebra& alg, const MetricParams& m)
      : alg_(&alg), m_(m), conn_(alg, m), table_(conn_.table()) {
    gram_ = conn_.gram();
    gram_inv_ = gram_.inverse();
    frame_ = orthonormal_frame(alg.space(), m);
    const int d = alg.dim_p();
    // g-weighted pairwise frame brackets, reused by the Ricci formula route
    frame_br_g_.assign(static_cast<size_t>(d * d), Eigen::VectorXd());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        frame_br_g_[static_cast<size_t>(i * d + j)] =
            gram_ * alg.bracket_pp_p(frame_[static_cast<size_t>(i)],
                                     frame_[static_cast<size_t>(j)]);
    z_vec_ = Eigen::VectorXd::Zero(d);
    for (const Eigen::VectorXd& zi : frame_) z_vec_ += conn_.u_solve(zi, zi);
  }

  const Algebra& algebra() const { return *alg_; }
  const MetricParams& metric_params() const { return m_; }
  const Connection& connection() const { return conn_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(gram_ * y);
  }

  Eigen::MatrixXd lambda_of(const Eigen::VectorXd& x) const {
    const int d = alg_->dim_p();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(d, d);
    for (int k = 0; k < d; ++k)
      if (x(k) != 0.0) L += x(k) * table_.lambda[static_cast<size_t>(k)];
    return L;
  }

  // matrix of W -> R(X,Y)W in the p-basis
  Eigen::MatrixXd riemann_operator(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    const Eigen::MatrixXd Lx = lambda_of(x);
    const Eigen::MatrixXd Ly = lambda_of(y);
    const Eigen::VectorXd br_p = alg_->bracket_pp_p(x, y);
    const Eigen::VectorXd br_h = alg_->bracket_pp_h(x, y);
    return Lx * Ly - Ly * Lx - lambda_of(br_p) - alg_->h_action_of(br_h);
  }

  Eigen::VectorXd riemann(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                          const Eigen::VectorXd& w) const {
    return riemann_operator(x, y) * w;
  }

  //   Ric(X1,X1) = 2(n + p a^2)/c^2
  //   Ric(X2,X2) = 2(n a^2 + p (a^2+c^2)^2)/c^2
  //   Ric(X1,X2) = -2a (n + p (a^2+c^2))/c^2
  //   Ric(Y1,Y1) = 2(1 + n - 1/c),  Ric(Y2,Y2) = 2(1 + p - (a^2+c^2)/c)
  // and zero on every other basis pair.
  double ricci_closed_form(int i, int j) const {
    const SpaceParams& sp = alg_->space();
    const double a = m_.a();
    const double c = m_.c();
    const double n = sp.n();
    const double p = sp.p();
    const double w = a * a + c * c;
    if (i == sp.ix_x1() && j == sp.ix_x1()) return 2.0 * (n + p * a * a) / (c * c);
    if (i == sp.ix_x2() && j == sp.ix_x2()) return 2.0 * (n * a * a + p * w * w) / (c * c);
    if ((i == sp.ix_x1() && j == sp.ix_x2()) || (i == sp.ix_x2() && j == sp.ix_x1()))
      return -2.0 * a * (n + p * w) / (c * c);
    if (i == j) {
      const BasisVector& b = alg_->basis()[static_cast<size_t>(i)];
      if (b.tag == BasisTag::Y1) return 2.0 * (1.0 + n - 1.0 / c);
      if (b.tag == BasisTag::Y2) return 2.0 * (1.0 + p - w / c);
    }
    return 0.0;
  }

  Eigen::MatrixXd ricci_closed_form_matrix() const {
    const int d = alg_->dim_p();
    Eigen::MatrixXd r(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r(i, j) = ricci_closed_form(i, j);
    return r;
  }

  // Quadratic Ricci form over the orthonormal frame {Z_i}:
  //   Ric(X,X) = -1/2 sum |[X,Z_i]_p|^2 - 1/2 sum g([X,[X,Z_i]_p]_p, Z_i)
  //              - sum g([X,[X,Z_i]_h]_p, Z_i)
  //              + 1/4 sum_{i,j} g([Z_i,Z_j]_p, X)^2 - g([Z,X]_p, X)
  // with Z = sum_i U(Z_i,Z_i) (identically zero for this family; evaluated anyway).
  double ricci_formula(const Eigen::VectorXd& x) const {
    const int d = alg_->dim_p();
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
      const Eigen::VectorXd& zi = frame_[static_cast<size_t>(i)];
      const Eigen::VectorXd bp = alg_->bracket_pp_p(x, zi);
      const Eigen::VectorXd bh = alg_->bracket_pp_h(x, zi);
      sum += -0.5 * inner(bp, bp);
      sum += -0.5 * inner(alg_->bracket_pp_p(x, bp), zi);
      // [X, [X,Z_i]_h] = -ad([X,Z_i]_h) X, lands in p by reductivity
      const Eigen::VectorXd xxh = -(alg_->h_action_of(bh) * x);
      sum -= inner(xxh, zi);
      for (int j = 0; j < d; ++j) {
        const double w = frame_br_g_[static_cast<size_t>(i * d + j)].dot(x);
        sum += 0.25 * w * w;
      }
    }
    sum -= inner(alg_->bracket_pp_p(z_vec_, x), x);
    return sum;
  }

  // polarization of the quadratic form
  double ricci_formula(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return 0.5 * (ricci_formula(x + y) - ricci_formula(x) - ricci_formula(y));
  }

  Eigen::MatrixXd ricci_formula_matrix() const {
    const int d = alg_->dim_p();
    Eigen::MatrixXd r(d, d);
    std::vector<double> diag(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(d);
      ei(i) = 1.0;
      diag[static_cast<size_t>(i)] = ricci_formula(ei);
      r(i, i) = diag[static_cast<size_t>(i)];
    }
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(i) = 1.0;
        e(j) = 1.0;
        const double v =
            0.5 * (ricci_formula(e) - diag[static_cast<size_t>(i)] - diag[static_cast<size_t>(j)]);
        r(i, j) = v;
        r(j, i) = v;
      }
    }
    return r;
  }

  // Ric(u,v) = sum_i g(R(Z_i, e_u) e_v, Z_i), the trace of the Riemann route
  Eigen::MatrixXd ricci_trace_matrix() const {
    const int d = alg_->dim_p();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d, d);
    for (int u = 0; u < d; ++u) {
      Eigen::VectorXd eu = Eigen::VectorXd::Zero(d);
      eu(u) = 1.0;
      for (int i = 0; i < d; ++i) {
        const Eigen::VectorXd& zi = frame_[static_cast<size_t>(i)];
        const Eigen::MatrixXd R = riemann_operator(zi, eu);
        r.row(u) += (gram_ * zi).transpose() * R;
      }
    }
    return r;
  }

  // scalar curvature: contraction Ric_ij g^ij of the trace route, and
  //   s = 4n(1 + n - 1/(2c)) + 4p(1 + p - (a^2+c^2)/(2c))
  std::pair<double, double> scalar_curvature() const {
    const double trace = (ricci_trace_matrix().cwiseProduct(gram_inv_)).sum();
    const SpaceParams& sp = alg_->space();
    const double a = m_.a();
    const double c = m_.c();
    const double closed = 4.0 * sp.n() * (1.0 + sp.n() - 1.0 / (2.0 * c)) +
                          4.0 * sp.p() * (1.0 + sp.p() - (a * a + c * c) / (2.0 * c));
    return {trace, closed};
  }

  // Two eigenvalue lists. coordinate_values diagonalizes the coordinate
  // matrix of Ric: x, y, z are its components on the (X1, X2) block, the two
  // block values are (x+y +- sqrt((x-y)^2 + 4z^2))/2, followed by the Y1
  // value (2n times) and the Y2 value (2p times). operator_spectrum solves
  // Ric v = r g v instead; the two lists coincide only where the coordinate
  // basis is g-orthonormal (a = 0, c = 1).
  RicciSpectrum ricci_eigenvalues() const {
    const SpaceParams& sp = alg_->space();
    const double a = m_.a();
    const double c = m_.c();
    const double w = a * a + c * c;
    const double x = 2.0 * (sp.n() + sp.p() * a * a) / (c * c);
    const double y = 2.0 * (sp.n() * a * a + sp.p() * w * w) / (c * c);
    const double z = -2.0 * a * (sp.n() + sp.p() * w) / (c * c);
    const double disc = std::sqrt((x - y) * (x - y) + 4.0 * z * z);

    RicciSpectrum out;
    out.coordinate_values.push_back(0.5 * (x + y + disc));
    out.coordinate_values.push_back(0.5 * (x + y - disc));
    for (int j = 0; j < 2 * sp.n(); ++j)
      out.coordinate_values.push_back(2.0 * (1.0 + sp.n() - 1.0 / c));
    for (int k = 0; k < 2 * sp.p(); ++k)
      out.coordinate_values.push_back(2.0 * (1.0 + sp.p() - w / c));

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(ricci_closed_form_matrix(),
                                                                 gram_);
    const Eigen::VectorXd ev = es.eigenvalues();
    out.operator_spectrum.assign(ev.data(), ev.data() + ev.size());
    return out;
  }

  // lambda with Ric = lambda g entrywise, if the metric is Einstein
  std::optional<double> einstein_check(double tol = 1e-9) const {
    const Eigen::MatrixXd ric = ricci_closed_form_matrix();
    const double lambda = ric.cwiseProduct(gram_inv_).sum() / alg_->dim_p();
    const double residual = (ric - lambda * gram_).cwiseAbs().maxCoeff();
    if (residual < tol) return lambda;
    return std::nullopt;
  }

  // K(A,B) = g(R(A,B)B, A) / (|A|^2 |B|^2 - g(A,B)^2)
  double sectional(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    const double denom = inner(a, a) * inner(b, b) - inner(a, b) * inner(a, b);
    if (denom < 1e-12)
      throw std::invalid_argument("sectional: degenerate 2-plane");
    return inner(riemann(a, b, b), a) / denom;
  }

  CurvatureReport report() const {
    CurvatureReport r;
    r.ricci = {ricci_closed_form_matrix(),
               "ricci(" + std::to_string(m_.a()) + "," + std::to_string(m_.c()) + ")"};
    const auto s = scalar_curvature();
    r.scalar_trace = s.first;
    r.scalar_closed_form = s.second;
    const RicciSpectrum spec = ricci_eigenvalues();
    r.ricci_eigen_coordinate = spec.coordinate_values;
    r.ricci_operator_spectrum = spec.operator_spectrum;
    r.einstein_constant = einstein_check();
    return r;
  }

  // Z = sum_i U(Z_i, Z_i) over the orthonormal frame (vanishes for this family)
  const Eigen::VectorXd& u_trace() const { return z_vec_; }

  const std::vector<Eigen::VectorXd>& frame() const { return frame_; }

private:
  const Algebra* alg_;
  MetricParams m_;
  Connection conn_;
  ConnectionTable table_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd gram_inv_;
  std::vector<Eigen::VectorXd> frame_;
  std::vector<Eigen::VectorXd> frame_br_g_;
  Eigen::VectorXd z_vec_;
};

namespace detail {

struct NamedBivector {
  std::string label;
  Eigen::VectorXd a;
  Eigen::VectorXd b;
};

inline std::vector<NamedBivector> named_bivectors(const SpaceParams& sp) {
  const int d = sp.p_dim();
  auto e = [d](int k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    v(k) = 1.0;
    return v;
  };
  std::vector<NamedBivector> out;
  for (int l = 1; l <= sp.n(); ++l)
    out.push_back({"Y1_" + std::to_string(2 * l - 1) + "^Y1_" + std::to_string(2 * l),
                   e(sp.ix_y1(2 * l - 1)), e(sp.ix_y1(2 * l))});
  for (int i = 1; i <= 2 * sp.n(); ++i)
    out.push_back({"sqrt(c)X1^Y1_" + std::to_string(i), e(sp.ix_x1()), e(sp.ix_y1(i))});
  for (int m = 1; m <= sp.p(); ++m)
    out.push_back({"Y2_" + std::to_string(2 * m - 1) + "^Y2_" + std::to_string(2 * m),
                   e(sp.ix_y2(2 * m - 1)), e(sp.ix_y2(2 * m))});
  out.push_back({"X1^X2", e(sp.ix_x1()), e(sp.ix_x2())});
  for (int l = 1; l <= sp.n(); ++l)
    for (int m = 1; m <= sp.p(); ++m) {
      out.push_back({"Y1_" + std::to_string(2 * l - 1) + "^Y2_" + std::to_string(2 * m - 1),
                     e(sp.ix_y1(2 * l - 1)), e(sp.ix_y2(2 * m - 1))});
      out.push_back({"Y1_" + std::to_string(2 * l) + "^Y2_" + std::to_string(2 * m),
                     e(sp.ix_y1(2 * l)), e(sp.ix_y2(2 * m))});
    }
  return out;
}

}  // namespace detail

// Sectional-curvature survey of the distinguished metric g(0, sqrt(n/p)),
// defined for 1 <= n <= p. Classifies the bound regime by n/p, evaluates K
// on the named coordinate bivectors and on seeded random 2-planes, and
// reports the extremes against the regime bounds.
inline SectionalReport sectional_extremes(const SpaceParams& sp, int samples,
                                          std::uint64_t seed) {
  if (sp.n() < 1) throw std::invalid_argument("sectional_extremes: requires n >= 1");
  if (sp.n() > sp.p()) throw std::invalid_argument("sectional_extremes: requires n <= p");
  if (samples < 0) throw std::invalid_argument("sectional_extremes: negative sample count");

  const double ratio = static_cast<double>(sp.n()) / sp.p();
  const double root_np = std::sqrt(ratio);        // sqrt(n/p)
  const double root_pn = std::sqrt(1.0 / ratio);  // sqrt(p/n)

  SectionalReport rep;
  if (ratio <= 1.0 / 9.0) {
    rep.regime = 1;
    rep.bound_low = 4.0 - 3.0 * root_pn;
    rep.bound_high = root_pn;
  } else if (ratio <= 9.0 / 16.0) {
    rep.regime = 2;
    rep.bound_low = 4.0 - 3.0 * root_pn;
    rep.bound_high = 4.0 - 3.0 * root_np;
  } else {
    rep.regime = 3;
    rep.bound_low = 0.0;
    rep.bound_high = 4.0 - 3.0 * root_np;
  }

  const MetricParams m(0.0, root_np);
  Algebra alg(sp);
  Curvature curv(alg, m);

  double named_min = std::numeric_limits<double>::infinity();
  double named_max = -std::numeric_limits<double>::infinity();
  for (const auto& biv : detail::named_bivectors(sp)) {
    const double k = curv.sectional(biv.a, biv.b);
    if (k < named_min) {
      named_min = k;
      rep.argmin_bivector = biv.label;
    }
    if (k > named_max) {
      named_max = k;
      rep.argmax_bivector = biv.label;
    }
  }

  const Eigen::MatrixXd F = frame_matrix(sp, m);
  Sampler rng(seed);
  double sample_min = std::numeric_limits<double>::infinity();
  double sample_max = -std::numeric_limits<double>::infinity();
  int in_bounds = 0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd a, b;
    // planes drawn as normal coefficients in the orthonormal frame;
    // redraw the (measure-zero) degenerate cases
    for (;;) {
      a = F * rng.normal_vector(sp.p_dim());
      b = F * rng.normal_vector(sp.p_dim());
      const double denom =
          curv.inner(a, a) * curv.inner(b, b) - curv.inner(a, b) * curv.inner(a, b);
      if (denom > 1e-8) break;
    }
    const double k = curv.sectional(a, b);
    sample_min = std::min(sample_min, k);
    sample_max = std::max(sample_max, k);
    if (k >= rep.bound_low - 1e-8 && k <= rep.bound_high + 1e-8) ++in_bounds;
  }

  rep.observed_min = std::min(named_min, samples > 0 ? sample_min : named_min);
  rep.observed_max = std::max(named_max, samples > 0 ? sample_max : named_max);
  rep.samples_in_bounds = samples > 0 ? static_cast<double>(in_bounds) / samples : 1.0;
  return rep;
}

}  // namespace hermlab

#endif
