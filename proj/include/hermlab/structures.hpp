#ifndef HERMLAB_STRUCTURES_HPP
#define HERMLAB_STRUCTURES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hermlab/algebra.hpp"
#include "hermlab/params.hpp"

namespace hermlab {

// Invariant 2-form over the p-basis.
struct TwoForm {
  Eigen::MatrixXd skew;

  double antisymmetry_residual() const { return (skew + skew.transpose()).cwiseAbs().maxCoeff(); }
  bool full_rank(double tol = 1e-12) const {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(skew);
    lu.setThreshold(tol);
    return lu.rank() == skew.rows();
  }
};

// Symmetric bilinear form over the p-basis, tagged with where it came from.
struct BilinearForm {
  Eigen::MatrixXd sym;
  std::string provenance;

  double symmetry_residual() const { return (sym - sym.transpose()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sym + sym.transpose()));
    return es.eigenvalues().minCoeff();
  }
  bool is_positive_definite(double tol = 1e-12) const { return min_eigenvalue() > tol; }
};

// Field of endomorphisms of p, as a matrix in the p-basis (columns = images).
struct EndomorphismField {
  Eigen::MatrixXd mat;

  double square_plus_id_residual() const {
    const Eigen::MatrixXd r =
        mat * mat + Eigen::MatrixXd::Identity(mat.rows(), mat.cols());
    return r.cwiseAbs().maxCoeff();
  }
};

// omega = X1^X2 + sum Y1_{2v-1}^Y1_{2v} + sum Y2_{2v-1}^Y2_{2v}
inline TwoForm omega(const SpaceParams& sp) {
  const int d = sp.p_dim();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
  w(sp.ix_x1(), sp.ix_x2()) = 1.0;
  w(sp.ix_x2(), sp.ix_x1()) = -1.0;
  for (int nu = 1; nu <= sp.n(); ++nu) {
    w(sp.ix_y1(2 * nu - 1), sp.ix_y1(2 * nu)) = 1.0;
    w(sp.ix_y1(2 * nu), sp.ix_y1(2 * nu - 1)) = -1.0;
  }
  for (int nu = 1; nu <= sp.p(); ++nu) {
    w(sp.ix_y2(2 * nu - 1), sp.ix_y2(2 * nu)) = 1.0;
    w(sp.ix_y2(2 * nu), sp.ix_y2(2 * nu - 1)) = -1.0;
  }
  return {w};
}

// The invariant complex structure I(a,c):
//   I X1 = (a/c) X1 + (1/c) X2
//   I X2 = -((a^2+c^2)/c) X1 - (a/c) X2
//   I Y_{2v-1} = Y_{2v},  I Y_{2v} = -Y_{2v-1}   (forced by I^2 = -Id)
inline EndomorphismField complex_structure(const SpaceParams& sp, const MetricParams& m) {
  const int d = sp.p_dim();
  const double a = m.a();
  const double c = m.c();
  Eigen::MatrixXd I = Eigen::MatrixXd::Zero(d, d);
  I(sp.ix_x1(), sp.ix_x1()) = a / c;
  I(sp.ix_x2(), sp.ix_x1()) = 1.0 / c;
  I(sp.ix_x1(), sp.ix_x2()) = -(a * a + c * c) / c;
  I(sp.ix_x2(), sp.ix_x2()) = -a / c;
  for (int nu = 1; nu <= sp.n(); ++nu) {
    I(sp.ix_y1(2 * nu), sp.ix_y1(2 * nu - 1)) = 1.0;
    I(sp.ix_y1(2 * nu - 1), sp.ix_y1(2 * nu)) = -1.0;
  }
  for (int nu = 1; nu <= sp.p(); ++nu) {
    I(sp.ix_y2(2 * nu), sp.ix_y2(2 * nu - 1)) = 1.0;
    I(sp.ix_y2(2 * nu - 1), sp.ix_y2(2 * nu)) = -1.0;
  }
  return {I};
}

// g(a,c)(X,Y) = omega(X, I(a,c) Y)
inline BilinearForm associated_metric(const SpaceParams& sp, const MetricParams& m) {
  const Eigen::MatrixXd g = omega(sp).skew * complex_structure(sp, m).mat;
  return {g, "g(" + std::to_string(m.a()) + "," + std::to_string(m.c()) + ")"};
}

// The same metric written out entry by entry:
//   g(X1,X1) = 1/c, g(X2,X2) = (a^2+c^2)/c, g(X1,X2) = -a/c, g(Y,Y) = 1
inline BilinearForm metric_table(const SpaceParams& sp, const MetricParams& m) {
  const int d = sp.p_dim();
  const double a = m.a();
  const double c = m.c();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(d, d);
  g(sp.ix_x1(), sp.ix_x1()) = 1.0 / c;
  g(sp.ix_x2(), sp.ix_x2()) = (a * a + c * c) / c;
  g(sp.ix_x1(), sp.ix_x2()) = -a / c;
  g(sp.ix_x2(), sp.ix_x1()) = -a / c;
  return {g, "table"};
}

struct AssociationReport {
  bool compatible = false;
  bool positive = false;
  double compatibility_residual = 0.0;  // max |omega(JX,JY) - omega(X,Y)|
  double min_eigenvalue = 0.0;          // smallest eigenvalue of omega(., J.)
};

// Checks whether an endomorphism J is positive associated with omega:
// omega(JX,JY) = omega(X,Y) and the form omega(X,JY) is positive definite.
inline AssociationReport check_positive_associated(const TwoForm& w,
                                                   const Eigen::MatrixXd& J,
                                                   double compat_tol = 1e-10,
                                                   double pos_tol = 1e-12) {
  AssociationReport r;
  r.compatibility_residual = (J.transpose() * w.skew * J - w.skew).cwiseAbs().maxCoeff();
  r.compatible = r.compatibility_residual < compat_tol;
  const Eigen::MatrixXd g = w.skew * J;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.positive = r.min_eigenvalue > pos_tol;
  return r;
}

inline AssociationReport positivity_and_compatibility_check(const SpaceParams& sp,
                                                            const MetricParams& m) {
  return check_positive_associated(omega(sp), complex_structure(sp, m).mat);
}

// g(a,c)-orthonormal frame of p:
//   Z_0 = sqrt(c) X1, Z_i = Y1_i, Z_{2n+1} = (a/sqrt(c)) X1 + (1/sqrt(c)) X2,
//   Z_{2n+1+i} = Y2_i
inline std::vector<Eigen::VectorXd> orthonormal_frame(const SpaceParams& sp,
                                                      const MetricParams& m) {
  const int d = sp.p_dim();
  const double sc = std::sqrt(m.c());
  std::vector<Eigen::VectorXd> frame;
  frame.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
    if (k == sp.ix_x1()) {
      z(sp.ix_x1()) = sc;
    } else if (k == sp.ix_x2()) {
      z(sp.ix_x1()) = m.a() / sc;
      z(sp.ix_x2()) = 1.0 / sc;
    } else {
      z(k) = 1.0;
    }
    frame.push_back(std::move(z));
  }
  return frame;
}

// frame as a matrix, column i = Z_i
inline Eigen::MatrixXd frame_matrix(const SpaceParams& sp, const MetricParams& m) {
  const int d = sp.p_dim();
  Eigen::MatrixXd F(d, d);
  const auto frame = orthonormal_frame(sp, m);
  for (int k = 0; k < d; ++k) F.col(k) = frame[static_cast<size_t>(k)];
  return F;
}

// Projected Nijenhuis expression on p:
//   N(A,B) = [IA,IB]_p - [A,B]_p - I[IA,B]_p - I[A,IB]_p
// Vanishes identically for the structures I(a,c).
inline Eigen::VectorXd nijenhuis_p(const Algebra& alg, const MetricParams& m,
                                   const Eigen::VectorXd& A, const Eigen::VectorXd& B) {
  const Eigen::MatrixXd I = complex_structure(alg.space(), m).mat;
  const Eigen::VectorXd IA = I * A;
  const Eigen::VectorXd IB = I * B;
  return alg.bracket_pp_p(IA, IB) - alg.bracket_pp_p(A, B) -
         I * alg.bracket_pp_p(IA, B) - I * alg.bracket_pp_p(A, IB);
}

}  // namespace hermlab

#endif
