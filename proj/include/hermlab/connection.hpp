#ifndef HERMLAB_CONNECTION_HPP
#define HERMLAB_CONNECTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "hermlab/algebra.hpp"
#include "hermlab/structures.hpp"

namespace hermlab {

// All covariant derivatives D_{e_i} e_j in the p-basis.
// lambda[i] is the matrix of D_{e_i}; col j = coordinates of D_{e_i} e_j.
struct ConnectionTable {
  std::vector<Eigen::MatrixXd> lambda;
  SpaceParams space;
  MetricParams metric;
};

// The invariant Riemannian connection D_X Y = (1/2)[X,Y]_p + U(X,Y),
// with U the symmetric bilinear map solved from
//   2 g(U(X,Y), Z) = g([Z,X]_p, Y) + g(X, [Z,Y]_p)   for all Z in p.
class Connection {
public:
  Connection(const Algebra& alg, const MetricParams& m)
      : alg_(&alg), m_(m), gram_(associated_metric(alg.space(), m).sym) {
    solver_.compute(gram_);
    if (solver_.info() != Eigen::Success || !solver_.isPositive())
      throw std::runtime_error("Connection: metric Gram matrix is not positive definite");
  }

  const Algebra& algebra() const { return *alg_; }
  const MetricParams& metric_params() const { return m_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(gram_ * y);
  }

  // U(X,Y) from the defining identity; a linear solve against the Gram matrix
  Eigen::VectorXd u_solve(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    const int d = alg_->dim_p();
    const Eigen::VectorXd gx = gram_ * x;
    const Eigen::VectorXd gy = gram_ * y;
    Eigen::VectorXd rhs(d);
    for (int k = 0; k < d; ++k) {
      const Eigen::MatrixXd& bk = alg_->p_bracket_p(k);
      rhs(k) = (bk * x).dot(gy) + (bk * y).dot(gx);
    }
    return 0.5 * solver_.solve(rhs);
  }

  // U on basis pairs, written out:
  //   U(X1, Y1_{2v-1}) =  (2-c)/(2c) Y1_{2v}    U(X1, Y1_{2v}) = -(2-c)/(2c) Y1_{2v-1}
  //   U(X1, Y2_{2v-1}) = -(a/c)      Y2_{2v}    U(X1, Y2_{2v}) =  (a/c)      Y2_{2v-1}
  //   U(X2, Y1_{2v-1}) = -(a/c)      Y1_{2v}    U(X2, Y1_{2v}) =  (a/c)      Y1_{2v-1}
  //   U(X2, Y2_{2v-1}) =  q          Y2_{2v}    U(X2, Y2_{2v}) = -q          Y2_{2v-1}
  // with q = (a^2+c^2)/c - 1/2, and zero on every other basis pair.
  Eigen::VectorXd u_closed_form(int i, int j) const {
    const SpaceParams& sp = alg_->space();
    const int d = sp.p_dim();
    if (i < 0 || i >= d || j < 0 || j >= d)
      throw std::out_of_range("u_closed_form: basis index out of range");
    if (j == sp.ix_x1() || j == sp.ix_x2()) std::swap(i, j);  // U is symmetric

    Eigen::VectorXd out = Eigen::VectorXd::Zero(d);
    const double a = m_.a();
    const double c = m_.c();
    const BasisVector& bj = alg_->basis()[static_cast<size_t>(j)];
    if (i == sp.ix_x1()) {
      if (bj.tag == BasisTag::Y1) {
        const double q = (2.0 - c) / (2.0 * c);
        if (bj.i % 2 == 1)
          out(sp.ix_y1(bj.i + 1)) = q;
        else
          out(sp.ix_y1(bj.i - 1)) = -q;
      } else if (bj.tag == BasisTag::Y2) {
        if (bj.i % 2 == 1)
          out(sp.ix_y2(bj.i + 1)) = -a / c;
        else
          out(sp.ix_y2(bj.i - 1)) = a / c;
      }
    } else if (i == sp.ix_x2()) {
      if (bj.tag == BasisTag::Y1) {
        if (bj.i % 2 == 1)
          out(sp.ix_y1(bj.i + 1)) = -a / c;
        else
          out(sp.ix_y1(bj.i - 1)) = a / c;
      } else if (bj.tag == BasisTag::Y2) {
        const double q = (a * a + c * c) / c - 0.5;
        if (bj.i % 2 == 1)
          out(sp.ix_y2(bj.i + 1)) = q;
        else
          out(sp.ix_y2(bj.i - 1)) = -q;
      }
    }
    return out;
  }

  // D_X Y = (1/2)[X,Y]_p + U(X,Y)
  Eigen::VectorXd nabla(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return 0.5 * alg_->bracket_pp_p(x, y) + u_solve(x, y);
  }

  ConnectionTable table() const {
    const int d = alg_->dim_p();
    std::vector<Eigen::MatrixXd> lam(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      Eigen::MatrixXd L(d, d);
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(d);
      ei(i) = 1.0;
      for (int j = 0; j < d; ++j) {
        Eigen::VectorXd ej = Eigen::VectorXd::Zero(d);
        ej(j) = 1.0;
        L.col(j) = nabla(ei, ej);
      }
      lam[static_cast<size_t>(i)] = std::move(L);
    }
    return {std::move(lam), alg_->space(), m_};
  }

private:
  const Algebra* alg_;
  MetricParams m_;
  Eigen::MatrixXd gram_;
  Eigen::LDLT<Eigen::MatrixXd> solver_;
};

}  // namespace hermlab

#endif
