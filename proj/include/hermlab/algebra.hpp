#ifndef HERMLAB_ALGEBRA_HPP
#define HERMLAB_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "hermlab/params.hpp"

namespace hermlab {

// Concrete realization of an element of g = u(n+1) + u(p+1) as a pair of
// skew-Hermitian blocks.
struct MatrixBlocks {
  Eigen::MatrixXcd u1;  // (n+1) x (n+1)
  Eigen::MatrixXcd u2;  // (p+1) x (p+1)
};

namespace detail {

inline Eigen::MatrixXcd unit_matrix(int dim, int r, int c, std::complex<double> v) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(r, c) = v;
  return m;
}

// Z_{nu,mu} = E_{nu,mu} - E_{mu,nu}
inline Eigen::MatrixXcd z_generator(int dim, int nu, int mu) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(nu, mu) = 1.0;
  m(mu, nu) = -1.0;
  return m;
}

// iT_{nu,mu} = i(E_{nu,mu} + E_{mu,nu}); for nu == mu this is 2i E_{nu,nu}
inline Eigen::MatrixXcd it_generator(int dim, int nu, int mu) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> im(0.0, 1.0);
  m(nu, mu) += im;
  m(mu, nu) += im;
  return m;
}

}  // namespace detail

// The matrix Lie algebra g = u(n+1) + u(p+1) with its fixed basis, the
// reductive splitting g = h + p, brackets and projections.
//
// Generators of the p-part: X^j = (1/2) iT^j_{00} = i E^j_{00},
// Y^j_{2nu-1} = Z^j_{nu,0}, Y^j_{2nu} = iT^j_{nu,0}. Generators of the
// isotropy part have zero first row and column. Elements are real
// coefficient vectors over this basis; brackets are evaluated in the matrix
// realization and converted back by projecting onto the generators (which
// are orthogonal under the Frobenius inner product).
class Algebra {
public:
  explicit Algebra(const SpaceParams& space) : space_(space) {
    build_basis_();
    build_bracket_tables_();
  }

  const SpaceParams& space() const { return space_; }
  int dim_g() const { return static_cast<int>(basis_.size()); }
  int dim_p() const { return space_.p_dim(); }
  int dim_h() const { return dim_g() - dim_p(); }

  // full basis of g, p-part first (indices 0..dim_p-1), then h-part
  const std::vector<BasisVector>& basis() const { return basis_; }
  const MatrixBlocks& generator(int k) const { return gens_[static_cast<size_t>(k)]; }

  // matrix realization of a coefficient vector over the full basis
  MatrixBlocks blocks(const Eigen::VectorXd& coeffs) const {
    require_full_(coeffs);
    MatrixBlocks out;
    out.u1 = Eigen::MatrixXcd::Zero(space_.n() + 1, space_.n() + 1);
    out.u2 = Eigen::MatrixXcd::Zero(space_.p() + 1, space_.p() + 1);
    for (int k = 0; k < dim_g(); ++k) {
      const double w = coeffs(k);
      if (w == 0.0) continue;
      out.u1 += w * gens_[static_cast<size_t>(k)].u1;
      out.u2 += w * gens_[static_cast<size_t>(k)].u2;
    }
    return out;
  }

  // coefficients of a pair of skew-Hermitian blocks over the full basis;
  // generators are Frobenius-orthogonal, so this is a diagonal Gram solve
  Eigen::VectorXd coeffs(const MatrixBlocks& m) const {
    Eigen::VectorXd out(dim_g());
    for (int k = 0; k < dim_g(); ++k) {
      double ip = 0.0;
      for (const Entry& e : entries_[static_cast<size_t>(k)]) {
        const std::complex<double> v = (e.block == 1) ? m.u1(e.row, e.col) : m.u2(e.row, e.col);
        ip += (v * std::conj(e.value)).real();
      }
      out(k) = ip / norm_sq_[static_cast<size_t>(k)];
    }
    return out;
  }

  double skew_hermitian_residual(const MatrixBlocks& m) const {
    const double r1 = (m.u1 + m.u1.adjoint()).cwiseAbs().maxCoeff();
    const double r2 = (m.u2 + m.u2.adjoint()).cwiseAbs().maxCoeff();
    return std::max(r1, r2);
  }

  // blockwise commutator [A, B] = AB - BA over full coefficient vectors
  Eigen::VectorXd bracket(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    require_full_(a);
    require_full_(b);
    const MatrixBlocks ma = blocks(a);
    const MatrixBlocks mb = blocks(b);
    MatrixBlocks mc;
    mc.u1 = ma.u1 * mb.u1 - mb.u1 * ma.u1;
    mc.u2 = ma.u2 * mb.u2 - mb.u2 * ma.u2;
    return coeffs(mc);
  }

  // reductive splitting: complementary coefficient blocks, project_p + project_h = id
  Eigen::VectorXd project_p(const Eigen::VectorXd& a) const {
    require_full_(a);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_g());
    out.head(dim_p()) = a.head(dim_p());
    return out;
  }
  Eigen::VectorXd project_h(const Eigen::VectorXd& a) const {
    require_full_(a);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_g());
    out.tail(dim_h()) = a.tail(dim_h());
    return out;
  }

  // p-coordinate helpers (length dim_p vectors over the p-basis)
  Eigen::VectorXd embed_p(const Eigen::VectorXd& v) const {
    require_p_(v);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_g());
    out.head(dim_p()) = v;
    return out;
  }
  Eigen::VectorXd take_p(const Eigen::VectorXd& full) const {
    require_full_(full);
    return full.head(dim_p());
  }
  Eigen::VectorXd take_h(const Eigen::VectorXd& full) const {
    require_full_(full);
    return full.tail(dim_h());
  }

  // bracket of two p-vectors, p-part (length dim_p) and h-part (length dim_h)
  Eigen::VectorXd bracket_pp_p(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    require_p_(u);
    require_p_(v);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_p());
    for (int k = 0; k < dim_p(); ++k)
      if (u(k) != 0.0) out += u(k) * (pb_p_[static_cast<size_t>(k)] * v);
    return out;
  }
  Eigen::VectorXd bracket_pp_h(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    require_p_(u);
    require_p_(v);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_h());
    for (int k = 0; k < dim_p(); ++k)
      if (u(k) != 0.0) out += u(k) * (pb_h_[static_cast<size_t>(k)] * v);
    return out;
  }

  // col l of p_bracket_p(k) = p-coordinates of [e_k, e_l], both in the p-basis
  const Eigen::MatrixXd& p_bracket_p(int k) const { return pb_p_[static_cast<size_t>(k)]; }
  const Eigen::MatrixXd& p_bracket_h(int k) const { return pb_h_[static_cast<size_t>(k)]; }
  // col l of h_action(m) = p-coordinates of [h_m, e_l]; lands in p by reductivity
  const Eigen::MatrixXd& h_action(int m) const { return ad_h_[static_cast<size_t>(m)]; }

  // ad of an arbitrary h-coefficient vector on p
  Eigen::MatrixXd h_action_of(const Eigen::VectorXd& hcoeffs) const {
    if (hcoeffs.size() != dim_h())
      throw std::invalid_argument("Algebra: h-coefficient vector has wrong length");
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_p(), dim_p());
    for (int m = 0; m < dim_h(); ++m)
      if (hcoeffs(m) != 0.0) out += hcoeffs(m) * ad_h_[static_cast<size_t>(m)];
    return out;
  }

private:
  void require_full_(const Eigen::VectorXd& v) const {
    if (v.size() != dim_g())
      throw std::invalid_argument("Algebra: coefficient vector has wrong dimension");
  }
  void require_p_(const Eigen::VectorXd& v) const {
    if (v.size() != dim_p())
      throw std::invalid_argument("Algebra: p-vector has wrong dimension");
  }

  struct Entry {
    int block;
    int row;
    int col;
    std::complex<double> value;
  };

  void push_gen_(BasisVector bv, Eigen::MatrixXcd mat, int block) {
    const int dn = space_.n() + 1;
    const int dp = space_.p() + 1;
    bv.index = static_cast<int>(basis_.size());
    std::vector<Entry> entries;
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c)
        if (mat(r, c) != 0.0) entries.push_back({block, r, c, mat(r, c)});
    MatrixBlocks g;
    g.u1 = (block == 1) ? std::move(mat) : Eigen::MatrixXcd::Zero(dn, dn);
    g.u2 = (block == 2) ? std::move(mat) : Eigen::MatrixXcd::Zero(dp, dp);
    norm_sq_.push_back(g.u1.squaredNorm() + g.u2.squaredNorm());
    basis_.push_back(bv);
    gens_.push_back(std::move(g));
    entries_.push_back(std::move(entries));
  }

  void build_basis_() {
    const int n = space_.n();
    const int p = space_.p();
    const std::complex<double> im(0.0, 1.0);

    // p-part, fixed enumeration
    push_gen_({BasisTag::X1}, detail::unit_matrix(n + 1, 0, 0, im), 1);
    for (int nu = 1; nu <= n; ++nu) {
      BasisVector odd{BasisTag::Y1};
      odd.i = 2 * nu - 1;
      push_gen_(odd, detail::z_generator(n + 1, nu, 0), 1);
      BasisVector even{BasisTag::Y1};
      even.i = 2 * nu;
      push_gen_(even, detail::it_generator(n + 1, nu, 0), 1);
    }
    push_gen_({BasisTag::X2}, detail::unit_matrix(p + 1, 0, 0, im), 2);
    for (int nu = 1; nu <= p; ++nu) {
      BasisVector odd{BasisTag::Y2};
      odd.i = 2 * nu - 1;
      push_gen_(odd, detail::z_generator(p + 1, nu, 0), 2);
      BasisVector even{BasisTag::Y2};
      even.i = 2 * nu;
      push_gen_(even, detail::it_generator(p + 1, nu, 0), 2);
    }

    // isotropy part: lower-right corner of each block
    for (int nu = 1; nu <= n; ++nu) {
      for (int mu = 1; mu < nu; ++mu) {
        BasisVector z{BasisTag::Z1};
        z.nu = nu;
        z.mu = mu;
        push_gen_(z, detail::z_generator(n + 1, nu, mu), 1);
        BasisVector t{BasisTag::T1};
        t.nu = nu;
        t.mu = mu;
        push_gen_(t, detail::it_generator(n + 1, nu, mu), 1);
      }
      BasisVector td{BasisTag::T1};
      td.nu = nu;
      td.mu = nu;
      push_gen_(td, detail::it_generator(n + 1, nu, nu), 1);
    }
    for (int nu = 1; nu <= p; ++nu) {
      for (int mu = 1; mu < nu; ++mu) {
        BasisVector z{BasisTag::Z2};
        z.nu = nu;
        z.mu = mu;
        push_gen_(z, detail::z_generator(p + 1, nu, mu), 2);
        BasisVector t{BasisTag::T2};
        t.nu = nu;
        t.mu = mu;
        push_gen_(t, detail::it_generator(p + 1, nu, mu), 2);
      }
      BasisVector td{BasisTag::T2};
      td.nu = nu;
      td.mu = nu;
      push_gen_(td, detail::it_generator(p + 1, nu, nu), 2);
    }
  }

  Eigen::VectorXd bracket_of_generators_(int k, int l) const {
    const MatrixBlocks& a = gens_[static_cast<size_t>(k)];
    const MatrixBlocks& b = gens_[static_cast<size_t>(l)];
    MatrixBlocks c;
    c.u1 = a.u1 * b.u1 - b.u1 * a.u1;
    c.u2 = a.u2 * b.u2 - b.u2 * a.u2;
    return coeffs(c);
  }

  void build_bracket_tables_() {
    const int d = dim_p();
    const int dh = dim_h();
    pb_p_.assign(static_cast<size_t>(d), Eigen::MatrixXd::Zero(d, d));
    pb_h_.assign(static_cast<size_t>(d), Eigen::MatrixXd::Zero(dh, d));
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        const Eigen::VectorXd c = bracket_of_generators_(k, l);
        pb_p_[static_cast<size_t>(k)].col(l) = c.head(d);
        pb_h_[static_cast<size_t>(k)].col(l) = c.tail(dh);
      }
    }
    ad_h_.assign(static_cast<size_t>(dh), Eigen::MatrixXd::Zero(d, d));
    for (int m = 0; m < dh; ++m) {
      for (int l = 0; l < d; ++l) {
        const Eigen::VectorXd c = bracket_of_generators_(d + m, l);
        ad_h_[static_cast<size_t>(m)].col(l) = c.head(d);
      }
    }
  }

  SpaceParams space_;
  std::vector<BasisVector> basis_;
  std::vector<MatrixBlocks> gens_;
  std::vector<std::vector<Entry>> entries_;
  std::vector<double> norm_sq_;
  std::vector<Eigen::MatrixXd> pb_p_;
  std::vector<Eigen::MatrixXd> pb_h_;
  std::vector<Eigen::MatrixXd> ad_h_;
};

// One element of g: a real coefficient vector over the fixed basis together
// with its matrix realization. Immutable; all operations return new values.
class AlgebraElement {
public:
  AlgebraElement(const Algebra& alg, Eigen::VectorXd coeffs)
      : alg_(&alg), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != alg_->dim_g())
      throw std::invalid_argument("AlgebraElement: coefficient vector has wrong dimension");
  }

  static AlgebraElement zero(const Algebra& alg) {
    return AlgebraElement(alg, Eigen::VectorXd::Zero(alg.dim_g()));
  }
  static AlgebraElement basis_element(const Algebra& alg, int k) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.dim_g());
    c(k) = 1.0;
    return AlgebraElement(alg, std::move(c));
  }
  // p-coordinates (length dim_p) embedded into g
  static AlgebraElement from_p(const Algebra& alg, const Eigen::VectorXd& v) {
    return AlgebraElement(alg, alg.embed_p(v));
  }

  const Algebra& algebra() const { return *alg_; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  MatrixBlocks blocks() const { return alg_->blocks(coeffs_); }
  Eigen::VectorXd p_coords() const { return alg_->take_p(coeffs_); }

  AlgebraElement bracket(const AlgebraElement& other) const {
    require_same_(other);
    return AlgebraElement(*alg_, alg_->bracket(coeffs_, other.coeffs_));
  }
  AlgebraElement project_p() const { return AlgebraElement(*alg_, alg_->project_p(coeffs_)); }
  AlgebraElement project_h() const { return AlgebraElement(*alg_, alg_->project_h(coeffs_)); }

  AlgebraElement operator+(const AlgebraElement& other) const {
    require_same_(other);
    return AlgebraElement(*alg_, coeffs_ + other.coeffs_);
  }
  AlgebraElement operator-(const AlgebraElement& other) const {
    require_same_(other);
    return AlgebraElement(*alg_, coeffs_ - other.coeffs_);
  }
  friend AlgebraElement operator*(double s, const AlgebraElement& e) {
    return AlgebraElement(*e.alg_, s * e.coeffs_);
  }

  double norm_inf() const { return coeffs_.size() ? coeffs_.cwiseAbs().maxCoeff() : 0.0; }

private:
  void require_same_(const AlgebraElement& other) const {
    if (alg_->space() != other.alg_->space())
      throw std::invalid_argument("AlgebraElement: dimension mismatch between operands");
  }

  const Algebra* alg_;
  Eigen::VectorXd coeffs_;
};

// Ordered list of labelled generators covering g, p-part first.
inline std::vector<std::pair<BasisVector, AlgebraElement>> build_basis(const Algebra& alg) {
  std::vector<std::pair<BasisVector, AlgebraElement>> out;
  out.reserve(static_cast<size_t>(alg.dim_g()));
  for (int k = 0; k < alg.dim_g(); ++k)
    out.emplace_back(alg.basis()[static_cast<size_t>(k)], AlgebraElement::basis_element(alg, k));
  return out;
}

}  // namespace hermlab

#endif
