#ifndef HERMLAB_PARAMS_HPP
#define HERMLAB_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace hermlab {

// Dimensions (n, p) of the product S^{2n+1} x S^{2p+1}, realized as the
// homogeneous space U(n+1)/U(n) x U(p+1)/U(p). n and p are nonnegative and
// not both zero.
class SpaceParams {
public:
  SpaceParams(int n, int p) : n_(n), p_(p) {
    if (n < 0 || p < 0)
      throw std::invalid_argument("SpaceParams: n and p must be nonnegative");
    if (n == 0 && p == 0)
      throw std::invalid_argument("SpaceParams: n and p cannot both be zero");
  }

  int n() const { return n_; }
  int p() const { return p_; }

  // dimension of the tangent space p = p1 + p2
  int p_dim() const { return 2 * n_ + 2 * p_ + 2; }
  // dimension of g = u(n+1) + u(p+1)
  int g_dim() const { return (n_ + 1) * (n_ + 1) + (p_ + 1) * (p_ + 1); }
  // dimension of the isotropy algebra h = u(n) + u(p)
  int h_dim() const { return g_dim() - p_dim(); }

  // Fixed enumeration of the p-basis:
  //   0 = X1, 1..2n = Y1_i, 2n+1 = X2, 2n+2..2n+2p+1 = Y2_k
  int ix_x1() const { return 0; }
  int ix_x2() const { return 2 * n_ + 1; }
  int ix_y1(int i) const {
    if (i < 1 || i > 2 * n_) throw std::out_of_range("ix_y1: label out of range");
    return i;
  }
  int ix_y2(int k) const {
    if (k < 1 || k > 2 * p_) throw std::out_of_range("ix_y2: label out of range");
    return 2 * n_ + 1 + k;
  }

  friend bool operator==(const SpaceParams& a, const SpaceParams& b) {
    return a.n_ == b.n_ && a.p_ == b.p_;
  }
  friend bool operator!=(const SpaceParams& a, const SpaceParams& b) { return !(a == b); }

private:
  int n_;
  int p_;
};

// Parameters (a, c) selecting one member of the family I(a,c) / g(a,c).
// c must be positive; a is unconstrained.
class MetricParams {
public:
  MetricParams(double a, double c) : a_(a), c_(c) {
    if (!(c > 0.0)) throw std::invalid_argument("MetricParams: c must be positive");
  }

  double a() const { return a_; }
  double c() const { return c_; }

private:
  double a_;
  double c_;
};

enum class BasisTag { X1, Y1, X2, Y2, Z1, T1, Z2, T2 };

// Symbolic label of one generator of g = u(n+1) + u(p+1).
// The p-part uses tags X1, Y1, X2, Y2; the isotropy part uses Z/T pairs
// (Z_{nu,mu} = E_{nu,mu} - E_{mu,nu} and iT_{nu,mu} = i(E_{nu,mu} + E_{mu,nu})
// with 1 <= mu <= nu, embedded in the lower-right corner of the block).
struct BasisVector {
  BasisTag tag{};
  int index = 0;  // position in the fixed enumeration of g, p-part first
  int i = 0;      // Y label, 1-based (Y1: 1..2n, Y2: 1..2p)
  int nu = 0;     // generator row indices for the isotropy part
  int mu = 0;

  bool in_p() const {
    return tag == BasisTag::X1 || tag == BasisTag::Y1 || tag == BasisTag::X2 ||
           tag == BasisTag::Y2;
  }
  int block() const {
    return (tag == BasisTag::X1 || tag == BasisTag::Y1 || tag == BasisTag::Z1 ||
            tag == BasisTag::T1)
               ? 1
               : 2;
  }

  std::string name() const {
    switch (tag) {
      case BasisTag::X1: return "X1";
      case BasisTag::X2: return "X2";
      case BasisTag::Y1: return "Y1_" + std::to_string(i);
      case BasisTag::Y2: return "Y2_" + std::to_string(i);
      case BasisTag::Z1: return "Z1(" + std::to_string(nu) + "," + std::to_string(mu) + ")";
      case BasisTag::T1: return "iT1(" + std::to_string(nu) + "," + std::to_string(mu) + ")";
      case BasisTag::Z2: return "Z2(" + std::to_string(nu) + "," + std::to_string(mu) + ")";
      case BasisTag::T2: return "iT2(" + std::to_string(nu) + "," + std::to_string(mu) + ")";
    }
    return "?";
  }
};

}  // namespace hermlab

#endif
