#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermlab/sampling.hpp"
#include "hermlab/structures.hpp"

using namespace hermlab;

namespace {

Eigen::VectorXd unit(int dim, int k) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("the fixed 2-form") {
  SpaceParams sp(2, 1);
  const TwoForm w = omega(sp);
  CHECK(w.skew(sp.ix_x1(), sp.ix_x2()) == 1.0);
  CHECK(w.skew(sp.ix_x1(), sp.ix_x1()) == 0.0);
  CHECK(w.skew(sp.ix_y1(1), sp.ix_y1(2)) == 1.0);
  CHECK(w.skew(sp.ix_y2(1), sp.ix_y2(2)) == 1.0);
  // no cross terms
  CHECK(w.skew(sp.ix_y1(1), sp.ix_y2(2)) == 0.0);
  CHECK(w.skew(sp.ix_x1(), sp.ix_y1(1)) == 0.0);
  CHECK(w.antisymmetry_residual() == 0.0);
  CHECK(w.full_rank());
}

TEST_CASE("complex structure action on the basis") {
  SpaceParams sp(1, 2);
  const int d = sp.p_dim();

  // at (a,c) = (0,1): I X1 = X2
  EndomorphismField I = complex_structure(sp, MetricParams(0.0, 1.0));
  CHECK((I.mat * unit(d, sp.ix_x1()) - unit(d, sp.ix_x2())).cwiseAbs().maxCoeff() < 1e-15);

  // generic parameters: I X1 = (a/c) X1 + (1/c) X2 and I Y1_1 = Y1_2
  I = complex_structure(sp, MetricParams(2.0, 0.5));
  Eigen::VectorXd expect = 4.0 * unit(d, sp.ix_x1()) + 2.0 * unit(d, sp.ix_x2());
  CHECK((I.mat * unit(d, sp.ix_x1()) - expect).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((I.mat * unit(d, sp.ix_y1(1)) - unit(d, sp.ix_y1(2))).cwiseAbs().maxCoeff() < 1e-15);

  // I(I(X2)) = -X2
  CHECK((I.mat * (I.mat * unit(d, sp.ix_x2())) + unit(d, sp.ix_x2())).cwiseAbs().maxCoeff() <
        1e-12);

  CHECK_THROWS_AS(MetricParams(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MetricParams(0.0, -1.0), std::invalid_argument);
}

TEST_CASE("squares to minus the identity across the family") {
  SpaceParams sp(2, 2);
  Sampler rng(5);
  for (int t = 0; t < 50; ++t) {
    const MetricParams m(rng.uniform(-5.0, 5.0), rng.uniform(0.05, 10.0));
    CHECK(complex_structure(sp, m).square_plus_id_residual() < 1e-12);
  }
}

TEST_CASE("associated metric matches the entry table") {
  SpaceParams sp(1, 1);

  BilinearForm g = associated_metric(sp, MetricParams(1.0, 2.0));
  CHECK(g.sym(sp.ix_x1(), sp.ix_x1()) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.sym(sp.ix_x2(), sp.ix_x2()) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(g.sym(sp.ix_x1(), sp.ix_x2()) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(g.sym(sp.ix_y1(1), sp.ix_y1(1)) == 1.0);

  // a = 0 kills the off-diagonal X term
  g = associated_metric(sp, MetricParams(0.0, 3.0));
  CHECK(g.sym(sp.ix_x1(), sp.ix_x2()) == 0.0);

  Sampler rng(19);
  for (int t = 0; t < 25; ++t) {
    const MetricParams m(rng.uniform(-4.0, 4.0), rng.uniform(0.1, 8.0));
    const BilinearForm via_omega = associated_metric(sp, m);
    CHECK(via_omega.symmetry_residual() < 1e-12);
    CHECK(via_omega.is_positive_definite());
    CHECK((via_omega.sym - metric_table(sp, m).sym).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("the family is positive associated; a flipped Y-pair is not") {
  SpaceParams sp(2, 1);
  AssociationReport rep = positivity_and_compatibility_check(sp, MetricParams(0.0, 1.0));
  CHECK(rep.compatible);
  CHECK(rep.positive);

  rep = positivity_and_compatibility_check(sp, MetricParams(3.0, 0.1));
  CHECK(rep.compatible);
  CHECK(rep.positive);

  // fault injection: I' Y1_1 = -Y1_2 makes omega(Y1_1, I' Y1_1) = -1
  Eigen::MatrixXd bad = complex_structure(sp, MetricParams(0.0, 1.0)).mat;
  bad.col(sp.ix_y1(1)) *= -1.0;
  bad.col(sp.ix_y1(2)) *= -1.0;
  const AssociationReport faulty = check_positive_associated(omega(sp), bad);
  CHECK_FALSE(faulty.positive);
  CHECK(faulty.min_eigenvalue < -0.5);
}

TEST_CASE("metric is Hermitian for its own structure") {
  SpaceParams sp(2, 2);
  Sampler rng(29);
  for (int t = 0; t < 20; ++t) {
    const MetricParams m(rng.uniform(-3.0, 3.0), rng.uniform(0.1, 5.0));
    const Eigen::MatrixXd g = associated_metric(sp, m).sym;
    const Eigen::MatrixXd I = complex_structure(sp, m).mat;
    CHECK((I.transpose() * g * I - g).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("orthonormal frame") {
  SpaceParams sp(1, 2);
  const int d = sp.p_dim();

  // at (a,c) = (0,1) the frame is the coordinate basis itself
  auto frame = orthonormal_frame(sp, MetricParams(0.0, 1.0));
  for (int k = 0; k < d; ++k)
    CHECK((frame[static_cast<size_t>(k)] - unit(d, k)).cwiseAbs().maxCoeff() < 1e-15);

  // the X-block member at (a,c) = (1,4) is X1/2 + X2/2, unit length
  const MetricParams m14(1.0, 4.0);
  frame = orthonormal_frame(sp, m14);
  const Eigen::VectorXd z = frame[static_cast<size_t>(sp.ix_x2())];
  CHECK((z - 0.5 * unit(d, sp.ix_x1()) - 0.5 * unit(d, sp.ix_x2())).cwiseAbs().maxCoeff() <
        1e-15);
  const Eigen::MatrixXd g14 = associated_metric(sp, m14).sym;
  CHECK(z.dot(g14 * z) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(frame[0].dot(g14 * z) == doctest::Approx(0.0).epsilon(1e-12));

  Sampler rng(31);
  for (int t = 0; t < 25; ++t) {
    const MetricParams m(rng.uniform(-4.0, 4.0), rng.uniform(0.1, 8.0));
    const Eigen::MatrixXd F = frame_matrix(sp, m);
    const Eigen::MatrixXd gram = F.transpose() * associated_metric(sp, m).sym * F;
    CHECK((gram - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("projected Nijenhuis expression vanishes") {
  SpaceParams sp(2, 1);
  Algebra alg(sp);
  const int d = sp.p_dim();
  Sampler rng(37);

  // N(A, A) = 0 by antisymmetry
  const MetricParams m0(0.7, 1.3);
  const Eigen::VectorXd v = rng.normal_vector(d);
  CHECK(nijenhuis_p(alg, m0, v, v).cwiseAbs().maxCoeff() < 1e-12);

  // the two expansions that cancel term by term
  CHECK(nijenhuis_p(alg, m0, unit(d, sp.ix_y1(1)), unit(d, sp.ix_y1(2)))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(nijenhuis_p(alg, m0, unit(d, sp.ix_x1()), unit(d, sp.ix_y1(1)))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  for (int t = 0; t < 10; ++t) {
    const MetricParams m(rng.uniform(-3.0, 3.0), rng.uniform(0.1, 5.0));
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        CHECK(nijenhuis_p(alg, m, unit(d, i), unit(d, j)).cwiseAbs().maxCoeff() < 1e-10);
  }
}
