// A short tour of the library: build the algebra for S^5 x S^7, look at one
// metric of the family, its curvature, and the maximum of the scalar
// functional.

#include <iomanip>
#include <iostream>

#include "hermlab/curvature.hpp"
#include "hermlab/optimize.hpp"

int main() {
  using namespace hermlab;

  const SpaceParams sp(2, 3);  // S^5 x S^7
  Algebra alg(sp);
  std::cout << "space: S^" << (2 * sp.n() + 1) << " x S^" << (2 * sp.p() + 1)
            << ", dim p = " << sp.p_dim() << ", dim g = " << sp.g_dim() << "\n";

  const MetricParams m(0.5, 1.25);
  const Curvature curv(alg, m);
  const auto [s_trace, s_closed] = curv.scalar_curvature();
  std::cout << std::setprecision(12);
  std::cout << "scalar curvature of g(" << m.a() << ", " << m.c() << "): trace " << s_trace
            << ", closed form " << s_closed << "\n";

  const auto cp = find_critical_point(sp.n(), sp.p(), CriticalPointMethod::ascent);
  std::cout << "maximum of s over the family: s(" << cp.a_star << ", " << cp.c_star
            << ") = " << cp.s_star << " (" << to_string(cp.kind) << ", "
            << cp.iterations << " ascent steps)\n";

  const auto sec = sectional_extremes(sp, 2000, 1);
  std::cout << "sectional curvature of g(0, sqrt(n/p)): regime " << sec.regime << ", K in ["
            << sec.bound_low << ", " << sec.bound_high << "], extremes on "
            << sec.argmin_bivector << " and " << sec.argmax_bivector << "\n";
  return 0;
}
