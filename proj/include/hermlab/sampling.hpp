#ifndef HERMLAB_SAMPLING_HPP
#define HERMLAB_SAMPLING_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace hermlab {

// Seeded draws with pinned arithmetic (Box-Muller over mt19937_64), so the
// same seed gives the same stream on every platform and every run.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    // 53-bit mantissa draw in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Eigen::VectorXd normal_vector(int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = normal();
    return v;
  }

private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hermlab

#endif
