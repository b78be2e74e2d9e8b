#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "orbitcert/linalg.hpp"

namespace orbitcert {

/// Seeded deterministic generator for reproducible sampling. Gaussian draws
/// use an explicit Box-Muller transform so streams are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : gen_(seed) {}

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  double gaussian() {
    const double u1 = std::max(uniform(), 1e-300);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Cplx cgaussian() {
    const double re = gaussian(), im = gaussian();
    return Cplx(re, im) / std::sqrt(2.0);
  }

  Vec cvector(int d) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = cgaussian();
    return v;
  }

  RVec rvector(int d) {
    RVec v(d);
    for (int i = 0; i < d; ++i) v[i] = gaussian();
    return v;
  }

  Mat cmatrix(int rows, int cols) {
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cgaussian();
    return m;
  }

  /// Haar-distributed unitary via QR of a Gaussian matrix with phase fix.
  Mat unitary(int d) {
    Eigen::HouseholderQR<Mat> qr(cmatrix(d, d));
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
      const Cplx rii = r(i, i);
      q.col(i) *= std::abs(rii) > 0 ? rii / std::abs(rii) : Cplx(1.0);
    }
    return q;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace orbitcert
