#include "orbitcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orbitcert {

GramReport gram_bounds(const OrbitSystem& system, double rel_cutoff) {
  const int cols = static_cast<int>(system.synthesis.cols());
  Mat gram(cols, cols);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) gram(i, j) = system.synthesis.col(i).dot(system.synthesis.col(j));

  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (gram + gram.adjoint()));
  GramReport rep;
  rep.eigenvalues = solver.eigenvalues().reverse();
  rep.upper = rep.eigenvalues.size() ? std::max(0.0, rep.eigenvalues[0]) : 0.0;
  rep.riesz_lower = rep.eigenvalues.size() ? rep.eigenvalues[rep.eigenvalues.size() - 1] : 0.0;
  const double cutoff = rel_cutoff * rep.upper;
  rep.frame_lower = 0.0;
  for (int i = static_cast<int>(rep.eigenvalues.size()) - 1; i >= 0; --i) {
    if (rep.eigenvalues[i] > cutoff) {
      rep.frame_lower = rep.eigenvalues[i];
      break;
    }
  }
  rep.rank = 0;
  for (int i = 0; i < rep.eigenvalues.size(); ++i)
    if (std::abs(rep.eigenvalues[i]) > cutoff) ++rep.rank;
  return rep;
}

RVec dft_fiberization_values(const SeqVector& f) {
  const auto& g = *f.group;
  const int n = g.order();
  // Canonical Z_n: cayley[i][j] = (i+j) mod n.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) != (i + j) % n) throw NotCyclic();
  if (f.coeffs.size() != n) throw DimensionMismatch("sequence vs group order");

  RVec values(n);
  for (int k = 0; k < n; ++k) {
    Cplx acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += f.coeffs[j] * std::exp(Cplx(0.0, -2.0 * std::numbers::pi * j * k / n));
    values[k] = std::norm(acc);
  }
  std::sort(values.data(), values.data() + n, std::greater<double>());
  return values;
}

GramReport dft_fiberization_bounds(const SeqVector& f, double rel_cutoff) {
  GramReport rep;
  rep.eigenvalues = dft_fiberization_values(f);
  const int n = static_cast<int>(rep.eigenvalues.size());
  rep.upper = n ? rep.eigenvalues[0] : 0.0;
  rep.riesz_lower = n ? rep.eigenvalues[n - 1] : 0.0;
  const double cutoff = rel_cutoff * rep.upper;
  rep.frame_lower = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    if (rep.eigenvalues[i] > cutoff) {
      rep.frame_lower = rep.eigenvalues[i];
      break;
    }
  }
  rep.rank = 0;
  for (int i = 0; i < n; ++i)
    if (rep.eigenvalues[i] > cutoff) ++rep.rank;
  return rep;
}

std::optional<Vec> biorthogonal_oracle(const OrbitSystem& system, double tol, double rel_cutoff) {
  if (system.generators.size() != 1) throw InputError("biorthogonal oracle needs a single generator");
  const auto& pi = *system.rep;
  const int n = pi.group()->order();
  // Rows <. , Pi(gamma) psi>: solving M x = delta_e enforces
  // <Pi(gamma) psi, x> = delta_{gamma,e}.
  Mat m = system.synthesis.adjoint();
  Vec target = Vec::Zero(n);
  target[pi.group()->identity()] = 1.0;
  const Vec x = least_squares(m, target, rel_cutoff);
  if ((m * x - target).norm() > tol) return std::nullopt;
  return x;
}

}  // namespace orbitcert
