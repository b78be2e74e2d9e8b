#include "orbitcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orbitcert {

int SpectralDecomposition::rank() const {
  int r = 0;
  for (int i = 0; i < eigenvalues.size(); ++i)
    if (std::abs(eigenvalues[i]) > cutoff) ++r;
  return r;
}

Mat SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  RVec d(eigenvalues.size());
  for (int i = 0; i < eigenvalues.size(); ++i) d[i] = f(eigenvalues[i]);
  return eigenvectors * d.asDiagonal() * eigenvectors.adjoint();
}

Mat SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eigh(const Mat& hermitian, double rel_cutoff) {
  const Mat sym = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);

  const int n = static_cast<int>(sym.rows());
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    // Eigen returns ascending order.
    const int src = n - 1 - i;
    out.eigenvalues[i] = solver.eigenvalues()[src];
    Vec v = solver.eigenvectors().col(src);
    for (int k = 0; k < n; ++k) {
      if (std::abs(v[k]) > 1e-12) {
        v *= std::conj(v[k]) / std::abs(v[k]);
        break;
      }
    }
    out.eigenvectors.col(i) = v;
  }
  const double scale = n > 0 ? std::max(std::abs(out.eigenvalues[0]), std::abs(out.eigenvalues[n - 1])) : 0.0;
  out.cutoff = rel_cutoff * scale;
  return out;
}

double opnorm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

double hermiticity_defect(const Mat& a) { return opnorm(a - a.adjoint()); }

Mat orthonormal_columns(const Mat& a, double rel_cutoff) {
  if (a.cols() == 0 || a.rows() == 0) return Mat::Zero(a.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_cutoff * (sv.size() > 0 ? sv(0) : 0.0);
  int r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Mat gram_schmidt(const Mat& a, double rel_tol) {
  Mat basis(a.rows(), a.cols());
  int kept = 0;
  for (int j = 0; j < a.cols(); ++j) {
    Vec v = a.col(j);
    const double orig = v.norm();
    if (orig == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)  // one re-orthogonalization pass for stability
      for (int i = 0; i < kept; ++i) v -= basis.col(i).dot(v) * basis.col(i);
    if (v.norm() <= rel_tol * orig) continue;
    basis.col(kept++) = v / v.norm();
  }
  return basis.leftCols(kept);
}

Vec least_squares(const Mat& a, const Vec& b, double rel_cutoff) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_cutoff * (sv.size() > 0 ? sv(0) : 0.0);
  Vec c = svd.matrixU().adjoint() * b;
  for (int i = 0; i < sv.size(); ++i) c[i] = sv(i) > cutoff ? c[i] / sv(i) : Cplx(0.0);
  return svd.matrixV() * c;
}

}  // namespace orbitcert
