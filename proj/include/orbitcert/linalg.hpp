#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace orbitcert {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Absolute tolerance for scalar comparisons unless a caller overrides.
inline constexpr double kDefaultTol = 1e-9;
/// Relative cutoff for rank and support decisions, in units of the largest
/// eigenvalue/singular value magnitude.
inline constexpr double kRankCutoff = 1e-10;

/// Inner product in the convention used throughout: linear in x, conjugate-linear in y.
inline Cplx hinner(const Vec& x, const Vec& y) { return y.dot(x); }

/// Eigendecomposition of a Hermitian matrix with deterministic ordering:
/// eigenvalues descending, each eigenvector's first nonzero component made
/// real positive. `cutoff` is the absolute threshold used for rank decisions.
struct SpectralDecomposition {
  RVec eigenvalues;  // descending
  Mat eigenvectors;  // columns, unitary
  double cutoff = 0.0;

  int rank() const;
  /// U f(diag) U* with f applied to each eigenvalue.
  Mat apply(const std::function<double(double)>& f) const;
  /// Reconstruction U diag U*.
  Mat reconstruct() const;
};

SpectralDecomposition eigh(const Mat& hermitian, double rel_cutoff = kRankCutoff);

/// Largest singular value.
double opnorm(const Mat& a);

double hermiticity_defect(const Mat& a);

/// Orthonormal basis of the column space, via SVD at the relative cutoff.
Mat orthonormal_columns(const Mat& a, double rel_cutoff = kRankCutoff);

/// Order-preserving Gram-Schmidt; columns whose residual drops below
/// rel_tol times their original norm are dropped.
Mat gram_schmidt(const Mat& a, double rel_tol = kRankCutoff);

/// Minimal-norm least-squares solution via SVD at the shared cutoff.
Vec least_squares(const Mat& a, const Vec& b, double rel_cutoff = kRankCutoff);

}  // namespace orbitcert
