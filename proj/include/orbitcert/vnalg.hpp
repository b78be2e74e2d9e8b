#pragma once

#include "orbitcert/group.hpp"
#include "orbitcert/linalg.hpp"

namespace orbitcert {

/// A sequence over the group, i.e. an element of l2(Gamma) in canonical ordering.
struct SeqVector {
  GroupPtr group;
  Vec coeffs;
};

/// An n x n operator on l2(Gamma). Membership in the group von Neumann algebra
/// R(Gamma) (= commutant of the left regular representation) is a checked
/// property, not a separate type; see is_in_algebra.
struct AlgOperator {
  GroupPtr group;
  Mat matrix;
};

AlgOperator operator*(const AlgOperator& a, const AlgOperator& b);
AlgOperator operator+(const AlgOperator& a, const AlgOperator& b);
AlgOperator operator-(const AlgOperator& a, const AlgOperator& b);
AlgOperator operator*(Cplx s, const AlgOperator& a);
AlgOperator adjoint(const AlgOperator& a);
AlgOperator identity_op(const GroupPtr& g);
AlgOperator zero_op(const GroupPtr& g);

/// Right regular representation: rho(gamma) delta_x = delta_{x gamma^{-1}}.
AlgOperator rho(const GroupPtr& g, int gamma);
/// Left regular representation: lam(gamma) delta_x = delta_{gamma x}.
AlgOperator lam(const GroupPtr& g, int gamma);

/// Group Fourier transform F = sum_gamma f(gamma) rho(gamma)*.
AlgOperator fourier_transform(const SeqVector& f);

/// Fourier coefficients F^(gamma) = tau(F rho(gamma)); inverse of
/// fourier_transform on R(Gamma). Throws NotInAlgebra if the commutation
/// check with the left regular representation fails.
SeqVector fourier_coefficients(const AlgOperator& f, double tol = kDefaultTol);

/// The standard trace tau(F) = <F delta_e, delta_e>. Normal, finite, faithful,
/// and tracial on R(Gamma); tau(identity) = 1.
Cplx trace_tau(const AlgOperator& f);

/// Convolution g * f (gamma) = sum_{gamma'} f(gamma') g(gamma gamma'^{-1}).
SeqVector convolve(const SeqVector& g, const SeqVector& f);

/// ||F||_p = tau(|F|^p)^(1/p) with |F| = sqrt(F*F) by functional calculus;
/// p = infinity gives the operator norm.
double lp_norm(const AlgOperator& f, double p);

/// True iff F commutes with lam(gamma) for every gamma, within tol (operator norm).
bool is_in_algebra(const AlgOperator& f, double tol = kDefaultTol);
/// Largest commutator norm max_gamma ||F lam(gamma) - lam(gamma) F||.
double algebra_defect(const AlgOperator& f);

/// Support projection s_F: the minimal orthogonal projection with
/// q F = F q = F. Eigenvalues of magnitude <= rel_cutoff * max|eig| count as zero.
/// Requires Hermitian input.
AlgOperator support_projection(const AlgOperator& f, double rel_cutoff = kRankCutoff);

enum class PsdMode { Sqrt, PinvSqrt, Pinv };

/// PSD square root and Moore-Penrose variants of a PSD Hermitian operator.
AlgOperator psd_sqrt(const AlgOperator& omega, PsdMode mode, double rel_cutoff = kRankCutoff);

/// Weighted inner product <F, G>_{2,Omega} = tau(F G* Omega); Omega must be PSD.
Cplx weighted_inner(const AlgOperator& omega, const AlgOperator& f, const AlgOperator& g);
double weighted_norm(const AlgOperator& omega, const AlgOperator& f);

/// ||F||_2 = tau(F*F)^(1/2); equals the coefficient norm by Plancherel.
double l2_norm(const AlgOperator& f);

}  // namespace orbitcert
