#pragma once

#include <cstdint>
#include <vector>

#include "orbitcert/vnalg.hpp"

namespace orbitcert {

/// A unitary representation of a finite group on complex d-space, validated at
/// construction (unitarity, homomorphism law, identity).
class Representation {
 public:
  Representation(GroupPtr group, std::vector<Mat> matrices, double tol = kDefaultTol);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const Mat& matrix(int gamma) const { return matrices_[gamma]; }
  Vec apply(int gamma, const Vec& v) const { return matrices_[gamma] * v; }

  double unitarity_defect() const { return unitarity_defect_; }
  double homomorphism_defect() const { return homomorphism_defect_; }

 private:
  GroupPtr group_;
  int dim_;
  std::vector<Mat> matrices_;
  double unitarity_defect_ = 0.0;
  double homomorphism_defect_ = 0.0;
};

Representation make_representation(GroupPtr group, std::vector<Mat> matrices, double tol = kDefaultTol);
Representation left_regular(GroupPtr group);
Representation right_regular(GroupPtr group);
Representation trivial_representation(GroupPtr group, int dim = 1);

/// A finite measurable action: permutations sigma_gamma of a point set of size
/// m, with positive Jacobian weights J(gamma, x) satisfying the cocycle law
/// J(g1 g2, x) = J(g1, sigma_{g2} x) J(g2, x). The underlying weighted counting
/// measure is derived from the Jacobian (per-orbit normalization: weight 1 at
/// the smallest point index of each orbit).
struct GroupAction {
  GroupPtr group;
  int set_size = 0;
  std::vector<std::vector<int>> perms;  // perms[gamma][x] = sigma_gamma(x)
  RMat jacobian;                        // jacobian(gamma, x) = J(gamma, x)
  RVec measure;                         // derived weights mu(x)

  int sigma(int gamma, int x) const { return perms[gamma][x]; }
};

GroupAction make_group_action(GroupPtr group, std::vector<std::vector<int>> perms, RMat jacobian,
                              double tol = kDefaultTol);
/// Convenience: unit Jacobian.
GroupAction make_group_action(GroupPtr group, std::vector<std::vector<int>> perms);

/// The unitary representation attached to an action. Vectors are kept in
/// measure-flattened coordinates (componentwise multiplied by sqrt(mu)), where
/// every inner product is the standard one and the representation matrix is a
/// plain permutation; the Jacobian factor of the abstract formula
/// (Pi(gamma) phi)(x) = J(gamma^{-1}, x)^{1/2} phi(sigma_{gamma^{-1}}(x))
/// is exactly what this change of coordinates absorbs.
Representation action_representation(const GroupAction& action);

/// The bracket of two vectors: the operator in R(Gamma) whose Fourier
/// coefficients are the correlation sequence gamma -> <phi, Pi(gamma) psi>, so
/// that <phi, Pi(gamma) psi> = tau([phi, psi] rho(gamma)) for all gamma.
AlgOperator bracket(const Representation& pi, const Vec& phi, const Vec& psi);

/// Max defects of the bracket axioms over seeded random samples:
/// I adjoint symmetry, II equivariance on both sides, III positivity and the
/// trace-norm identity ||[psi,psi]||_1 = ||psi||^2.
struct BracketPropertyReport {
  double adjoint_defect = 0.0;
  double equivariance_defect = 0.0;
  double psd_defect = 0.0;
  double trace_defect = 0.0;
  int samples = 0;

  double max_defect() const;
  bool pass(double tol) const { return max_defect() <= tol; }
};

BracketPropertyReport verify_bracket_properties(const Representation& pi, int sample_count,
                                                double tol = kDefaultTol, uint64_t seed = 0);

}  // namespace orbitcert
