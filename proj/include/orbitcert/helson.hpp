#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orbitcert/repr.hpp"

namespace orbitcert {

/// A square-integrable field of R(Gamma)-valued fibers over a finite weighted
/// index set: the target of every Helson map built here.
struct HelsonFiber {
  std::string label;
  double weight = 1.0;
  AlgOperator value;
};

struct HelsonImage {
  std::vector<HelsonFiber> fibers;

  /// sqrt(sum_x weight(x) ||value(x)||_2^2).
  double norm() const;
};

/// Fiberwise right action (Psi F)(x) = Psi(x) F.
HelsonImage apply_right(const HelsonImage& image, const Mat& f);
HelsonImage image_difference(const HelsonImage& a, const HelsonImage& b);
/// Bracket recovery integral sum_x weight(x) T[psi](x)* T[phi](x).
Mat image_bracket(const HelsonImage& t_phi, const HelsonImage& t_psi);

using HelsonMapFn = std::function<HelsonImage(const Vec&)>;

/// Orthogonal decomposition of an invariant subspace into principal pieces:
/// generators psi_i with pairwise orthogonal orbit spans summing to the input
/// space, produced greedily over an orthonormal basis in caller order.
struct PrincipalDecomposition {
  std::vector<Vec> generators;
  std::vector<Mat> orbit_bases;  // orthonormal basis of <psi_i>_Gamma, d x r_i
  std::vector<int> consumed;     // index of the input basis vector that produced psi_i

  int total_dim() const;
};

/// The isometry S_psi on coefficient data:
/// S_psi[sum f(gamma) Pi(gamma) psi] = s_{[psi,psi]} sum f(gamma) rho(gamma)*.
AlgOperator s_psi_forward(const Representation& pi, const Vec& psi, const SeqVector& f);

/// S_psi applied to a vector of the principal space <psi>_Gamma, computed as
/// pinv([psi,psi]) [phi,psi]; agrees with s_psi_forward on synthesized vectors.
AlgOperator s_psi_apply(const Representation& pi, const Vec& psi, const Vec& phi,
                        double rel_cutoff = kRankCutoff);

/// Inverse isometry: F -> sum_gamma F^(gamma) Pi(gamma) psi, after reducing F
/// to s_{[psi,psi]} F. Satisfies s_psi_forward(s_psi_inverse(F)) = s F.
Vec s_psi_inverse(const Representation& pi, const Vec& psi, const AlgOperator& f,
                  double rel_cutoff = kRankCutoff);

/// Checks Pi-invariance of span(v) and runs the greedy generator construction.
PrincipalDecomposition decompose_invariant(const Representation& pi, const std::vector<Vec>& span_vectors,
                                           double tol = kDefaultTol);

/// The global Helson map attached to a decomposition: one fiber per generator
/// with unit weight and value [psi_i,psi_i]^{1/2} S_{psi_i}[P_i phi].
class HelsonMap {
 public:
  HelsonMap(const Representation& pi, PrincipalDecomposition decomposition,
            double rel_cutoff = kRankCutoff);

  HelsonImage operator()(const Vec& phi) const;
  const PrincipalDecomposition& decomposition() const { return dec_; }

 private:
  const Representation* pi_;
  PrincipalDecomposition dec_;
  std::vector<Mat> sqrt_brackets_;  // [psi_i, psi_i]^{1/2}
  std::vector<Mat> pinv_brackets_;  // pinv([psi_i, psi_i])
  std::vector<Mat> projections_;    // onto <psi_i>_Gamma
};

HelsonMap build_helson_map(const Representation& pi, PrincipalDecomposition decomposition,
                           double rel_cutoff = kRankCutoff);

/// The single-fiber Helson map of the left regular representation: the group
/// Fourier transform itself.
HelsonMapFn fourier_helson_map(const GroupPtr& group);

/// Max defects of the Helson-map axioms over seeded random vectors:
/// isometry, intertwining T[Pi(gamma) phi] = T[phi] rho(gamma)*, and bracket
/// recovery against the representation's bracket.
struct HelsonCheckReport {
  double isometry_defect = 0.0;
  double intertwining_defect = 0.0;
  double bracket_defect = 0.0;
  int samples = 0;

  double max_defect() const;
  bool pass(double tol) const { return max_defect() <= tol; }
};

HelsonCheckReport verify_helson_axioms(const HelsonMapFn& t, const Representation& pi, int samples,
                                       double tol = kDefaultTol, uint64_t seed = 0);

/// A transversal whose translates partition the point set of a free action.
struct TilingSet {
  std::vector<int> points;  // smallest index per orbit, ascending
};

/// Orbit transversal of a free action; throws NotFree if any non-identity
/// element fixes a point.
TilingSet find_tiling_set(const GroupAction& action);

/// The Zak transform of a vector in measure-flattened coordinates: one fiber
/// per x in C with weight mu(x) and value
/// (1/sqrt(mu(x))) sum_gamma u(sigma_{gamma^{-1}}(x)) rho(gamma).
HelsonImage zak_transform(const GroupAction& action, const TilingSet& c, const Vec& phi);

/// Explicit inversion: recovers the vector from its Zak fibers.
Vec zak_inverse(const GroupAction& action, const TilingSet& c, const HelsonImage& z);

HelsonMapFn zak_helson_map(const GroupAction& action, const TilingSet& c);

}  // namespace orbitcert
