#pragma once

#include <optional>
#include <vector>

#include "orbitcert/helson.hpp"

namespace orbitcert {

/// The orbit system E = {Pi(gamma) phi_i} with its synthesis matrix; columns
/// in (gamma, i) order, gamma major.
struct OrbitSystem {
  const Representation* rep = nullptr;
  std::vector<Vec> generators;
  Mat synthesis;  // d x (n k)
};

OrbitSystem orbit_system(const Representation& pi, std::vector<Vec> generators);

enum class SystemKind { None, Frame, Riesz, Orthonormal };

/// Spectral frame/Riesz bounds read off the block bracket Gramian.
struct SpectralBounds {
  double lower = 0.0;
  double upper = 0.0;
  int support_rank = 0;
  SystemKind kind = SystemKind::None;
  bool tight = false;
};

const char* to_string(SystemKind kind);

/// The (n k) x (n k) Hermitian matrix whose (j, i) block is [phi_i, phi_j].
/// Its spectrum coincides with the spectrum of the Gram matrix of the orbit
/// vectors: both equal, up to reordering and transposition, the matrix of
/// correlations <Pi(gamma) phi_i, Pi(gamma') phi_j>, so the quantified
/// operator conditions for Riesz/frame sequences reduce to eigenvalue bounds
/// of this one matrix.
Mat block_bracket_gramian(const Representation& pi, const std::vector<Vec>& generators);

struct OrthonormalityReport {
  bool orthonormal = false;
  double defect = 0.0;
};

/// E orthonormal iff [phi_i, phi_j] = delta_ij I.
OrthonormalityReport orthonormality_test(const Representation& pi, const std::vector<Vec>& generators,
                                         double tol = kDefaultTol);

/// Riesz bounds: (min, max) eigenvalue of the block bracket Gramian; the
/// system is a Riesz sequence iff the lower bound stays above the rank cutoff.
SpectralBounds riesz_bounds(const Representation& pi, const std::vector<Vec>& generators,
                            double rel_cutoff = kRankCutoff);

/// Frame bounds: (smallest nonzero, largest) eigenvalue on the support.
SpectralBounds frame_bounds(const Representation& pi, const std::vector<Vec>& generators,
                            double rel_cutoff = kRankCutoff);

/// Parseval frame generator for <psi>_Gamma: S_psi^{-1}(pinv_sqrt([psi,psi])).
Vec parseval_generator(const Representation& pi, const Vec& psi, double rel_cutoff = kRankCutoff);

/// Parseval frame generators for an invariant subspace, one per principal piece.
std::vector<Vec> parseval_family(const Representation& pi, const std::vector<Vec>& span_vectors,
                                 double tol = kDefaultTol);

/// Biorthogonal dual generator S_psi^{-1}([psi,psi]^{-1}); requires the
/// bracket to be invertible (minimal orbit), else throws NotMinimal.
Vec dual_generator(const Representation& pi, const Vec& psi, double tol = 1e-8);

/// The multiplier F with T[phi] = T[psi] F and [phi,psi] = [psi,psi] F for
/// phi in <psi>_Gamma, support-reduced (minimal-norm choice). Throws
/// NotInPrincipalSpace if the relative projection residual exceeds tol.
AlgOperator principal_multiplier(const Representation& pi, const Vec& psi, const Vec& phi,
                                 double tol = kDefaultTol);

struct MembershipResult {
  bool member = false;
  double residual = 0.0;
  std::vector<AlgOperator> multipliers;  // one per generator when member
};

/// Least-squares membership test for the space generated by a finite family;
/// finite dimension makes the sum of orbit spans closed, so one residual test
/// decides both directions.
MembershipResult membership_finitely_generated(const Representation& pi,
                                               const std::vector<Vec>& generators, const Vec& phi,
                                               double tol = kDefaultTol);

struct LeftInvarianceReport {
  bool left_invariant = false;
  double commutation_defect = 0.0;  // max over gamma of ||P lam - lam P||
  AlgOperator projection;           // P_V
  std::optional<SeqVector> parseval_gen;  // p = Fourier coefficients of P_V, when invariant
  double fourier_inclusion_defect = 0.0;  // F(V) subset of q L2(R)
  double coefficient_inclusion_defect = 0.0;  // q L2(R) subset of F(V)
  double idempotency_defect = 0.0;            // ||[p,p]^2 - [p,p]||
  bool parseval_ok = false;
};

/// Structure analysis of a subspace V of l2(Gamma): left-invariance via
/// commutation of P_V, the Fourier image as q L2(R(Gamma)), and the Parseval
/// frame generated by the coefficients of q.
LeftInvarianceReport left_invariance_analysis(const GroupPtr& group, const std::vector<Vec>& span_vectors,
                                              double tol = kDefaultTol);

struct CombReport {
  AlgOperator bracket_op;       // [f,f]
  double closed_form_defect = 0.0;  // against (|a|^2+|b|^2) I + conj(a) b rho(g1 g2^{-1}) + h.c.
  RVec eigenvalues;             // descending
  int rank = 0;
  bool complete = false;
  SpectralBounds bounds;        // riesz bounds of the orbit of f
  double window_lower = 0.0;    // (|a| - |b|)^2
  double window_upper = 0.0;    // (|a| + |b|)^2
  bool within_window = false;
  bool real_coefficients = false;
  bool completeness_theorem_applies = false;  // real a != +-b always forces completeness
};

/// Analysis of the two-pronged comb f = a delta_{g1} + b delta_{g2} under the
/// left regular representation.
CombReport comb_analysis(const GroupPtr& group, int gamma1, int gamma2, Cplx a, Cplx b,
                         double rel_cutoff = kRankCutoff);

}  // namespace orbitcert
