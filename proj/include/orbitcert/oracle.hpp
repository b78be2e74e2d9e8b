#pragma once

#include <optional>

#include "orbitcert/frames.hpp"

namespace orbitcert {

/// Brute-force Gram spectrum of an orbit system, assembled from inner products
/// of explicit vectors; the independent ground truth for every spectral
/// certificate. Deliberately shares no code with the bracket pipeline beyond
/// the eigensolver.
struct GramReport {
  RVec eigenvalues;  // descending
  double riesz_lower = 0.0;   // min eigenvalue (including zeros)
  double frame_lower = 0.0;   // min nonzero eigenvalue
  double upper = 0.0;
  int rank = 0;
};

GramReport gram_bounds(const OrbitSystem& system, double rel_cutoff = kRankCutoff);

/// Fiber values |DFT(f)(k)|^2 of a sequence on a cyclic group: the spectrum of
/// the bracket [f,f] under the left regular representation, computed through
/// plain discrete Fourier analysis. Throws NotCyclic unless the group's
/// Cayley table is Z_n in canonical order.
RVec dft_fiberization_values(const SeqVector& f);

GramReport dft_fiberization_bounds(const SeqVector& f, double rel_cutoff = kRankCutoff);

/// Direct linear-system biorthogonal dual of a single-generator orbit:
/// solves <Pi(gamma) psi, x> = delta_{gamma,e} by least squares restricted to
/// the orbit span. Returns nullopt ("Singular") when no exact solution exists.
std::optional<Vec> biorthogonal_oracle(const OrbitSystem& system, double tol = 1e-8,
                                       double rel_cutoff = kRankCutoff);

}  // namespace orbitcert
