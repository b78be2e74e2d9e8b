#include "orbitcert/frames.hpp"

#include <algorithm>
#include <cmath>

namespace orbitcert {

OrbitSystem orbit_system(const Representation& pi, std::vector<Vec> generators) {
  if (generators.empty()) throw InputError("no generators");
  const int n = pi.group()->order(), k = static_cast<int>(generators.size());
  for (const auto& g : generators) {
    if (g.size() != pi.dim()) throw DimensionMismatch("generator vs representation");
    if (g.norm() == 0.0) throw ZeroGenerator();
  }
  OrbitSystem sys{&pi, std::move(generators), Mat(pi.dim(), n * k)};
  for (int gamma = 0; gamma < n; ++gamma)
    for (int i = 0; i < k; ++i) sys.synthesis.col(gamma * k + i) = pi.apply(gamma, sys.generators[i]);
  return sys;
}

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::None: return "none";
    case SystemKind::Frame: return "frame";
    case SystemKind::Riesz: return "riesz";
    case SystemKind::Orthonormal: return "orthonormal";
  }
  return "unknown";
}

Mat block_bracket_gramian(const Representation& pi, const std::vector<Vec>& generators) {
  const int n = pi.group()->order(), k = static_cast<int>(generators.size());
  Mat big(n * k, n * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      big.block(j * n, i * n, n, n) = bracket(pi, generators[i], generators[j]).matrix;
  return big;
}

OrthonormalityReport orthonormality_test(const Representation& pi, const std::vector<Vec>& generators,
                                         double tol) {
  const int n = pi.group()->order(), k = static_cast<int>(generators.size());
  const Mat id = Mat::Identity(n, n);
  OrthonormalityReport rep;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Mat b = bracket(pi, generators[i], generators[j]).matrix;
      rep.defect = std::max(rep.defect, opnorm(i == j ? Mat(b - id) : b));
    }
  rep.orthonormal = rep.defect <= tol;
  return rep;
}

namespace {

SpectralBounds bounds_from_spectrum(const SpectralDecomposition& dec, bool riesz_mode, int full_rank) {
  SpectralBounds out;
  const int m = static_cast<int>(dec.eigenvalues.size());
  out.support_rank = dec.rank();
  out.upper = m > 0 ? std::max(0.0, dec.eigenvalues[0]) : 0.0;
  if (riesz_mode) {
    out.lower = m > 0 ? dec.eigenvalues[m - 1] : 0.0;
    if (out.lower > dec.cutoff) {
      out.kind = SystemKind::Riesz;
    } else {
      out.lower = std::max(out.lower, 0.0);
      out.kind = SystemKind::None;
    }
  } else {
    out.lower = 0.0;
    for (int i = m - 1; i >= 0; --i) {
      if (dec.eigenvalues[i] > dec.cutoff) {
        out.lower = dec.eigenvalues[i];
        break;
      }
    }
    out.kind = out.support_rank > 0 ? SystemKind::Frame : SystemKind::None;
  }
  out.tight = out.kind != SystemKind::None && (out.upper - out.lower) <= 1e-8 * out.upper;
  if (out.kind != SystemKind::None && out.support_rank == full_rank && std::abs(out.lower - 1.0) <= 1e-8 &&
      std::abs(out.upper - 1.0) <= 1e-8)
    out.kind = SystemKind::Orthonormal;
  return out;
}

}  // namespace

SpectralBounds riesz_bounds(const Representation& pi, const std::vector<Vec>& generators,
                            double rel_cutoff) {
  const Mat big = block_bracket_gramian(pi, generators);
  return bounds_from_spectrum(eigh(big, rel_cutoff), true, static_cast<int>(big.rows()));
}

SpectralBounds frame_bounds(const Representation& pi, const std::vector<Vec>& generators,
                            double rel_cutoff) {
  const Mat big = block_bracket_gramian(pi, generators);
  return bounds_from_spectrum(eigh(big, rel_cutoff), false, static_cast<int>(big.rows()));
}

Vec parseval_generator(const Representation& pi, const Vec& psi, double rel_cutoff) {
  if (psi.norm() == 0.0) throw ZeroGenerator();
  const AlgOperator b = bracket(pi, psi, psi);
  return s_psi_inverse(pi, psi, psd_sqrt(b, PsdMode::PinvSqrt, rel_cutoff), rel_cutoff);
}

std::vector<Vec> parseval_family(const Representation& pi, const std::vector<Vec>& span_vectors,
                                 double tol) {
  const PrincipalDecomposition dec = decompose_invariant(pi, span_vectors, tol);
  std::vector<Vec> out;
  out.reserve(dec.generators.size());
  for (const auto& psi : dec.generators) out.push_back(parseval_generator(pi, psi));
  return out;
}

Vec dual_generator(const Representation& pi, const Vec& psi, double tol) {
  if (psi.norm() == 0.0) throw ZeroGenerator();
  const AlgOperator b = bracket(pi, psi, psi);
  auto dec = eigh(b.matrix);
  const int m = static_cast<int>(dec.eigenvalues.size());
  const double min_eig = m > 0 ? dec.eigenvalues[m - 1] : 0.0;
  const double max_eig = m > 0 ? dec.eigenvalues[0] : 0.0;
  if (min_eig <= tol * max_eig) throw NotMinimal(min_eig);
  const Mat inverse = dec.apply([](double ev) { return 1.0 / ev; });
  return s_psi_inverse(pi, psi, {pi.group(), inverse});
}

AlgOperator principal_multiplier(const Representation& pi, const Vec& psi, const Vec& phi, double tol) {
  if (psi.norm() == 0.0) throw ZeroGenerator();
  Mat synthesis(pi.dim(), pi.group()->order());
  for (int gamma = 0; gamma < pi.group()->order(); ++gamma) synthesis.col(gamma) = pi.apply(gamma, psi);
  const Mat basis = orthonormal_columns(synthesis);
  const double residual = (phi - basis * (basis.adjoint() * phi)).norm();
  const double rel = phi.norm() > 0 ? residual / phi.norm() : 0.0;
  if (rel > tol) throw NotInPrincipalSpace(rel);
  return s_psi_apply(pi, psi, phi);
}

MembershipResult membership_finitely_generated(const Representation& pi,
                                               const std::vector<Vec>& generators, const Vec& phi,
                                               double tol) {
  const OrbitSystem sys = orbit_system(pi, generators);
  const int n = pi.group()->order(), k = static_cast<int>(generators.size());
  const Vec coeffs = least_squares(sys.synthesis, phi);
  const double residual = (sys.synthesis * coeffs - phi).norm();
  MembershipResult out;
  out.residual = residual;
  out.member = residual <= tol * std::max(1.0, phi.norm());
  if (out.member) {
    for (int i = 0; i < k; ++i) {
      Vec fi(n);
      for (int gamma = 0; gamma < n; ++gamma) fi[gamma] = coeffs[gamma * k + i];
      out.multipliers.push_back(fourier_transform({pi.group(), fi}));
    }
  }
  return out;
}

LeftInvarianceReport left_invariance_analysis(const GroupPtr& group, const std::vector<Vec>& span_vectors,
                                              double tol) {
  const int n = group->order();
  if (span_vectors.empty()) throw InputError("empty spanning set");
  Mat input(n, static_cast<int>(span_vectors.size()));
  for (size_t j = 0; j < span_vectors.size(); ++j) {
    if (span_vectors[j].size() != n) throw DimensionMismatch("vector vs group order");
    input.col(static_cast<int>(j)) = span_vectors[j];
  }
  const Mat basis = orthonormal_columns(input);
  const Mat p = basis * basis.adjoint();

  LeftInvarianceReport rep;
  rep.projection = {group, p};
  rep.commutation_defect = algebra_defect(rep.projection);
  rep.left_invariant = rep.commutation_defect <= tol;
  if (!rep.left_invariant) return rep;

  const SeqVector pv = fourier_coefficients(rep.projection, std::max(tol, 10 * rep.commutation_defect));
  rep.parseval_gen = pv;

  // F(V) subset of q L2(R): q F(v) = F(v) for basis vectors of V.
  for (int j = 0; j < basis.cols(); ++j) {
    const Mat fv = fourier_transform({group, basis.col(j)}).matrix;
    rep.fourier_inclusion_defect = std::max(rep.fourier_inclusion_defect, opnorm(p * fv - fv));
  }
  // q L2(R) subset of F(V): coefficients of q rho(gamma)* land back in V.
  const Mat pv_perp = Mat::Identity(n, n) - p;
  for (int gamma = 0; gamma < n; ++gamma) {
    const AlgOperator qr = {group, p * rho(group, gamma).matrix.adjoint()};
    const SeqVector c = fourier_coefficients(qr, std::max(tol, 10 * rep.commutation_defect));
    rep.coefficient_inclusion_defect =
        std::max(rep.coefficient_inclusion_defect, (pv_perp * c.coeffs).norm());
  }

  const Representation lambda = left_regular(group);
  const Mat bp = bracket(lambda, pv.coeffs, pv.coeffs).matrix;
  rep.idempotency_defect = std::max(opnorm(bp * bp - bp), opnorm(bp - p));
  rep.parseval_ok = rep.idempotency_defect <= tol && rep.fourier_inclusion_defect <= tol &&
                    rep.coefficient_inclusion_defect <= tol;
  return rep;
}

CombReport comb_analysis(const GroupPtr& group, int gamma1, int gamma2, Cplx a, Cplx b,
                         double rel_cutoff) {
  const int n = group->order();
  if (gamma1 < 0 || gamma1 >= n || gamma2 < 0 || gamma2 >= n)
    throw DegenerateComb("support indices out of range");
  if (gamma1 == gamma2) throw DegenerateComb("support points coincide");
  if (a == Cplx(0.0) || b == Cplx(0.0)) throw DegenerateComb("coefficients must be nonzero");

  Vec f = Vec::Zero(n);
  f[gamma1] = a;
  f[gamma2] = b;
  const Representation lambda = left_regular(group);

  CombReport rep;
  rep.bracket_op = bracket(lambda, f, f);

  const int g12 = group->mul(gamma1, group->inv(gamma2));
  const Mat rg = rho(group, g12).matrix;
  const Mat closed_form = (std::norm(a) + std::norm(b)) * Mat::Identity(n, n) +
                          std::conj(a) * b * rg + std::conj(b) * a * rg.adjoint();
  rep.closed_form_defect = opnorm(rep.bracket_op.matrix - closed_form);

  auto dec = eigh(rep.bracket_op.matrix, rel_cutoff);
  rep.eigenvalues = dec.eigenvalues;
  rep.rank = dec.rank();
  rep.complete = rep.rank == n;
  rep.bounds = riesz_bounds(lambda, {f}, rel_cutoff);
  rep.window_lower = std::pow(std::abs(a) - std::abs(b), 2.0);
  rep.window_upper = std::pow(std::abs(a) + std::abs(b), 2.0);
  rep.within_window = true;
  for (int i = 0; i < rep.eigenvalues.size(); ++i)
    rep.within_window = rep.within_window && rep.eigenvalues[i] >= rep.window_lower - 1e-9 &&
                        rep.eigenvalues[i] <= rep.window_upper + 1e-9;
  rep.real_coefficients = std::abs(a.imag()) == 0.0 && std::abs(b.imag()) == 0.0;
  rep.completeness_theorem_applies = rep.real_coefficients && a != b && a != -b;
  return rep;
}

}  // namespace orbitcert
