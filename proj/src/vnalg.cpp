#include "orbitcert/vnalg.hpp"

#include <cmath>
#include <limits>

namespace orbitcert {

namespace {

void require_operand_groups(const AlgOperator& a, const AlgOperator& b) {
  if (!a.group || !b.group) throw GroupMismatch();
  require_same_group(*a.group, *b.group);
}

void require_hermitian(const Mat& m, double tol = kDefaultTol) {
  const double defect = hermiticity_defect(m);
  if (defect > tol) throw NotHermitian(defect);
}

}  // namespace

AlgOperator operator*(const AlgOperator& a, const AlgOperator& b) {
  require_operand_groups(a, b);
  return {a.group, a.matrix * b.matrix};
}

AlgOperator operator+(const AlgOperator& a, const AlgOperator& b) {
  require_operand_groups(a, b);
  return {a.group, a.matrix + b.matrix};
}

AlgOperator operator-(const AlgOperator& a, const AlgOperator& b) {
  require_operand_groups(a, b);
  return {a.group, a.matrix - b.matrix};
}

AlgOperator operator*(Cplx s, const AlgOperator& a) { return {a.group, s * a.matrix}; }

AlgOperator adjoint(const AlgOperator& a) { return {a.group, a.matrix.adjoint()}; }

AlgOperator identity_op(const GroupPtr& g) { return {g, Mat::Identity(g->order(), g->order())}; }

AlgOperator zero_op(const GroupPtr& g) { return {g, Mat::Zero(g->order(), g->order())}; }

AlgOperator rho(const GroupPtr& g, int gamma) {
  const int n = g->order();
  Mat m = Mat::Zero(n, n);
  // rho(gamma) f (x) = f(x gamma)
  for (int x = 0; x < n; ++x) m(x, g->mul(x, gamma)) = 1.0;
  return {g, std::move(m)};
}

AlgOperator lam(const GroupPtr& g, int gamma) {
  const int n = g->order();
  Mat m = Mat::Zero(n, n);
  // lam(gamma) f (x) = f(gamma^{-1} x)
  const int gi = g->inv(gamma);
  for (int x = 0; x < n; ++x) m(x, g->mul(gi, x)) = 1.0;
  return {g, std::move(m)};
}

AlgOperator fourier_transform(const SeqVector& f) {
  const auto& g = *f.group;
  const int n = g.order();
  if (f.coeffs.size() != n) throw DimensionMismatch("sequence length vs group order");
  Mat m = Mat::Zero(n, n);
  // sum_gamma f(gamma) rho(gamma)* ; rho(gamma)* = rho(gamma^{-1}) has entry
  // (x, x gamma^{-1}) = 1, so column y = x gamma^{-1} receives f(gamma) at row x.
  for (int gamma = 0; gamma < n; ++gamma) {
    const int gi = g.inv(gamma);
    for (int x = 0; x < n; ++x) m(x, g.mul(x, gi)) += f.coeffs[gamma];
  }
  return {f.group, std::move(m)};
}

SeqVector fourier_coefficients(const AlgOperator& f, double tol) {
  const double defect = algebra_defect(f);
  if (defect > tol) throw NotInAlgebra(defect);
  const auto& g = *f.group;
  const int e = g.identity();
  Vec c(g.order());
  // F^(gamma) = tau(F rho(gamma)) = F[e, gamma^{-1}]
  for (int gamma = 0; gamma < g.order(); ++gamma) c[gamma] = f.matrix(e, g.inv(gamma));
  return {f.group, std::move(c)};
}

Cplx trace_tau(const AlgOperator& f) {
  const int e = f.group->identity();
  return f.matrix(e, e);
}

SeqVector convolve(const SeqVector& g, const SeqVector& f) {
  if (!g.group || !f.group) throw GroupMismatch();
  require_same_group(*g.group, *f.group);
  const auto& grp = *g.group;
  const int n = grp.order();
  Vec out = Vec::Zero(n);
  for (int gamma = 0; gamma < n; ++gamma)
    for (int gp = 0; gp < n; ++gp) out[gamma] += f.coeffs[gp] * g.coeffs[grp.mul(gamma, grp.inv(gp))];
  return {g.group, std::move(out)};
}

double lp_norm(const AlgOperator& f, double p) {
  if (p < 1.0) throw InputError("lp_norm requires p >= 1");
  auto dec = eigh(f.matrix.adjoint() * f.matrix);
  if (std::isinf(p)) return dec.eigenvalues.size() ? std::sqrt(std::max(0.0, dec.eigenvalues[0])) : 0.0;
  // |F|^p = U diag(s^p) U*, tau = entry at (e, e).
  const Mat abs_p = dec.apply([p](double ev) { return std::pow(std::sqrt(std::max(0.0, ev)), p); });
  const int e = f.group->identity();
  return std::pow(std::max(0.0, abs_p(e, e).real()), 1.0 / p);
}

double algebra_defect(const AlgOperator& f) {
  double worst = 0.0;
  for (int gamma = 0; gamma < f.group->order(); ++gamma) {
    const Mat l = lam(f.group, gamma).matrix;
    worst = std::max(worst, opnorm(f.matrix * l - l * f.matrix));
  }
  return worst;
}

bool is_in_algebra(const AlgOperator& f, double tol) { return algebra_defect(f) <= tol; }

AlgOperator support_projection(const AlgOperator& f, double rel_cutoff) {
  require_hermitian(f.matrix);
  auto dec = eigh(f.matrix, rel_cutoff);
  return {f.group, dec.apply([&](double ev) { return std::abs(ev) > dec.cutoff ? 1.0 : 0.0; })};
}

AlgOperator psd_sqrt(const AlgOperator& omega, PsdMode mode, double rel_cutoff) {
  require_hermitian(omega.matrix);
  auto dec = eigh(omega.matrix, rel_cutoff);
  if (dec.eigenvalues.size() && dec.eigenvalues[dec.eigenvalues.size() - 1] < -std::max(dec.cutoff, kDefaultTol))
    throw NotPSD(dec.eigenvalues[dec.eigenvalues.size() - 1]);
  switch (mode) {
    case PsdMode::Sqrt:
      return {omega.group, dec.apply([](double ev) { return std::sqrt(std::max(0.0, ev)); })};
    case PsdMode::PinvSqrt:
      return {omega.group,
              dec.apply([&](double ev) { return ev > dec.cutoff ? 1.0 / std::sqrt(ev) : 0.0; })};
    case PsdMode::Pinv:
      return {omega.group, dec.apply([&](double ev) { return ev > dec.cutoff ? 1.0 / ev : 0.0; })};
  }
  throw InputError("unknown psd_sqrt mode");
}

Cplx weighted_inner(const AlgOperator& omega, const AlgOperator& f, const AlgOperator& g) {
  require_operand_groups(f, g);
  require_operand_groups(f, omega);
  require_hermitian(omega.matrix);
  auto dec = eigh(omega.matrix);
  if (dec.eigenvalues.size() && dec.eigenvalues[dec.eigenvalues.size() - 1] < -std::max(dec.cutoff, kDefaultTol))
    throw NotPSD(dec.eigenvalues[dec.eigenvalues.size() - 1]);
  return trace_tau({f.group, f.matrix * g.matrix.adjoint() * omega.matrix});
}

double weighted_norm(const AlgOperator& omega, const AlgOperator& f) {
  return std::sqrt(std::max(0.0, weighted_inner(omega, f, f).real()));
}

double l2_norm(const AlgOperator& f) {
  return std::sqrt(std::max(0.0, trace_tau({f.group, f.matrix.adjoint() * f.matrix}).real()));
}

}  // namespace orbitcert
