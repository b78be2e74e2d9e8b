#include "orbitcert/repr.hpp"

#include <algorithm>
#include <cmath>

#include "orbitcert/rng.hpp"

namespace orbitcert {

Representation::Representation(GroupPtr group, std::vector<Mat> matrices, double tol)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  const int n = group_->order();
  if (static_cast<int>(matrices_.size()) != n)
    throw DimensionMismatch("need one matrix per group element");
  dim_ = static_cast<int>(matrices_[0].rows());
  for (const auto& m : matrices_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("matrices of unequal square size");

  const Mat id = Mat::Identity(dim_, dim_);
  for (int gamma = 0; gamma < n; ++gamma) {
    const double defect = opnorm(matrices_[gamma].adjoint() * matrices_[gamma] - id);
    unitarity_defect_ = std::max(unitarity_defect_, defect);
    if (defect > tol) throw NotUnitary(gamma, defect);
  }
  {
    const double defect = opnorm(matrices_[group_->identity()] - id);
    homomorphism_defect_ = std::max(homomorphism_defect_, defect);
    if (defect > tol) throw NotHomomorphism(group_->identity(), group_->identity(), defect);
  }
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      const double defect = opnorm(matrices_[g1] * matrices_[g2] - matrices_[group_->mul(g1, g2)]);
      homomorphism_defect_ = std::max(homomorphism_defect_, defect);
      if (defect > tol) throw NotHomomorphism(g1, g2, defect);
    }
}

Representation make_representation(GroupPtr group, std::vector<Mat> matrices, double tol) {
  return Representation(std::move(group), std::move(matrices), tol);
}

Representation left_regular(GroupPtr group) {
  std::vector<Mat> mats;
  mats.reserve(group->order());
  for (int gamma = 0; gamma < group->order(); ++gamma) mats.push_back(lam(group, gamma).matrix);
  return Representation(std::move(group), std::move(mats));
}

Representation right_regular(GroupPtr group) {
  std::vector<Mat> mats;
  mats.reserve(group->order());
  for (int gamma = 0; gamma < group->order(); ++gamma) mats.push_back(rho(group, gamma).matrix);
  return Representation(std::move(group), std::move(mats));
}

Representation trivial_representation(GroupPtr group, int dim) {
  std::vector<Mat> mats(group->order(), Mat::Identity(dim, dim));
  return Representation(std::move(group), std::move(mats));
}

GroupAction make_group_action(GroupPtr group, std::vector<std::vector<int>> perms, RMat jacobian,
                              double tol) {
  const int n = group->order();
  if (static_cast<int>(perms.size()) != n) throw InvalidAction("need one permutation per group element");
  const int m = static_cast<int>(perms[0].size());
  if (m == 0) throw InvalidAction("empty point set");
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != m) throw InvalidAction("permutations of unequal length");
    std::vector<bool> seen(m, false);
    for (int v : p) {
      if (v < 0 || v >= m || seen[v]) throw InvalidAction("map is not a permutation");
      seen[v] = true;
    }
  }
  if (jacobian.rows() != n || jacobian.cols() != m) throw InvalidAction("jacobian shape");
  if ((jacobian.array() <= 0.0).any()) throw InvalidAction("jacobian must be positive");

  GroupAction a{std::move(group), m, std::move(perms), std::move(jacobian), RVec()};
  const auto& grp = *a.group;

  // Action axioms: sigma_e = id and sigma_{g1} o sigma_{g2} = sigma_{g1 g2}.
  for (int x = 0; x < m; ++x)
    if (a.sigma(grp.identity(), x) != x) throw InvalidAction("sigma_e is not the identity");
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int x = 0; x < m; ++x)
        if (a.sigma(g1, a.sigma(g2, x)) != a.sigma(grp.mul(g1, g2), x))
          throw InvalidAction("composition law fails");

  // Cocycle law.
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int x = 0; x < m; ++x) {
        const double lhs = a.jacobian(grp.mul(g1, g2), x);
        const double rhs = a.jacobian(g1, a.sigma(g2, x)) * a.jacobian(g2, x);
        if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(rhs)))
          throw InvalidAction("cocycle law fails");
      }

  // Derive the measure: weight 1 at the smallest index of each orbit, then
  // mu(sigma_gamma(x0)) = J(gamma, x0). The cocycle law makes this consistent.
  a.measure = RVec::Constant(m, -1.0);
  for (int x0 = 0; x0 < m; ++x0) {
    if (a.measure[x0] >= 0.0) continue;
    a.measure[x0] = 1.0;
    for (int gamma = 0; gamma < n; ++gamma) {
      const int y = a.sigma(gamma, x0);
      if (a.measure[y] < 0.0) a.measure[y] = a.jacobian(gamma, x0);
    }
  }
  for (int gamma = 0; gamma < n; ++gamma)
    for (int x = 0; x < m; ++x) {
      const double expected = a.measure[a.sigma(gamma, x)] / a.measure[x];
      if (std::abs(a.jacobian(gamma, x) - expected) > tol * std::max(1.0, expected))
        throw InvalidAction("jacobian is inconsistent with any weighted counting measure");
    }
  return a;
}

GroupAction make_group_action(GroupPtr group, std::vector<std::vector<int>> perms) {
  const int n = group->order();
  const int m = perms.empty() ? 0 : static_cast<int>(perms[0].size());
  return make_group_action(std::move(group), std::move(perms), RMat::Ones(n, m));
}

Representation action_representation(const GroupAction& action) {
  const int n = action.group->order(), m = action.set_size;
  std::vector<Mat> mats;
  mats.reserve(n);
  for (int gamma = 0; gamma < n; ++gamma) {
    Mat p = Mat::Zero(m, m);
    for (int x = 0; x < m; ++x) p(action.sigma(gamma, x), x) = 1.0;
    mats.push_back(std::move(p));
  }
  return Representation(action.group, std::move(mats));
}

AlgOperator bracket(const Representation& pi, const Vec& phi, const Vec& psi) {
  if (phi.size() != pi.dim() || psi.size() != pi.dim())
    throw DimensionMismatch("bracket arguments vs representation dimension");
  const int n = pi.group()->order();
  Vec corr(n);
  for (int gamma = 0; gamma < n; ++gamma) corr[gamma] = hinner(phi, pi.apply(gamma, psi));
  return fourier_transform({pi.group(), std::move(corr)});
}

double BracketPropertyReport::max_defect() const {
  return std::max({adjoint_defect, equivariance_defect, psd_defect, trace_defect});
}

BracketPropertyReport verify_bracket_properties(const Representation& pi, int sample_count, double,
                                                uint64_t seed) {
  Rng rng(seed);
  const int n = pi.group()->order();
  BracketPropertyReport rep;
  rep.samples = sample_count;
  for (int s = 0; s < sample_count; ++s) {
    const Vec psi1 = rng.cvector(pi.dim());
    const Vec psi2 = rng.cvector(pi.dim());
    const Mat b12 = bracket(pi, psi1, psi2).matrix;
    const Mat b21 = bracket(pi, psi2, psi1).matrix;
    rep.adjoint_defect = std::max(rep.adjoint_defect, opnorm(b12.adjoint() - b21));

    const int gamma = rng.uniform_int(0, n - 1);
    const Mat rg = rho(pi.group(), gamma).matrix;
    const Mat left = bracket(pi, psi1, pi.apply(gamma, psi2)).matrix;
    const Mat right = bracket(pi, pi.apply(gamma, psi1), psi2).matrix;
    rep.equivariance_defect = std::max(rep.equivariance_defect, opnorm(left - rg * b12));
    rep.equivariance_defect = std::max(rep.equivariance_defect, opnorm(right - b12 * rg.adjoint()));

    const AlgOperator b11 = bracket(pi, psi1, psi1);
    auto dec = eigh(b11.matrix);
    const double min_eig = dec.eigenvalues.size() ? dec.eigenvalues[dec.eigenvalues.size() - 1] : 0.0;
    rep.psd_defect = std::max(rep.psd_defect, std::max(0.0, -min_eig));
    rep.trace_defect =
        std::max(rep.trace_defect, std::abs(lp_norm(b11, 1.0) - psi1.squaredNorm()));
  }
  return rep;
}

}  // namespace orbitcert
