#include "orbitcert/helson.hpp"

#include <algorithm>
#include <cmath>

#include "orbitcert/rng.hpp"

namespace orbitcert {

double HelsonImage::norm() const {
  double sum = 0.0;
  for (const auto& f : fibers) {
    const double n2 = l2_norm(f.value);
    sum += f.weight * n2 * n2;
  }
  return std::sqrt(sum);
}

HelsonImage apply_right(const HelsonImage& image, const Mat& f) {
  HelsonImage out = image;
  for (auto& fiber : out.fibers) fiber.value.matrix = fiber.value.matrix * f;
  return out;
}

HelsonImage image_difference(const HelsonImage& a, const HelsonImage& b) {
  if (a.fibers.size() != b.fibers.size()) throw FiberMismatch("fiber counts differ");
  HelsonImage out = a;
  for (size_t i = 0; i < out.fibers.size(); ++i) {
    if (std::abs(a.fibers[i].weight - b.fibers[i].weight) > 0)
      throw FiberMismatch("fiber weights differ");
    out.fibers[i].value.matrix -= b.fibers[i].value.matrix;
  }
  return out;
}

Mat image_bracket(const HelsonImage& t_phi, const HelsonImage& t_psi) {
  if (t_phi.fibers.size() != t_psi.fibers.size()) throw FiberMismatch("fiber counts differ");
  if (t_phi.fibers.empty()) throw FiberMismatch("empty image");
  const auto& first = t_phi.fibers[0].value.matrix;
  Mat acc = Mat::Zero(first.rows(), first.cols());
  for (size_t i = 0; i < t_phi.fibers.size(); ++i)
    acc += t_phi.fibers[i].weight * t_psi.fibers[i].value.matrix.adjoint() * t_phi.fibers[i].value.matrix;
  return acc;
}

int PrincipalDecomposition::total_dim() const {
  int d = 0;
  for (const auto& b : orbit_bases) d += static_cast<int>(b.cols());
  return d;
}

namespace {

Mat orbit_synthesis(const Representation& pi, const Vec& psi) {
  const int n = pi.group()->order();
  Mat s(pi.dim(), n);
  for (int gamma = 0; gamma < n; ++gamma) s.col(gamma) = pi.apply(gamma, psi);
  return s;
}

}  // namespace

AlgOperator s_psi_forward(const Representation& pi, const Vec& psi, const SeqVector& f) {
  if (psi.norm() == 0.0) throw ZeroGenerator();
  require_same_group(*pi.group(), *f.group);
  const AlgOperator b = bracket(pi, psi, psi);
  const AlgOperator s = support_projection(b);
  return {pi.group(), s.matrix * fourier_transform(f).matrix};
}

AlgOperator s_psi_apply(const Representation& pi, const Vec& psi, const Vec& phi, double rel_cutoff) {
  if (psi.norm() == 0.0) throw ZeroGenerator();
  const AlgOperator b = bracket(pi, psi, psi);
  const AlgOperator pinv = psd_sqrt(b, PsdMode::Pinv, rel_cutoff);
  return {pi.group(), pinv.matrix * bracket(pi, phi, psi).matrix};
}

Vec s_psi_inverse(const Representation& pi, const Vec& psi, const AlgOperator& f, double rel_cutoff) {
  if (psi.norm() == 0.0) throw ZeroGenerator();
  require_same_group(*pi.group(), *f.group);
  const AlgOperator s = support_projection(bracket(pi, psi, psi), rel_cutoff);
  const SeqVector coeffs = fourier_coefficients({f.group, s.matrix * f.matrix});
  Vec out = Vec::Zero(pi.dim());
  for (int gamma = 0; gamma < pi.group()->order(); ++gamma)
    out += coeffs.coeffs[gamma] * pi.apply(gamma, psi);
  return out;
}

PrincipalDecomposition decompose_invariant(const Representation& pi, const std::vector<Vec>& span_vectors,
                                           double tol) {
  if (span_vectors.empty()) throw InputError("empty spanning set");
  Mat input(pi.dim(), static_cast<int>(span_vectors.size()));
  for (size_t j = 0; j < span_vectors.size(); ++j) {
    if (span_vectors[j].size() != pi.dim()) throw DimensionMismatch("spanning vector vs representation");
    input.col(static_cast<int>(j)) = span_vectors[j];
  }
  const Mat basis = gram_schmidt(input, 1e-8);
  const int r = static_cast<int>(basis.cols());
  if (r == 0) throw InputError("spanning set is zero");

  // Invariance: Pi(gamma) v must stay in span(basis) for every basis vector.
  for (int gamma = 0; gamma < pi.group()->order(); ++gamma) {
    for (int j = 0; j < r; ++j) {
      const Vec w = pi.apply(gamma, basis.col(j));
      const double defect = (w - basis * (basis.adjoint() * w)).norm();
      if (defect > tol) throw NotInvariant(gamma, defect);
    }
  }

  PrincipalDecomposition dec;
  Mat acc(pi.dim(), 0);  // orthonormal basis of the sum of orbit spans found so far
  for (int j = 0; j < r && static_cast<int>(acc.cols()) < r; ++j) {
    Vec residual = basis.col(j);
    if (acc.cols() > 0) residual -= acc * (acc.adjoint() * residual);
    if (residual.norm() <= 1e-8) continue;  // already covered
    const Vec psi = residual;               // the greedy generator, unnormalized projection
    const Mat orbit_basis = orthonormal_columns(orbit_synthesis(pi, psi));
    dec.generators.push_back(psi);
    dec.orbit_bases.push_back(orbit_basis);
    dec.consumed.push_back(j);
    Mat grown(pi.dim(), acc.cols() + orbit_basis.cols());
    grown << acc, orbit_basis;
    acc = gram_schmidt(grown, 1e-8);
  }
  if (dec.total_dim() != r)
    throw CertificationError("orbit spans do not add up to the input space (dim " +
                             std::to_string(dec.total_dim()) + " vs " + std::to_string(r) + ")");
  return dec;
}

HelsonMap::HelsonMap(const Representation& pi, PrincipalDecomposition decomposition, double rel_cutoff)
    : pi_(&pi), dec_(std::move(decomposition)) {
  for (size_t i = 0; i < dec_.generators.size(); ++i) {
    const AlgOperator b = bracket(pi, dec_.generators[i], dec_.generators[i]);
    sqrt_brackets_.push_back(psd_sqrt(b, PsdMode::Sqrt, rel_cutoff).matrix);
    pinv_brackets_.push_back(psd_sqrt(b, PsdMode::Pinv, rel_cutoff).matrix);
    projections_.push_back(dec_.orbit_bases[i] * dec_.orbit_bases[i].adjoint());
  }
}

HelsonImage HelsonMap::operator()(const Vec& phi) const {
  if (phi.size() != pi_->dim()) throw DimensionMismatch("vector vs representation");
  HelsonImage out;
  for (size_t i = 0; i < dec_.generators.size(); ++i) {
    const Vec projected = projections_[i] * phi;
    // [psi,psi]^{1/2} S_psi[P phi] with S_psi[P phi] = pinv([psi,psi]) [P phi, psi].
    const Mat value =
        sqrt_brackets_[i] * pinv_brackets_[i] * bracket(*pi_, projected, dec_.generators[i]).matrix;
    out.fibers.push_back({std::to_string(i), 1.0, {pi_->group(), value}});
  }
  return out;
}

HelsonMap build_helson_map(const Representation& pi, PrincipalDecomposition decomposition,
                           double rel_cutoff) {
  return HelsonMap(pi, std::move(decomposition), rel_cutoff);
}

HelsonMapFn fourier_helson_map(const GroupPtr& group) {
  return [group](const Vec& f) {
    HelsonImage out;
    out.fibers.push_back({"0", 1.0, fourier_transform({group, f})});
    return out;
  };
}

double HelsonCheckReport::max_defect() const {
  return std::max({isometry_defect, intertwining_defect, bracket_defect});
}

HelsonCheckReport verify_helson_axioms(const HelsonMapFn& t, const Representation& pi, int samples,
                                       double, uint64_t seed) {
  Rng rng(seed);
  HelsonCheckReport rep;
  rep.samples = samples;
  const int n = pi.group()->order();
  for (int s = 0; s < samples; ++s) {
    const Vec phi = rng.cvector(pi.dim());
    const Vec psi = rng.cvector(pi.dim());
    const HelsonImage t_phi = t(phi);
    rep.isometry_defect = std::max(rep.isometry_defect, std::abs(t_phi.norm() - phi.norm()));
    for (int gamma = 0; gamma < n; ++gamma) {
      const HelsonImage lhs = t(pi.apply(gamma, phi));
      const HelsonImage rhs = apply_right(t_phi, rho(pi.group(), gamma).matrix.adjoint());
      rep.intertwining_defect = std::max(rep.intertwining_defect, image_difference(lhs, rhs).norm());
    }
    const Mat recovered = image_bracket(t_phi, t(psi));
    rep.bracket_defect =
        std::max(rep.bracket_defect, opnorm(recovered - bracket(pi, phi, psi).matrix));
  }
  return rep;
}

TilingSet find_tiling_set(const GroupAction& action) {
  const int n = action.group->order(), m = action.set_size;
  for (int x = 0; x < m; ++x)
    for (int gamma = 0; gamma < n; ++gamma)
      if (gamma != action.group->identity() && action.sigma(gamma, x) == x) throw NotFree(x, gamma);
  std::vector<bool> covered(m, false);
  TilingSet c;
  for (int x = 0; x < m; ++x) {
    if (covered[x]) continue;
    c.points.push_back(x);
    for (int gamma = 0; gamma < n; ++gamma) covered[action.sigma(gamma, x)] = true;
  }
  return c;
}

namespace {

void require_valid_tiling(const GroupAction& action, const TilingSet& c) {
  const int n = action.group->order(), m = action.set_size;
  std::vector<int> hits(m, 0);
  for (int x : c.points) {
    if (x < 0 || x >= m) throw InvalidTiling("point out of range");
    for (int gamma = 0; gamma < n; ++gamma) ++hits[action.sigma(gamma, x)];
  }
  for (int y = 0; y < m; ++y)
    if (hits[y] != 1) throw InvalidTiling("translates do not partition the point set");
}

}  // namespace

HelsonImage zak_transform(const GroupAction& action, const TilingSet& c, const Vec& phi) {
  if (phi.size() != action.set_size) throw DimensionMismatch("vector vs action point set");
  require_valid_tiling(action, c);
  const auto& grp = *action.group;
  const int n = grp.order();
  HelsonImage out;
  for (int x : c.points) {
    Vec coeffs(n);
    for (int gamma = 0; gamma < n; ++gamma)
      coeffs[gamma] = phi[action.sigma(grp.inv(gamma), x)] / std::sqrt(action.measure[x]);
    // sum_gamma coeffs(gamma) rho(gamma): entries rho(gamma)[y, y gamma].
    Mat value = Mat::Zero(n, n);
    for (int gamma = 0; gamma < n; ++gamma)
      for (int y = 0; y < n; ++y) value(y, grp.mul(y, gamma)) += coeffs[gamma];
    out.fibers.push_back({std::to_string(x), action.measure[x], {action.group, std::move(value)}});
  }
  return out;
}

Vec zak_inverse(const GroupAction& action, const TilingSet& c, const HelsonImage& z) {
  require_valid_tiling(action, c);
  if (z.fibers.size() != c.points.size()) throw FiberMismatch("one fiber per tiling point required");
  const auto& grp = *action.group;
  const int n = grp.order();
  Vec out = Vec::Zero(action.set_size);
  for (size_t i = 0; i < c.points.size(); ++i) {
    const int xc = c.points[i];
    const Mat& value = z.fibers[i].value.matrix;
    if (value.rows() != n || value.cols() != n) throw FiberMismatch("fiber has wrong shape");
    for (int gamma = 0; gamma < n; ++gamma) {
      // y = sigma_{gamma^{-1}}(x_c) carries tau(Psi(x_c) rho(gamma)*) scaled back
      // into flattened coordinates.
      const int y = action.sigma(grp.inv(gamma), xc);
      const Cplx t = (value * rho(action.group, gamma).matrix.adjoint())(grp.identity(), grp.identity());
      out[y] = std::sqrt(action.measure[xc]) * t;
    }
  }
  return out;
}

HelsonMapFn zak_helson_map(const GroupAction& action, const TilingSet& c) {
  return [action, c](const Vec& phi) { return zak_transform(action, c, phi); };
}

}  // namespace orbitcert
