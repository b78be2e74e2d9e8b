#include <doctest.h>

#include "support.hpp"

using namespace orbitcert;
using testsupport::basis_vector;

namespace {

const Mat kRhoAStarD3 = [] {
  Mat m(6, 6);
  m << 0, 0, 1, 0, 0, 0,  //
      1, 0, 0, 0, 0, 0,   //
      0, 1, 0, 0, 0, 0,   //
      0, 0, 0, 0, 1, 0,   //
      0, 0, 0, 0, 0, 1,   //
      0, 0, 0, 1, 0, 0;
  return m;
}();

const Mat kRhoBStarD3 = [] {
  Mat m(6, 6);
  m << 0, 0, 0, 1, 0, 0,  //
      0, 0, 0, 0, 1, 0,   //
      0, 0, 0, 0, 0, 1,   //
      1, 0, 0, 0, 0, 0,   //
      0, 1, 0, 0, 0, 0,   //
      0, 0, 1, 0, 0, 0;
  return m;
}();

}  // namespace

TEST_CASE("regular representation matrices") {
  auto z2 = FiniteGroup::cyclic(2);
  Mat swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(opnorm(rho(z2, 1).matrix - swap) == 0.0);
  CHECK(opnorm(rho(z2, 0).matrix - Mat::Identity(2, 2)) == 0.0);

  // The adjoint right regular matrices of D3 in the order {e,a,a^2,b,ab,a^2b}.
  auto d3 = FiniteGroup::dihedral(3);
  CHECK(opnorm(rho(d3, 1).matrix.adjoint() - kRhoAStarD3) == 0.0);
  CHECK(opnorm(rho(d3, 3).matrix.adjoint() - kRhoBStarD3) == 0.0);

  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 12) continue;
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y) {
        CHECK(opnorm(rho(g, x).matrix * rho(g, y).matrix - rho(g, g->mul(x, y)).matrix) == 0.0);
        CHECK(opnorm(lam(g, x).matrix * lam(g, y).matrix - lam(g, g->mul(x, y)).matrix) == 0.0);
        // rho and lam commute elementwise
        CHECK(opnorm(rho(g, x).matrix * lam(g, y).matrix - lam(g, y).matrix * rho(g, x).matrix) == 0.0);
      }
  }
}

TEST_CASE("fourier transform and coefficients invert each other") {
  auto z2 = FiniteGroup::cyclic(2);
  Vec f(2);
  f << 2, 1;
  Mat expected(2, 2);
  expected << 2, 1, 1, 2;
  CHECK(opnorm(fourier_transform({z2, f}).matrix - expected) == 0.0);

  auto d3 = FiniteGroup::dihedral(3);
  CHECK(opnorm(fourier_transform({d3, Vec(basis_vector(6, 0))}).matrix - Mat::Identity(6, 6)) == 0.0);
  for (int gamma = 0; gamma < 6; ++gamma) {
    const AlgOperator rgs = {d3, rho(d3, gamma).matrix.adjoint()};
    const SeqVector coeffs = fourier_coefficients(rgs);
    CHECK((coeffs.coeffs - basis_vector(6, gamma)).norm() == 0.0);
  }
  // all-ones matrix has constant coefficients: it is the sum of all rho(gamma)*.
  const SeqVector ones = fourier_coefficients({d3, Mat::Ones(6, 6)});
  CHECK((ones.coeffs - Vec::Ones(6)).norm() == 0.0);

  Rng rng(7);
  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 24) continue;
    const Vec coeffs = rng.cvector(g->order());
    const AlgOperator f_op = fourier_transform({g, coeffs});
    CHECK(is_in_algebra(f_op, 1e-12));
    CHECK((fourier_coefficients(f_op).coeffs - coeffs).norm() < 1e-12);
  }
}

TEST_CASE("trace and Plancherel") {
  auto d3 = FiniteGroup::dihedral(3);
  CHECK(trace_tau(identity_op(d3)) == Cplx(1.0));
  for (int gamma = 1; gamma < 6; ++gamma) CHECK(trace_tau(rho(d3, gamma)) == Cplx(0.0));

  Rng rng(11);
  for (const auto& g : testsupport::group_pool()) {
    const Vec f = rng.cvector(g->order());
    const AlgOperator f_op = fourier_transform({g, f});
    // tau(F*F) = ||f||^2
    CHECK(trace_tau({g, Mat(f_op.matrix.adjoint() * f_op.matrix)}).real() ==
          doctest::Approx(f.squaredNorm()).epsilon(1e-12));
    CHECK(l2_norm(f_op) == doctest::Approx(f.norm()).epsilon(1e-12));
    // Parseval against the coefficient sum
    double sq = 0.0;
    const SeqVector coeffs = fourier_coefficients(f_op);
    for (int i = 0; i < coeffs.coeffs.size(); ++i) sq += std::norm(coeffs.coeffs[i]);
    CHECK(lp_norm(f_op, 2.0) == doctest::Approx(std::sqrt(sq)).epsilon(1e-12));
  }
}

TEST_CASE("convolution identities") {
  auto z3 = FiniteGroup::cyclic(3);
  const Vec d1 = basis_vector(3, 1);
  CHECK((convolve({z3, d1}, {z3, d1}).coeffs - basis_vector(3, 2)).norm() == 0.0);

  Rng rng(13);
  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 12) continue;
    const SeqVector gv{g, rng.cvector(g->order())};
    const SeqVector de{g, Vec(basis_vector(g->order(), g->identity()))};
    CHECK((convolve(gv, de).coeffs - gv.coeffs).norm() < 1e-14);

    // composition law: coefficients of F G equal G^ * F^
    const SeqVector fhat{g, rng.cvector(g->order())};
    const SeqVector ghat{g, rng.cvector(g->order())};
    const AlgOperator fg = fourier_transform(fhat) * fourier_transform(ghat);
    CHECK((fourier_coefficients(fg).coeffs - convolve(ghat, fhat).coeffs).norm() < 1e-10);

    // F g = g * F^ as an operator on sequences
    const Vec applied = fourier_transform(fhat).matrix * gv.coeffs;
    CHECK((applied - convolve(gv, fhat).coeffs).norm() < 1e-10);

    // intertwining: F(lam(gamma) f) = F(f) rho(gamma)*
    const int gamma = rng.uniform_int(0, g->order() - 1);
    const Vec shifted = lam(g, gamma).matrix * fhat.coeffs;
    CHECK(opnorm(fourier_transform({g, shifted}).matrix -
                 fourier_transform(fhat).matrix * rho(g, gamma).matrix.adjoint()) < 1e-12);
  }
}

TEST_CASE("lp norms") {
  auto d3 = FiniteGroup::dihedral(3);
  for (double p : {1.0, 1.5, 2.0, 4.0}) CHECK(lp_norm(rho(d3, 4), p) == doctest::Approx(1.0));
  CHECK(lp_norm(rho(d3, 4), std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));

  const AlgOperator all = {d3, Mat::Ones(6, 6)};  // sum of all rho(gamma)*
  CHECK(lp_norm(all, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp_norm(all, 2.0) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
  CHECK(lp_norm(all, std::numeric_limits<double>::infinity()) == doctest::Approx(6.0).epsilon(1e-12));

  // monotonicity in p for the normalized trace
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = FiniteGroup::cyclic(2 + trial);
    const AlgOperator f = fourier_transform({g, rng.cvector(g->order())});
    double prev = 0.0;
    for (double p : {1.0, 2.0, 4.0, 8.0}) {
      const double np = lp_norm(f, p);
      CHECK(np >= prev - 1e-9);
      prev = np;
    }
    CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) >= prev - 1e-9);
  }
}

TEST_CASE("algebra membership") {
  auto d3 = FiniteGroup::dihedral(3);
  for (int gamma = 0; gamma < 6; ++gamma) CHECK(is_in_algebra(rho(d3, gamma), 1e-12));
  CHECK_FALSE(is_in_algebra(lam(d3, 1), 1e-6));

  auto z2 = FiniteGroup::cyclic(2);
  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = 1.0;
  CHECK_FALSE(is_in_algebra({z2, diag}, 1e-6));
  CHECK_THROWS_AS(fourier_coefficients({z2, diag}), NotInAlgebra);
}

TEST_CASE("support projections") {
  auto d3 = FiniteGroup::dihedral(3);
  CHECK(opnorm(support_projection(identity_op(d3)).matrix - Mat::Identity(6, 6)) < 1e-14);
  CHECK(opnorm(support_projection(zero_op(d3)).matrix) == 0.0);

  const AlgOperator all = {d3, Mat::Ones(6, 6)};
  const AlgOperator s = support_projection(all);
  CHECK(opnorm(s.matrix - Mat::Ones(6, 6) / 6.0) < 1e-12);

  CHECK_THROWS_AS(support_projection(rho(d3, 1)), NotHermitian);

  Rng rng(23);
  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 12) continue;
    const AlgOperator f = fourier_transform({g, rng.cvector(g->order())});
    const AlgOperator h = {g, Mat(f.matrix + f.matrix.adjoint())};
    const AlgOperator s_h = support_projection(h);
    CHECK(opnorm(s_h.matrix * h.matrix - h.matrix) < 1e-9);
    CHECK(opnorm(h.matrix * s_h.matrix - h.matrix) < 1e-9);
    CHECK(is_in_algebra(s_h, 1e-8));
    CHECK(eigh(h.matrix).rank() == eigh(s_h.matrix).rank());
  }
}

TEST_CASE("psd roots and pseudo-inverses") {
  auto z2 = FiniteGroup::cyclic(2);
  CHECK(opnorm(psd_sqrt({z2, Mat(4.0 * Mat::Identity(2, 2))}, PsdMode::Sqrt).matrix -
               2.0 * Mat::Identity(2, 2)) < 1e-12);

  Mat q = Mat::Ones(2, 2) / 2.0;  // rank-1 projection
  CHECK(opnorm(psd_sqrt({z2, q}, PsdMode::Pinv).matrix - q) < 1e-12);

  Mat omega(2, 2);
  omega << 5, 4, 4, 5;
  Mat expected(2, 2);
  expected << 5, -4, -4, 5;
  expected /= 9.0;
  CHECK(opnorm(psd_sqrt({z2, omega}, PsdMode::Pinv).matrix - expected) < 1e-12);

  Mat neg(2, 2);
  neg << -1, 0, 0, 1;
  CHECK_THROWS_AS(psd_sqrt({z2, neg}, PsdMode::Sqrt), NotPSD);

  Rng rng(29);
  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 12) continue;
    const AlgOperator f = fourier_transform({g, rng.cvector(g->order())});
    const AlgOperator psd = {g, Mat(f.matrix.adjoint() * f.matrix)};
    const Mat root = psd_sqrt(psd, PsdMode::Sqrt).matrix;
    CHECK(opnorm(root * root - psd.matrix) < 1e-10);
    const Mat pinv_root = psd_sqrt(psd, PsdMode::PinvSqrt).matrix;
    const Mat s = support_projection(psd).matrix;
    CHECK(opnorm(pinv_root * psd.matrix * pinv_root - s) < 1e-9);
    CHECK(is_in_algebra({g, root}, 1e-8));
    CHECK(opnorm(root * psd.matrix - psd.matrix * root) < 1e-10);
  }
}

TEST_CASE("weighted inner products") {
  auto z4 = FiniteGroup::cyclic(4);
  Rng rng(31);
  const AlgOperator f = fourier_transform({z4, rng.cvector(4)});
  const AlgOperator g = fourier_transform({z4, rng.cvector(4)});

  // Omega = identity reduces to tau(G* F)
  CHECK(std::abs(weighted_inner(identity_op(z4), f, g) -
                 trace_tau({z4, Mat(g.matrix.adjoint() * f.matrix)})) < 1e-12);

  const AlgOperator h = fourier_transform({z4, rng.cvector(4)});
  const AlgOperator omega = {z4, Mat(h.matrix.adjoint() * h.matrix)};
  const Mat root = psd_sqrt(omega, PsdMode::Sqrt).matrix;
  const double direct = weighted_norm(omega, f);
  const double via_root = l2_norm({z4, Mat(root * f.matrix)});
  CHECK(direct == doctest::Approx(via_root).epsilon(1e-10));

  // faithfulness on the support: s F = F and zero weighted norm forces F = 0
  const Mat s = support_projection(omega).matrix;
  const AlgOperator reduced = {z4, Mat(s * f.matrix)};
  if (weighted_norm(omega, reduced) < 1e-14) CHECK(opnorm(reduced.matrix) < 1e-12);
  CHECK_THROWS_AS(weighted_inner({z4, Mat(-Mat::Identity(4, 4))}, f, g), NotPSD);
}
