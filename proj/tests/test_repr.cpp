#include <doctest.h>

#include "orbitcert/models.hpp"
#include "support.hpp"

using namespace orbitcert;
using testsupport::basis_vector;

TEST_CASE("representation validation") {
  auto z2 = FiniteGroup::cyclic(2);
  CHECK_NOTHROW(trivial_representation(z2, 3));

  Mat bad(2, 2);
  bad << 1, 0, 0, 2;
  CHECK_THROWS_AS(make_representation(z2, {Mat::Identity(2, 2), bad}), NotUnitary);

  Mat swapped(2, 2);
  swapped << 0, 1, 1, 0;
  // unitary matrices violating the homomorphism law: Pi(1)^2 != Pi(0) here
  Mat i_times = Cplx(0, 1) * swapped;
  CHECK_THROWS_AS(make_representation(z2, {Mat::Identity(2, 2), i_times}), NotHomomorphism);

  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 24) continue;
    CHECK_NOTHROW(left_regular(g));
    CHECK_NOTHROW(right_regular(g));
  }
}

TEST_CASE("group actions and their representations") {
  auto z2 = FiniteGroup::cyclic(2);

  // left multiplication on the group itself gives the left regular representation
  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 12) continue;
    std::vector<std::vector<int>> perms(g->order(), std::vector<int>(g->order()));
    for (int gamma = 0; gamma < g->order(); ++gamma)
      for (int x = 0; x < g->order(); ++x) perms[gamma][x] = g->mul(gamma, x);
    const Representation pi = action_representation(make_group_action(g, perms));
    const Representation lr = left_regular(g);
    for (int gamma = 0; gamma < g->order(); ++gamma)
      CHECK(opnorm(pi.matrix(gamma) - lr.matrix(gamma)) == 0.0);
  }

  // trivial action gives the trivial representation
  std::vector<std::vector<int>> fixed(2, std::vector<int>{0, 1, 2});
  const Representation triv = action_representation(make_group_action(z2, fixed));
  CHECK(opnorm(triv.matrix(1) - Mat::Identity(3, 3)) == 0.0);

  // two 2-cycles on four points
  std::vector<std::vector<int>> swap2{{0, 1, 2, 3}, {1, 0, 3, 2}};
  CHECK_NOTHROW(action_representation(make_group_action(z2, swap2)));

  // broken composition law
  std::vector<std::vector<int>> broken{{0, 1, 2}, {1, 2, 0}};
  CHECK_THROWS_AS(make_group_action(z2, broken), InvalidAction);

  // cocycle violation
  RMat jac = RMat::Ones(2, 4);
  jac(1, 0) = 2.0;
  CHECK_THROWS_AS(make_group_action(z2, swap2, jac), InvalidAction);

  // a genuine weighted action: jacobian of a positive weight passes and the
  // derived measure matches it orbitwise
  Rng rng(5);
  auto d3 = FiniteGroup::dihedral(3);
  const GroupAction free_action = testsupport::random_free_action(d3, 2, rng);
  const Representation pi = action_representation(free_action);
  CHECK(pi.unitarity_defect() < 1e-12);
  for (int gamma = 0; gamma < d3->order(); ++gamma)
    for (int x = 0; x < free_action.set_size; ++x)
      CHECK(free_action.jacobian(gamma, x) ==
            doctest::Approx(free_action.measure[free_action.sigma(gamma, x)] / free_action.measure[x])
                .epsilon(1e-10));
}

TEST_CASE("bracket values on the dihedral model") {
  const D3Model model = make_d3_model();
  const int n = 6;
  CHECK(opnorm(bracket(model.rep, model.fixed_vector, model.fixed_vector).matrix - Mat::Ones(n, n)) ==
        0.0);
  const Mat boundary_expected =
      Mat::Identity(n, n) + rho(model.group, model.index_b()).matrix.adjoint();
  CHECK(opnorm(bracket(model.rep, model.boundary_vector, model.boundary_vector).matrix -
               boundary_expected) == 0.0);
  CHECK(opnorm(bracket(model.rep, model.interior_vector, model.interior_vector).matrix -
               Mat::Identity(n, n)) == 0.0);
}

TEST_CASE("bracket of the left regular representation is (Fg)* Ff") {
  Rng rng(37);
  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 12) continue;
    const Representation lambda = left_regular(g);
    const Vec f = rng.cvector(g->order());
    const Vec h = rng.cvector(g->order());
    const Mat expected =
        fourier_transform({g, h}).matrix.adjoint() * fourier_transform({g, f}).matrix;
    CHECK(opnorm(bracket(lambda, f, h).matrix - expected) < 1e-10);
  }
}

TEST_CASE("bracket defining identity and membership") {
  Rng rng(41);
  auto d3 = FiniteGroup::dihedral(3);
  const Representation pi = testsupport::random_unitary_rep(d3, rng);
  const Vec phi = rng.cvector(pi.dim());
  const Vec psi = rng.cvector(pi.dim());
  const AlgOperator b = bracket(pi, phi, psi);
  CHECK(is_in_algebra(b, 1e-10));
  for (int gamma = 0; gamma < 6; ++gamma) {
    const Cplx lhs = hinner(phi, pi.apply(gamma, psi));
    const Cplx rhs = trace_tau(b * rho(d3, gamma));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }

  // sesquilinearity
  const Vec phi2 = rng.cvector(pi.dim());
  const Cplx c = rng.cgaussian();
  CHECK(opnorm(bracket(pi, phi + c * phi2, psi).matrix -
               (bracket(pi, phi, psi).matrix + c * bracket(pi, phi2, psi).matrix)) < 1e-10);
  CHECK(opnorm(bracket(pi, psi, phi + c * phi2).matrix -
               (bracket(pi, psi, phi).matrix + std::conj(c) * bracket(pi, psi, phi2).matrix)) < 1e-10);
}

TEST_CASE("bracket properties across the representation matrix") {
  const D3Model model = make_d3_model();
  CHECK(verify_bracket_properties(model.rep, 100, 1e-9, 0).pass(1e-9));

  for (const auto& g : testsupport::group_pool()) {
    if (g->order() > 8) continue;
    CHECK(verify_bracket_properties(left_regular(g), 25, 1e-9, 1).pass(1e-9));
    CHECK(verify_bracket_properties(right_regular(g), 25, 1e-9, 2).pass(1e-9));
    Rng rng(g->order());
    CHECK(verify_bracket_properties(testsupport::random_unitary_rep(g, rng), 25, 1e-9, 3).pass(1e-9));
  }

  // left regular, f = delta_e: bracket is the identity and every defect vanishes
  auto z4 = FiniteGroup::cyclic(4);
  const Representation lambda = left_regular(z4);
  CHECK(opnorm(bracket(lambda, basis_vector(4, 0), basis_vector(4, 0)).matrix - Mat::Identity(4, 4)) ==
        0.0);
}

TEST_CASE("bracket detects orbit orthogonality") {
  const D3Model model = make_d3_model();
  // distinct orbit subspaces are orthogonal: cross brackets vanish
  CHECK(opnorm(bracket(model.rep, model.fixed_vector, model.boundary_vector).matrix) == 0.0);
  CHECK(opnorm(bracket(model.rep, model.boundary_vector, model.interior_vector).matrix) == 0.0);

  // Gram oracle agrees: synthesis blocks of different orbits are orthogonal
  const OrbitSystem sys = orbit_system(model.rep, {model.fixed_vector, model.interior_vector});
  const Mat gram = sys.synthesis.adjoint() * sys.synthesis;
  for (int g1 = 0; g1 < 6; ++g1)
    for (int g2 = 0; g2 < 6; ++g2) CHECK(std::abs(gram(g1 * 2 + 0, g2 * 2 + 1)) == 0.0);

  // non-orthogonal orbits give a nonzero bracket
  Rng rng(43);
  const Vec mix = model.fixed_vector + model.boundary_vector;
  CHECK(opnorm(bracket(model.rep, mix, model.fixed_vector).matrix) > 0.5);
}
