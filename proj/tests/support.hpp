#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "orbitcert/frames.hpp"
#include "orbitcert/rng.hpp"

namespace testsupport {

using namespace orbitcert;

inline std::vector<GroupPtr> group_pool() {
  std::vector<GroupPtr> pool;
  for (int n : {2, 3, 4, 5, 6, 8, 12, 24}) pool.push_back(FiniteGroup::cyclic(n));
  for (int m : {3, 4, 5, 6, 12}) pool.push_back(FiniteGroup::dihedral(m));
  pool.push_back(FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::cyclic(2)));
  pool.push_back(FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::cyclic(6)));
  pool.push_back(FiniteGroup::direct_product(*FiniteGroup::cyclic(3), *FiniteGroup::cyclic(4)));
  pool.push_back(FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::dihedral(3)));
  return pool;
}

inline std::vector<int> cyclic_subgroup(const FiniteGroup& g, int gen) {
  std::vector<int> h{g.identity()};
  int x = gen;
  while (x != g.identity()) {
    h.push_back(x);
    x = g.mul(x, gen);
  }
  std::sort(h.begin(), h.end());
  return h;
}

/// Left multiplication on cosets of a subgroup.
inline std::vector<std::vector<int>> coset_action(const FiniteGroup& g, const std::vector<int>& subgroup) {
  const int n = g.order();
  std::vector<int> coset_id(n, -1), reps;
  for (int x = 0; x < n; ++x) {
    if (coset_id[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : subgroup) coset_id[g.mul(x, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> perms(n, std::vector<int>(m));
  for (int gamma = 0; gamma < n; ++gamma)
    for (int c = 0; c < m; ++c) perms[gamma][c] = coset_id[g.mul(gamma, reps[c])];
  return perms;
}

/// Direct sum of coset-action permutation representations, conjugated by a
/// Haar-random unitary: a generic unitary representation of dimension <= max_dim.
inline Representation random_unitary_rep(const GroupPtr& g, Rng& rng, int max_dim = 16) {
  const int n = g->order();
  std::vector<std::vector<std::vector<int>>> blocks;
  int dim = 0;
  const int pieces = rng.uniform_int(1, 3);
  for (int p = 0; p < pieces; ++p) {
    const auto subgroup = cyclic_subgroup(*g, rng.uniform_int(0, n - 1));
    auto perms = coset_action(*g, subgroup);
    const int m = static_cast<int>(perms[0].size());
    if (dim + m > max_dim) continue;
    dim += m;
    blocks.push_back(std::move(perms));
  }
  if (blocks.empty()) {
    blocks.push_back(coset_action(*g, std::vector<int>(1, g->identity())));
    dim = n;
    while (dim > max_dim) {  // fall back to the trivial subgroup's quotient if too large
      blocks.back() = coset_action(*g, cyclic_subgroup(*g, 1 % n));
      dim = static_cast<int>(blocks.back()[0].size());
      if (dim <= max_dim) break;
      blocks.back() = std::vector<std::vector<int>>(n, std::vector<int>(1, 0));
      dim = 1;
    }
  }
  std::vector<Mat> mats(n, Mat::Zero(dim, dim));
  for (int gamma = 0; gamma < n; ++gamma) {
    int offset = 0;
    for (const auto& perms : blocks) {
      const int m = static_cast<int>(perms[0].size());
      for (int x = 0; x < m; ++x) mats[gamma](offset + perms[gamma][x], offset + x) = 1.0;
      offset += m;
    }
  }
  const Mat u = rng.unitary(dim);
  for (auto& m : mats) m = u * m * u.adjoint();
  return make_representation(g, std::move(mats), 1e-8);
}

/// Free action on `copies` relabeled copies of the group, with the Jacobian of
/// a random positive weight.
inline GroupAction random_free_action(const GroupPtr& g, int copies, Rng& rng) {
  const int n = g->order(), m = n * copies;
  std::vector<int> relabel(m);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng.engine());

  std::vector<std::vector<int>> perms(n, std::vector<int>(m));
  for (int gamma = 0; gamma < n; ++gamma)
    for (int c = 0; c < copies; ++c)
      for (int x = 0; x < n; ++x) perms[gamma][relabel[c * n + x]] = relabel[c * n + g->mul(gamma, x)];

  RVec mu(m);
  for (int i = 0; i < m; ++i) mu[i] = 0.5 + 1.5 * rng.uniform();
  RMat jac(n, m);
  for (int gamma = 0; gamma < n; ++gamma)
    for (int x = 0; x < m; ++x) jac(gamma, x) = mu[perms[gamma][x]] / mu[x];
  return make_group_action(g, std::move(perms), std::move(jac));
}

inline Vec basis_vector(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v[i] = 1.0;
  return v;
}

}  // namespace testsupport
