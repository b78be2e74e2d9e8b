#include "orbitcert/models.hpp"

namespace orbitcert {

D3Model make_d3_model() {
  GroupPtr g = FiniteGroup::dihedral(3);
  const int n = g->order();

  // Points 0: fixed; 1..3: cosets of {e, b} (reps e, a, a^2); 4..9: the group itself.
  const int m = 10;
  auto coset_of = [&](int x) {
    // coset representative among {e, a, a^2}: x {e,b} = {x, xb}
    const int xb = g->mul(x, 3);
    return std::min(x, xb);  // 0, 1 or 2 by construction
  };

  std::vector<std::vector<int>> perms(n, std::vector<int>(m));
  for (int gamma = 0; gamma < n; ++gamma) {
    perms[gamma][0] = 0;
    for (int c = 0; c < 3; ++c) perms[gamma][1 + c] = 1 + coset_of(g->mul(gamma, c));
    for (int x = 0; x < n; ++x) perms[gamma][4 + x] = 4 + g->mul(gamma, x);
  }

  GroupAction action = make_group_action(g, std::move(perms));
  Representation rep = action_representation(action);

  Vec fixed = Vec::Zero(m), boundary = Vec::Zero(m), interior = Vec::Zero(m);
  fixed[0] = 1.0;
  boundary[1] = 1.0;   // coset {e, b}: stabilized by exactly e and b
  interior[4] = 1.0;   // group element e: free orbit
  return D3Model{std::move(g), std::move(action), std::move(rep), std::move(fixed), std::move(boundary),
                 std::move(interior)};
}

}  // namespace orbitcert
