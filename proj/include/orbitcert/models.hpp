#pragma once

#include "orbitcert/helson.hpp"

namespace orbitcert {

/// The 10-dimensional permutation model of the dihedral group D3: one fixed
/// point, one orbit of size 3 with point stabilizers {e, b}-conjugate (the
/// base point is stabilized by exactly {e, b}), and one free orbit of size 6.
/// The brackets of the three marked basis vectors are the sum of all rho*, the
/// rank-3 operator I + rho(b)*, and the identity.
struct D3Model {
  GroupPtr group;
  GroupAction action;
  Representation rep;
  Vec fixed_vector;     // basis vector of the fixed point
  Vec boundary_vector;  // base point of the size-3 orbit
  Vec interior_vector;  // base point of the free orbit

  int index_b() const { return 3; }  // index of b in {e, a, a^2, b, ab, a^2 b}
};

D3Model make_d3_model();

}  // namespace orbitcert
