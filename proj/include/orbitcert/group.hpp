#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbitcert/errors.hpp"

namespace orbitcert {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group presented by its Cayley table. Immutable after construction;
/// element handles are indices 0..n-1 in canonical (construction) order.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, associativity, identity, inverses)
  /// and derives identity/inverse tables. Throws NotAGroup on failure.
  static GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels = {});

  /// Z_n with cayley[i][j] = (i+j) mod n.
  static GroupPtr cyclic(int n);

  /// D_m of order 2m in the element order {e, a, ..., a^{m-1}, b, ab, ..., a^{m-1}b},
  /// with relations a^m = e, b^2 = e, ba = a^{m-1}b.
  static GroupPtr dihedral(int m);

  /// Componentwise product; element (g, h) has index g*|H| + h.
  static GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return cayley_[static_cast<size_t>(i) * n_ + j]; }
  int inv(int i) const { return inverses_[i]; }
  const std::string& label(int i) const { return labels_[i]; }

  bool is_abelian() const;
  /// Smallest k >= 1 with g^k = e, by iterating the Cayley table.
  int element_order(int g) const;

  /// Groups compare equal iff their Cayley tables are identical (labels are cosmetic).
  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && cayley_ == other.cayley_;
  }

  /// Re-runs the full axiom check; throws NotAGroup if any invariant fails.
  void validate() const;

 private:
  FiniteGroup(int n, std::vector<int> cayley, std::vector<std::string> labels);

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> cayley_;  // row-major n*n
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
};

/// Checks that two operands live over the same group (by table identity).
inline void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (!(a == b)) throw GroupMismatch();
}

/// Element handle bound to its parent group.
struct GroupElement {
  GroupPtr group;
  int index = 0;
};

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

}  // namespace orbitcert
