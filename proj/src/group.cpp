#include "orbitcert/group.hpp"

#include <algorithm>

namespace orbitcert {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  return labels;
}

}  // namespace

FiniteGroup::FiniteGroup(int n, std::vector<int> cayley, std::vector<std::string> labels)
    : n_(n), cayley_(std::move(cayley)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(n_);
  if (static_cast<int>(labels_.size()) != n_) throw NotAGroup("label count does not match order");

  // Latin square: each row and column is a permutation of 0..n-1.
  for (int i = 0; i < n_; ++i) {
    std::vector<bool> row(n_, false), col(n_, false);
    for (int j = 0; j < n_; ++j) {
      int r = mul(i, j), c = mul(j, i);
      if (r < 0 || r >= n_ || c < 0 || c >= n_)
        throw NotAGroup("entry out of range at row " + std::to_string(i));
      if (row[r]) throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
      if (col[c]) throw NotAGroup("column " + std::to_string(i) + " is not a permutation");
      row[r] = col[c] = true;
    }
  }

  // Two-sided identity.
  identity_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int j = 0; j < n_ && ok; ++j) ok = mul(e, j) == j && mul(j, e) == j;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw NotAGroup("no identity element");

  // Associativity, exhaustively.
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k)))
          throw NotAGroup("associativity fails at (" + std::to_string(i) + ", " + std::to_string(j) +
                          ", " + std::to_string(k) + ")");

  // Two-sided inverses.
  inverses_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (mul(i, j) == identity_ && mul(j, i) == identity_) {
        inverses_[i] = j;
        break;
      }
    }
    if (inverses_[i] < 0) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
  }
}

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                        std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return GroupPtr(new FiniteGroup(n, std::move(flat), std::move(labels)));
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw NotAGroup("cyclic group order must be positive");
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return GroupPtr(new FiniteGroup(n, std::move(flat), std::move(labels)));
}

GroupPtr FiniteGroup::dihedral(int m) {
  if (m < 3) throw NotAGroup("dihedral parameter must be >= 3");
  const int n = 2 * m;
  // index i < m: a^i; index m+i: a^i b
  auto compose = [m](int x, int y) {
    const int xr = x % m, yr = y % m;
    const bool xf = x >= m, yf = y >= m;
    // (a^i b^s)(a^j b^t): b a^j = a^{-j} b, so the rotation part is i + j or i - j.
    int rot = xf ? (xr - yr + m) % m : (xr + yr) % m;
    bool flip = xf != yf;
    return (flip ? m : 0) + rot;
  };
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = compose(i, j);
  std::vector<std::string> labels(n);
  for (int i = 0; i < m; ++i) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[m + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
  }
  return GroupPtr(new FiniteGroup(n, std::move(flat), std::move(labels)));
}

GroupPtr FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int gi = i / nh, hi = i % nh;
    for (int j = 0; j < n; ++j) {
      const int gj = j / nh, hj = j % nh;
      flat[static_cast<size_t>(i) * n + j] = g.mul(gi, gj) * nh + h.mul(hi, hj);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "(" + g.label(i / nh) + "," + h.label(i % nh) + ")";
  return GroupPtr(new FiniteGroup(n, std::move(flat), std::move(labels)));
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

int FiniteGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

void FiniteGroup::validate() const {
  // Reconstruct from the table; the constructor performs the full axiom check.
  std::vector<std::vector<int>> table(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) table[i][j] = mul(i, j);
  auto copy = from_cayley_table(table);
  if (copy->identity() != identity_) throw NotAGroup("stored identity is inconsistent");
  for (int i = 0; i < n_; ++i)
    if (copy->inv(i) != inverses_[i]) throw NotAGroup("stored inverses are inconsistent");
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (!x.group || !y.group) throw GroupMismatch();
  require_same_group(*x.group, *y.group);
  return {x.group, x.group->mul(x.index, y.index)};
}

GroupElement inverse(const GroupElement& x) {
  if (!x.group) throw GroupMismatch();
  return {x.group, x.group->inv(x.index)};
}

}  // namespace orbitcert
