#pragma once

#include <vector>

#include "zest/cyclotomic.hpp"

namespace zest {

/// Element of a finite abelian group, component-wise reduced residues.
struct GroupElem {
  std::vector<int> residues;
  bool operator==(const GroupElem& o) const { return residues == o.residues; }
  bool operator<(const GroupElem& o) const { return residues < o.residues; }
};

/// Finite abelian group presented as a product of cyclic groups Z/n_i.
/// Element enumeration is total and deterministic (lexicographic, first
/// factor slowest).
struct FinAbGroup {
  std::vector<int> cyclic_orders;

  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int> orders) : cyclic_orders(std::move(orders)) {}
  static FinAbGroup cyclic(int n) { return FinAbGroup({n}); }
  static FinAbGroup trivial() { return FinAbGroup({1}); }

  int rank() const { return static_cast<int>(cyclic_orders.size()); }
  int order() const;
  int exponent() const;  // lcm of the cyclic orders

  GroupElem zero() const { return GroupElem{std::vector<int>(cyclic_orders.size(), 0)}; }
  GroupElem element(int index) const;
  int index(const GroupElem& e) const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }
  GroupElem scale(int k, const GroupElem& a) const;
  bool is_zero(const GroupElem& e) const;
  int elem_order(const GroupElem& e) const;

  bool operator==(const FinAbGroup& o) const { return cyclic_orders == o.cyclic_orders; }
};

/// Linear character of a FinAbGroup: value on generator i is
/// zeta_{n_i}^{exponents[i]}.  Multiplicative on the whole group.
struct Character {
  FinAbGroup group;
  std::vector<int> exponents;

  static Character trivial(const FinAbGroup& g) {
    return Character{g, std::vector<int>(g.cyclic_orders.size(), 0)};
  }
  bool is_trivial() const;
  CycNum value(const GroupElem& e) const;
  /// Exponent of the value inside mu_L; L must be a multiple of the group exponent.
  long value_exponent(const GroupElem& e, long L) const;
  Character mul(const Character& o) const;
  Character inv() const;
  bool operator==(const Character& o) const;
  bool operator<(const Character& o) const { return exponents < o.exponents; }
};

/// Bicharacter of A: multiplicative in each slot, determined by the matrix of
/// values on generator pairs (orders divide gcd(n_i, n_j)).
struct Bicharacter {
  FinAbGroup group;
  std::vector<std::vector<int>> m;  // m[i][j] mod gcd(n_i, n_j)

  static Bicharacter trivial(const FinAbGroup& g);
  CycNum value(const GroupElem& a, const GroupElem& b) const;
  bool is_alternating() const;  // trivial on the diagonal
  bool operator==(const Bicharacter& o) const { return m == o.m; }
};

std::vector<Character> enumerate_characters(const FinAbGroup& a);
std::vector<Bicharacter> enumerate_bicharacters(const FinAbGroup& a);
std::vector<Bicharacter> enumerate_alternating_bicharacters(const FinAbGroup& a);

}  // namespace zest
