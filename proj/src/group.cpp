#include "zest/group.hpp"

#include <numeric>
#include <stdexcept>

namespace zest {

int FinAbGroup::order() const {
  int n = 1;
  for (int c : cyclic_orders) n *= c;
  return n;
}

int FinAbGroup::exponent() const {
  int e = 1;
  for (int c : cyclic_orders) e = std::lcm(e, c);
  return e;
}

GroupElem FinAbGroup::element(int index) const {
  GroupElem e = zero();
  for (int i = rank() - 1; i >= 0; --i) {
    e.residues[i] = index % cyclic_orders[i];
    index /= cyclic_orders[i];
  }
  return e;
}

int FinAbGroup::index(const GroupElem& e) const {
  int idx = 0;
  for (int i = 0; i < rank(); ++i) idx = idx * cyclic_orders[i] + (e.residues[i] % cyclic_orders[i]);
  return idx;
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem e = zero();
  for (int i = 0; i < rank(); ++i) e.residues[i] = (a.residues[i] + b.residues[i]) % cyclic_orders[i];
  return e;
}

GroupElem FinAbGroup::neg(const GroupElem& a) const {
  GroupElem e = zero();
  for (int i = 0; i < rank(); ++i) e.residues[i] = (cyclic_orders[i] - a.residues[i]) % cyclic_orders[i];
  return e;
}

GroupElem FinAbGroup::scale(int k, const GroupElem& a) const {
  GroupElem e = zero();
  for (int i = 0; i < rank(); ++i) {
    long v = static_cast<long>(k) * a.residues[i] % cyclic_orders[i];
    if (v < 0) v += cyclic_orders[i];
    e.residues[i] = static_cast<int>(v);
  }
  return e;
}

bool FinAbGroup::is_zero(const GroupElem& e) const {
  for (int r : e.residues)
    if (r != 0) return false;
  return true;
}

int FinAbGroup::elem_order(const GroupElem& e) const {
  int o = 1;
  for (int i = 0; i < rank(); ++i) {
    int g = std::gcd(e.residues[i], cyclic_orders[i]);
    o = std::lcm(o, cyclic_orders[i] / g);
  }
  return o;
}

bool Character::is_trivial() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

CycNum Character::value(const GroupElem& e) const {
  CycNum v = CycNum::one();
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0 || e.residues[i] == 0) continue;
    v = v * CycNum::root_of_unity(group.cyclic_orders[i],
                                  static_cast<long>(exponents[i]) * e.residues[i]);
  }
  return v;
}

long Character::value_exponent(const GroupElem& e, long L) const {
  long k = 0;
  for (size_t i = 0; i < exponents.size(); ++i) {
    int n = group.cyclic_orders[i];
    if (L % n != 0) throw std::invalid_argument("value_exponent: L not divisible by generator order");
    k += (L / n) * (static_cast<long>(exponents[i]) * e.residues[i] % n);
  }
  k %= L;
  return k < 0 ? k + L : k;
}

Character Character::mul(const Character& o) const {
  Character out{group, exponents};
  for (size_t i = 0; i < exponents.size(); ++i)
    out.exponents[i] = (exponents[i] + o.exponents[i]) % group.cyclic_orders[i];
  return out;
}

Character Character::inv() const {
  Character out{group, exponents};
  for (size_t i = 0; i < exponents.size(); ++i)
    out.exponents[i] = (group.cyclic_orders[i] - exponents[i]) % group.cyclic_orders[i];
  return out;
}

bool Character::operator==(const Character& o) const {
  return group == o.group && exponents == o.exponents;
}

Bicharacter Bicharacter::trivial(const FinAbGroup& g) {
  Bicharacter b;
  b.group = g;
  b.m.assign(g.rank(), std::vector<int>(g.rank(), 0));
  return b;
}

CycNum Bicharacter::value(const GroupElem& a, const GroupElem& b) const {
  CycNum v = CycNum::one();
  for (int i = 0; i < group.rank(); ++i) {
    for (int j = 0; j < group.rank(); ++j) {
      if (m[i][j] == 0) continue;
      int d = std::gcd(group.cyclic_orders[i], group.cyclic_orders[j]);
      long e = static_cast<long>(m[i][j]) * a.residues[i] % d * b.residues[j] % d;
      if (e != 0) v = v * CycNum::root_of_unity(d, e);
    }
  }
  return v;
}

bool Bicharacter::is_alternating() const {
  const int n = group.order();
  for (int idx = 0; idx < n; ++idx) {
    GroupElem a = group.element(idx);
    if (!(value(a, a) == CycNum::one())) return false;
  }
  return true;
}

std::vector<Character> enumerate_characters(const FinAbGroup& a) {
  std::vector<Character> out;
  const int n = a.order();
  out.reserve(n);
  for (int idx = 0; idx < n; ++idx) {
    GroupElem e = a.element(idx);
    out.push_back(Character{a, e.residues});
  }
  return out;
}

std::vector<Bicharacter> enumerate_bicharacters(const FinAbGroup& a) {
  const int r = a.rank();
  std::vector<int> lim(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) lim[i * r + j] = std::gcd(a.cyclic_orders[i], a.cyclic_orders[j]);
  std::vector<Bicharacter> out;
  std::vector<int> cur(r * r, 0);
  while (true) {
    Bicharacter b;
    b.group = a;
    b.m.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) b.m[i][j] = cur[i * r + j];
    out.push_back(std::move(b));
    int pos = r * r - 1;
    while (pos >= 0) {
      if (++cur[pos] < lim[pos]) break;
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<Bicharacter> enumerate_alternating_bicharacters(const FinAbGroup& a) {
  std::vector<Bicharacter> out;
  for (auto& b : enumerate_bicharacters(a))
    if (b.is_alternating()) out.push_back(std::move(b));
  return out;
}

}  // namespace zest
