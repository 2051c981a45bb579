#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zest/category.hpp"

namespace zest {

/// Associative zesting data at scalar level: a grading group A (the universal
/// grading or a quotient of it), a normalized symmetric 2-cocycle lambda2 into
/// the invertibles of the trivially graded component, and the scalar 3-cochain
/// lambda3.
struct AssocZesting {
  std::shared_ptr<const CategoryData> base;
  FinAbGroup A;
  /// Quotient map pi1: U(B) -> A as a table over U-element indices.  Identity
  /// when A is the universal grading.
  std::vector<int> pi1;
  Cochain lambda2;  // arity 2, FiniteAbelian(invertibles group)
  Cochain lambda3;  // arity 3, RootsOfUnity

  GroupElem lambda2_elem(int a, int b) const;
  int lambda2_label(int a, int b) const;
  CycNum lambda3_scalar(int a, int b, int c) const { return lambda3.scalar_value({a, b, c}); }
  /// A-degree of a label through pi1.
  int a_degree(int label) const;
};

/// Braided zesting: j maps each a in A to a tensor automorphism of the
/// identity, stored as a character of the universal grading group; t is the
/// scalar of t(a, b): lambda(a,b) -> lambda(b,a) under the symmetric
/// representative.
struct BraidedZesting {
  AssocZesting assoc;
  std::vector<Character> j;  // per A element; characters of U(B)
  Cochain t;                 // arity 2, RootsOfUnity

  bool j_trivial() const;
  CycNum t_scalar(int a, int b) const { return t.scalar_value({a, b}); }
  CycNum t2_scalar(int a, int b) const { return t_scalar(a, b) * t_scalar(b, a); }
  CycNum j_scalar(int a, const GroupElem& u_degree) const { return j[a].value(u_degree); }
  /// omega(a, b; c) of condition (BZ1), evaluated on the pi1-fiber of c.
  CycNum omega(int a, int b, int c) const;
};

struct RibbonZesting {
  BraidedZesting braided;
  Cochain f;  // arity 1, RootsOfUnity
  CycNum f_scalar(int a) const { return f.scalar_value({a}); }
};

/// Convenience: the trivial zesting over the universal grading.
AssocZesting trivial_assoc_zesting(std::shared_ptr<const CategoryData> base);
RibbonZesting trivial_ribbon_zesting(std::shared_ptr<const CategoryData> base);

/// Structural preconditions: normalized tables, symmetric lambda2 valued in
/// the trivially graded component, lambda2 a 2-cocycle.  Throws on violation.
void check_zesting_shape(const AssocZesting& az);

/// The obstruction 4-cochain O4(a1..a4) = (-1)^{nu(l2(a1,a2)) nu(l2(a3,a4))}.
/// Requires the subgroup generated by the lambda2 values to be symmetric
/// pointed; otherwise throws "unsupported" (needs morphism-level data).
Cochain o4(const AssocZesting& az);

/// delta(lambda3) = lambda cup_{c'} lambda, pointwise.
bool check_associative(const AssocZesting& az);

/// All associative zestings with the same lambda2: one per H^3(A, k^x) class.
std::vector<AssocZesting> assoc_torsor(const AssocZesting& az);

/// Scalar equivalence of liftings: lambda3' / lambda3 a coboundary.
bool assoc_equivalent(const AssocZesting& a, const AssocZesting& b);

struct PartialObstructionReport {
  bool first_vanishes = false;
  bool second_vanishes = false;
  std::string detail;
};

PartialObstructionReport partial_obstructions(const AssocZesting& az);

/// O1(a | b, c) = j~_a(lambda2(b,c)) * delta_v(nu^{-1})(a|b,c) * shuffle_1(lambda3).
/// Each O1(a | -, -) is verified to be a 2-cocycle.
BipartiteCochain o1(const AssocZesting& az, const BipartiteCochain& nu,
                    const std::vector<Character>& j_tilde_on_ker,
                    const std::vector<int>& ker_elems);

/// Finds all braided zestings on az: enumerates the j~ torsor, kills O1 by a
/// vertical coboundary, accepts when [O2] = [omega_j], and expands the
/// bicharacter torsor.  Every output passes check_braided.
std::vector<BraidedZesting> solve_braided(const AssocZesting& az);

/// Both scalar braided-zesting equations over all of A^3.
bool check_braided(const BraidedZesting& bz);

/// Twist condition (with the chi / j / t^{(2)} scalars) for all pairs and all
/// universal-degree representatives.
bool check_twist(const RibbonZesting& rz);
/// Ribbon condition f(a) = f(-a) chi_{lambda(a,-a)}(X_a) theta_{lambda(a,-a)}.
bool check_ribbon(const RibbonZesting& rz);

/// All f satisfying the twist and ribbon conditions; empty or a torsor over
/// the characters of A/2A.
std::vector<RibbonZesting> solve_ribbon(const BraidedZesting& bz);

/// N^lambda_{XY}^Z = N_{XY}^{Z (x) lambda2(a,b)^*}; needs fusion, or both
/// labels invertible.
std::vector<int> zested_fusion(const AssocZesting& az, int x, int y);
/// Multiplicity of the unit in X (x)_lambda X (x)_lambda X.
int zested_unit_in_cube(const AssocZesting& az, int x);
/// Zested dual label: dual(X) (x) lambda2(a, -a)^*.
int zested_dual(const AssocZesting& az, int x);

struct ModularData {
  std::vector<CycNum> s;  // dense rank x rank
  std::vector<CycNum> t;  // diagonal
  int rank = 0;
  const CycNum& s_at(int x, int y) const { return s[static_cast<size_t>(x) * rank + y]; }
  CycNum& s_at(int x, int y) { return s[static_cast<size_t>(x) * rank + y]; }
};

ModularData zested_modular_data(const RibbonZesting& rz);
CycNum zested_dimension(const RibbonZesting& rz, int x);
CycNum zested_twist(const RibbonZesting& rz, int x);
CycNum zested_gauss_sum(const RibbonZesting& rz);
CycNum zested_central_charge(const RibbonZesting& rz);

MuegerResult zested_mueger_center(const BraidedZesting& bz);

/// The scalar j_a(X_a) t(a,a) of the zested braid generator image, with its
/// multiplicative order when it is a root of unity.
std::pair<CycNum, std::optional<int>> braid_scalar(const BraidedZesting& bz, int x);

/// Partition of same-lambda braided zestings by braided equivalence
/// (t-ratios differing by an alternating bicharacter); trivial-j regime.
std::vector<std::vector<int>> braided_equivalence_classes(const std::vector<BraidedZesting>& zs);

/// chi characters of every invertible element, cached per category.
std::vector<Character> chi_characters(const CategoryData& cat);

}  // namespace zest
