#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zest/group.hpp"

namespace zest {

/// Element of a coefficient module: residue vector with respect to the
/// module's cyclic orders.  RootsOfUnity modules have a single order L and
/// the residue is the exponent of zeta_L; signs (-1)^e become inversion.
using ModElem = std::vector<long>;

/// Coefficient module for cochains: either mu_L inside the CycNum units or a
/// finite abelian group written additively.  The G-action is trivial
/// throughout (all zesting formulas use trivial action).
struct CoeffModule {
  enum class Kind { RootsOfUnity, FiniteAbelian };
  Kind kind = Kind::RootsOfUnity;
  long root_order = 1;  // L, for RootsOfUnity
  FinAbGroup grp;       // for FiniteAbelian

  static CoeffModule roots(long L) {
    CoeffModule m;
    m.kind = Kind::RootsOfUnity;
    m.root_order = L;
    return m;
  }
  static CoeffModule finite_abelian(FinAbGroup g) {
    CoeffModule m;
    m.kind = Kind::FiniteAbelian;
    m.grp = std::move(g);
    return m;
  }

  std::vector<long> orders() const;
  int rank() const { return kind == Kind::RootsOfUnity ? 1 : grp.rank(); }
  ModElem zero() const { return ModElem(rank(), 0); }
  ModElem normalize(ModElem e) const;
  ModElem add(const ModElem& a, const ModElem& b) const;
  ModElem neg(const ModElem& a) const;
  ModElem sub(const ModElem& a, const ModElem& b) const { return add(a, neg(b)); }
  ModElem scale(long k, const ModElem& a) const;
  bool is_zero(const ModElem& a) const;
  /// RootsOfUnity only: the CycNum value zeta_L^e.
  CycNum scalar(const ModElem& a) const;
  /// RootsOfUnity only: encode a CycNum root of unity (must lie in mu_L).
  ModElem from_scalar(const CycNum& v) const;
  bool operator==(const CoeffModule& o) const;
};

/// Normalized n-cochain on a finite abelian group with values in a coefficient
/// module, stored as a dense table over G^n in lexicographic element order.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, FinAbGroup g, CoeffModule m);
  static Cochain identity(int arity, const FinAbGroup& g, const CoeffModule& m) {
    return Cochain(arity, g, m);
  }

  int arity() const { return arity_; }
  const FinAbGroup& group() const { return group_; }
  const CoeffModule& module() const { return module_; }
  const std::vector<ModElem>& table() const { return table_; }

  const ModElem& value(const std::vector<int>& elem_indices) const;
  void set(const std::vector<int>& elem_indices, ModElem v);
  CycNum scalar_value(const std::vector<int>& elem_indices) const;

  bool is_identity() const;
  bool normalized() const;
  bool operator==(const Cochain& o) const;

  /// Pointwise module addition / inversion (multiplicative notation for roots).
  Cochain mul(const Cochain& o) const;
  Cochain inverse() const;

  /// Standard differential with trivial action; raises arity by one.
  Cochain differential() const;
  bool is_cocycle() const { return differential().is_identity(); }

  /// Re-express the values of a RootsOfUnity cochain inside mu_{L'}; L | L'.
  Cochain lift_root_order(long Lp) const;

  int flat_index(const std::vector<int>& elem_indices) const;
  std::vector<int> unflatten(int flat) const;

 private:
  int arity_ = 0;
  FinAbGroup group_;
  CoeffModule module_;
  std::vector<ModElem> table_;
};

/// Cochain on A^p | A^q with the two differentials of the double complex.
class BipartiteCochain {
 public:
  BipartiteCochain() = default;
  BipartiteCochain(int p, int q, FinAbGroup g, CoeffModule m);

  int p() const { return p_; }
  int q() const { return q_; }
  const FinAbGroup& group() const { return group_; }
  const CoeffModule& module() const { return module_; }

  const ModElem& value(const std::vector<int>& left, const std::vector<int>& right) const;
  void set(const std::vector<int>& left, const std::vector<int>& right, ModElem v);

  BipartiteCochain delta_h() const;  // (p, q) -> (p+1, q)
  BipartiteCochain delta_v() const;  // (p, q) -> (p, q+1)

  bool is_identity() const;
  BipartiteCochain mul(const BipartiteCochain& o) const;
  BipartiteCochain inverse() const;
  bool operator==(const BipartiteCochain& o) const;

  /// The arity-q slice a |-> F(a | -, ..., -).
  Cochain slice(int left_elem_index) const;

 private:
  int p_ = 0, q_ = 0;
  FinAbGroup group_;
  CoeffModule module_;
  std::vector<ModElem> table_;
  int flat(const std::vector<int>& l, const std::vector<int>& r) const;
};

/// p-th shuffle of an arity-n cochain: sum over (p, n-p)-shuffles with signs.
BipartiteCochain shuffle(const Cochain& f, int p);

enum class CyclicCochainKind { Beta, Gamma, Lambda };

/// The cyclic-group cochains beta_nu, gamma_nu, lambda_nu on Z/N with
/// representatives 0 <= i, j, k < N.  Lambda requires N * nu = 0.
Cochain cyclic_cochain(CyclicCochainKind kind, int N, const ModElem& nu, const CoeffModule& m);

/// Solve delta(g) = f for a cocycle f of arity 2 or 3; g is normalized.
/// For RootsOfUnity modules the witness is searched in mu_{L * exp(G)}, which
/// decides solvability over the full unit group k^x.
std::optional<Cochain> coboundary_witness(const Cochain& f);

/// Solve the vertical coboundary problem per left slot: nu with
/// delta_v(nu)(a | b, c) = F(a | b, c); nu is a (1,1)-bipartite cochain.
std::optional<BipartiteCochain> vertical_witness(const BipartiteCochain& f);

/// The 4-cochain (a1..a4) |-> pairing(l2(a1,a2), l2(a3,a4)) where the pairing
/// is (-1)^{nu(x) nu(y)} for an additive map nu: S -> Z/2.  Values in mu_2.
Cochain cup_with_pairing(const Cochain& l2, const std::vector<int>& nu_of_s);

}  // namespace zest
