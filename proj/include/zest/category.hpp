#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zest/cochain.hpp"

namespace zest {

/// Dense fusion multiplicities N_{XY}^Z over label indices.
struct FusionTable {
  int n = 0;
  std::vector<int> mult;  // size n^3, index (x * n + y) * n + z

  FusionTable() = default;
  explicit FusionTable(int labels) : n(labels), mult(static_cast<size_t>(labels) * labels * labels, 0) {}
  int at(int x, int y, int z) const { return mult[(static_cast<size_t>(x) * n + y) * n + z]; }
  int& at(int x, int y, int z) { return mult[(static_cast<size_t>(x) * n + y) * n + z]; }
  bool operator==(const FusionTable& o) const { return n == o.n && mult == o.mult; }
};

/// Skeletal presentation of a (pre)modular category.  Optional fields are
/// tracked by capability flags; operations fail fast when a needed field is
/// absent.  Label 0 is the unit.  Immutable after load/validation.
struct CategoryData {
  std::vector<std::string> labels;
  std::optional<std::vector<int>> dual;
  std::optional<FusionTable> fusion;
  std::optional<std::vector<CycNum>> dims;
  std::optional<std::vector<CycNum>> twists;
  std::optional<std::vector<CycNum>> smatrix;  // unnormalized, row-major, S_{X,1} = dim X

  struct Grading {
    FinAbGroup group;
    std::vector<GroupElem> degree;  // per label
  };
  std::optional<Grading> grading;

  struct Invertibles {
    FinAbGroup group;
    std::vector<int> embed;                // group element index -> label index
    std::vector<std::vector<int>> action;  // action[c][x] = label of g_c (x) X
  };
  std::optional<Invertibles> invertibles;

  /// Asserted (not derivable from partial data): the centralizer of the
  /// adjoint subcategory lies in the pointed part, enabling the Mueger-center
  /// formula for zestings.  True for all gallery entries that use it.
  bool adjoint_centralizer_pointed = false;

  int rank() const { return static_cast<int>(labels.size()); }
  const CycNum& s_at(int x, int y) const { return (*smatrix)[static_cast<size_t>(x) * rank() + y]; }
  CycNum& s_at(int x, int y) { return (*smatrix)[static_cast<size_t>(x) * rank() + y]; }
  int invertible_label(const GroupElem& c) const { return invertibles->embed[invertibles->group.index(c)]; }
  /// g_c (x) X as a label; requires invertibles.
  int act(const GroupElem& c, int x) const { return invertibles->action[invertibles->group.index(c)][x]; }
  GroupElem degree_of(int x) const { return grading->degree[x]; }
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Runs every invariant the present capabilities allow; report only.
ValidationReport validate(const CategoryData& cat);

/// Monodromy scalar chi_g(X) = theta_{g(x)X} / (theta_g theta_X) of an
/// invertible g with X.  Requires twists and the invertible action.
CycNum chi_scalar(const CategoryData& cat, int g_label, int x_label);

/// chi of the invertible subgroup element c as a character of the grading
/// group, verified constant on graded components.
Character chi_character(const CategoryData& cat, const GroupElem& c);

struct GradingResult {
  FinAbGroup group;            // Z/N' with N' = order of chi_g
  std::vector<int> degree;     // per label, in [0, N')
  CycNum q;                    // chosen primitive root: chi_g(X) = q^degree
  bool faithful = false;
};

/// Grading by the character group of <g>/ker(chi), identified with Z/N' via
/// the primitive root q = chi_g on the designated degree-one object.
GradingResult compute_grading(const CategoryData& cat, int g_label, int degree_one_label);

struct MuegerResult {
  std::vector<int> labels;  // transparent labels found
  bool complete = false;    // false when only invertibles could be tested
  std::string route;
};

MuegerResult mueger_center(const CategoryData& cat);

/// Gauss sum tau+ = sum dim^2 theta and its phase as an exact root of unity.
CycNum gauss_sum(const CategoryData& cat);
CycNum central_charge(const CategoryData& cat);  // throws when tau+ = 0
/// tau / |tau| as an exact root of unity (throws if it is not one).
CycNum phase_as_root_of_unity(const CycNum& tau);

/// Exact singularity test by Gaussian elimination over the cyclotomic field.
bool smatrix_invertible(const CategoryData& cat);

/// Fusion recomputed from S via the Verlinde formula; throws if S singular.
FusionTable verlinde_fusion(const CategoryData& cat);
ValidationReport verlinde_check(const CategoryData& cat);

/// Pointed braided category data: cyclic group with a quadratic twist form.
struct PointedForm {
  FinAbGroup group;            // cyclic in all gallery uses
  std::vector<CycNum> theta;   // Theta on elements, indexed by group element
};

enum class PointedClass { Modular, Tannakian, SuperTannakian, DegenerateOther };

struct PointedClassification {
  PointedClass cls;
  int m = 1;          // |Z_2(C)|
  GroupElem h;        // generator of Z_2(C), h = g^{ord(Theta_g^2)}
  CycNum theta_h;
};

/// Classification of C(C, Theta) for cyclic C with chosen generator g = e_1.
/// Throws if Theta is not a quadratic form.
PointedClassification classify_pointed(const PointedForm& p);

bool is_quadratic_form(const PointedForm& p);

/// Sum of dim^2 over all labels.
CycNum global_dim(const CategoryData& cat);

/// The balancing orientation used throughout:
///   sum_Z N_{XY}^Z theta_Z dim Z = theta_X theta_Y S_{X, dual(Y)}.
/// Calibrated once on a 3-object pointed category rather than hard-coded.
enum class BalancingOrientation { DualSecond, PlainSecond };
BalancingOrientation balancing_orientation();

}  // namespace zest
