#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zest/gallery.hpp"

using namespace zest;

namespace {

CycNum zeta(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

CategoryData pointed_z3_modular() {
  // C(Z/3, Q) with Q(a) = e^{2 pi i a^2/3}
  std::vector<CycNum> theta = {CycNum::one(), zeta(3, 1), zeta(3, 1)};
  return pointed(FinAbGroup::cyclic(3), theta);
}

CategoryData svec() {
  std::vector<CycNum> theta = {CycNum::one(), -CycNum::one()};
  return pointed(FinAbGroup::cyclic(2), theta);
}

}  // namespace

TEST_CASE("validate: gallery su3_3 passes every check") {
  const auto& e = builtin("su3_3");
  ValidationReport rep = validate(*e.cat);
  for (const auto& c : rep.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("validate: unit twist failure is reported") {
  CategoryData cat = pointed_z3_modular();
  (*cat.twists)[0] = -CycNum::one();
  ValidationReport rep = validate(cat);
  const CheckResult* c = rep.find("unit twist");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
}

TEST_CASE("validate: perturbed S entry fails symmetry or balancing") {
  CategoryData cat = *builtin("su3_3").cat;
  cat.s_at(4, 5) = cat.s_at(4, 5) * zeta(18, 1);
  ValidationReport rep = validate(cat);
  const CheckResult* sym = rep.find("S symmetric");
  const CheckResult* bal = rep.find("balancing");
  REQUIRE(sym != nullptr);
  REQUIRE(bal != nullptr);
  CHECK((!sym->pass || !bal->pass));
  // and a symmetric perturbation still trips balancing
  CategoryData cat2 = *builtin("su3_3").cat;
  cat2.s_at(4, 5) = cat2.s_at(4, 5) * zeta(18, 1);
  cat2.s_at(5, 4) = cat2.s_at(5, 4) * zeta(18, 1);
  ValidationReport rep2 = validate(cat2);
  CHECK_FALSE(rep2.all_pass());
}

TEST_CASE("chi_scalar") {
  const auto& e = builtin("su3_3");
  const CategoryData& cat = *e.cat;

  SUBCASE("chi of the unit is 1 on everything") {
    for (int x = 0; x < cat.rank(); ++x) CHECK(chi_scalar(cat, 0, x) == CycNum::one());
  }

  SUBCASE("SU(3)_3: chi_g(X1) = q = e^{-2 pi i/3}") {
    CHECK(chi_scalar(cat, 1, 4) == zeta(3, -1));
  }

  SUBCASE("P(N,k): chi_{g^s}(g^t) = zeta_{2N}^{-2stk}") {
    for (auto [N, k] : std::vector<std::pair<int, int>>{{3, 3}, {4, 4}, {4, 2}}) {
      PointedForm pf = su_pointed(N, k);
      CategoryData pc = pointed(pf.group, pf.theta);
      for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) {
          CycNum lhs = chi_scalar(pc, pc.invertible_label(GroupElem{{s}}),
                                  pc.invertible_label(GroupElem{{t}}));
          CHECK(lhs == zeta(2 * N, -2L * s * t * k));
        }
    }
  }

  SUBCASE("chi_g is multiplicative and constant on graded components") {
    Character chi_g = chi_character(cat, GroupElem{{1}});
    Character chi_g2 = chi_character(cat, GroupElem{{2}});
    CHECK(chi_g.mul(chi_g) == chi_g2);
  }
}

TEST_CASE("compute_grading") {
  SUBCASE("su3_3: components {4,3,3} with X_i in component 1") {
    const auto& e = builtin("su3_3");
    GradingResult gr = compute_grading(*e.cat, e.generator_label, e.degree_one_label);
    CHECK(gr.group.order() == 3);
    CHECK(gr.faithful);
    std::vector<int> count(3, 0);
    for (int d : gr.degree) ++count[d];
    CHECK(count == std::vector<int>{4, 3, 3});
    CHECK(gr.degree[4] == 1);
    CHECK(gr.degree[5] == 1);
    CHECK(gr.degree[6] == 1);
    // agrees with the stored grading
    for (int x = 0; x < e.cat->rank(); ++x)
      CHECK(gr.degree[x] == e.cat->grading->degree[x].residues[0]);
  }

  SUBCASE("su4_4: component ranks (10, 8, 9, 8)") {
    const auto& e = builtin("su4_4");
    GradingResult gr = compute_grading(*e.cat, e.generator_label, e.degree_one_label);
    CHECK(gr.group.order() == 4);
    CHECK(gr.faithful);
    std::vector<int> count(4, 0);
    for (int d : gr.degree) ++count[d];
    CHECK(count == std::vector<int>{10, 8, 9, 8});
    for (int x = 0; x < e.cat->rank(); ++x)
      CHECK(gr.degree[x] == e.cat->grading->degree[x].residues[0]);
  }

  SUBCASE("pointed with trivial form: grading trivial") {
    std::vector<CycNum> theta(3, CycNum::one());
    CategoryData c = pointed(FinAbGroup::cyclic(3), theta);
    GradingResult gr = compute_grading(c, 1, 0);
    CHECK(gr.group.order() == 1);
    for (int d : gr.degree) CHECK(d == 0);
  }
}

TEST_CASE("mueger_center") {
  SUBCASE("su3_3 is modular: center = {1}") {
    MuegerResult r = mueger_center(*builtin("su3_3").cat);
    CHECK(r.complete);
    CHECK(r.labels == std::vector<int>{0});
  }

  SUBCASE("P(4,2) standalone: center generated by g^2") {
    PointedForm pf = su_pointed(4, 2);
    CategoryData pc = pointed(pf.group, pf.theta);
    MuegerResult r = mueger_center(pc);
    CHECK(r.complete);
    CHECK(r.labels == std::vector<int>{0, 2});
  }

  SUBCASE("sVec: everything transparent") {
    MuegerResult r = mueger_center(svec());
    CHECK(r.labels == std::vector<int>{0, 1});
  }
}

TEST_CASE("central_charge") {
  SUBCASE("C(Z/3, Q): charge i, |tau|^2 = 3") {
    CategoryData c = pointed_z3_modular();
    CycNum tau = gauss_sum(c);
    CHECK(tau * tau.conjugate() == CycNum::from_int(3));
    CHECK(central_charge(c) == zeta(4, 1));
  }

  SUBCASE("su4_4 from the data table: zeta_16^{-1}") {
    CHECK(central_charge(*builtin("su4_4").cat) == zeta(16, -1));
  }

  SUBCASE("sVec: tau+ = 0 is an error") {
    CHECK_THROWS(central_charge(svec()));
  }
}

TEST_CASE("verlinde_check") {
  SUBCASE("su3_3 passes") {
    auto rep = verlinde_check(*builtin("su3_3").cat);
    CHECK(rep.all_pass());
  }
  SUBCASE("nondegenerate pointed category passes") {
    auto rep = verlinde_check(pointed_z3_modular());
    CHECK(rep.all_pass());
  }
  SUBCASE("symmetric category: S singular") {
    auto rep = verlinde_check(svec());
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.checks[0].detail == "S singular");
  }
}

TEST_CASE("classify_pointed") {
  SUBCASE("P(3,3): Tannakian, m = 3, Theta_h = 1") {
    auto cls = classify_pointed(su_pointed(3, 3));
    CHECK(cls.cls == PointedClass::Tannakian);
    CHECK(cls.m == 3);
    CHECK(cls.theta_h == CycNum::one());
  }
  SUBCASE("P(4,4): super-Tannakian, m = 4") {
    auto cls = classify_pointed(su_pointed(4, 4));
    CHECK(cls.cls == PointedClass::SuperTannakian);
    CHECK(cls.m == 4);
    CHECK(cls.theta_h == -CycNum::one());
  }
  SUBCASE("P(4,2): degenerate with Z_2(C) = <g^2>, m = 2, Theta_h = 1") {
    // Theta_g^2 = -1 has order 2 < N = 4, so the form is neither symmetric
    // nor nondegenerate; the transparent subgroup is <g^2>.
    auto cls = classify_pointed(su_pointed(4, 2));
    CHECK(cls.cls == PointedClass::DegenerateOther);
    CHECK(cls.m == 2);
    CHECK(cls.h == GroupElem{{2}});
    CHECK(cls.theta_h == CycNum::one());
  }
  SUBCASE("modular pointed form") {
    PointedForm pf{FinAbGroup::cyclic(3),
                   {CycNum::one(), zeta(3, 1), zeta(3, 1)}};
    CHECK(classify_pointed(pf).cls == PointedClass::Modular);
  }
  SUBCASE("non-quadratic form rejected") {
    PointedForm bad{FinAbGroup::cyclic(4),
                    {CycNum::one(), zeta(4, 1), CycNum::one(), -zeta(4, 1)}};
    CHECK_THROWS(classify_pointed(bad));
  }
}

TEST_CASE("balancing holds on every gallery category carrying full data") {
  // orientation calibrated on the 3-object pointed category
  CHECK(balancing_orientation() == BalancingOrientation::DualSecond);
  for (const auto& name : gallery_names()) {
    const auto& cat = *builtin(name).cat;
    if (!cat.smatrix || !cat.fusion) continue;
    ValidationReport rep = validate(cat);
    const CheckResult* bal = rep.find("balancing");
    REQUIRE(bal != nullptr);
    CHECK(bal->pass);
  }
}

TEST_CASE("modularity: S Sbar^T = dim(B) I for su3_3") {
  const CategoryData& cat = *builtin("su3_3").cat;
  const int n = cat.rank();
  CycNum d2 = global_dim(cat);
  CHECK(d2 == CycNum::from_int(36));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CycNum acc = CycNum::zero();
      for (int w = 0; w < n; ++w) acc = acc + cat.s_at(x, w) * cat.s_at(y, w).conjugate();
      CHECK(acc == (x == y ? d2 : CycNum::zero()));
    }
}
