#include "zest/category.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zest {

namespace {

std::string label_or_index(const CategoryData& cat, int x) {
  if (x >= 0 && x < cat.rank()) return cat.labels[x];
  return "#" + std::to_string(x);
}

void add_check(ValidationReport& rep, const std::string& name, bool pass,
               const std::string& detail = "") {
  rep.checks.push_back({name, pass, detail});
}

}  // namespace

CycNum chi_scalar(const CategoryData& cat, int g_label, int x_label) {
  if (!cat.twists) throw std::logic_error("chi_scalar: twists missing");
  if (!cat.invertibles) throw std::logic_error("chi_scalar: invertibles missing");
  const auto& inv = *cat.invertibles;
  int g_elem = -1;
  for (int c = 0; c < inv.group.order(); ++c)
    if (inv.embed[c] == g_label) g_elem = c;
  if (g_elem < 0) throw std::invalid_argument("chi_scalar: label is not a listed invertible");
  int gx = inv.action[g_elem][x_label];
  const auto& th = *cat.twists;
  return th[gx] / (th[g_label] * th[x_label]);
}

Character chi_character(const CategoryData& cat, const GroupElem& c) {
  if (!cat.grading) throw std::logic_error("chi_character: grading missing");
  const auto& gr = *cat.grading;
  const FinAbGroup& u = gr.group;
  int g_label = cat.invertible_label(c);

  // chi on a label with degree e_i determines the exponent on generator i.
  std::vector<int> exps(u.rank(), 0);
  for (int i = 0; i < u.rank(); ++i) {
    GroupElem ei = u.zero();
    ei.residues[i] = 1 % u.cyclic_orders[i];
    int witness = -1;
    for (int x = 0; x < cat.rank(); ++x)
      if (gr.degree[x] == ei) {
        witness = x;
        break;
      }
    if (u.cyclic_orders[i] == 1) continue;
    if (witness < 0) throw std::invalid_argument("chi_character: grading not faithful");
    CycNum v = chi_scalar(cat, g_label, witness);
    auto root = v.as_root_of_unity();
    if (!root || u.cyclic_orders[i] % root->first != 0)
      throw std::invalid_argument("chi_character: chi value is not a root of expected order");
    exps[i] = static_cast<int>((u.cyclic_orders[i] / root->first) * root->second % u.cyclic_orders[i]);
  }
  Character chi{u, exps};
  for (int x = 0; x < cat.rank(); ++x) {
    if (!(chi.value(gr.degree[x]) == chi_scalar(cat, g_label, x)))
      throw std::invalid_argument("chi_character: chi not constant on graded components");
  }
  return chi;
}

GradingResult compute_grading(const CategoryData& cat, int g_label, int degree_one_label) {
  CycNum q = chi_scalar(cat, g_label, degree_one_label);
  auto root = q.as_root_of_unity();
  if (!root) throw std::invalid_argument("compute_grading: chi_g on the designated object is not a root of unity");
  int n_eff = root->first;
  GradingResult out;
  out.group = FinAbGroup::cyclic(n_eff);
  out.q = q;
  out.degree.assign(cat.rank(), -1);
  std::vector<bool> hit(n_eff, false);
  for (int x = 0; x < cat.rank(); ++x) {
    CycNum v = chi_scalar(cat, g_label, x);
    for (int d = 0; d < n_eff; ++d) {
      if (v == q.pow(d)) {
        out.degree[x] = d;
        hit[d] = true;
        break;
      }
    }
    if (out.degree[x] < 0)
      throw std::invalid_argument("compute_grading: chi value of " + label_or_index(cat, x) +
                                  " is not a power of q (inconsistent input)");
  }
  out.faithful = true;
  for (bool h : hit) out.faithful = out.faithful && h;
  return out;
}

MuegerResult mueger_center(const CategoryData& cat) {
  MuegerResult res;
  if (cat.smatrix && cat.dims) {
    for (int x = 0; x < cat.rank(); ++x) {
      bool transparent = true;
      for (int y = 0; y < cat.rank() && transparent; ++y)
        if (!(cat.s_at(x, y) == (*cat.dims)[x] * (*cat.dims)[y])) transparent = false;
      if (transparent) res.labels.push_back(x);
    }
    res.complete = true;
    res.route = "smatrix";
    return res;
  }
  if (cat.twists && cat.invertibles) {
    const auto& inv = *cat.invertibles;
    for (int c = 0; c < inv.group.order(); ++c) {
      bool transparent = true;
      for (int x = 0; x < cat.rank() && transparent; ++x)
        if (!(chi_scalar(cat, inv.embed[c], x) == CycNum::one())) transparent = false;
      if (transparent) res.labels.push_back(inv.embed[c]);
    }
    // Non-invertible transparency is out of reach of skeletal data without S.
    bool all_invertible = cat.rank() == inv.group.order();
    res.complete = all_invertible;
    res.route = all_invertible ? "invertible-monodromy" : "invertible-monodromy (partial)";
    return res;
  }
  throw std::logic_error("mueger_center: needs S, or twists with invertibles");
}

CycNum gauss_sum(const CategoryData& cat) {
  if (!cat.dims || !cat.twists) throw std::logic_error("gauss_sum: dims and twists required");
  CycNum tau = CycNum::zero();
  for (int x = 0; x < cat.rank(); ++x)
    tau = tau + (*cat.dims)[x] * (*cat.dims)[x] * (*cat.twists)[x];
  return tau;
}

CycNum phase_as_root_of_unity(const CycNum& tau) {
  if (tau.is_zero()) throw std::domain_error("central charge undefined: Gauss sum vanishes");
  CycNum w = tau / tau.conjugate();
  auto root = w.as_root_of_unity();
  if (!root) throw std::domain_error("Gauss sum phase is not a root of unity");
  CycNum u = CycNum::root_of_unity(2 * root->first, root->second);
  CycNum r = tau / u;
  if (!(r == r.conjugate())) throw std::logic_error("phase extraction: residual not real");
  if (r.approx().real() < 0) u = -u;  // sign of a real algebraic number
  auto min = u.as_root_of_unity();
  return CycNum::root_of_unity(min->first, min->second);
}

CycNum central_charge(const CategoryData& cat) { return phase_as_root_of_unity(gauss_sum(cat)); }

CycNum global_dim(const CategoryData& cat) {
  if (!cat.dims) throw std::logic_error("global_dim: dims required");
  CycNum d = CycNum::zero();
  for (int x = 0; x < cat.rank(); ++x) d = d + (*cat.dims)[x] * (*cat.dims)[x];
  return d;
}

bool smatrix_invertible(const CategoryData& cat) {
  if (!cat.smatrix) throw std::logic_error("smatrix_invertible: S missing");
  const int n = cat.rank();
  std::vector<std::vector<CycNum>> m(n, std::vector<CycNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = cat.s_at(i, j);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[col], m[pivot]);
    CycNum inv = m[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      CycNum f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return true;
}

FusionTable verlinde_fusion(const CategoryData& cat) {
  if (!cat.smatrix) throw std::logic_error("verlinde_fusion: S missing");
  if (!smatrix_invertible(cat)) throw std::domain_error("verlinde_fusion: S singular");
  const int n = cat.rank();
  CycNum d2 = CycNum::zero();
  for (int w = 0; w < n; ++w) d2 = d2 + cat.s_at(0, w) * cat.s_at(0, w);
  FusionTable out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        CycNum acc = CycNum::zero();
        for (int w = 0; w < n; ++w)
          acc = acc + cat.s_at(x, w) * cat.s_at(y, w) * cat.s_at(z, w).conjugate() / cat.s_at(0, w);
        acc = acc / d2;
        auto r = acc.as_rational();
        if (!r || !rat_is_integer(*r) || *r < 0)
          throw std::domain_error("verlinde_fusion: non-integral multiplicity at (" +
                                  label_or_index(cat, x) + "," + label_or_index(cat, y) + "," +
                                  label_or_index(cat, z) + ")");
        out.at(x, y, z) = static_cast<int>(r->get_num().get_si());
      }
    }
  }
  return out;
}

ValidationReport verlinde_check(const CategoryData& cat) {
  ValidationReport rep;
  if (!cat.smatrix || !cat.fusion) {
    add_check(rep, "verlinde", false, "needs S and fusion");
    return rep;
  }
  if (!smatrix_invertible(cat)) {
    add_check(rep, "verlinde", false, "S singular");
    return rep;
  }
  try {
    FusionTable recomputed = verlinde_fusion(cat);
    bool same = recomputed == *cat.fusion;
    add_check(rep, "verlinde", same, same ? "" : "fusion differs from Verlinde reconstruction");
  } catch (const std::exception& e) {
    add_check(rep, "verlinde", false, e.what());
  }
  return rep;
}

bool is_quadratic_form(const PointedForm& p) {
  const FinAbGroup& g = p.group;
  const int n = g.order();
  if (!(p.theta[g.index(g.zero())] == CycNum::one())) return false;
  for (int a = 0; a < n; ++a) {
    if (!(p.theta[g.index(g.neg(g.element(a)))] == p.theta[a])) return false;
  }
  auto bil = [&](int a, int b) {
    return p.theta[g.index(g.add(g.element(a), g.element(b)))] / (p.theta[a] * p.theta[b]);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int bc = g.index(g.add(g.element(b), g.element(c)));
        if (!(bil(a, bc) == bil(a, b) * bil(a, c))) return false;
      }
  return true;
}

PointedClassification classify_pointed(const PointedForm& p) {
  if (p.group.rank() != 1) throw std::invalid_argument("classify_pointed: cyclic group expected");
  if (!is_quadratic_form(p)) throw std::invalid_argument("classify_pointed: Theta is not a quadratic form");
  const int n = p.group.cyclic_orders[0];
  PointedClassification out;
  if (n == 1) {
    out.cls = PointedClass::Modular;
    out.m = 1;
    out.h = p.group.zero();
    out.theta_h = CycNum::one();
    return out;
  }
  CycNum tg = p.theta[p.group.index(GroupElem{{1}})];
  CycNum tg2 = tg * tg;
  auto r = tg2.as_root_of_unity();
  if (!r) throw std::invalid_argument("classify_pointed: Theta_g^2 is not a root of unity");
  int mprime = r->first;  // ord(Theta_g^2); Z_2(C) = <g^{mprime}>
  // The quadratic-form structure forces ord(Theta_g^2) | N.
  if (n % mprime != 0) throw std::logic_error("classify_pointed: ord(Theta_g^2) does not divide N");
  out.m = n / mprime;
  out.h = GroupElem{{mprime % n}};
  out.theta_h = p.theta[p.group.index(out.h)];
  if (mprime == n) {
    out.cls = PointedClass::Modular;
  } else if (mprime == 1) {
    out.cls = tg == CycNum::one() ? PointedClass::Tannakian : PointedClass::SuperTannakian;
  } else {
    out.cls = PointedClass::DegenerateOther;
  }
  return out;
}

BalancingOrientation balancing_orientation() {
  // Calibrate on C(Z/3, Q) with Q(a) = e^{2 pi i a^2 / 3}: the convention with
  // S_{X, dual(Y)} on the right-hand side is the one consistent with
  // S_{a,b} = B(a,b)^{-1}.
  static const BalancingOrientation cached = [] {
    FinAbGroup g = FinAbGroup::cyclic(3);
    std::vector<CycNum> theta(3);
    for (int a = 0; a < 3; ++a) theta[a] = CycNum::root_of_unity(3, static_cast<long>(a) * a);
    auto s = [&](int a, int b) {
      // B(a,b)^{-1} = Theta(a) Theta(b) / Theta(a+b)
      return theta[a] * theta[b] / theta[(a + b) % 3];
    };
    bool dual_ok = true, plain_ok = true;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        CycNum lhs = theta[(a + b) % 3];  // single fusion channel, dim 1
        if (!(lhs == theta[a] * theta[b] * s(a, (3 - b) % 3))) dual_ok = false;
        if (!(lhs == theta[a] * theta[b] * s(a, b))) plain_ok = false;
      }
    }
    if (dual_ok == plain_ok) throw std::logic_error("balancing calibration is ambiguous");
    return dual_ok ? BalancingOrientation::DualSecond : BalancingOrientation::PlainSecond;
  }();
  return cached;
}

ValidationReport validate(const CategoryData& cat) {
  ValidationReport rep;
  const int n = cat.rank();
  add_check(rep, "unit label", n >= 1);

  if (cat.dual) {
    bool ok = (*cat.dual)[0] == 0;
    for (int x = 0; x < n && ok; ++x) ok = (*cat.dual)[(*cat.dual)[x]] == x;
    add_check(rep, "dual involution", ok);
  }

  if (cat.fusion) {
    const auto& f = *cat.fusion;
    bool unit_ok = true;
    for (int x = 0; x < n && unit_ok; ++x)
      for (int y = 0; y < n && unit_ok; ++y)
        unit_ok = f.at(0, x, y) == (x == y ? 1 : 0) && f.at(x, 0, y) == (x == y ? 1 : 0);
    add_check(rep, "fusion unit law", unit_ok);

    if (cat.dual) {
      bool dual_ok = true;
      for (int x = 0; x < n && dual_ok; ++x)
        for (int y = 0; y < n && dual_ok; ++y)
          dual_ok = f.at(x, y, 0) == (y == (*cat.dual)[x] ? 1 : 0);
      add_check(rep, "fusion dual law", dual_ok);
    }

    bool comm_ok = true;
    for (int x = 0; x < n && comm_ok; ++x)
      for (int y = 0; y < n && comm_ok; ++y)
        for (int z = 0; z < n && comm_ok; ++z) comm_ok = f.at(x, y, z) == f.at(y, x, z);
    add_check(rep, "fusion commutative", comm_ok);

    bool assoc_ok = true;
    std::string assoc_detail;
    for (int x = 0; x < n && assoc_ok; ++x)
      for (int y = 0; y < n && assoc_ok; ++y)
        for (int z = 0; z < n && assoc_ok; ++z)
          for (int w = 0; w < n && assoc_ok; ++w) {
            int lhs = 0, rhs = 0;
            for (int e = 0; e < n; ++e) {
              lhs += f.at(x, y, e) * f.at(e, z, w);
              rhs += f.at(y, z, e) * f.at(x, e, w);
            }
            if (lhs != rhs) {
              assoc_ok = false;
              assoc_detail = "(" + cat.labels[x] + "," + cat.labels[y] + "," + cat.labels[z] + ")";
            }
          }
    add_check(rep, "fusion associative", assoc_ok, assoc_detail);
  }

  if (cat.fusion && cat.dims) {
    const auto& f = *cat.fusion;
    const auto& d = *cat.dims;
    bool ok = d[0] == CycNum::one();
    std::string detail;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        CycNum rhs = CycNum::zero();
        for (int z = 0; z < n; ++z)
          if (f.at(x, y, z) != 0) rhs = rhs + CycNum::from_int(f.at(x, y, z)) * d[z];
        if (!(d[x] * d[y] == rhs)) {
          ok = false;
          detail = "(" + cat.labels[x] + "," + cat.labels[y] + ")";
        }
      }
    add_check(rep, "dims ring homomorphism", ok, detail);
  }

  if (cat.twists) {
    add_check(rep, "unit twist", (*cat.twists)[0] == CycNum::one());
    if (cat.dual) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = (*cat.twists)[(*cat.dual)[x]] == (*cat.twists)[x];
      add_check(rep, "ribbon", ok);
    }
  }

  if (cat.smatrix) {
    bool sym = true;
    for (int x = 0; x < n && sym; ++x)
      for (int y = x + 1; y < n && sym; ++y) sym = cat.s_at(x, y) == cat.s_at(y, x);
    add_check(rep, "S symmetric", sym);
    if (cat.dims) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = cat.s_at(0, x) == (*cat.dims)[x];
      add_check(rep, "S first row", ok);
    }
  }

  if (cat.smatrix && cat.fusion && cat.twists && cat.dims && cat.dual) {
    bool ok = true;
    std::string detail;
    const bool dual_second = balancing_orientation() == BalancingOrientation::DualSecond;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        CycNum lhs = CycNum::zero();
        for (int z = 0; z < n; ++z) {
          int mult = cat.fusion->at(x, y, z);
          if (mult != 0)
            lhs = lhs + CycNum::from_int(mult) * (*cat.twists)[z] * (*cat.dims)[z];
        }
        int yy = dual_second ? (*cat.dual)[y] : y;
        CycNum rhs = (*cat.twists)[x] * (*cat.twists)[y] * cat.s_at(x, yy);
        if (!(lhs == rhs)) {
          ok = false;
          detail = "(" + cat.labels[x] + "," + cat.labels[y] + ")";
        }
      }
    add_check(rep, "balancing", ok, detail);
  }

  if (cat.grading && cat.fusion) {
    const auto& gr = *cat.grading;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (cat.fusion->at(x, y, z) != 0)
            ok = gr.degree[z] == gr.group.add(gr.degree[x], gr.degree[y]);
    add_check(rep, "grading compatible", ok);
  }

  if (cat.invertibles) {
    const auto& inv = *cat.invertibles;
    bool ok = static_cast<int>(inv.embed.size()) == inv.group.order();
    // identity embeds as the unit and acts as the identity permutation
    ok = ok && inv.embed[inv.group.index(inv.group.zero())] == 0;
    for (int c = 0; c < inv.group.order() && ok; ++c) {
      std::vector<bool> seen(n, false);
      for (int x = 0; x < n && ok; ++x) {
        int y = inv.action[c][x];
        ok = y >= 0 && y < n && !seen[y];
        if (ok) seen[y] = true;
      }
      // action of c on the unit recovers the embedding
      if (ok) ok = inv.action[c][0] == inv.embed[c];
    }
    // composition: action[c] . action[d] = action[c + d]
    for (int c = 0; c < inv.group.order() && ok; ++c)
      for (int d = 0; d < inv.group.order() && ok; ++d) {
        int cd = inv.group.index(inv.group.add(inv.group.element(c), inv.group.element(d)));
        for (int x = 0; x < n && ok; ++x)
          ok = inv.action[c][inv.action[d][x]] == inv.action[cd][x];
      }
    add_check(rep, "invertibles action", ok);

    if (cat.dims) {
      bool ok1 = true;
      for (int c = 0; c < inv.group.order() && ok1; ++c) {
        CycNum d = (*cat.dims)[inv.embed[c]];
        ok1 = (d == CycNum::one()) || (d == -CycNum::one());
      }
      add_check(rep, "invertible dims", ok1);
    }

    if (cat.grading) {
      const auto& gr = *cat.grading;
      bool ok2 = true;
      for (int c = 0; c < inv.group.order() && ok2; ++c) {
        GroupElem dc = gr.degree[inv.embed[c]];
        for (int x = 0; x < n && ok2; ++x)
          ok2 = gr.degree[inv.action[c][x]] == gr.group.add(dc, gr.degree[x]);
      }
      add_check(rep, "invertible action respects grading", ok2);
    }

    if (cat.twists && cat.grading) {
      bool ok3 = true;
      std::string detail;
      try {
        for (int c = 0; c < inv.group.order(); ++c) chi_character(cat, inv.group.element(c));
      } catch (const std::exception& e) {
        ok3 = false;
        detail = e.what();
      }
      add_check(rep, "chi constant on components", ok3, detail);
    }

    if (cat.twists) {
      PointedForm pf;
      pf.group = inv.group;
      pf.theta.resize(inv.group.order());
      for (int c = 0; c < inv.group.order(); ++c) pf.theta[c] = (*cat.twists)[inv.embed[c]];
      add_check(rep, "pointed quadratic form", is_quadratic_form(pf));
    }
  }

  return rep;
}

}  // namespace zest
