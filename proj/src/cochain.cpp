#include "zest/cochain.hpp"

#include <numeric>
#include <stdexcept>

namespace zest {

namespace {

// Iterate all multi-indices in [0, n)^len.
bool next_tuple(std::vector<int>& t, int n) {
  for (int pos = static_cast<int>(t.size()) - 1; pos >= 0; --pos) {
    if (++t[pos] < n) return true;
    t[pos] = 0;
  }
  return false;
}

long mod_pos(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

// Solve A x = b (mod m) by diagonalizing A with unimodular row/col operations.
// Sizes here are tiny, so exact mpz arithmetic everywhere.
std::optional<std::vector<long>> solve_linear_mod(const std::vector<std::vector<long>>& a_in,
                                                  const std::vector<long>& b_in, long m) {
  const int rows = static_cast<int>(a_in.size());
  const int cols = rows > 0 ? static_cast<int>(a_in[0].size()) : 0;
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = a_in[i][j];
  std::vector<Int> b(rows);
  for (int i = 0; i < rows; ++i) b[i] = b_in[i];
  // V accumulates column operations so x = V y.
  std::vector<std::vector<Int>> v(cols, std::vector<Int>(cols, Int(0)));
  for (int j = 0; j < cols; ++j) v[j][j] = 1;

  const int steps = std::min(rows, cols);
  int t = 0;
  for (; t < steps; ++t) {
    // Find a nonzero pivot in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    std::swap(b[t], b[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    std::swap(v[t], v[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        b[i] -= q * b[t];
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up and retry
          std::swap(a[t], a[i]);
          std::swap(b[t], b[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (int i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
        for (int k = 0; k < cols; ++k) v[k][j] -= q * v[k][t];
        if (a[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          std::swap(v[t], v[j]);
          clean = false;
        }
      }
    }
  }
  // Diagonal system: a[i][i] * y_i = b_i (mod m).
  Int mm(m);
  std::vector<Int> y(cols, Int(0));
  for (int i = 0; i < rows; ++i) {
    Int d = i < steps ? a[i][i] : Int(0);
    Int rhs = b[i] % mm;
    if (rhs < 0) rhs += mm;
    if (d == 0) {
      if (rhs % mm != 0) return std::nullopt;
      continue;
    }
    Int g = gcd(d, mm);
    if (rhs % g != 0) return std::nullopt;
    Int d1 = d / g, m1 = mm / g, r1 = rhs / g;
    Int inv;
    mpz_class d1m = d1 % m1;
    if (d1m < 0) d1m += m1;
    if (m1 == 1) {
      inv = 0;
    } else if (mpz_invert(inv.get_mpz_t(), d1m.get_mpz_t(), m1.get_mpz_t()) == 0) {
      return std::nullopt;  // cannot happen: d1 coprime to m1
    }
    y[i] = (r1 * inv) % m1;
  }
  std::vector<long> x(cols, 0);
  for (int j = 0; j < cols; ++j) {
    Int acc(0);
    for (int k = 0; k < cols; ++k) acc += v[j][k] * y[k];
    acc %= mm;
    if (acc < 0) acc += mm;
    x[j] = acc.get_si();
  }
  return x;
}

}  // namespace

std::vector<long> CoeffModule::orders() const {
  if (kind == Kind::RootsOfUnity) return {root_order};
  std::vector<long> o;
  for (int c : grp.cyclic_orders) o.push_back(c);
  return o;
}

ModElem CoeffModule::normalize(ModElem e) const {
  auto os = orders();
  for (size_t i = 0; i < e.size(); ++i) e[i] = mod_pos(e[i], os[i]);
  return e;
}

ModElem CoeffModule::add(const ModElem& a, const ModElem& b) const {
  ModElem out(a.size());
  auto os = orders();
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod_pos(a[i] + b[i], os[i]);
  return out;
}

ModElem CoeffModule::neg(const ModElem& a) const {
  ModElem out(a.size());
  auto os = orders();
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod_pos(-a[i], os[i]);
  return out;
}

ModElem CoeffModule::scale(long k, const ModElem& a) const {
  ModElem out(a.size());
  auto os = orders();
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod_pos(k * a[i], os[i]);
  return out;
}

bool CoeffModule::is_zero(const ModElem& a) const {
  for (long v : a)
    if (v != 0) return false;
  return true;
}

CycNum CoeffModule::scalar(const ModElem& a) const {
  if (kind != Kind::RootsOfUnity) throw std::logic_error("scalar() on a non-root module");
  return CycNum::root_of_unity(static_cast<int>(root_order), a[0]);
}

ModElem CoeffModule::from_scalar(const CycNum& v) const {
  if (kind != Kind::RootsOfUnity) throw std::logic_error("from_scalar() on a non-root module");
  auto r = v.as_root_of_unity();
  if (!r) throw std::invalid_argument("scalar is not a root of unity");
  if (root_order % r->first != 0)
    throw std::invalid_argument("root of unity does not lie in the declared mu_L");
  return {(root_order / r->first) * r->second % root_order};
}

bool CoeffModule::operator==(const CoeffModule& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::RootsOfUnity) return root_order == o.root_order;
  return grp == o.grp;
}

Cochain::Cochain(int arity, FinAbGroup g, CoeffModule m)
    : arity_(arity), group_(std::move(g)), module_(std::move(m)) {
  size_t size = 1;
  for (int i = 0; i < arity_; ++i) size *= group_.order();
  table_.assign(size, module_.zero());
}

int Cochain::flat_index(const std::vector<int>& idx) const {
  int flat = 0;
  for (int i : idx) flat = flat * group_.order() + i;
  return flat;
}

std::vector<int> Cochain::unflatten(int flat) const {
  std::vector<int> idx(arity_, 0);
  for (int i = arity_ - 1; i >= 0; --i) {
    idx[i] = flat % group_.order();
    flat /= group_.order();
  }
  return idx;
}

const ModElem& Cochain::value(const std::vector<int>& idx) const { return table_[flat_index(idx)]; }

void Cochain::set(const std::vector<int>& idx, ModElem v) {
  table_[flat_index(idx)] = module_.normalize(std::move(v));
}

CycNum Cochain::scalar_value(const std::vector<int>& idx) const {
  return module_.scalar(value(idx));
}

bool Cochain::is_identity() const {
  for (const auto& v : table_)
    if (!module_.is_zero(v)) return false;
  return true;
}

bool Cochain::normalized() const {
  if (arity_ == 0) return true;
  std::vector<int> idx(arity_, 0);
  do {
    bool has_id = false;
    for (int i : idx)
      if (group_.is_zero(group_.element(i))) has_id = true;
    if (has_id && !module_.is_zero(value(idx))) return false;
  } while (next_tuple(idx, group_.order()));
  return true;
}

bool Cochain::operator==(const Cochain& o) const {
  return arity_ == o.arity_ && group_ == o.group_ && module_ == o.module_ && table_ == o.table_;
}

Cochain Cochain::mul(const Cochain& o) const {
  Cochain out = *this;
  for (size_t i = 0; i < table_.size(); ++i) out.table_[i] = module_.add(table_[i], o.table_[i]);
  return out;
}

Cochain Cochain::inverse() const {
  Cochain out = *this;
  for (size_t i = 0; i < table_.size(); ++i) out.table_[i] = module_.neg(table_[i]);
  return out;
}

Cochain Cochain::differential() const {
  const int n = arity_;
  Cochain out(n + 1, group_, module_);
  std::vector<int> idx(n + 1, 0);
  do {
    ModElem acc = module_.zero();
    // first face: drop g_1
    {
      std::vector<int> face(idx.begin() + 1, idx.end());
      acc = module_.add(acc, value(face));
    }
    for (int i = 1; i <= n; ++i) {
      std::vector<int> face;
      face.reserve(n);
      for (int k = 0; k < i - 1; ++k) face.push_back(idx[k]);
      face.push_back(group_.index(group_.add(group_.element(idx[i - 1]), group_.element(idx[i]))));
      for (int k = i + 1; k <= n; ++k) face.push_back(idx[k]);
      ModElem term = value(face);
      acc = module_.add(acc, (i % 2 == 1) ? module_.neg(term) : term);
    }
    {
      std::vector<int> face(idx.begin(), idx.end() - 1);
      ModElem term = value(face);
      acc = module_.add(acc, (n % 2 == 0) ? module_.neg(term) : term);
    }
    out.set(idx, std::move(acc));
  } while (next_tuple(idx, group_.order()));
  return out;
}

Cochain Cochain::lift_root_order(long Lp) const {
  if (module_.kind != CoeffModule::Kind::RootsOfUnity)
    throw std::logic_error("lift_root_order on non-root module");
  if (Lp % module_.root_order != 0) throw std::invalid_argument("lift: L' not a multiple of L");
  long scale = Lp / module_.root_order;
  Cochain out(arity_, group_, CoeffModule::roots(Lp));
  for (size_t i = 0; i < table_.size(); ++i) out.table_[i] = {table_[i][0] * scale};
  return out;
}

BipartiteCochain::BipartiteCochain(int p, int q, FinAbGroup g, CoeffModule m)
    : p_(p), q_(q), group_(std::move(g)), module_(std::move(m)) {
  size_t size = 1;
  for (int i = 0; i < p_ + q_; ++i) size *= group_.order();
  table_.assign(size, module_.zero());
}

int BipartiteCochain::flat(const std::vector<int>& l, const std::vector<int>& r) const {
  int f = 0;
  for (int i : l) f = f * group_.order() + i;
  for (int i : r) f = f * group_.order() + i;
  return f;
}

const ModElem& BipartiteCochain::value(const std::vector<int>& l, const std::vector<int>& r) const {
  return table_[flat(l, r)];
}

void BipartiteCochain::set(const std::vector<int>& l, const std::vector<int>& r, ModElem v) {
  table_[flat(l, r)] = module_.normalize(std::move(v));
}

bool BipartiteCochain::is_identity() const {
  for (const auto& v : table_)
    if (!module_.is_zero(v)) return false;
  return true;
}

BipartiteCochain BipartiteCochain::mul(const BipartiteCochain& o) const {
  BipartiteCochain out = *this;
  for (size_t i = 0; i < table_.size(); ++i) out.table_[i] = module_.add(table_[i], o.table_[i]);
  return out;
}

BipartiteCochain BipartiteCochain::inverse() const {
  BipartiteCochain out = *this;
  for (size_t i = 0; i < table_.size(); ++i) out.table_[i] = module_.neg(table_[i]);
  return out;
}

bool BipartiteCochain::operator==(const BipartiteCochain& o) const {
  return p_ == o.p_ && q_ == o.q_ && group_ == o.group_ && module_ == o.module_ &&
         table_ == o.table_;
}

Cochain BipartiteCochain::slice(int left_elem_index) const {
  if (p_ != 1) throw std::logic_error("slice: only p = 1 supported");
  Cochain out(q_, group_, module_);
  std::vector<int> r(q_, 0);
  do {
    out.set(r, value({left_elem_index}, r));
  } while (next_tuple(r, group_.order()));
  return out;
}

BipartiteCochain BipartiteCochain::delta_h() const {
  BipartiteCochain out(p_ + 1, q_, group_, module_);
  std::vector<int> l(p_ + 1, 0);
  do {
    std::vector<int> r(q_, 0);
    do {
      ModElem acc = module_.zero();
      {
        std::vector<int> face(l.begin() + 1, l.end());
        acc = module_.add(acc, value(face, r));
      }
      for (int i = 1; i <= p_; ++i) {
        std::vector<int> face;
        for (int k = 0; k < i - 1; ++k) face.push_back(l[k]);
        face.push_back(group_.index(group_.add(group_.element(l[i - 1]), group_.element(l[i]))));
        for (int k = i + 1; k <= p_; ++k) face.push_back(l[k]);
        ModElem term = value(face, r);
        acc = module_.add(acc, (i % 2 == 1) ? module_.neg(term) : term);
      }
      {
        std::vector<int> face(l.begin(), l.end() - 1);
        ModElem term = value(face, r);
        acc = module_.add(acc, (p_ % 2 == 0) ? module_.neg(term) : term);
      }
      out.set(l, r, std::move(acc));
    } while (next_tuple(r, group_.order()));
  } while (next_tuple(l, group_.order()));
  return out;
}

BipartiteCochain BipartiteCochain::delta_v() const {
  BipartiteCochain out(p_, q_ + 1, group_, module_);
  std::vector<int> l(p_, 0);
  do {
    std::vector<int> r(q_ + 1, 0);
    do {
      ModElem acc = module_.zero();
      {
        std::vector<int> face(r.begin() + 1, r.end());
        acc = module_.add(acc, value(l, face));
      }
      for (int j = 1; j <= q_; ++j) {
        std::vector<int> face;
        for (int k = 0; k < j - 1; ++k) face.push_back(r[k]);
        face.push_back(group_.index(group_.add(group_.element(r[j - 1]), group_.element(r[j]))));
        for (int k = j + 1; k <= q_; ++k) face.push_back(r[k]);
        ModElem term = value(l, face);
        acc = module_.add(acc, (j % 2 == 1) ? module_.neg(term) : term);
      }
      {
        std::vector<int> face(r.begin(), r.end() - 1);
        ModElem term = value(l, face);
        acc = module_.add(acc, (q_ % 2 == 0) ? module_.neg(term) : term);
      }
      out.set(l, r, std::move(acc));
    } while (next_tuple(r, group_.order()));
  } while (next_tuple(l, group_.order()));
  return out;
}

BipartiteCochain shuffle(const Cochain& f, int p) {
  const int n = f.arity();
  if (p < 1 || p > n - 1) throw std::invalid_argument("shuffle: p out of range");
  const int q = n - p;
  BipartiteCochain out(p, q, f.group(), f.module());
  const auto& g = f.group();
  const auto& m = f.module();

  // All position subsets of size p for the first block, order preserved.
  std::vector<std::vector<int>> placements;
  std::vector<int> pos(p);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == p) {
      placements.push_back(pos);
      return;
    }
    for (int s = start; s <= n - (p - k); ++s) {
      pos[k] = s;
      rec(s + 1, k + 1);
    }
  };
  rec(0, 0);

  std::vector<int> l(p, 0);
  do {
    std::vector<int> r(q, 0);
    do {
      ModElem acc = m.zero();
      for (const auto& pl : placements) {
        long inv = 0;
        for (int k = 0; k < p; ++k) inv += pl[k] - k;  // block-2 entries passed over
        std::vector<int> args(n, -1);
        for (int k = 0; k < p; ++k) args[pl[k]] = l[k];
        int ri = 0;
        for (int s = 0; s < n; ++s)
          if (args[s] < 0) args[s] = r[ri++];
        ModElem term = f.value(args);
        acc = m.add(acc, (inv % 2 == 1) ? m.neg(term) : term);
      }
      out.set(l, r, std::move(acc));
    } while (next_tuple(r, g.order()));
  } while (next_tuple(l, g.order()));
  return out;
}

Cochain cyclic_cochain(CyclicCochainKind kind, int N, const ModElem& nu, const CoeffModule& m) {
  FinAbGroup g = FinAbGroup::cyclic(N);
  switch (kind) {
    case CyclicCochainKind::Beta: {
      Cochain out(1, g, m);
      for (int i = 0; i < N; ++i) out.set({i}, m.scale(i, nu));
      return out;
    }
    case CyclicCochainKind::Gamma: {
      Cochain out(2, g, m);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (i + j >= N) out.set({i, j}, nu);
      return out;
    }
    case CyclicCochainKind::Lambda: {
      if (!m.is_zero(m.scale(N, nu)))
        throw std::invalid_argument("cyclic lambda cochain requires N * nu = 0");
      Cochain out(3, g, m);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          for (int k = 0; k < N; ++k)
            if (i + j >= N) out.set({i, j, k}, m.scale(k, nu));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Cochain> coboundary_witness(const Cochain& f) {
  const int arity = f.arity();
  if (arity != 2 && arity != 3)
    throw std::invalid_argument("coboundary_witness: arity 2 or 3 cochains only");
  if (!f.is_cocycle()) throw std::invalid_argument("coboundary_witness: input is not a cocycle");
  const auto& g = f.group();
  const int n = g.order();
  const int warity = arity - 1;

  CoeffModule target = f.module();
  Cochain lifted = f;
  if (target.kind == CoeffModule::Kind::RootsOfUnity) {
    long Lp = target.root_order * g.exponent();
    target = CoeffModule::roots(Lp);
    lifted = f.lift_root_order(Lp);
  }

  // Unknowns: the normalized witness values w(tuple), one column per tuple
  // with no identity entry.  Rows: delta(w)(args) = f(args) over identity-free
  // argument tuples (rows with identity arguments are trivially satisfied).
  Cochain witness(warity, g, target);
  std::vector<int> col_of(witness.table().size(), -1);
  int cols = 0;
  {
    std::vector<int> t(warity, 0);
    do {
      bool has_id = false;
      for (int i : t)
        if (g.is_zero(g.element(i))) has_id = true;
      if (!has_id) col_of[witness.flat_index(t)] = cols++;
    } while (next_tuple(t, n));
  }

  std::vector<std::vector<long>> a_mat;
  const auto orders = target.orders();
  std::vector<std::vector<long>> rhs(orders.size());
  std::vector<int> args(arity, 0);
  do {
    bool has_id = false;
    for (int i : args)
      if (g.is_zero(g.element(i))) has_id = true;
    if (has_id) continue;
    std::vector<long> row(cols, 0);
    auto add_face = [&](const std::vector<int>& face, int sign) {
      int fi = witness.flat_index(face);
      if (col_of[fi] >= 0) row[col_of[fi]] += sign;
    };
    add_face(std::vector<int>(args.begin() + 1, args.end()), +1);
    for (int i = 1; i <= warity; ++i) {
      std::vector<int> face;
      for (int k = 0; k < i - 1; ++k) face.push_back(args[k]);
      face.push_back(g.index(g.add(g.element(args[i - 1]), g.element(args[i]))));
      for (int k = i + 1; k <= warity; ++k) face.push_back(args[k]);
      add_face(face, i % 2 == 1 ? -1 : +1);
    }
    add_face(std::vector<int>(args.begin(), args.end() - 1), warity % 2 == 0 ? -1 : +1);
    a_mat.push_back(std::move(row));
    const ModElem& val = lifted.value(args);
    for (size_t c = 0; c < orders.size(); ++c) rhs[c].push_back(val[c]);
  } while (next_tuple(args, n));

  std::vector<std::vector<long>> sol(orders.size());
  for (size_t c = 0; c < orders.size(); ++c) {
    auto x = solve_linear_mod(a_mat, rhs[c], orders[c]);
    if (!x) return std::nullopt;
    sol[c] = *x;
  }
  for (size_t fi = 0; fi < witness.table().size(); ++fi) {
    if (col_of[fi] < 0) continue;
    ModElem v(orders.size());
    for (size_t c = 0; c < orders.size(); ++c) v[c] = sol[c][col_of[fi]];
    witness.set(witness.unflatten(static_cast<int>(fi)), std::move(v));
  }
  return witness;
}

std::optional<BipartiteCochain> vertical_witness(const BipartiteCochain& f) {
  if (f.p() != 1 || f.q() != 2) throw std::invalid_argument("vertical_witness: shape (1,2) required");
  const auto& g = f.group();
  CoeffModule target = f.module();
  long Lp = target.root_order;
  if (target.kind == CoeffModule::Kind::RootsOfUnity) {
    Lp = target.root_order * g.exponent();
    target = CoeffModule::roots(Lp);
  }
  BipartiteCochain nu(1, 1, g, target);
  for (int a = 0; a < g.order(); ++a) {
    auto w = coboundary_witness(f.slice(a));
    if (!w) return std::nullopt;
    for (int b = 0; b < g.order(); ++b) nu.set({a}, {b}, w->value({b}));
  }
  return nu;
}

Cochain cup_with_pairing(const Cochain& l2, const std::vector<int>& nu_of_s) {
  if (l2.arity() != 2) throw std::invalid_argument("cup_with_pairing: lambda2 must have arity 2");
  if (l2.module().kind != CoeffModule::Kind::FiniteAbelian)
    throw std::invalid_argument("cup_with_pairing: lambda2 must take values in a finite group");
  const auto& g = l2.group();
  const auto& s = l2.module().grp;
  Cochain out(4, g, CoeffModule::roots(2));
  std::vector<int> idx(4, 0);
  do {
    const ModElem& x = l2.value({idx[0], idx[1]});
    const ModElem& y = l2.value({idx[2], idx[3]});
    GroupElem xe{std::vector<int>(x.begin(), x.end())};
    GroupElem ye{std::vector<int>(y.begin(), y.end())};
    long e = static_cast<long>(nu_of_s[s.index(xe)]) * nu_of_s[s.index(ye)];
    out.set(idx, {e % 2});
  } while (next_tuple(idx, g.order()));
  return out;
}

}  // namespace zest
