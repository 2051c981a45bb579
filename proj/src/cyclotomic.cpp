#include "zest/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zest {

namespace {

constexpr int kMaxOrder = 256;  // all paper examples need <= 72 after lcm promotion

long mod_nonneg(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    Rat r{Int(s)};
    r.canonicalize();
    return r;
  }
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  return make_rat(num, den);
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Integer polynomial division, exact (used only when it is).
static std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
    if (num[i] == 0) continue;
    Int c = num[i] / den.back();
    int shift = i - static_cast<int>(den.size()) + 1;
    quot[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  return quot;
}

const std::vector<Int>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e; fill bottom-up.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<Int> p(d + 1, Int(0));
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
      if (d % e == 0) p = poly_div_exact(std::move(p), cache.at(e));
    }
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

class CycInternals {
 public:
  static void reduce(std::vector<Rat>& poly, int n) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    const int deg = static_cast<int>(phi_poly.size()) - 1;  // = phi(n)
    for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
      if (poly[i] == 0) continue;
      Rat c = poly[i];
      for (int j = 0; j <= deg; ++j) {
        poly[i - deg + j] -= c * Rat(phi_poly[j]);
      }
    }
    poly.resize(deg);
  }
};

CycNum CycNum::from_poly(int order, std::vector<Rat> poly) {
  CycInternals::reduce(poly, order);
  CycNum out;
  out.order_ = order;
  for (size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] != 0) out.coeffs_.emplace(static_cast<int>(k), std::move(poly[k]));
  }
  return out;
}

std::vector<Rat> CycNum::dense() const {
  std::vector<Rat> poly(euler_phi(order_), Rat(0));
  for (const auto& [k, c] : coeffs_) poly[k] = c;
  return poly;
}

CycNum CycNum::from_rational(const Rat& r) {
  CycNum out;
  out.order_ = 1;
  if (r != 0) out.coeffs_.emplace(0, r);
  return out;
}

CycNum CycNum::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  if (n > kMaxOrder) throw std::invalid_argument("root_of_unity: order above configured maximum");
  k = mod_nonneg(k, n);
  std::vector<Rat> poly(k + 1, Rat(0));
  poly[k] = 1;
  return from_poly(n, std::move(poly));
}

CycNum CycNum::from_coeffs(int order, std::map<int, Rat> coeffs) {
  std::vector<Rat> poly;
  for (const auto& [k, c] : coeffs) {
    if (k < 0) throw std::invalid_argument("negative exponent in CycNum coefficients");
    if (static_cast<size_t>(k) >= poly.size()) poly.resize(k + 1, Rat(0));
    poly[k] = c;
  }
  return from_poly(order, std::move(poly));
}

bool CycNum::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool CycNum::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

std::optional<Rat> CycNum::as_rational() const {
  if (coeffs_.empty()) return Rat(0);
  if (is_rational()) return coeffs_.begin()->second;
  // May still be rational at a smaller order (e.g. entered at order 4).
  CycNum d = demote();
  if (d.coeffs_.empty()) return Rat(0);
  if (d.coeffs_.size() == 1 && d.coeffs_.begin()->first == 0) return d.coeffs_.begin()->second;
  return std::nullopt;
}

CycNum CycNum::promote(int m) const {
  if (m % order_ != 0) throw std::invalid_argument("promote: target order not divisible by current order");
  if (m == order_) return *this;
  if (m > kMaxOrder) throw std::invalid_argument("promote: order above configured maximum");
  const int scale = m / order_;
  std::vector<Rat> poly(euler_phi(order_) > 0 ? (euler_phi(order_) - 1) * scale + 1 : 1, Rat(0));
  for (const auto& [k, c] : coeffs_) poly[k * scale] = c;
  return from_poly(m, std::move(poly));
}

static int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

CycNum CycNum::operator+(const CycNum& o) const {
  const int m = lcm_int(order_, o.order_);
  CycNum a = promote(m), b = o.promote(m);
  std::vector<Rat> poly = a.dense();
  for (const auto& [k, c] : b.coeffs_) poly[k] += c;
  return from_poly(m, std::move(poly));
}

CycNum CycNum::operator-() const {
  CycNum out;
  out.order_ = order_;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
  const int m = lcm_int(order_, o.order_);
  CycNum a = promote(m), b = o.promote(m);
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    CycNum out;
    out.order_ = m;
    return out;
  }
  std::vector<Rat> poly(2 * euler_phi(m), Rat(0));
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) poly[ka + kb] += ca * cb;
  return from_poly(m, std::move(poly));
}

bool CycNum::operator==(const CycNum& o) const {
  const int m = lcm_int(order_, o.order_);
  return promote(m).coeffs_ == o.promote(m).coeffs_;
}

// Extended Euclid in Q[x] against Phi_n; Phi_n is irreducible so any nonzero
// element is invertible.
CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero CycNum");
  const int n = order_;
  std::vector<Rat> r0;  // Phi_n
  for (const Int& c : cyclotomic_polynomial(n)) r0.emplace_back(c);
  std::vector<Rat> r1 = dense();
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of *this
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  while (true) {
    trim(r1);
    if (r1.size() <= 1) break;  // nonzero constant (coprime to Phi_n)
    // r0 = q*r1 + rem
    std::vector<Rat> rem = r0, q(rem.size(), Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(r1.size()) - 1; --i) {
      if (rem[i] == 0) continue;
      Rat c = rem[i] / r1.back();
      int shift = i - static_cast<int>(r1.size()) + 1;
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
    }
    trim(rem);
    // s_new = s0 - q*s1
    std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r1.empty()) throw std::logic_error("inverse: zero gcd against irreducible polynomial");
  Rat unit = r1[0];
  for (Rat& c : s1) c /= unit;
  return from_poly(n, std::move(s1));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum acc = CycNum::one(), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycNum CycNum::galois(long j) const {
  j = mod_nonneg(j, order_);
  if (std::gcd(static_cast<long>(order_), j) != 1)
    throw std::invalid_argument("galois: exponent not coprime to order");
  std::vector<Rat> poly(order_, Rat(0));
  for (const auto& [k, c] : coeffs_) poly[(k * j) % order_] += c;
  return from_poly(order_, std::move(poly));
}

CycNum CycNum::conjugate() const {
  if (order_ <= 2) return *this;
  return galois(order_ - 1);
}

CycNum CycNum::demote() const {
  if (order_ == 1) return *this;
  for (int d = 1; d < order_; ++d) {
    if (order_ % d != 0) continue;
    // Fixed by Gal(Q(zeta_n)/Q(zeta_d)) = { j : j = 1 mod d } ?
    bool fixed = true;
    for (int j = 1 + d; j < order_ && fixed; j += d) {
      if (std::gcd(j, order_) != 1) continue;
      if (galois(j) != *this) fixed = false;
    }
    if (!fixed) continue;
    // Solve for coordinates in the promoted basis of Q(zeta_d).
    const int phid = euler_phi(d), phin = euler_phi(order_);
    std::vector<std::vector<Rat>> m(phin, std::vector<Rat>(phid + 1, Rat(0)));
    for (int i = 0; i < phid; ++i) {
      CycNum basis = root_of_unity(d, i).promote(order_);
      for (const auto& [k, c] : basis.coeffs_) m[k][i] = c;
    }
    for (const auto& [k, c] : coeffs_) m[k][phid] = c;
    // Gaussian elimination.
    std::vector<int> pivot_col(phin, -1);
    int row = 0;
    for (int col = 0; col < phid && row < phin; ++col) {
      int pr = -1;
      for (int r = row; r < phin; ++r)
        if (m[r][col] != 0) { pr = r; break; }
      if (pr < 0) continue;
      std::swap(m[row], m[pr]);
      Rat inv = Rat(1) / m[row][col];
      for (int cix = col; cix <= phid; ++cix) m[row][cix] *= inv;
      for (int r = 0; r < phin; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (int cix = col; cix <= phid; ++cix) m[r][cix] -= f * m[row][cix];
      }
      pivot_col[row] = col;
      ++row;
    }
    bool consistent = true;
    for (int r = row; r < phin; ++r)
      if (m[r][phid] != 0) consistent = false;
    if (!consistent) continue;  // should not happen when Galois-fixed
    std::map<int, Rat> out;
    for (int r = 0; r < row; ++r) {
      if (pivot_col[r] >= 0 && m[r][phid] != 0) out.emplace(pivot_col[r], m[r][phid]);
    }
    return from_coeffs(d, std::move(out));
  }
  return *this;
}

std::optional<std::pair<int, long>> CycNum::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  for (const auto& [k, c] : coeffs_) {
    (void)k;
    if (!rat_is_integer(c)) return std::nullopt;  // roots are algebraic integers
  }
  if ((*this) * conjugate() != CycNum::one()) return std::nullopt;
  // Integral with all conjugates of modulus 1: a root of unity (Kronecker).
  const int n = order_;
  const long L = (n % 2 == 0) ? n : 2L * n;  // torsion of Q(zeta_n)^x
  // Guess the exponent from the phase, then confirm exactly.
  const double phase = std::arg(approx()) / (2.0 * M_PI);
  long guess = mod_nonneg(std::lround(phase * static_cast<double>(L)), L);
  auto minimal = [](long kk, long ll) {
    long g = std::gcd(kk, ll);
    long d = ll / g;
    return std::pair<int, long>(static_cast<int>(d), (kk / g) % d);
  };
  if (*this == root_of_unity(static_cast<int>(L), guess)) return minimal(guess, L);
  for (long k = 0; k < L; ++k) {
    if (*this == root_of_unity(static_cast<int>(L), k)) return minimal(k, L);
  }
  return std::nullopt;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [k, c] : coeffs_) {
    acc += c.get_d() * std::polar(1.0, 2.0 * M_PI * k / order_);
  }
  return acc;
}

CycNum CycNum::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar string");
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    s = s.substr(1);
  }
  CycNum v;
  if (s.rfind("zeta(", 0) == 0) {
    auto close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("malformed zeta(...) scalar");
    int n = std::stoi(s.substr(5, close - 5));
    long k = 1;
    if (close + 1 < s.size()) {
      if (s[close + 1] != '^') throw std::invalid_argument("malformed zeta exponent");
      k = std::stol(s.substr(close + 2));
    }
    v = root_of_unity(n, k);
  } else {
    v = from_rational(rat_from_string(s));
  }
  return neg ? -v : v;
}

std::string CycNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << rat_to_string(c);
    } else {
      if (c != 1) os << rat_to_string(c) << "*";
      os << "zeta(" << order_ << ")";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace zest
