#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zest/rational.hpp"

namespace zest {

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Stored in the power basis {zeta_n^k : 0 <= k < phi(n)} reduced modulo the
/// n-th cyclotomic polynomial, with zero coefficients absent.  This gives a
/// unique canonical form, so two CycNums represent the same complex number
/// iff, after promotion to a common order, their coefficient maps coincide.
/// Arithmetic between different orders promotes both operands to the lcm.
/// Values are immutable after construction.
class CycNum {
 public:
  CycNum() : order_(1) {}  // zero

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return from_rational(Rat(1)); }
  static CycNum from_rational(const Rat& r);
  static CycNum from_int(long v) { return from_rational(make_rat(v)); }
  /// zeta_n^k, exponent taken mod n.  Requires n >= 1.
  static CycNum root_of_unity(int n, long k);
  /// Build from explicit power-basis coefficients (reduced on entry).
  static CycNum from_coeffs(int order, std::map<int, Rat> coeffs);

  int order() const { return order_; }
  const std::map<int, Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rat> as_rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const;  // throws on division by zero
  CycNum operator-() const;
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  CycNum inverse() const;
  CycNum pow(long e) const;
  /// Complex conjugate: zeta_n -> zeta_n^{-1} extended linearly.
  CycNum conjugate() const;
  /// Galois map zeta_n -> zeta_n^j, gcd(j, n) = 1.
  CycNum galois(long j) const;

  /// Same number re-expressed at order m; requires order() | m.
  CycNum promote(int m) const;
  /// Re-canonicalize at the minimal divisor d of order() with value in Q(zeta_d).
  CycNum demote() const;

  /// If the value is a root of unity, the minimal (n, k) with value zeta_n^k
  /// (k = 0 or gcd(k, n) = 1); otherwise nullopt.
  std::optional<std::pair<int, long>> as_root_of_unity() const;

  /// Floating approximation; for reporting only, never equality decisions.
  std::complex<double> approx() const;

  /// Accepts the JSON encoding's string shorthands: "zeta(n)^k", "-1", "1/2".
  static CycNum parse(const std::string& s);
  std::string to_string() const;

 private:
  int order_;
  std::map<int, Rat> coeffs_;

  static CycNum from_poly(int order, std::vector<Rat> poly);
  std::vector<Rat> dense() const;
  friend class CycInternals;
};

int euler_phi(int n);
/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Int>& cyclotomic_polynomial(int n);

}  // namespace zest
