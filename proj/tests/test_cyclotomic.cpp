#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zest/cyclotomic.hpp"

using zest::CycNum;
using zest::Rat;

namespace {

CycNum zeta(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

// Random small expression: sum of a few scaled roots of unity, with orders
// drawn from divisors of 72 so lcm promotion stays within the order cap.
CycNum random_expr(std::mt19937& rng) {
  static const int kOrders[] = {1, 2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72};
  std::uniform_int_distribution<int> n_terms(1, 4), ord(0, 11), num(-4, 4), den(1, 4), exp(0, 71);
  CycNum acc = CycNum::zero();
  int terms = n_terms(rng);
  for (int i = 0; i < terms; ++i) {
    int n = kOrders[ord(rng)];
    acc = acc + CycNum::from_rational(zest::make_rat(num(rng), den(rng))) * zeta(n, exp(rng) % n);
  }
  return acc;
}

}  // namespace

TEST_CASE("root_of_unity basics") {
  CHECK(zeta(1, 0) == CycNum::one());
  CHECK(zeta(4, 2) == -CycNum::one());
  // zeta_18^3 = -q^{-1} with q = e^{-2 pi i/3} = zeta_3^{-1}, so -zeta_3^{-1}... the
  // identity used for the SU(3)_3 S-matrix entries:
  CHECK(zeta(18, 3) == -zeta(3, -1));
  CHECK(zeta(18, -3) == -zeta(3, 1));
  CHECK(zeta(6, 7) == zeta(6, 1));  // exponent mod n
  CHECK_THROWS(CycNum::root_of_unity(0, 1));
}

TEST_CASE("field arithmetic") {
  CycNum sum = CycNum::one();
  for (int k = 1; k < 5; ++k) sum = sum + zeta(5, k);
  CHECK(sum.is_zero());

  CHECK(zeta(9, 3) * zeta(9, 3) * zeta(9, 3) == CycNum::one());
  CHECK(zeta(18, 2) * zeta(18, 2) == zeta(9, 2));  // zeta_18^2 = zeta_9

  CycNum a = zeta(12, 5) + CycNum::from_int(2);
  CHECK(a - a == CycNum::zero());
  CHECK(a * CycNum::one() == a);
  CHECK(a / a == CycNum::one());
  CHECK_THROWS(a / CycNum::zero());

  // division really inverts
  CycNum b = zeta(8, 3) - CycNum::from_rational(zest::make_rat(1, 2));
  CHECK((a / b) * b == a);
}

TEST_CASE("conjugate") {
  CHECK(CycNum::one().conjugate() == CycNum::one());
  CHECK(zeta(4, 1).conjugate() == -zeta(4, 1));
  for (int k = 0; k < 7; ++k) {
    CycNum u = zeta(7, k);
    CHECK(u.conjugate() * u == CycNum::one());
  }
  CycNum mix = zeta(9, 2) + zeta(9, 5);
  CHECK(mix.conjugate() == zeta(9, -2) + zeta(9, -5));
}

TEST_CASE("promote and demote") {
  CHECK((-CycNum::one()).promote(4) == zeta(4, 2));
  CHECK(zeta(3, 1).promote(9) == zeta(9, 3));
  CHECK_THROWS(zeta(4, 1).promote(6));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    CycNum a = random_expr(rng);
    int m = a.order() * (1 + (trial % 3));
    if (m > 144) continue;
    CycNum promoted = a.promote(m);
    CHECK(promoted == a);
    CHECK(promoted.demote() == a);
    CHECK(promoted.demote().order() <= a.order());
  }
  // promote then demote lands at the minimal order
  CHECK(zeta(3, 1).promote(18).demote().order() == 3);
  CHECK((-CycNum::one()).promote(8).demote().order() <= 2);
}

TEST_CASE("as_root_of_unity") {
  auto r = (-CycNum::one()).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(r->first == 2);
  CHECK(r->second == 1);

  CHECK_FALSE(CycNum::from_int(2).as_root_of_unity().has_value());
  CHECK_FALSE(CycNum::zero().as_root_of_unity().has_value());
  CHECK_FALSE((zeta(8, 1) + zeta(8, 3)).as_root_of_unity().has_value());

  auto one = CycNum::one().as_root_of_unity();
  REQUIRE(one.has_value());
  CHECK(one->first == 1);
  CHECK(one->second == 0);

  // non-monomial canonical forms are still detected, e.g. zeta_9^6
  auto r96 = zeta(9, 6).as_root_of_unity();
  REQUIRE(r96.has_value());
  CHECK(r96->first == 3);
  CHECK(r96->second == 2);

  // unit-modulus non-integer element is not a root of unity: (3+4i)/5
  CycNum tricky = (CycNum::from_int(3) + CycNum::from_int(4) * zeta(4, 1)) /
                  CycNum::from_int(5);
  CHECK(tricky * tricky.conjugate() == CycNum::one());
  CHECK_FALSE(tricky.as_root_of_unity().has_value());

  for (int n : {5, 12, 16, 18, 64}) {
    for (long k : {1L, 3L, 5L}) {
      auto rr = zeta(n, k).as_root_of_unity();
      REQUIRE(rr.has_value());
      CHECK(zeta(rr->first, rr->second) == zeta(n, k));
      CHECK((rr->second == 0 || std::gcd(static_cast<long>(rr->first), rr->second) == 1));
    }
  }
}

TEST_CASE("approx") {
  CHECK(std::abs(CycNum::one().approx() - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(zeta(4, 1).approx() - std::complex<double>(0, 1)) < 1e-12);
  // d = 2 + sqrt(2) expressed in Q(zeta_8)
  CycNum d = CycNum::from_int(2) + zeta(8, 1) + zeta(8, -1);
  CHECK(std::abs(d.approx().real() - 3.41421356) < 1e-7);
  CHECK(std::abs(d.approx().imag()) < 1e-12);
}

TEST_CASE("roots of unity satisfy u^n = 1 and conj(u)*u = 1") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> ord(1, 36);
  for (int trial = 0; trial < 100; ++trial) {
    int n = ord(rng);
    long k = std::uniform_int_distribution<long>(0, n - 1)(rng);
    CycNum u = zeta(n, k);
    CHECK(u.pow(n) == CycNum::one());
    CHECK(u.conjugate() * u == CycNum::one());
  }
}

TEST_CASE("canonical equality agrees with float approximation") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    CycNum a = random_expr(rng);
    CycNum b = random_expr(rng);
    if (trial % 5 == 0) b = a.promote(a.order() * 2 > 144 ? a.order() : a.order() * 2);
    bool eq = (a == b);
    double dist = std::abs(a.approx() - b.approx());
    if (eq) CHECK(dist < 1e-9);
    if (dist > 1e-6) CHECK_FALSE(eq);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("string parsing") {
  CHECK(CycNum::parse("zeta(9)^2") == zeta(9, 2));
  CHECK(CycNum::parse("-zeta(4)") == -zeta(4, 1));
  CHECK(CycNum::parse("-1") == -CycNum::one());
  CHECK(CycNum::parse("1/2") == CycNum::from_rational(zest::make_rat(1, 2)));
  CHECK(CycNum::parse("zeta(18)^-3") == zeta(18, 15));
  CHECK_THROWS(CycNum::parse("zeta(4"));
}
