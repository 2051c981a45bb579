#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zest {

using Int = mpz_class;

/// Exact rational, always kept in lowest terms with positive denominator.
/// mpq_class arithmetic preserves canonical form; construction goes through
/// make_rat so raw (num, den) pairs are canonicalized exactly once.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Accepts "p", "p/q", with optional sign.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

}  // namespace zest
