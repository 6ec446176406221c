// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Exact arithmetic in the real quadratic field Q(sqrt2).  Every quantity the
// engine manipulates (form coefficients, connection coefficients, curvature
// components, norms) is a Scalar; there is no floating point anywhere in the
// core.  The field is large enough for the whole built-in catalog, whose only
// irrational coefficients are +-sqrt2/2 (cosines and sines of pi/4 and 3pi/4).

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g2forge {

// Thrown on malformed user-supplied data (text that does not parse, indices
// out of range, invalid algebra or form input).  The CLI maps it to exit 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency guarantee fails (for example a
// characteristic connection that does not annihilate the form it was built
// from).  Always a bug, never a data problem.  The CLI maps it to exit 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An element a + b*sqrt2 of Q(sqrt2), with a and b exact rationals kept in
// lowest terms.  Value semantics, totally ordered, hashable via the canonical
// string.  Ring and field operations are exact; division by zero throws.
class Scalar {
 public:
  Scalar() : rat_(0), irr_(0) {}
  Scalar(long n) : rat_(n), irr_(0) {}          // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);                   // num/den, exact
  explicit Scalar(const mpq_class& rat) : rat_(rat), irr_(0) { canonicalize(); }
  Scalar(mpq_class rat, mpq_class irr) : rat_(std::move(rat)), irr_(std::move(irr)) {
    canonicalize();
  }

  static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }
  // sqrt2/2 = cos(pi/4) = sin(pi/4), frequent enough to deserve a named maker.
  static Scalar half_sqrt2() { return Scalar(mpq_class(0), mpq_class(1, 2)); }

  const mpq_class& rat_part() const { return rat_; }
  const mpq_class& sqrt2_part() const { return irr_; }

  bool is_zero() const { return rat_ == 0 && irr_ == 0; }
  bool is_rational() const { return irr_ == 0; }

  // Exact sign of the real value a + b*sqrt2 (-1, 0, +1).  Uses the sign of
  // a^2 - 2b^2 when a and b pull in opposite directions; exact because sqrt2
  // is irrational.
  int sign() const;
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Scalar operator-() const { return Scalar(-rat_, -irr_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Order by real value (exact).
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

  Scalar inverse() const;  // throws InputError on zero

  // Canonical text form, whitespace free: "p/q" when the sqrt2 part is zero,
  // otherwise "p/q+r/s*sqrt2" or "p/q-r/s*sqrt2" (r/s positive).  The
  // denominator is always written, so round trips are byte stable.
  std::string str() const;

  // Parses the canonical form and common relaxations: optional whitespace,
  // "sqrt2", "sqrt(2)", bare integers, terms in any order ("sqrt2/2-1",
  // "2*sqrt2", "-sqrt2").  Throws InputError with the offending text.
  static Scalar parse(std::string_view text);

  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void canonicalize() {
    rat_.canonicalize();
    irr_.canonicalize();
  }

  mpq_class rat_;  // rational part a
  mpq_class irr_;  // coefficient b of sqrt2
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace g2forge
