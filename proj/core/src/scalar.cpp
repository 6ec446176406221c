// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace g2forge {

Scalar::Scalar(long num, long den) : rat_(num, den), irr_(0) {
  if (den == 0) throw InputError("scalar with zero denominator");
  rat_.canonicalize();
}

int Scalar::sign() const {
  const int sa = sgn(rat_);
  const int sb = sgn(irr_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt2 has the sign of a iff a^2 > 2 b^2.
  const mpq_class diff = rat_ * rat_ - 2 * irr_ * irr_;
  const int sd = sgn(diff);
  if (sd == 0) {
    // a^2 = 2 b^2 with a, b nonzero would make sqrt2 rational.
    throw InternalError("irrationality violated in Scalar::sign");
  }
  return sd > 0 ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s   with s^2 = 2.
  const mpq_class a = rat_, b = irr_;
  rat_ = a * o.rat_ + 2 * b * o.irr_;
  irr_ = a * o.irr_ + b * o.rat_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero scalar");
  // 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); the denominator is nonzero for
  // nonzero a + b s because sqrt2 is irrational.
  const mpq_class den = rat_ * rat_ - 2 * irr_ * irr_;
  if (den == 0) throw InternalError("irrationality violated in Scalar::inverse");
  return Scalar(rat_ / den, -irr_ / den);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rational_str(const mpq_class& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  // Round-trips through parse(): "0", "-1/2", "sqrt2", "1/2*sqrt2", "1-sqrt2".
  if (irr_ == 0) return rational_str(rat_);
  std::string out;
  if (rat_ != 0) {
    out = rational_str(rat_);
    out += (sgn(irr_) > 0 ? "+" : "-");
  } else if (sgn(irr_) < 0) {
    out = "-";
  }
  const mpq_class mag = abs(irr_);
  if (mag != 1) out += rational_str(mag) + "*";
  out += "sqrt2";
  return out;
}

double Scalar::to_double() const { return rat_.get_d() + irr_.get_d() * 1.4142135623730951; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

// One summand of a scalar expression: an optional rational coefficient,
// an optional "sqrt2" factor, and an optional integer divisor.
struct Term {
  bool negative = false;
  bool has_sqrt2 = false;
  mpq_class coef{1};
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads an unsigned integer starting at pos; advances pos.
mpz_class read_integer(std::string_view s, size_t& pos) {
  const size_t start = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  if (pos == start) throw InputError("expected digits in scalar text");
  return mpz_class(std::string(s.substr(start, pos - start)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  // Strip all whitespace up front; the grammar is whitespace insensitive.
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty scalar text");

  mpq_class rat(0), irr(0);
  size_t pos = 0;
  bool any_term = false;
  while (pos < s.size()) {
    Term t;
    if (s[pos] == '+' || s[pos] == '-') {
      t.negative = (s[pos] == '-');
      ++pos;
      if (pos == s.size()) throw InputError("dangling sign in scalar \"" + s + "\"");
    } else if (any_term) {
      throw InputError("missing +/- between terms in scalar \"" + s + "\"");
    }

    bool have_coef = false;
    if (pos < s.size() && is_digit(s[pos])) {
      mpz_class num = read_integer(s, pos);
      mpz_class den(1);
      if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() && is_digit(s[pos + 1])) {
        ++pos;
        den = read_integer(s, pos);
        if (den == 0) throw InputError("zero denominator in scalar \"" + s + "\"");
      }
      t.coef = mpq_class(num, den);
      t.coef.canonicalize();
      have_coef = true;
      if (pos < s.size() && s[pos] == '*') ++pos;  // optional "*" before sqrt2
    }

    if (s.compare(pos, 7, "sqrt(2)") == 0) {
      t.has_sqrt2 = true;
      pos += 7;
    } else if (s.compare(pos, 5, "sqrt2") == 0) {
      t.has_sqrt2 = true;
      pos += 5;
    }

    if (!have_coef && !t.has_sqrt2) {
      throw InputError("unrecognized scalar text \"" + s + "\" at offset " +
                       std::to_string(pos));
    }

    // Optional trailing divisor, e.g. "sqrt2/2".
    if (t.has_sqrt2 && pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
        is_digit(s[pos + 1])) {
      ++pos;
      mpz_class den = read_integer(s, pos);
      if (den == 0) throw InputError("zero denominator in scalar \"" + s + "\"");
      t.coef /= mpq_class(den);
    }

    if (t.negative) t.coef = -t.coef;
    if (t.has_sqrt2) {
      irr += t.coef;
    } else {
      rat += t.coef;
    }
    any_term = true;
  }
  return Scalar(rat, irr);
}

}  // namespace g2forge
