#pragma once

// Exact ground-field arithmetic: the rationals, and the rational function
// field Q(q) in a transcendental parameter q.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/errors.hpp"

namespace gwa {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ScalarMode { Q, Qq };

const char* mode_name(ScalarMode mode);
ScalarMode parse_mode(std::string_view name);

/// Dense polynomial in q with integer coefficients; coeff(i) multiplies q^i.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  static UPoly constant(const Integer& c);
  static UPoly monomial(const Integer& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& lead() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const;

  Integer content() const;
  UPoly primitive_part() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly scaled(const Integer& c) const;
  /// Exact division of every coefficient by c.
  UPoly divided(const Integer& c) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static UPoly pseudo_rem(const UPoly& a, const UPoly& b);
  /// Exact quotient a / b; b must divide a over Z[q].
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  /// Primitive gcd with positive leading coefficient.
  static UPoly gcd(const UPoly& a, const UPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// An element of Q (mode Q) or of Q(q) (mode Qq), always in canonical form.
///
/// In mode Qq the value is num/den with gcd(num, den) = 1, the joint content
/// of num and den equal to 1, and lc(den) > 0. Two scalars are equal iff their
/// representations are identical.
class Scalar {
 public:
  Scalar() : mode_(ScalarMode::Q), rat_(0) {}
  Scalar(ScalarMode mode, long value);
  Scalar(ScalarMode mode, const Rational& value);
  static Scalar from_polys(UPoly num, UPoly den);
  /// q^k in mode Qq; k may be negative.
  static Scalar q_pow(int k);

  ScalarMode mode() const { return mode_; }
  bool is_zero() const;
  bool is_one() const;
  /// True iff the value lies in Q (always true in mode Q).
  bool is_rational() const;
  /// The value as a rational; requires is_rational().
  Rational to_rational() const;

  const Rational& rat() const { return rat_; }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar inverse() const;
  Scalar pow(int k) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text form, e.g. "5/6", "q+1", "(q^2-1)/(q)".
  std::string to_string() const;
  /// Parses integers, q, + - * / ^ (integer exponents) and parentheses.
  static Scalar parse(ScalarMode mode, std::string_view text);

 private:
  void normalize();

  ScalarMode mode_;
  Rational rat_;
  UPoly num_;
  UPoly den_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_div(const Scalar& a, const Scalar& b);
inline bool scalar_is_zero(const Scalar& a) { return a.is_zero(); }

}  // namespace gwa
