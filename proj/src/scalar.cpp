#include "gwa/scalar.hpp"

#include <sstream>
#include <utility>

#include "gwa/expr_parser.hpp"

namespace gwa {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::Parse: return "ParseError";
    case Errc::UndefinedVariable: return "UndefinedVariable";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::RelationNotPreserved: return "RelationNotPreserved";
    case Errc::WindowExceeded: return "WindowExceeded";
    case Errc::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotSigmaStable: return "NotSigmaStable";
    case Errc::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case Errc::NotFiniteOrder: return "NotFiniteOrder";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::HasRelations: return "HasRelations";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

const char* mode_name(ScalarMode mode) { return mode == ScalarMode::Q ? "Q" : "Qq"; }

ScalarMode parse_mode(std::string_view name) {
  if (name == "Q") return ScalarMode::Q;
  if (name == "Qq") return ScalarMode::Qq;
  throw Error(Errc::Parse, "unknown scalar mode '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Integer& c) { return UPoly(std::vector<Integer>{c}); }

UPoly UPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (lead() < 0) c = -c;
  return divided(c);
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Integer& c) const {
  UPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

UPoly UPoly::divided(const Integer& c) const {
  UPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

UPoly UPoly::pseudo_rem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "pseudo remainder by zero polynomial");
  UPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    Integer lr = r.lead();
    r = r.scaled(b.lead()) - UPoly::monomial(lr, shift) * b;
  }
  return r;
}

UPoly UPoly::exact_div(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  UPoly r = a;
  std::vector<Integer> quot(a.is_zero() || a.degree() < b.degree()
                                ? 0
                                : static_cast<std::size_t>(a.degree() - b.degree() + 1),
                            Integer(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Integer c;
    mpz_divexact(c.get_mpz_t(), r.lead().get_mpz_t(), b.lead().get_mpz_t());
    quot[static_cast<std::size_t>(shift)] = c;
    r = r - UPoly::monomial(c, shift) * b;
  }
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "inexact polynomial division");
  return UPoly(std::move(quot));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive_part();
  UPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_rem(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(ScalarMode mode, long value) : Scalar(mode, Rational(value)) {}

Scalar::Scalar(ScalarMode mode, const Rational& value) : mode_(mode) {
  if (mode == ScalarMode::Q) {
    rat_ = value;
    rat_.canonicalize();
  } else {
    num_ = UPoly::constant(value.get_num());
    den_ = UPoly::constant(value.get_den());
    normalize();
  }
}

Scalar Scalar::from_polys(UPoly num, UPoly den) {
  Scalar s;
  s.mode_ = ScalarMode::Qq;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

Scalar Scalar::q_pow(int k) {
  if (k >= 0) return from_polys(UPoly::monomial(1, k), UPoly::constant(1));
  return from_polys(UPoly::constant(1), UPoly::monomial(1, -k));
}

void Scalar::normalize() {
  if (mode_ == ScalarMode::Q) return;
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UPoly::exact_div(num_, g);
    den_ = UPoly::exact_div(den_, g);
  }
  Integer c = num_.content();
  Integer d = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided(c);
    den_ = den_.divided(c);
  }
}

bool Scalar::is_zero() const { return mode_ == ScalarMode::Q ? rat_ == 0 : num_.is_zero(); }

bool Scalar::is_one() const {
  if (mode_ == ScalarMode::Q) return rat_ == 1;
  return num_.degree() == 0 && den_.degree() == 0 && num_.lead() == den_.lead();
}

bool Scalar::is_rational() const {
  return mode_ == ScalarMode::Q || (num_.degree() <= 0 && den_.degree() == 0);
}

Rational Scalar::to_rational() const {
  if (mode_ == ScalarMode::Q) return rat_;
  if (!is_rational()) throw Error(Errc::InvalidArgument, "scalar " + to_string() + " is not rational");
  if (num_.is_zero()) return Rational(0);
  Rational r(num_.lead(), den_.lead());
  r.canonicalize();
  return r;
}

static void check_modes(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode())
    throw Error(Errc::ModeMismatch, std::string(mode_name(a.mode())) + " vs " + mode_name(b.mode()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_modes(a, b);
  if (a.mode_ == ScalarMode::Q) return Scalar(ScalarMode::Q, Rational(a.rat_ + b.rat_));
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (a.den_ == b.den_) return Scalar::from_polys(a.num_ + b.num_, a.den_);
  return Scalar::from_polys(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mode_ == ScalarMode::Q) {
    r.rat_ = -rat_;
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_modes(a, b);
  if (a.mode_ == ScalarMode::Q) return Scalar(ScalarMode::Q, Rational(a.rat_ * b.rat_));
  if (a.is_zero() || b.is_zero()) return Scalar(ScalarMode::Qq, 0);
  return Scalar::from_polys(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (mode_ == ScalarMode::Q) return Scalar(ScalarMode::Q, Rational(1 / rat_));
  return from_polys(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_modes(a, b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, a.to_string() + " / 0");
  return a * b.inverse();
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(mode_, 1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode_ != b.mode_) return false;
  if (a.mode_ == ScalarMode::Q) return a.rat_ == b.rat_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (mode_ == ScalarMode::Q) return rat_.get_str();
  if (den_.degree() == 0 && den_.lead() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

struct ScalarOps {
  ScalarMode mode;
  Scalar number(const Integer& n) const { return Scalar(mode, Rational(n)); }
  Scalar identifier(std::string_view name) const {
    if (name == "q" && mode == ScalarMode::Qq) return Scalar::q_pow(1);
    throw Error(Errc::Parse, "unknown symbol '" + std::string(name) + "' in scalar");
  }
  Scalar divide(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar power(const Scalar& a, int e) const { return a.pow(e); }
};

}  // namespace

Scalar Scalar::parse(ScalarMode mode, std::string_view text) {
  ScalarOps ops{mode};
  return detail::ExprParser<Scalar, ScalarOps>(text, ops).parse_all();
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_sub(const Scalar& a, const Scalar& b) { return a - b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_div(const Scalar& a, const Scalar& b) { return a / b; }

}  // namespace gwa
