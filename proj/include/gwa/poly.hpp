#pragma once

// Commutative (Laurent) polynomial base rings, their elements, and
// substitution endomorphisms.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// Exponent vector, one entry per ring variable.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  int total_degree() const;
  bool is_one() const;
  Monomial operator*(const Monomial& o) const;
  /// Componentwise exps >= o.exps.
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then lexicographic on exponents.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial: no zero coefficients, terms ordered by GrlexLess.
class BasePoly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexLess>;

  BasePoly() = default;
  BasePoly(std::size_t nvars, ScalarMode mode) : nvars_(nvars), mode_(mode) {}
  static BasePoly constant(std::size_t nvars, const Scalar& c);
  static BasePoly term(const Monomial& m, const Scalar& c);
  static BasePoly variable(std::size_t nvars, ScalarMode mode, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  ScalarMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest term in grlex order; requires a nonzero polynomial.
  const Monomial& lead_monomial() const { return terms_.rbegin()->first; }
  const Scalar& lead_coeff() const { return terms_.rbegin()->second; }
  Scalar coeff(const Monomial& m) const;
  bool is_constant() const;
  /// Exact coefficient of the constant monomial.
  Scalar constant_term() const;

  void add_term(const Monomial& m, const Scalar& c);

  friend BasePoly operator+(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator-(const BasePoly& a, const BasePoly& b);
  /// Plain product, no reduction modulo relations.
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  BasePoly operator-() const;
  BasePoly scaled(const Scalar& c) const;
  BasePoly times_monomial(const Monomial& m) const;
  BasePoly& operator+=(const BasePoly& b) { return *this = *this + b; }
  BasePoly& operator-=(const BasePoly& b) { return *this = *this - b; }

  friend bool operator==(const BasePoly& a, const BasePoly& b) { return a.terms_ == b.terms_; }

  /// Componentwise minimum exponent over all terms.
  Monomial min_exponents() const;
  int max_total_degree() const;

 private:
  std::size_t nvars_ = 0;
  ScalarMode mode_ = ScalarMode::Q;
  Terms terms_;
};

struct VarSpec {
  std::string name;
  bool invertible = false;
  std::vector<int> weight;
};

class IdealBasis;

/// A commutative base algebra: (Laurent) polynomial ring on `vars`, optionally
/// modulo `relations`. Relations are only supported on rings without
/// invertible variables.
class BaseRing {
 public:
  BaseRing() = default;
  BaseRing(std::vector<VarSpec> vars, std::vector<BasePoly> relations, ScalarMode mode);

  const std::vector<VarSpec>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  ScalarMode mode() const { return mode_; }
  const std::vector<BasePoly>& relations() const { return relations_; }
  bool has_relations() const { return !relations_.empty(); }
  bool has_laurent() const;
  std::optional<std::size_t> var_index(std::string_view name) const;
  std::size_t require_var(std::string_view name) const;

  Scalar scalar(long v) const { return Scalar(mode_, v); }
  Scalar scalar(std::string_view text) const { return Scalar::parse(mode_, text); }
  BasePoly zero() const { return BasePoly(nvars(), mode_); }
  BasePoly one() const { return BasePoly::constant(nvars(), scalar(1)); }
  BasePoly var(std::string_view name, int power = 1) const;
  BasePoly constant(const Scalar& c) const { return BasePoly::constant(nvars(), c); }

  /// Parses a polynomial expression in the ring variables and q.
  BasePoly parse(std::string_view text) const;
  std::string format(const BasePoly& p) const;

  /// Normal form modulo the relations (identity on relation-free rings).
  BasePoly reduce(const BasePoly& p) const;
  BasePoly mul(const BasePoly& p, const BasePoly& r) const;
  BasePoly pow(const BasePoly& p, int k) const;

  /// True iff the monomial respects the sign restriction (negative exponents
  /// only on invertible variables).
  bool admissible(const Monomial& m) const;
  bool admissible(const BasePoly& p) const;
  /// Units of a relation-free ring: nonzero scalar times a monomial in invertible variables.
  bool is_unit(const BasePoly& p) const;
  BasePoly unit_inverse(const BasePoly& p) const;

  /// Standard monomials are those not divisible by any relation leading term.
  bool is_standard(const Monomial& m) const;

  friend bool operator==(const BaseRing& a, const BaseRing& b);

 private:
  std::vector<VarSpec> vars_;
  std::vector<BasePoly> relations_;
  ScalarMode mode_ = ScalarMode::Q;
  std::shared_ptr<const IdealBasis> relation_basis_;
};

/// Substitution homomorphism given on generators, together with claimed inverse images.
class Endo {
 public:
  Endo() = default;
  Endo(const BaseRing& ring, std::vector<BasePoly> images, std::vector<BasePoly> inverse_images);
  static Endo identity(const BaseRing& ring);
  /// Builds from "var -> expression" maps; missing variables map to themselves.
  static Endo from_strings(const BaseRing& ring, const std::map<std::string, std::string>& images,
                           const std::map<std::string, std::string>& inverse_images);

  const BaseRing& ring() const { return *ring_; }
  const std::vector<BasePoly>& images() const { return images_; }
  const std::vector<BasePoly>& inverse_images() const { return inverse_images_; }
  bool has_inverse() const { return !inverse_images_.empty(); }

  BasePoly apply(const BasePoly& p) const;
  Endo inverse() const;
  /// sigma^k for any integer k (requires the inverse for k < 0).
  Endo power(int k) const;
  Endo compose(const Endo& after) const;  // after ∘ this

  bool is_identity() const;
  friend bool operator==(const Endo& a, const Endo& b) { return a.images_ == b.images_; }

 private:
  std::shared_ptr<const BaseRing> ring_;
  std::vector<BasePoly> images_;
  std::vector<BasePoly> inverse_images_;
};

BasePoly poly_mul(const BasePoly& p, const BasePoly& r, const BaseRing& ring);
BasePoly endo_apply(const Endo& sigma, const BasePoly& p);
/// Checks sigma∘sigma^{-1} = sigma^{-1}∘sigma = id on generators, units go to
/// units, and the relation ideal is preserved both ways.
Endo endo_verify(const Endo& sigma, const BaseRing& ring);

}  // namespace gwa
