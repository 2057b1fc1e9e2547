#pragma once

// Buchberger completion and normal forms over graded-lex order, plus ideals
// of (Laurent) base rings encoded as ideals of an ordinary polynomial ring.

#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

/// Generators of an ideal in a polynomial ring (no negative exponents).
/// When `reduced` is true they form the reduced Groebner basis with monic leads.
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(std::vector<BasePoly> generators, bool reduced)
      : generators_(std::move(generators)), reduced_(reduced) {}

  const std::vector<BasePoly>& generators() const { return generators_; }
  bool reduced() const { return reduced_; }
  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return generators_.empty(); }

 private:
  std::vector<BasePoly> generators_;
  bool reduced_ = false;
};

/// Reduced Groebner basis of the ideal generated by `gens`.
IdealBasis buchberger(const std::vector<BasePoly>& gens, std::size_t max_pairs = 20000);

/// Normal form of p modulo a reduced basis.
BasePoly ideal_reduce(const BasePoly& p, const IdealBasis& basis);

/// Single-divisor exact division in a polynomial ring; returns nullopt unless
/// g divides p.
std::optional<BasePoly> poly_exact_div(const BasePoly& p, const BasePoly& g);

/// Exact division in a relation-free (Laurent) ring: monomial factors in
/// invertible variables are units and are shifted away first.
std::optional<BasePoly> ring_exact_div(const BaseRing& ring, const BasePoly& p, const BasePoly& g);

/// An ideal of a base ring (possibly Laurent, possibly with relations).
/// Invertible variables are encoded as t, t' with t t' = 1.
class RingIdeal {
 public:
  RingIdeal(const BaseRing& ring, const std::vector<BasePoly>& gens);

  bool contains(const BasePoly& p) const;
  bool is_unit_ideal() const { return basis_.is_unit_ideal(); }
  /// Normal form in the encoded polynomial ring.
  BasePoly reduce_encoded(const BasePoly& p) const;
  const IdealBasis& encoded_basis() const { return basis_; }
  /// Number of variables of the encoded ring; the first nvars() are the ring variables.
  std::size_t encoded_nvars() const { return encoded_nvars_; }
  BasePoly encode(const BasePoly& p) const;
  /// Standard monomials of total encoded degree <= bound, plus whether the
  /// quotient is finite-dimensional.
  std::vector<Monomial> standard_monomials(int bound, bool* finite) const;

 private:
  BaseRing ring_;
  std::vector<std::size_t> inverse_slot_;  // encoded index of t' per variable, or npos
  std::size_t encoded_nvars_ = 0;
  IdealBasis basis_;
};

BasePoly ideal_reduce(const BasePoly& p, const RingIdeal& ideal);

}  // namespace gwa
