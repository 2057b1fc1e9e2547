#pragma once

// Central Ore sets given by index templates, fractions over a window of the
// family, and the subalgebra generated by S together with its coinvariants.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwa/ideal.hpp"
#include "gwa/poly.hpp"

namespace gwa {

/// A family of central denominators. Each template is a polynomial
/// expression in which `{...}` holds an affine expression in the index n,
/// e.g. "t-q^{2n}" or "c-(t-{n})*(t-{n}-1)". Templates without braces
/// contribute a single element (index 0).
class OreSetSpec {
 public:
  OreSetSpec(const BaseRing& ring, std::vector<std::string> templates, int window);

  const BaseRing& ring() const { return ring_; }
  const std::vector<std::string>& templates() const { return templates_; }
  int window() const { return window_; }
  OreSetSpec with_window(int window) const { return OreSetSpec(ring_, templates_, window); }

  bool is_indexed(std::size_t tid) const;
  /// Indices materialized for template tid: [-N, N], or {0} for a fixed template.
  std::vector<int> indices(std::size_t tid) const;
  bool in_window(std::size_t tid, int n) const;
  /// Generator of template tid at index n (any n; the window only restricts fractions).
  BasePoly generator(std::size_t tid, int n) const;
  std::vector<BasePoly> materialized() const;

 private:
  BaseRing ring_;
  std::vector<std::string> templates_;
  int window_;
};

/// Where an endomorphism sends a generator: sigma(g_{tid,n}) = unit * g_{tid',n'}.
struct GeneratorImage {
  std::size_t tid;
  int index;
  BasePoly unit;
};

/// Finds the image of g_{tid,n} under sigma among indices n-1, n, n+1 of any
/// template; throws NotSigmaStable if there is none.
GeneratorImage generator_image(const OreSetSpec& S, const Endo& sigma, std::size_t tid, int n);

/// Checks the family is nonzero, and sigma- and sigma^{-1}-stable on the window interior.
void verify_sigma_stable(const OreSetSpec& S, const Endo& sigma);

/// Element of A_S: numerator over a product of materialized generators.
struct Fraction {
  using Key = std::pair<std::size_t, int>;  // (template id, index)
  BasePoly num;
  std::map<Key, int> den;

  bool is_zero() const { return num.is_zero(); }
};

/// Arithmetic in A_S for a relation-free base ring.
class LocalRing {
 public:
  LocalRing(const OreSetSpec& S);

  const BaseRing& ring() const { return S_.ring(); }
  const OreSetSpec& ore() const { return S_; }

  Fraction from_poly(const BasePoly& p) const { return normalize({p, {}}); }
  /// 1 / g_{tid,n}; throws WindowExceeded outside the window.
  Fraction generator_inverse(std::size_t tid, int n) const;
  Fraction zero() const { return from_poly(ring().zero()); }
  Fraction one() const { return from_poly(ring().one()); }

  Fraction add(const Fraction& f, const Fraction& g) const;
  Fraction sub(const Fraction& f, const Fraction& g) const;
  Fraction neg(const Fraction& f) const;
  Fraction mul(const Fraction& f, const Fraction& g) const;
  bool equal(const Fraction& f, const Fraction& g) const;
  /// sigma^k applied to a fraction; denominators are re-indexed along the family.
  Fraction apply(const Endo& sigma, int k, const Fraction& f) const;
  /// Cancel denominator generators dividing the numerator exactly.
  Fraction normalize(Fraction f) const;
  /// Inverse of an element factoring as a unit times materialized generators.
  std::optional<Fraction> inverse(const BasePoly& p) const;
  std::string format(const Fraction& f) const;

 private:
  BasePoly den_poly(const std::map<Fraction::Key, int>& den) const;
  OreSetSpec S_;
};

Fraction frac_arith(char op, const Fraction& f, const Fraction& g, const LocalRing& ctx);

/// Generators of the subalgebra k<S>.
struct SubalgebraGens {
  /// True when k<S> is the whole base ring (gens are then the ring variables).
  bool whole_ring = false;
  std::vector<BasePoly> gens;
};

/// Recognizes k<S> from products of at most `degree` windowed generators:
/// either the whole ring, or a polynomial ring on monomials.
SubalgebraGens subalgebra_generators(const OreSetSpec& S, int degree = 2);

enum class CoinvKind { IsZero, IsScalars, Basis };

struct CoinvResult {
  CoinvKind kind;
  std::vector<BasePoly> basis;  // monomials in the generators, when kind == Basis
};

/// Classifies k<S>/<sigma(s) - s>. When `gens` are all the ring variables the
/// ideal is formed in A itself; otherwise gens must be algebraically
/// independent and sigma(g_i) must be a polynomial of degree <= D in the gens.
CoinvResult coinvariant_quotient(const std::vector<BasePoly>& gens, const Endo& sigma, const BaseRing& ring,
                                 int degree_bound = 4);

const char* coinv_name(CoinvKind kind);

}  // namespace gwa
