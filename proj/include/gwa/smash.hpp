#pragma once

// The smash product A #_R T with the rank-one torus, the generalized Weyl
// algebra inside it, localization, and the extension isomorphism test.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "gwa/ore.hpp"
#include "gwa/poly.hpp"

namespace gwa {

/// Sum of c_n x^n; no zero components stored.
template <class C>
struct SmashElem {
  std::map<int, C> comp;

  bool is_zero() const { return comp.empty(); }
  friend bool operator==(const SmashElem&, const SmashElem&) = default;
};

using SmashElement = SmashElem<BasePoly>;

/// Coefficients in A. Powers of sigma are cached and shared between copies.
struct PolyCoeffs {
  using Value = BasePoly;
  struct PowerCache {
    std::mutex mu;
    std::map<int, Endo> powers;
  };
  PolyCoeffs(const BaseRing& r, const Endo& s)
      : ring(std::make_shared<const BaseRing>(r)),
        sigma(std::make_shared<const Endo>(s)),
        cache(std::make_shared<PowerCache>()) {}

  std::shared_ptr<const BaseRing> ring;
  std::shared_ptr<const Endo> sigma;
  std::shared_ptr<PowerCache> cache;

  Value zero() const { return ring->zero(); }
  Value one() const { return ring->one(); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return ring->mul(a, b); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  Value shift(int m, const Value& v) const;
};

/// Coefficients in A_S.
struct FracCoeffs {
  using Value = Fraction;
  FracCoeffs(const LocalRing& l, const Endo& s)
      : local(std::make_shared<const LocalRing>(l)), sigma(std::make_shared<const Endo>(s)) {}

  std::shared_ptr<const LocalRing> local;
  std::shared_ptr<const Endo> sigma;

  Value zero() const { return local->zero(); }
  Value one() const { return local->one(); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  Value add(const Value& a, const Value& b) const { return local->add(a, b); }
  Value neg(const Value& a) const { return local->neg(a); }
  Value mul(const Value& a, const Value& b) const { return local->mul(a, b); }
  bool equal(const Value& a, const Value& b) const { return local->equal(a, b); }
  Value shift(int m, const Value& v) const { return local->apply(*sigma, m, v); }
};

/// Arithmetic of A #_R T over a coefficient domain:
/// (a x^m)(a' x^n) = a sigma^m(a') x^{m+n}.
template <class Dom>
class SmashAlgebra {
 public:
  using Value = typename Dom::Value;
  using Elem = SmashElem<Value>;

  explicit SmashAlgebra(const Dom& dom) : dom_(dom) {}

  Elem monomial(const Value& c, int n) const {
    Elem e;
    if (!dom_.is_zero(c)) e.comp.emplace(n, c);
    return e;
  }
  Elem one() const { return monomial(dom_.one(), 0); }
  Elem x_power(int n) const { return monomial(dom_.one(), n); }

  Elem add(const Elem& e, const Elem& f) const {
    Elem r = e;
    for (const auto& [n, c] : f.comp) accumulate(r, n, c);
    return r;
  }
  Elem neg(const Elem& e) const {
    Elem r;
    for (const auto& [n, c] : e.comp) r.comp.emplace(n, dom_.neg(c));
    return r;
  }
  Elem sub(const Elem& e, const Elem& f) const { return add(e, neg(f)); }
  Elem scale(const Value& c, const Elem& e) const { return mul(monomial(c, 0), e); }

  Elem mul(const Elem& e, const Elem& f) const {
    Elem r;
    for (const auto& [m, a] : e.comp)
      for (const auto& [n, b] : f.comp) accumulate(r, m + n, dom_.mul(a, dom_.shift(m, b)));
    return r;
  }

  bool equal(const Elem& e, const Elem& f) const {
    Elem d = sub(e, f);
    return d.is_zero();
  }

  const Dom& domain() const { return dom_; }

 private:
  void accumulate(Elem& r, int n, const Value& c) const {
    if (dom_.is_zero(c)) return;
    auto it = r.comp.find(n);
    if (it == r.comp.end()) {
      r.comp.emplace(n, c);
      return;
    }
    it->second = dom_.add(it->second, c);
    if (dom_.is_zero(it->second)) r.comp.erase(it);
  }

  Dom dom_;
};

/// W_{a,sigma}: a central element a != 0 and a verified automorphism sigma of A.
class GwaDatum {
 public:
  GwaDatum(const BaseRing& ring, const BasePoly& a, const Endo& sigma);

  const BaseRing& ring() const { return ring_; }
  const BasePoly& a() const { return a_; }
  const Endo& sigma() const { return sigma_; }

  /// Smash algebra over A for this datum.
  const SmashAlgebra<PolyCoeffs>& algebra() const { return algebra_; }

 private:
  BaseRing ring_;
  BasePoly a_;
  Endo sigma_;
  SmashAlgebra<PolyCoeffs> algebra_;
};

SmashElement smash_mul(const SmashElement& e, const SmashElement& f, const GwaDatum& D);

/// Splits "x t y" into tokens; anything other than x and y is a ring element.
std::vector<std::string> parse_word(const std::string& text);
/// phi(u) = u, phi(x) = x, phi(y) = a x^{-1}, multiplied out.
SmashElement gwa_embed(const std::vector<std::string>& word, const GwaDatum& D);
SmashElement gwa_embed(const std::string& word, const GwaDatum& D);

struct RelationCheck {
  std::string name;
  bool pass;
};

/// yx = a, xy = sigma(a), xu = sigma(u)x, y sigma(u) = uy for each test element.
std::vector<RelationCheck> verify_gwa_relations(const GwaDatum& D, const std::vector<BasePoly>& test_elems);

struct Membership {
  bool in_image;
  int witness;  // first failing n (coefficient of x^{-n-1}), or -1
};

/// Decides whether e lies in phi(W): the x^{-n-1} coefficient must lie in
/// <a sigma^{-1}(a) ... sigma^{-n}(a)>.
Membership image_membership(const SmashElement& e, const GwaDatum& D);
/// a sigma^{-1}(a) ... sigma^{-n}(a)
BasePoly orbit_product(const GwaDatum& D, int n);

/// A_S #_R T with the surjectivity witness x^{-1} = a^{-1} (a x^{-1}).
struct LocalizedSmash {
  LocalRing local;
  Endo sigma;
  SmashAlgebra<FracCoeffs> algebra;
  Fraction a_inverse;
  bool identity = false;       // a was already a unit of A
  bool witness_holds = false;  // a^{-1} * phi(y) == x^{-1} in A_S #_R T
};

LocalizedSmash localize_smash(const GwaDatum& D, const OreSetSpec& S);

/// Rewrites e over A_S as a combination of phi_S images (x^{-1} replaced by
/// a^{-1} phi(y)) and checks the result is e again.
bool localized_preimage_check(const LocalizedSmash& L, const SmashElem<Fraction>& e, const BasePoly& a);

struct IsoWitness {
  bool isomorphic = false;
  int exponent = 0;  // +1 or -1 when isomorphic
  BasePoly conjugator;
  bool direct_product = false;  // sigma = id: A #_R T is A x T
};

/// Commutative specialization: isomorphic iff eta = sigma or eta = sigma^{-1}.
IsoWitness extension_iso_check(const Endo& sigma, const Endo& eta, const BaseRing& ring);

std::string format_smash(const SmashElement& e, const BaseRing& ring);

}  // namespace gwa
