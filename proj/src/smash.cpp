#include "gwa/smash.hpp"

#include <sstream>

namespace gwa {

BasePoly PolyCoeffs::shift(int m, const BasePoly& v) const {
  if (m == 0 || v.is_constant()) return v;
  const Endo* power = nullptr;
  {
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->powers.find(m);
    if (it == cache->powers.end()) it = cache->powers.emplace(m, sigma->power(m)).first;
    power = &it->second;  // map nodes are stable
  }
  return power->apply(v);
}

GwaDatum::GwaDatum(const BaseRing& ring, const BasePoly& a, const Endo& sigma)
    : ring_(ring), a_(ring.reduce(a)), sigma_(endo_verify(sigma, ring)), algebra_(PolyCoeffs(ring_, sigma_)) {
  if (a_.is_zero()) throw Error(Errc::InvalidArgument, "a must be nonzero");
  if (!ring.admissible(a_)) throw Error(Errc::InvalidArgument, "a is not an element of the ring");
}

SmashElement smash_mul(const SmashElement& e, const SmashElement& f, const GwaDatum& D) {
  return D.algebra().mul(e, f);
}

std::vector<std::string> parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

SmashElement gwa_embed(const std::vector<std::string>& word, const GwaDatum& D) {
  const auto& alg = D.algebra();
  SmashElement acc = alg.one();
  for (const auto& tok : word) {
    SmashElement factor;
    if (tok == "x")
      factor = alg.x_power(1);
    else if (tok == "y")
      factor = alg.monomial(D.a(), -1);
    else
      factor = alg.monomial(D.ring().parse(tok), 0);
    acc = alg.mul(acc, factor);
  }
  return acc;
}

SmashElement gwa_embed(const std::string& word, const GwaDatum& D) { return gwa_embed(parse_word(word), D); }

std::vector<RelationCheck> verify_gwa_relations(const GwaDatum& D, const std::vector<BasePoly>& test_elems) {
  const auto& alg = D.algebra();
  const SmashElement X = alg.x_power(1);
  const SmashElement Y = alg.monomial(D.a(), -1);
  std::vector<RelationCheck> out;
  out.push_back({"yx-a", alg.equal(alg.mul(Y, X), alg.monomial(D.a(), 0))});
  out.push_back({"xy-sigma(a)", alg.equal(alg.mul(X, Y), alg.monomial(D.sigma().apply(D.a()), 0))});
  for (const auto& u : test_elems) {
    const std::string name = D.ring().format(u);
    const SmashElement U = alg.monomial(u, 0);
    const SmashElement SU = alg.monomial(D.sigma().apply(u), 0);
    out.push_back({"xu-sigma(u)x [u=" + name + "]", alg.equal(alg.mul(X, U), alg.mul(SU, X))});
    out.push_back({"y*sigma(u)-uy [u=" + name + "]", alg.equal(alg.mul(Y, SU), alg.mul(U, Y))});
  }
  return out;
}

BasePoly orbit_product(const GwaDatum& D, int n) {
  const Endo inv = D.sigma().inverse();
  BasePoly prod = D.a();
  BasePoly cur = D.a();
  for (int i = 1; i <= n; ++i) {
    cur = inv.apply(cur);
    prod = D.ring().mul(prod, cur);
  }
  return prod;
}

Membership image_membership(const SmashElement& e, const GwaDatum& D) {
  for (const auto& [k, c] : e.comp) {
    if (k >= 0) continue;
    const int n = -k - 1;
    RingIdeal ideal(D.ring(), {orbit_product(D, n)});
    if (!ideal.contains(c)) return {false, n};
  }
  return {true, -1};
}

LocalizedSmash localize_smash(const GwaDatum& D, const OreSetSpec& S) {
  if (!(S.ring() == D.ring())) throw Error(Errc::InvalidArgument, "Ore set over another ring");
  verify_sigma_stable(S, D.sigma());
  LocalRing local(S);
  LocalizedSmash out{local, D.sigma(), SmashAlgebra<FracCoeffs>(FracCoeffs(local, D.sigma())), local.one()};
  out.identity = D.ring().is_unit(D.a());
  auto inv = local.inverse(D.a());
  if (!inv)
    throw Error(Errc::InvalidArgument, "a = " + D.ring().format(D.a()) + " is not a product of window generators and a unit");
  out.a_inverse = *inv;
  const auto& alg = out.algebra;
  auto phi_y = alg.monomial(local.from_poly(D.a()), -1);
  auto lhs = alg.mul(alg.monomial(out.a_inverse, 0), phi_y);
  out.witness_holds = alg.equal(lhs, alg.x_power(-1));
  return out;
}

bool localized_preimage_check(const LocalizedSmash& L, const SmashElem<Fraction>& e, const BasePoly& a) {
  const auto& alg = L.algebra;
  const auto phi_x = alg.x_power(1);
  const auto x_inv = alg.mul(alg.monomial(L.a_inverse, 0), alg.monomial(L.local.from_poly(a), -1));
  SmashElem<Fraction> rebuilt;
  for (const auto& [n, c] : e.comp) {
    auto term = alg.monomial(c, 0);
    for (int i = 0; i < std::abs(n); ++i) term = alg.mul(term, n > 0 ? phi_x : x_inv);
    rebuilt = alg.add(rebuilt, term);
  }
  return alg.equal(rebuilt, e);
}

IsoWitness extension_iso_check(const Endo& sigma, const Endo& eta, const BaseRing& ring) {
  endo_verify(sigma, ring);
  endo_verify(eta, ring);
  IsoWitness w;
  w.conjugator = ring.one();
  w.direct_product = sigma.is_identity();
  if (eta == sigma) {
    w.isomorphic = true;
    w.exponent = 1;
  } else if (eta == sigma.inverse()) {
    w.isomorphic = true;
    w.exponent = -1;
  }
  return w;
}

std::string format_smash(const SmashElement& e, const BaseRing& ring) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto it = e.comp.rbegin(); it != e.comp.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + ring.format(it->second) + ")";
    if (it->first != 0) out += "*x^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace gwa
