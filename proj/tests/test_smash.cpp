#include <random>

#include "doctest.h"
#include "gwa/smash.hpp"

using namespace gwa;

namespace {

BaseRing ring_of(std::vector<std::pair<std::string, bool>> vars, ScalarMode mode) {
  std::vector<VarSpec> vs;
  for (auto& [n, inv] : vars) vs.push_back({n, inv, {}});
  return BaseRing(vs, {}, mode);
}

GwaDatum weyl() {
  BaseRing R = ring_of({{"t", false}}, ScalarMode::Q);
  return GwaDatum(R, R.parse("t"), Endo::from_strings(R, {{"t", "t-1"}}, {{"t", "t+1"}}));
}

std::string random_word(std::mt19937& rng, const std::vector<std::string>& letters, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::string w;
  for (int i = 0; i < len; ++i) w += letters[pick(rng)] + " ";
  return w;
}

bool all_pass(const std::vector<RelationCheck>& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("smash_mul examples") {
  GwaDatum D = weyl();
  const auto& alg = D.algebra();
  const BaseRing& R = D.ring();
  SmashElement x = alg.x_power(1), t = alg.monomial(R.var("t"), 0);
  CHECK(smash_mul(x, t, D) == alg.mul(alg.monomial(R.parse("t-1"), 0), x));
  CHECK(smash_mul(smash_mul(x, x, D), t, D) == alg.monomial(R.parse("t-2"), 2));
  CHECK(smash_mul(alg.one(), t, D) == t);
}

TEST_CASE("gwa_embed examples") {
  GwaDatum D = weyl();
  CHECK(gwa_embed("y x", D) == D.algebra().monomial(D.ring().parse("t"), 0));
  CHECK(gwa_embed("x y", D) == D.algebra().monomial(D.ring().parse("t-1"), 0));
  CHECK(all_pass(verify_gwa_relations(D, {D.ring().var("t")})));
}

TEST_CASE("U_q(sl2) commutator") {
  BaseRing R = ring_of({{"c", false}, {"t", true}}, ScalarMode::Qq);
  GwaDatum D(R, R.parse("c-(q^-1*t+q*t^-1)"), Endo::from_strings(R, {{"t", "q^2*t"}}, {{"t", "q^-2*t"}}));
  const auto& alg = D.algebra();
  const Scalar s = R.scalar("1/(q-q^-1)");
  SmashElement E = alg.scale(R.constant(s), gwa_embed("y", D));
  SmashElement F = alg.scale(R.constant(s), gwa_embed("x", D));
  SmashElement comm = alg.sub(alg.mul(E, F), alg.mul(F, E));
  CHECK(comm == alg.monomial(R.parse("(t-t^-1)/(q-q^-1)"), 0));
}

TEST_CASE("phi is multiplicative and lands in the image") {
  std::mt19937 rng(17);
  GwaDatum D = weyl();
  for (int i = 0; i < 50; ++i) {
    std::string w1 = random_word(rng, {"x", "y", "t", "t+2", "3"}, 3);
    std::string w2 = random_word(rng, {"x", "y", "y", "t^2"}, 3);
    CHECK(gwa_embed(w1 + w2, D) == smash_mul(gwa_embed(w1, D), gwa_embed(w2, D), D));
    CHECK(image_membership(gwa_embed(w1 + w2, D), D).in_image);
  }
}

TEST_CASE("smash_mul is associative") {
  std::mt19937 rng(23);
  BaseRing R = ring_of({{"t", true}}, ScalarMode::Qq);
  GwaDatum D(R, R.parse("t+1"), Endo::from_strings(R, {{"t", "q*t"}}, {{"t", "q^-1*t"}}));
  std::uniform_int_distribution<int> n(-2, 2), c(-2, 2);
  auto rnd = [&] {
    SmashElement e;
    for (int k = 0; k < 3; ++k)
      e = D.algebra().add(e, D.algebra().monomial(R.parse(std::to_string(c(rng)) + "*t^" + std::to_string(n(rng)) + "+1"), n(rng)));
    return e;
  };
  for (int i = 0; i < 20; ++i) {
    SmashElement a = rnd(), b = rnd(), d = rnd();
    CHECK(smash_mul(smash_mul(a, b, D), d, D) == smash_mul(a, smash_mul(b, d, D), D));
  }
}

TEST_CASE("image_membership examples") {
  GwaDatum D = weyl();
  const auto& alg = D.algebra();
  CHECK(image_membership(alg.monomial(D.ring().var("t"), -1), D).in_image);
  Membership m = image_membership(alg.x_power(-1), D);
  CHECK_FALSE(m.in_image);
  CHECK(m.witness == 0);
  CHECK(image_membership(alg.monomial(D.ring().parse("t*(t+1)"), -2), D).in_image);
  CHECK_FALSE(image_membership(alg.monomial(D.ring().parse("t"), -2), D).in_image);
}

TEST_CASE("verify_gwa_relations on U(sl2) and Podles") {
  BaseRing R = ring_of({{"c", false}, {"t", false}}, ScalarMode::Q);
  GwaDatum U(R, R.parse("c-t*(t+1)"), Endo::from_strings(R, {{"t", "t-1"}}, {{"t", "t+1"}}));
  CHECK(all_pass(verify_gwa_relations(U, {R.var("c"), R.var("t")})));
  const auto& alg = U.algebra();
  SmashElement EF = alg.sub(alg.mul(gwa_embed("x", U), gwa_embed("y", U)), alg.mul(gwa_embed("y", U), gwa_embed("x", U)));
  CHECK(EF == alg.monomial(R.parse("2*t"), 0));

  BaseRing P = ring_of({{"t", false}}, ScalarMode::Qq);
  GwaDatum Pod(P, P.parse("-t*(t-1)"), Endo::from_strings(P, {{"t", "q^2*t"}}, {{"t", "q^-2*t"}}));
  CHECK(gwa_embed("x y", Pod) == Pod.algebra().monomial(P.parse("-q^2*t*(q^2*t-1)"), 0));
}

TEST_CASE("localize_smash") {
  GwaDatum D = weyl();
  LocalizedSmash L = localize_smash(D, OreSetSpec(D.ring(), {"t-{n}"}, 3));
  CHECK(L.witness_holds);
  CHECK_FALSE(L.identity);
  auto e = L.algebra.add(L.algebra.monomial(L.local.generator_inverse(0, 2), -2),
                         L.algebra.monomial(L.local.from_poly(D.ring().parse("t^2")), 1));
  CHECK(localized_preimage_check(L, e, D.a()));

  BaseRing V = ring_of({{"v", false}, {"w", false}}, ScalarMode::Qq);
  GwaDatum O(V, V.parse("1+q*v*w"), Endo::from_strings(V, {{"v", "q^-1*v"}, {"w", "q^-1*w"}}, {{"v", "q*v"}, {"w", "q*w"}}));
  CHECK(localize_smash(O, OreSetSpec(V, {"1+q^{2n+1}*v*w"}, 3)).witness_holds);

  BaseRing T = ring_of({{"t", true}}, ScalarMode::Qq);
  GwaDatum Q(T, T.parse("t"), Endo::from_strings(T, {{"t", "q*t"}}, {{"t", "q^-1*t"}}));
  LocalizedSmash LQ = localize_smash(Q, OreSetSpec(T, {"t"}, 0));
  CHECK(LQ.identity);
  CHECK(LQ.witness_holds);

  try {
    localize_smash(D, OreSetSpec(D.ring(), {"t-2*{n}"}, 3));
    FAIL("expected instability");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotSigmaStable);
  }
}

TEST_CASE("extension_iso_check") {
  BaseRing R = ring_of({{"t", true}}, ScalarMode::Qq);
  auto e = [&](const char* img, const char* inv) { return Endo::from_strings(R, {{"t", img}}, {{"t", inv}}); };
  Endo s = e("q^2*t", "q^-2*t");
  IsoWitness w = extension_iso_check(s, e("q^-2*t", "q^2*t"), R);
  CHECK(w.isomorphic);
  CHECK(w.exponent == -1);
  CHECK_FALSE(extension_iso_check(s, e("q^4*t", "q^-4*t"), R).isomorphic);
  IsoWitness id = extension_iso_check(Endo::identity(R), Endo::identity(R), R);
  CHECK(id.isomorphic);
  CHECK(id.direct_product);
  Endo h = e("q^4*t", "q^-4*t");
  CHECK(extension_iso_check(s, h, R).isomorphic == extension_iso_check(h, s, R).isomorphic);
  CHECK(extension_iso_check(s.inverse(), h.inverse(), R).isomorphic == extension_iso_check(s, h, R).isomorphic);
}
