#include <random>

#include "doctest.h"
#include "gwa/ore.hpp"

using namespace gwa;

namespace {

BaseRing ring_of(std::vector<std::pair<std::string, bool>> vars, ScalarMode mode) {
  std::vector<VarSpec> vs;
  for (auto& [n, inv] : vars) vs.push_back({n, inv, {}});
  return BaseRing(vs, {}, mode);
}

}  // namespace

TEST_CASE("templates materialize on the window") {
  BaseRing R = ring_of({{"t", false}}, ScalarMode::Qq);
  OreSetSpec S(R, {"t", "t-q^{2n}"}, 2);
  CHECK(S.materialized().size() == 6);
  CHECK(S.generator(1, -1) == R.parse("t-q^-2"));
  CHECK(S.generator(1, 2) == R.parse("t-q^4"));
  BaseRing C = ring_of({{"c", false}, {"t", false}}, ScalarMode::Q);
  OreSetSpec U(C, {"c-(t-{n})*(t-{n}-1)"}, 3);
  CHECK(U.generator(0, -2) == C.parse("c-(t+2)*(t+1)"));
}

TEST_CASE("fraction arithmetic examples") {
  BaseRing R = ring_of({{"t", false}}, ScalarMode::Qq);
  OreSetSpec S(R, {"t-q^{2n}"}, 3);
  LocalRing L(S);
  Fraction inv1 = L.generator_inverse(0, 1);  // 1/(t - q^2)
  Fraction two = frac_arith('+', inv1, inv1, L);
  CHECK(two.num == R.parse("2"));
  CHECK(two.den.size() == 1);
  Fraction one = L.mul(L.from_poly(R.parse("t-q^2")), inv1);
  CHECK(one.den.empty());
  CHECK(one.num == R.one());

  Endo sigma = Endo::from_strings(R, {{"t", "q^2*t"}}, {{"t", "q^-2*t"}});
  Fraction moved = L.apply(sigma, 1, L.generator_inverse(0, 2));
  CHECK(moved.num == R.parse("q^-2"));
  CHECK(moved.den.begin()->first == Fraction::Key{0, 1});
  CHECK(L.equal(L.mul(moved, L.from_poly(R.parse("q^2*t-q^4"))), L.one()));
  CHECK_THROWS_AS(L.generator_inverse(0, 4), Error);
  try {
    L.apply(sigma, 1, L.generator_inverse(0, -3));
    FAIL("expected window error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WindowExceeded);
  }
}

TEST_CASE("fraction arithmetic is a commutative ring on a window") {
  std::mt19937 rng(3);
  BaseRing R = ring_of({{"t", false}}, ScalarMode::Q);
  OreSetSpec S(R, {"t-{n}"}, 2);
  LocalRing L(S);
  std::uniform_int_distribution<int> idx(-2, 2), c(-3, 3);
  auto random_frac = [&] {
    Fraction f = L.from_poly(R.parse(std::to_string(c(rng)) + "*t^2+(" + std::to_string(c(rng)) + ")"));
    for (int k = 0; k < 2; ++k) f = L.mul(f, L.generator_inverse(0, idx(rng)));
    return f;
  };
  for (int i = 0; i < 25; ++i) {
    Fraction a = random_frac(), b = random_frac(), d = random_frac();
    CHECK(L.equal(L.add(a, b), L.add(b, a)));
    CHECK(L.equal(L.mul(a, b), L.mul(b, a)));
    CHECK(L.equal(L.add(L.add(a, b), d), L.add(a, L.add(b, d))));
    CHECK(L.equal(L.mul(L.mul(a, b), d), L.mul(a, L.mul(b, d))));
    CHECK(L.equal(L.mul(a, L.add(b, d)), L.add(L.mul(a, b), L.mul(a, d))));
  }
}

TEST_CASE("sigma stability") {
  BaseRing R = ring_of({{"t", false}}, ScalarMode::Q);
  Endo shift = Endo::from_strings(R, {{"t", "t-1"}}, {{"t", "t+1"}});
  CHECK_NOTHROW(verify_sigma_stable(OreSetSpec(R, {"t-{n}"}, 3), shift));
  try {
    verify_sigma_stable(OreSetSpec(R, {"t-2*{n}"}, 3), shift);
    FAIL("expected instability");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSigmaStable);
  }
}

TEST_CASE("coinvariant_quotient examples") {
  BaseRing kt = ring_of({{"t", false}}, ScalarMode::Q);
  Endo shift = Endo::from_strings(kt, {{"t", "t-1"}}, {{"t", "t+1"}});
  CHECK(coinvariant_quotient({kt.var("t")}, shift, kt).kind == CoinvKind::IsZero);
  CoinvResult id = coinvariant_quotient({kt.var("t")}, Endo::identity(kt), kt, 3);
  CHECK(id.kind == CoinvKind::Basis);
  CHECK(id.basis.size() == 4);

  BaseRing vw = ring_of({{"v", false}, {"w", false}}, ScalarMode::Qq);
  Endo s = Endo::from_strings(vw, {{"v", "q^-1*v"}, {"w", "q^-1*w"}}, {{"v", "q*v"}, {"w", "q*w"}});
  CHECK(coinvariant_quotient({vw.parse("v*w")}, s, vw).kind == CoinvKind::IsScalars);
}

TEST_CASE("subalgebra generated by S") {
  BaseRing vw = ring_of({{"v", false}, {"w", false}}, ScalarMode::Qq);
  auto g = subalgebra_generators(OreSetSpec(vw, {"1+q^{2n+1}*v*w"}, 3));
  CHECK_FALSE(g.whole_ring);
  REQUIRE(g.gens.size() == 1);
  CHECK(g.gens[0] == vw.parse("v*w"));
  BaseRing ct = ring_of({{"c", false}, {"t", false}}, ScalarMode::Q);
  CHECK(subalgebra_generators(OreSetSpec(ct, {"c-(t-{n})*(t-{n}-1)"}, 3)).whole_ring);
  BaseRing lt = ring_of({{"c", false}, {"t", true}}, ScalarMode::Qq);
  CHECK(subalgebra_generators(OreSetSpec(lt, {"c-(q^{-2n+1}*t+q^{2n-1}*t^-1)"}, 3)).whole_ring);
}
