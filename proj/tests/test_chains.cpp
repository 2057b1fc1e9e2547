#include "doctest.h"
#include "gwa/chains.hpp"

using namespace gwa;

namespace {

BaseRing ring_of(std::vector<std::pair<std::string, bool>> vars, std::vector<std::string> rels = {}) {
  std::vector<VarSpec> vs;
  for (auto& [n, inv] : vars) vs.push_back({n, inv, {}});
  BaseRing free(vs, {}, ScalarMode::Q);
  std::vector<BasePoly> rs;
  for (const auto& r : rels) rs.push_back(free.parse(r));
  return BaseRing(vs, rs, ScalarMode::Q);
}

std::vector<std::size_t> totals(const ChainComplex& C, int nmax) {
  std::vector<std::size_t> out(static_cast<std::size_t>(nmax) + 1, 0);
  for (const auto& [key, h] : block_homology(C, nmax)) out[static_cast<std::size_t>(key.first)] += h;
  return out;
}

}  // namespace

TEST_CASE("bar differential squares to zero") {
  for (const auto& R : {ring_of({{"t", false}, {"s", false}}), ring_of({{"t", true}}), ring_of({{"e", false}}, {"e^2"})}) {
    ChainComplex C(R, {3, 3});
    for (int n = 2; n <= 3; ++n)
      for (std::size_t j = 0; j < C.dim(n); ++j)
        CHECK(apply_differential(C, n - 1, C.differential(n, j)).empty());
  }
}

TEST_CASE("polynomial rings follow the HKR count") {
  // k[t]: HH_0 one class per weight 0..B, HH_1 one per weight 1..B.
  ChainComplex C(ring_of({{"t", false}}), {4, 4});
  CHECK(totals(C, 3) == std::vector<std::size_t>{5, 4, 0, 0});
  // k[t,s] at B = 3: HH_2 lives in weights (i,j) with i,j >= 1, i+j <= 3.
  ChainComplex D(ring_of({{"t", false}, {"s", false}}), {3, 3});
  const auto h = totals(D, 2);
  CHECK(h[0] == 10);
  CHECK(h[1] == 2 * 6);  // dt, ds against monomials of degree <= 2
  CHECK(h[2] == 3);
}

TEST_CASE("dual numbers have one class in each positive degree") {
  ChainComplex C(ring_of({{"e", false}}, {"e^2"}), {5, 4});
  CHECK(totals(C, 3) == std::vector<std::size_t>{2, 1, 1, 1});
}

TEST_CASE("parallel and serial block ranks agree") {
  ChainComplex C(ring_of({{"t", false}, {"s", false}}), {3, 3});
  set_parallel_enabled(false);
  const auto serial = block_homology(C, 2);
  set_parallel_enabled(true);
  CHECK(block_homology(C, 2) == serial);
}

TEST_CASE("diagonal action of a translation") {
  BaseRing R = ring_of({{"t", false}});
  ChainComplex C(R, {2, 1});
  const Endo sigma = Endo::from_strings(R, {{"t", "t-1"}}, {{"t", "t+1"}});
  const auto img = C.diagonal_action(sigma, 1);
  // (t (x) 1) -> (t - 1) (x) 1
  const int j = C.index(1, {C.table().find(R.parse("t").lead_monomial()), C.table().one_index()});
  REQUIRE(j >= 0);
  CHECK(img[static_cast<std::size_t>(j)].size() == 2);
}

TEST_CASE("chain cap is enforced") {
  ChainOptions o;
  o.bound = 4;
  o.top = 4;
  o.cap = 10;
  CHECK_THROWS_AS(ChainComplex(ring_of({{"t", false}}), o), Error);
}
