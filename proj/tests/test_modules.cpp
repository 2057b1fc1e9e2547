#include "doctest.h"
#include "gwa/catalog.hpp"
#include "gwa/modules.hpp"

using namespace gwa;

namespace {

// t-eigenvalues tau_0, tau_0 - 1, ..., tau_0 - (d - 1).
std::vector<Scalar> ladder(const Rational& top, int d) {
  std::vector<Scalar> out;
  for (int i = 0; i < d; ++i) out.emplace_back(ScalarMode::Q, Rational(top - i));
  return out;
}

// The (m+1)-dimensional simple module of B_lambda needs a(m/2) = 0, so
// lambda = (m/2)(m/2 + 1).
Rational simple_lambda(int m) { return Rational(m * (m + 2), 4); }

GwaDatum a_invertible_datum() {
  BaseRing R({{"t", false, {}}}, {}, ScalarMode::Q);
  Endo s = Endo::from_strings(R, {{"t", "-t"}}, {{"t", "-t"}});
  return GwaDatum(R, R.parse("t^2+1"), s);
}

FiniteModule a_invertible_module() {
  const auto q = [](long v) { return Scalar(ScalarMode::Q, v); };
  FiniteModule M;
  M.dim = 2;
  M.action["t"] = {{q(1), q(0)}, {q(0), q(-1)}};
  M.action["x"] = {{q(0), q(1)}, {q(1), q(0)}};
  M.action["y"] = {{q(0), q(2)}, {q(2), q(0)}};
  return M;
}

std::size_t kernel_dim(const HeightFiltration& h, int l) { return h.subspaces[static_cast<std::size_t>(l)].size(); }

}  // namespace

TEST_CASE("zero module passes every relation") {
  const auto ex = catalog_get("b_lambda");
  FiniteModule M;
  M.action["t"] = {};
  M.action["x"] = {};
  M.action["y"] = {};
  CHECK(module_ok(verify_module(M, ex.datum())));
}

TEST_CASE("B_lambda simple modules") {
  for (int m = 1; m <= 3; ++m) {
    CAPTURE(m);
    const auto ex = catalog_get("b_lambda", simple_lambda(m));
    const GwaDatum D = ex.datum();
    const FiniteModule M = shift_module(D, ladder(Rational(m, 2), m + 1));
    REQUIRE(M.dim == static_cast<std::size_t>(m + 1));
    CHECK(module_ok(verify_module(M, D)));

    const HeightFiltration h = height_filtration(M, D);
    CHECK(kernel_dim(h, h.height) == M.dim);
    CHECK(h.height <= m + 1);
    CHECK_FALSE(h.capped);
    CHECK(h.submodule);
    for (int l = 0; l + 1 < static_cast<int>(h.subspaces.size()); ++l) CHECK(kernel_dim(h, l) <= kernel_dim(h, l + 1));

    const LocalizationReport rep = localized_module_check(M, D, ex.ore(3));
    CHECK(rep.status == LocalizationStatus::Certified);
    CHECK(rep.quotient_dim == 0);
    CHECK(rep.torsion_dim == M.dim);
  }
}

TEST_CASE("lambda = m(m+1) has no (m+1)-dimensional shift module") {
  for (int m = 1; m <= 3; ++m) {
    CAPTURE(m);
    const auto ex = catalog_get("b_lambda", Rational(m * (m + 1)));
    const GwaDatum D = ex.datum();
    CHECK_FALSE(module_ok(verify_module(shift_module(D, ladder(Rational(m), m + 1)), D)));
    // The ladder from the root m down to the other root -m-1 has 2m + 1 rungs.
    CHECK(module_ok(verify_module(shift_module(D, ladder(Rational(m), 2 * m + 1)), D)));
  }
}

TEST_CASE("perturbed shift entry fails yx - a") {
  const auto ex = catalog_get("b_lambda", simple_lambda(2));
  const GwaDatum D = ex.datum();
  FiniteModule M = shift_module(D, ladder(Rational(1), 3));
  M.action["y"][1][0] += Scalar(ScalarMode::Q, 1);
  bool yx = true;
  for (const auto& c : verify_module(M, D))
    if (c.name == "yx-a") yx = c.pass;
  CHECK_FALSE(yx);
}

TEST_CASE("a-invertible module localizes to itself") {
  const GwaDatum D = a_invertible_datum();
  const FiniteModule M = a_invertible_module();
  REQUIRE(module_ok(verify_module(M, D)));
  const HeightFiltration h = height_filtration(M, D);
  CHECK(h.height == 0);
  CHECK(kernel_dim(h, 0) == 0);
  const LocalizationReport rep = localized_module_check(M, D, OreSetSpec(D.ring(), {"t^2+1"}, 1));
  CHECK(rep.status == LocalizationStatus::Certified);
  CHECK(rep.quotient_dim == 2);
  CHECK(rep.quotient_relations);
}

TEST_CASE("direct sum filtrations add blockwise") {
  const auto ex = catalog_get("b_lambda", simple_lambda(2));
  const GwaDatum D = ex.datum();
  const FiniteModule A = shift_module(D, ladder(Rational(1), 3));
  const FiniteModule S = direct_sum(A, A);
  REQUIRE(module_ok(verify_module(S, D)));
  const HeightFiltration ha = height_filtration(A, D), hs = height_filtration(S, D);
  for (int l = 0; l < static_cast<int>(ha.subspaces.size()); ++l) CHECK(kernel_dim(hs, l) == 2 * kernel_dim(ha, l));
  CHECK(hs.height == ha.height);
}

TEST_CASE("singular generator on the quotient is inconclusive") {
  // a acts invertibly on V, but t^2 - 1 in S acts as zero.
  const GwaDatum D = a_invertible_datum();
  const LocalizationReport rep = localized_module_check(a_invertible_module(), D, OreSetSpec(D.ring(), {"t^2-1"}, 1));
  CHECK(rep.status == LocalizationStatus::Inconclusive);
  CHECK(rep.witness_dim == 2);
}
