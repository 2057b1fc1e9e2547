// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gwa/catalog.hpp"
#include "gwa/errors.hpp"
#include "gwa/modules.hpp"

using namespace gwa;

namespace {

// Time budgets, in seconds.
constexpr double kRelationsEach = 1.0;
constexpr double kStructureTotal = 10.0;
constexpr double kSeparableTotal = 60.0;
constexpr double kTablesTotal = 600.0;

constexpr int kBound = 4;
constexpr int kNmax = 3;
constexpr int kWindow = 3;
constexpr int kWordsPerDatum = 200;
constexpr int kNonImagePerDatum = 50;

const std::vector<std::string> kCatalog = {"weyl_a1", "u_sl2",  "b_lambda", "quantum_torus", "uq_sl2",      "oq_m2",
                                           "oq_gl2",  "oq_sl2", "oq_su2",   "podles",        "podles_param"};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

BaseRing free_ring(std::vector<std::pair<std::string, bool>> vars, ScalarMode mode = ScalarMode::Q,
                   std::vector<std::string> rels = {}) {
  std::vector<VarSpec> vs;
  for (auto& [n, inv] : vars) vs.push_back({n, inv, {}});
  BaseRing f(vs, {}, mode);
  std::vector<BasePoly> rs;
  for (const auto& r : rels) rs.push_back(f.parse(r));
  return BaseRing(vs, rs, mode);
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string list(const std::vector<std::size_t>& v) {
  std::ostringstream o;
  o << "(";
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ")";
  return o.str();
}

Outcome relations() {
  std::vector<std::string> bad;
  double worst = 0;
  for (const auto& n : kCatalog) {
    const auto t = Clock::now();
    const ExampleSpec ex = catalog_get(n);
    const GwaDatum D = ex.datum();
    std::vector<BasePoly> elems;
    for (const auto& v : D.ring().vars()) elems.push_back(D.ring().var(v.name));
    bool ok = true;
    for (const auto& c : verify_gwa_relations(D, elems)) ok = ok && c.pass;
    for (const auto& x : ex.extra) ok = ok && x.holds(D);
    const double s = since(t);
    worst = std::max(worst, s);
    if (!ok || s >= kRelationsEach) bad.push_back(n);
  }
  return {bad.empty(), std::to_string(kCatalog.size()) + " data, slowest " + std::to_string(worst) + " s" +
                           (bad.empty() ? "" : "; failing: " + join(bad))};
}

std::string random_word(const BaseRing& ring, std::mt19937& rng) {
  std::vector<std::string> alphabet{"x", "y", "2"};
  for (const auto& v : ring.vars()) {
    alphabet.push_back(v.name);
    if (v.invertible) alphabet.push_back(v.name + "^-1");
  }
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string w;
  for (int i = len(rng); i > 0; --i) w += (w.empty() ? "" : " ") + alphabet[pick(rng)];
  return w;
}

Outcome structure() {
  const auto t = Clock::now();
  std::mt19937 rng(20240611);
  std::vector<std::string> bad;
  std::size_t positives = 0, negatives = 0;
  for (const auto& n : kCatalog) {
    const GwaDatum D = catalog_get(n).datum();
    const auto& alg = D.algebra();
    bool ok = true;
    std::vector<SmashElement> images;
    for (int i = 0; i < kWordsPerDatum; ++i) {
      images.push_back(gwa_embed(random_word(D.ring(), rng), D));
      ok = ok && image_membership(images.back(), D).in_image;
      ++positives;
    }
    // c x^{-k-1} with c a nonzero constant lies outside the image exactly when
    // the orbit product is not a unit; the image is a subspace, so adding an
    // image element keeps it outside.
    std::uniform_int_distribution<int> deg(0, 3), coef(1, 9);
    std::uniform_int_distribution<std::size_t> which(0, images.size() - 1);
    for (int i = 0; i < kNonImagePerDatum; ++i) {
      const int k = deg(rng);
      if (D.ring().is_unit(orbit_product(D, k))) continue;
      const SmashElement e = alg.add(images[which(rng)], alg.monomial(D.ring().constant(D.ring().scalar(coef(rng))), -k - 1));
      ok = ok && !image_membership(e, D).in_image;
      ++negatives;
    }
    if (!ok) bad.push_back(n);
  }
  const double s = since(t);
  return {bad.empty() && s < kStructureTotal,
          std::to_string(positives) + " images, " + std::to_string(negatives) + " non-images, " + std::to_string(s) +
              " s" + (bad.empty() ? "" : "; failing: " + join(bad))};
}

Outcome soundness() {
  std::vector<std::string> bad;
  for (const auto& n : kCatalog) {
    const ExampleSpec ex = catalog_get(n);
    try {
      ChainOptions opts;
      opts.bound = kBound;
      opts.top = kNmax + 1;
      ChainComplex C(ex.ring, opts);
      for (int d = 2; d <= kNmax + 1; ++d)
        for (std::size_t j = 0; j < C.dim(d); ++j)
          if (!apply_differential(C, d - 1, C.differential(d, j)).empty()) {
            bad.push_back(n + " b.b");
            d = kNmax + 2;
            break;
          }
    } catch (const Error& e) {
      bad.push_back(n + " (" + e.what() + ")");
    }
  }
  std::size_t compared = 0;
  for (const auto& R : {free_ring({{"t", false}}), free_ring({{"t", true}}), free_ring({{"u", false}, {"v", false}}),
                        free_ring({{"c", false}, {"t", false}})}) {
    const BettiTable tr = truncated_hh(R, kBound, kNmax);
    const BettiTable hk = hkr_oracle(R, kBound, kNmax);
    for (const auto& [key, e] : tr.entries) {
      if (!e.stabilized) continue;
      auto it = hk.entries.find(key);
      const std::size_t expect = it == hk.entries.end() ? 0 : it->second.rank;
      if (expect != e.rank) {
        bad.push_back("HKR " + R.vars()[0].name);
        break;
      }
      ++compared;
    }
  }
  return {bad.empty(), "b.b = 0 on " + std::to_string(kCatalog.size()) + " rings; " + std::to_string(compared) +
                           " stabilized HKR blocks" + (bad.empty() ? "" : "; failing: " + join(bad))};
}

Outcome weight_zero() {
  const BaseRing R = free_ring({{"t", true}}, ScalarMode::Qq);
  const Endo s = Endo::from_strings(R, {{"t", "q*t"}}, {{"t", "q^-1*t"}});
  const WeightGrading g = detect_grading(R, s);
  std::vector<std::vector<std::size_t>> tots;
  for (int B : {kBound, kBound + 1}) {
    ChainComplex C(R, eigen_options(g, B, kNmax + 1));
    std::vector<std::size_t> tot(kNmax + 1, 0);
    for (const auto& [k, r] : invariant_homology(C, s, g, kNmax)) tot[static_cast<std::size_t>(k.first)] += r;
    tots.push_back(tot);
  }
  const std::vector<std::size_t> expect{1, 1, 0, 0};
  return {tots[0] == expect && tots[1] == expect, "B=4 " + list(tots[0]) + ", B=5 " + list(tots[1])};
}

Outcome separable() {
  const auto t = Clock::now();
  bool ok = true;
  std::string detail;
  for (int m : {3, 4}) {
    const BaseRing R = free_ring({{"t", false}}, ScalarMode::Q, {"t^" + std::to_string(m)});
    const Endo s = Endo::from_strings(R, {{"t", "-t"}}, {{"t", "-t"}});
    // A is finite-dimensional: this bound materializes every chain up to degree Nmax + 1.
    const SeparableResult r = hh_smash_separable(R, s, (kNmax + 2) * (m - 1), kNmax);
    const std::vector<std::size_t> brute = hh_finite_dim(finite_smash(R, s, 2), kNmax);
    std::vector<std::size_t> formula(r.finite_ranks.begin(), r.finite_ranks.begin() + std::min<std::size_t>(r.finite_ranks.size(), kNmax + 1));
    ok = ok && formula == brute && r.stabilized;
    detail += (detail.empty() ? "" : "; ") + std::string("m=") + std::to_string(m) + " formula " + list(formula) +
              " vs smash algebra " + list(brute);
  }
  const double s = since(t);
  return {ok && s < kSeparableTotal, detail + ", " + std::to_string(s) + " s"};
}

Outcome tables() {
  const auto t = Clock::now();
  RunParams p;
  p.bound = kBound;
  p.nmax = kNmax;
  p.window = kWindow;
  std::vector<std::string> bad;
  std::size_t matched = 0;
  for (const char* n : {"weyl_a1", "u_sl2", "b_lambda", "quantum_torus", "uq_sl2", "oq_sl2", "oq_su2", "podles",
                        "podles_param"}) {
    const RunReport r = catalog_run(n, p);
    if (r.verdict == Verdict::Match && r.computed.all_stabilized())
      ++matched;
    else
      bad.push_back(std::string(n) + " " + verdict_name(r.verdict));
  }
  const double s = since(t);
  return {bad.empty() && s < kTablesTotal,
          std::to_string(matched) + "/9 Match, " + std::to_string(s) + " s" + (bad.empty() ? "" : "; " + join(bad))};
}

Outcome isomorphism() {
  const BaseRing R = free_ring({{"t", false}}, ScalarMode::Qq);
  auto e = [&](const char* img, const char* inv) { return Endo::from_strings(R, {{"t", img}}, {{"t", inv}}); };
  const Endo s = e("q^2*t", "q^-2*t");
  const IsoWitness inv = extension_iso_check(s, e("q^-2*t", "q^2*t"), R);
  const IsoWitness other = extension_iso_check(s, e("q^4*t", "q^-4*t"), R);
  const IsoWitness id = extension_iso_check(Endo::identity(R), Endo::identity(R), R);
  const bool ok = inv.isomorphic && inv.exponent == -1 && !other.isomorphic && id.direct_product;
  return {ok, std::string("q^-2: ") + (inv.isomorphic ? "Isomorphic (exponent " + std::to_string(inv.exponent) + ")" : "NotIsomorphic") +
                  ", q^4: " + (other.isomorphic ? "Isomorphic" : "NotIsomorphic") +
                  ", id: direct product " + (id.direct_product ? "set" : "unset")};
}

Outcome filtration() {
  bool ok = true;
  std::string detail;
  for (int m = 1; m <= 3; ++m) {
    // The (m+1)-dimensional simple module lives at lambda = (m/2)(m/2 + 1).
    const Rational lambda(m * (m + 2), 4);
    const ExampleSpec ex = catalog_get("b_lambda", lambda);
    const GwaDatum D = ex.datum();
    std::vector<Scalar> taus;
    for (int i = 0; i <= m; ++i) taus.emplace_back(ScalarMode::Q, Rational(m, 2) - i);
    const FiniteModule M = shift_module(D, taus);
    const HeightFiltration h = height_filtration(M, D);
    const LocalizationReport rep = localized_module_check(M, D, ex.ore(kWindow));
    const bool good = module_ok(verify_module(M, D)) && M.dim == static_cast<std::size_t>(m + 1) && !h.capped &&
                      h.subspaces[static_cast<std::size_t>(h.height)].size() == M.dim &&
                      rep.status == LocalizationStatus::Certified && rep.quotient_dim == 0;
    ok = ok && good;
    detail += "m=" + std::to_string(m) + " height " + std::to_string(h.height) + " V_S dim " + std::to_string(rep.quotient_dim) + "; ";
  }
  const BaseRing R = free_ring({{"t", false}});
  const GwaDatum D(R, R.parse("t^2+1"), Endo::from_strings(R, {{"t", "-t"}}, {{"t", "-t"}}));
  const auto q = [](long v) { return Scalar(ScalarMode::Q, v); };
  FiniteModule M;
  M.dim = 2;
  M.action["t"] = {{q(1), q(0)}, {q(0), q(-1)}};
  M.action["x"] = {{q(0), q(1)}, {q(1), q(0)}};
  M.action["y"] = {{q(0), q(2)}, {q(2), q(0)}};
  const LocalizationReport rep = localized_module_check(M, D, OreSetSpec(R, {"t^2+1"}, 1));
  ok = ok && module_ok(verify_module(M, D)) && rep.status == LocalizationStatus::Certified && rep.quotient_dim == 2 &&
       rep.height == 0;
  detail += "a-invertible V_S dim " + std::to_string(rep.quotient_dim);
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation verification", relations},
      {"structure theorem", structure},
      {"homology engine soundness", soundness},
      {"weight-zero group homology", weight_zero},
      {"separable automorphisms", separable},
      {"table reproduction", tables},
      {"isomorphism decision", isomorphism},
      {"module filtration", filtration},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
