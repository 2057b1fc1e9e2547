#include "gwa/catalog.hpp"

#include <chrono>

namespace gwa {

namespace {

BaseRing make_ring(std::vector<std::pair<std::string, bool>> vars, ScalarMode mode) {
  std::vector<VarSpec> vs;
  for (auto& [n, inv] : vars) vs.push_back({n, inv, {}});
  return BaseRing(vs, {}, mode);
}

AnswerModule expect(const std::vector<std::size_t>& ranks, const std::string& ring) {
  return answer_from_ranks(ranks, ring);
}

SmashElement word(const GwaDatum& D, const std::string& w) { return gwa_embed(w, D); }

SmashElement base(const GwaDatum& D, const std::string& f) { return D.algebra().monomial(D.ring().parse(f), 0); }

SmashElement commutator(const GwaDatum& D, const std::string& u, const std::string& v) {
  const auto& alg = D.algebra();
  return alg.sub(alg.mul(word(D, u), word(D, v)), alg.mul(word(D, v), word(D, u)));
}

struct Entry {
  const char* name;
  const char* title;
  const char* notes;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"weyl_a1", "rank-1 Weyl algebra",
       "A = k[t], a = t, sigma(t) = t - 1, S generated by t - n. Sign caveat: with this sigma, "
       "yx - xy = a - sigma(a) = 1, so the usual relation xy - yx = 1 holds after exchanging x and y."},
      {"u_sl2", "enveloping algebra U(sl2)",
       "A = k[c,t], a = c - t(t+1), sigma(t) = t - 1; H -> 2t, E -> x, F -> y gives EF - FE = H. "
       "S generated by c - (t-n)(t-n-1)."},
      {"b_lambda", "primitive quotient B_lambda of U(sl2)",
       "A = k[t], a = lambda - t(t+1), sigma(t) = t - 1; lambda is a run-time parameter (default 2). "
       "S is chosen so that a factors over the family."},
      {"quantum_torus", "quantum 2-torus",
       "A = k[t,t^-1], a = t, sigma(t) = qt; a is a unit so the GWA is the smash product A #_R T."},
      {"uq_sl2", "quantum enveloping algebra U_q(sl2)",
       "A = k[c,t,t^-1], a = c - (q^-1 t + q t^-1), sigma(t) = q^2 t; K -> t, E -> y/(q-q^-1), F -> x/(q-q^-1) "
       "gives EF - FE = (K - K^-1)/(q - q^-1). S generated by c - (q^{-2n+1} t + q^{2n-1} t^-1)."},
      {"oq_m2", "quantum matrices O_q(M2)",
       "A = k[u,v,w], a = u + qvw, sigma scales v, w by q^-1; a -> x, b -> v, c -> w, d -> y with quantum "
       "determinant ad - q^{-1}bc = da - qbc = u. No table is displayed for this algebra: report only."},
      {"oq_gl2", "quantum general linear group O_q(GL2)",
       "Localization of O_q(M2) at the quantum determinant u: A = k[u,u^-1,v,w]. Isomorphic to "
       "O_q(SL2) x k[Omega] as algebras only (recorded, not checked). Report only."},
      {"oq_sl2", "quantum special linear group O_q(SL2)",
       "Realized over k[v,w] with a = 1 + qvw, sigma scales v, w by q^-1. S generated by 1 + q^{2n+1}vw."},
      {"oq_su2", "quantum group O_q(SU2)",
       "A = k[s,s*], a = 1 - s*s, sigma scales s, s* by q; x*x = 1 - s*s, xx* = 1 - q^2 s*s. "
       "S generated by q^{2n} s*s - 1."},
      {"podles", "standard Podles sphere",
       "A = k[t], a = -t(t-1), sigma(t) = q^2 t; presentation yx = -t(t-1), xy = -q^2 t(q^2 t - 1). "
       "S generated by t and t - q^{2n}."},
      {"podles_param", "parametric Podles sphere",
       "A = k[c,t], a = c - t(t-1), sigma(t) = q^2 t; x*x = c - t(t-1). S generated by c - q^{2n}t(q^{2n}t - 1)."},
  };
  return e;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : entries())
    if (name == e.name) return e;
  throw Error(Errc::InvalidArgument, "unknown catalog entry '" + name + "'");
}

std::string rat(const Rational& r) { return "(" + r.get_str() + ")"; }

}  // namespace

std::vector<ExampleSummary> catalog_list() {
  std::vector<ExampleSummary> out;
  for (const auto& e : entries()) out.push_back({e.name, e.title, e.notes});
  return out;
}

std::vector<std::string> b_lambda_templates(const Rational& lambda) {
  // a = -(t - r1)(t - r2) with r = (-1 ± sqrt(1 + 4 lambda)) / 2.
  const Rational disc = 1 + 4 * lambda;
  if (disc >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) && mpz_perfect_square_p(disc.get_den_mpz_t())) {
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), disc.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), disc.get_den_mpz_t());
    Rational r1 = (Rational(num, den) - 1) / 2;
    r1.canonicalize();
    if (r1.get_den() == 1) return {"t-{n}-" + rat(r1)};
    const Rational twice = 2 * r1 + 1;
    std::vector<std::string> out{"t-{n}-" + rat(r1)};
    if (twice.get_den() != 1) out.push_back("t-{n}-" + rat(-1 - r1));
    return out;
  }
  return {rat(lambda) + "-(t-{n})*(t-{n}+1)"};
}

ExampleSpec catalog_get(const std::string& name, const Rational& lambda) {
  const Entry& e = find_entry(name);
  ExampleSpec x;
  x.name = e.name;
  x.title = e.title;
  x.notes = e.notes;
  auto endo = [&](std::map<std::string, std::string> img, std::map<std::string, std::string> inv) {
    return Endo::from_strings(x.ring, img, inv);
  };
  const std::vector<std::size_t> binom2{1, 2, 1, 0};
  const std::vector<std::size_t> middle{0, 1, 1, 0};

  if (name == "weyl_a1") {
    x.ring = make_ring({{"t", false}}, ScalarMode::Q);
    x.a = x.ring.parse("t");
    x.sigma = endo({{"t", "t-1"}}, {{"t", "t+1"}});
    x.ore_templates = {"t-{n}"};
    x.expected = expect({0, 1, 0, 0}, "T");
    x.extra.push_back({"yx-xy=1", [](const GwaDatum& D) { return commutator(D, "y", "x") == base(D, "1"); }});
  } else if (name == "u_sl2") {
    x.ring = make_ring({{"c", false}, {"t", false}}, ScalarMode::Q);
    x.a = x.ring.parse("c-t*(t+1)");
    x.sigma = endo({{"t", "t-1"}}, {{"t", "t+1"}});
    x.ore_templates = {"c-(t-{n})*(t-{n}-1)"};
    x.expected = expect(middle, "k[c]⊗T");
    x.extra.push_back({"EF-FE=H", [](const GwaDatum& D) { return commutator(D, "x", "y") == base(D, "2*t"); }});
    x.extra.push_back({"HE-EH=2E", [](const GwaDatum& D) {
                         const auto& alg = D.algebra();
                         const auto H = base(D, "2*t"), E = word(D, "x");
                         return alg.sub(alg.mul(H, E), alg.mul(E, H)) == alg.scale(D.ring().parse("2"), E);
                       }});
  } else if (name == "b_lambda") {
    x.ring = make_ring({{"t", false}}, ScalarMode::Q);
    x.a = x.ring.parse(rat(lambda) + "-t*(t+1)");
    x.sigma = endo({{"t", "t-1"}}, {{"t", "t+1"}});
    x.ore_templates = b_lambda_templates(lambda);
    x.expected = expect(middle, "T");
    x.notes += " lambda = " + lambda.get_str() + ".";
  } else if (name == "quantum_torus") {
    x.ring = make_ring({{"t", true}}, ScalarMode::Qq);
    x.a = x.ring.parse("t");
    x.sigma = endo({{"t", "q*t"}}, {{"t", "q^-1*t"}});
    x.ore_templates = {"t"};
    x.torus = true;
    x.expected = expect(binom2, "T");
  } else if (name == "uq_sl2") {
    x.ring = make_ring({{"c", false}, {"t", true}}, ScalarMode::Qq);
    x.a = x.ring.parse("c-(q^-1*t+q*t^-1)");
    x.sigma = endo({{"t", "q^2*t"}}, {{"t", "q^-2*t"}});
    x.ore_templates = {"c-(q^{-2n+1}*t+q^{2n-1}*t^-1)"};
    x.expected = expect(middle, "k[c]⊗T");
    x.extra.push_back({"EF-FE=(K-K^-1)/(q-q^-1)", [](const GwaDatum& D) {
                         const auto& alg = D.algebra();
                         const BasePoly s = D.ring().parse("1/(q-q^-1)");
                         const auto E = alg.scale(s, word(D, "y")), F = alg.scale(s, word(D, "x"));
                         return alg.sub(alg.mul(E, F), alg.mul(F, E)) == base(D, "(t-t^-1)/(q-q^-1)");
                       }});
    x.extra.push_back({"KE=q^2EK", [](const GwaDatum& D) {
                         const auto& alg = D.algebra();
                         const auto K = base(D, "t"), E = word(D, "y");
                         return alg.mul(K, E) == alg.scale(D.ring().parse("q^2"), alg.mul(E, K));
                       }});
  } else if (name == "oq_m2" || name == "oq_gl2") {
    x.ring = make_ring({{"u", name == "oq_gl2"}, {"v", false}, {"w", false}}, ScalarMode::Qq);
    x.a = x.ring.parse("u+q*v*w");
    x.sigma = endo({{"v", "q^-1*v"}, {"w", "q^-1*w"}}, {{"v", "q*v"}, {"w", "q*w"}});
    x.ore_templates = {"u+q^{2n+1}*v*w"};
    x.report_only = true;
    x.extra.push_back({"ad-q^-1bc=da-qbc=u", [](const GwaDatum& D) {
                         const auto& alg = D.algebra();
                         const auto vw = base(D, "v*w");
                         const auto left = alg.sub(word(D, "x y"), alg.scale(D.ring().parse("q^-1"), vw));
                         const auto right = alg.sub(word(D, "y x"), alg.scale(D.ring().parse("q"), vw));
                         return left == right && left == base(D, "u");
                       }});
    x.extra.push_back({"ab=q^-1ba", [](const GwaDatum& D) {
                         return word(D, "x v") == D.algebra().scale(D.ring().parse("q^-1"), word(D, "v x"));
                       }});
  } else if (name == "oq_sl2") {
    x.ring = make_ring({{"v", false}, {"w", false}}, ScalarMode::Qq);
    x.a = x.ring.parse("1+q*v*w");
    x.sigma = endo({{"v", "q^-1*v"}, {"w", "q^-1*w"}}, {{"v", "q*v"}, {"w", "q*w"}});
    x.ore_templates = {"1+q^{2n+1}*v*w"};
    x.expected = expect(binom2, "T");
    x.extra.push_back({"ad-q^-1bc=1", [](const GwaDatum& D) {
                         const auto& alg = D.algebra();
                         return alg.sub(word(D, "x y"), alg.scale(D.ring().parse("q^-1"), base(D, "v*w"))) ==
                                base(D, "1");
                       }});
  } else if (name == "oq_su2") {
    x.ring = make_ring({{"s", false}, {"sd", false}}, ScalarMode::Qq);
    x.a = x.ring.parse("1-s*sd");
    x.sigma = endo({{"s", "q*s"}, {"sd", "q*sd"}}, {{"s", "q^-1*s"}, {"sd", "q^-1*sd"}});
    x.ore_templates = {"q^{2n}*s*sd-1"};
    x.expected = expect(binom2, "T");
    x.extra.push_back({"xx*=1-q^2s*s", [](const GwaDatum& D) { return word(D, "x y") == base(D, "1-q^2*s*sd"); }});
    x.extra.push_back({"xs=qsx", [](const GwaDatum& D) {
                         return word(D, "x s") == D.algebra().scale(D.ring().parse("q"), word(D, "s x"));
                       }});
  } else if (name == "podles") {
    x.ring = make_ring({{"t", false}}, ScalarMode::Qq);
    x.a = x.ring.parse("-t*(t-1)");
    x.sigma = endo({{"t", "q^2*t"}}, {{"t", "q^-2*t"}});
    x.ore_templates = {"t", "t-q^{2n}"};
    x.expected = expect(binom2, "T");
    x.extra.push_back({"xy=-q^2t(q^2t-1)", [](const GwaDatum& D) { return word(D, "x y") == base(D, "-q^2*t*(q^2*t-1)"); }});
    x.extra.push_back({"yt=q^-2ty", [](const GwaDatum& D) {
                         return word(D, "y t") == D.algebra().scale(D.ring().parse("q^-2"), word(D, "t y"));
                       }});
  } else if (name == "podles_param") {
    x.ring = make_ring({{"c", false}, {"t", false}}, ScalarMode::Qq);
    x.a = x.ring.parse("c-t*(t-1)");
    x.sigma = endo({{"t", "q^2*t"}}, {{"t", "q^-2*t"}});
    x.ore_templates = {"c-q^{4n}*t^2+q^{2n}*t"};
    x.expected = expect(binom2, "k[c]⊗T");
    x.extra.push_back({"xx*=c-q^2t(q^2t-1)", [](const GwaDatum& D) { return word(D, "x y") == base(D, "c-q^2*t*(q^2*t-1)"); }});
  }
  return x;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::Unstabilized: return "Unstabilized";
    case Verdict::ReportOnly: return "ReportOnly";
  }
  return "?";
}

RunReport catalog_run(const std::string& name, const RunParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const ExampleSpec ex = catalog_get(name, params.lambda);
  RunReport r;
  r.name = name;
  r.params = params;
  r.expected = ex.expected;
  const GwaDatum D = ex.datum();
  std::vector<BasePoly> elems;
  for (const auto& v : ex.ring.vars()) elems.push_back(ex.ring.var(v.name));
  r.relations = verify_gwa_relations(D, elems);
  for (const auto& c : ex.extra) r.relations.push_back({c.name, c.holds(D)});
  bool relations_ok = true;
  for (const auto& c : r.relations) relations_ok = relations_ok && c.pass;
  if (!relations_ok) r.diagnostics.push_back("relation check failed");

  bool validated = true, recognized = true;
  if (ex.torus) {
    r.computed = hh_smash_torus(ex.ring, ex.sigma, params.bound, params.nmax).answer;
  } else {
    PipelineOptions opts{params.bound, params.nmax, params.window};
    const LocalizedReport rep = localized_gwa_report(D, ex.ore(params.window), opts);
    r.computed = rep.answer;
    validated = rep.validated || !rep.conclusive;  // inconclusive runs are reported as unstabilized
    recognized = rep.recognized;
    r.diagnostics.push_back("invariant model: " + rep.model.description + (validated ? " (validated)" : " (refuted)"));
    r.diagnostics.push_back(std::string("coinvariants of k<S>: ") + coinv_name(rep.coinvariants.kind) + ", part " +
                            rep.coinvariant_part);
    r.diagnostics.insert(r.diagnostics.end(), rep.diagnostics.begin(), rep.diagnostics.end());
  }
  if (ex.report_only)
    r.verdict = Verdict::ReportOnly;
  else if (!relations_ok || !validated || !recognized)
    r.verdict = Verdict::Mismatch;
  else if (!r.computed.all_stabilized())
    r.verdict = Verdict::Unstabilized;
  else
    r.verdict = r.computed.same_shape(r.expected) ? Verdict::Match : Verdict::Mismatch;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.diagnostics.push_back("B=" + std::to_string(params.bound) + " Nmax=" + std::to_string(params.nmax) +
                          " window=" + std::to_string(params.window));
  return r;
}

std::vector<RunReport> catalog_run_all(const RunParams& params) {
  std::vector<RunReport> out;
  for (const auto& e : entries()) out.push_back(catalog_run(e.name, params));
  return out;
}

}  // namespace gwa
