#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "gwa/hochschild.hpp"

namespace gwa {

// ---------------------------------------------------------------------------
// Answer modules

bool AnswerModule::all_stabilized() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const AnswerDegree& d) { return d.stabilized; });
}

bool AnswerModule::same_shape(const AnswerModule& o) const {
  std::map<int, std::vector<Summand>> a, b;
  for (const auto& d : degrees) a[d.n] = d.summands;
  for (const auto& d : o.degrees) b[d.n] = d.summands;
  for (const auto& [n, s] : a)
    if (b.count(n) && b[n] != s) return false;
  for (const auto& [n, s] : b)
    if (a.count(n) && a[n] != s) return false;
  return true;
}

std::string AnswerModule::render() const {
  std::ostringstream out;
  for (const auto& d : degrees) {
    out << "HH_" << d.n << " = ";
    if (d.summands.empty()) out << "0";
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
      if (i) out << " + ";
      out << d.summands[i].ring;
      if (d.summands[i].rank != 1) out << "^" << d.summands[i].rank;
    }
    if (!d.stabilized) out << "  (unstabilized)";
    out << "\n";
  }
  return out.str();
}

AnswerModule answer_from_ranks(const std::vector<std::size_t>& ranks, const std::string& ring, bool stabilized) {
  AnswerModule a;
  for (std::size_t n = 0; n < ranks.size(); ++n) {
    AnswerDegree d;
    d.n = static_cast<int>(n);
    d.stabilized = stabilized;
    if (ranks[n]) d.summands.push_back({ring, ranks[n]});
    a.degrees.push_back(d);
  }
  return a;
}

std::optional<Summand> recognize_shape(const std::vector<std::size_t>& h, const std::string& fixed_ring) {
  if (h.empty()) return std::nullopt;
  if (fixed_ring == "k") {
    if (h.size() != 1) return std::nullopt;
    return Summand{"k", h[0]};
  }
  if (h.size() < 2) return std::nullopt;
  for (std::size_t d = 1; d < h.size(); ++d)
    if (h[d] < h[d - 1]) return std::nullopt;
  if (h[h.size() - 1] != h[h.size() - 2]) return std::nullopt;
  return Summand{fixed_ring, h.back()};
}

namespace {

std::string tensor_torus(const std::string& ring) { return ring == "k" ? "T" : ring + "⊗T"; }

// Signed degree in the fixed variables: for a Laurent fixed variable the
// Hilbert function of a free module is then constant in d.
int fixed_degree(const Weight& w, const std::vector<bool>& mask) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (mask[i]) d += w[i];
  return d;
}

using Ranks = std::map<std::pair<int, Weight>, std::size_t>;

// h[n][d]: homology rank in degree n summed over blocks of fixed degree d <= B.
std::vector<std::vector<std::size_t>> split(const Ranks& r, const std::vector<bool>& mask, int nmax, int B) {
  std::vector<std::vector<std::size_t>> h(static_cast<std::size_t>(nmax) + 1,
                                          std::vector<std::size_t>(static_cast<std::size_t>(B) + 1, 0));
  for (const auto& [key, rank] : r) {
    const int d = fixed_degree(key.second, mask);
    if (key.first <= nmax && d >= 0 && d <= B) h[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(d)] += rank;
  }
  return h;
}

// A homology part computed at B and B+1, trimmed to the stable fixed degrees.
struct Part {
  std::vector<std::vector<std::size_t>> h;  // trimmed
  bool stabilized = false;
};

Part compare_parts(const Ranks& lo, const Ranks& hi, const std::vector<bool>& mask, int nmax, int B,
                   bool has_fixed) {
  const auto a = split(lo, mask, nmax, B);
  const auto b = split(hi, mask, nmax, B);
  int stable = -1;
  for (int d = 0; d <= B; ++d) {
    bool same = true;
    for (int n = 0; n <= nmax; ++n)
      same = same && a[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)] ==
                         b[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
    if (!same) break;
    stable = d;
    if (!has_fixed) break;
  }
  Part p;
  p.stabilized = has_fixed ? stable >= 1 : stable == 0;
  for (int n = 0; n <= nmax; ++n)
    p.h.emplace_back(a[static_cast<std::size_t>(n)].begin(),
                     a[static_cast<std::size_t>(n)].begin() + (stable + 1));
  return p;
}

Part trim_to(const Part& p, std::size_t len) {
  Part q = p;
  for (auto& row : q.h)
    if (row.size() > len) row.resize(len);
  return q;
}

struct Assembled {
  AnswerModule answer;
  bool recognized = true;
};

void add_summand(std::vector<Summand>& s, const Summand& x) {
  if (x.rank == 0) return;
  for (auto& y : s)
    if (y.ring == x.ring) {
      y.rank += x.rank;
      return;
    }
  s.push_back(x);
}

// HH_n = coinv_n ⊗ T ⊕ inv_{n-1} ⊗ T.
Assembled assemble(const Part* coinv, const Part& inv, const std::string& fixed_ring, int nmax) {
  Assembled out;
  const bool stab = inv.stabilized && (!coinv || coinv->stabilized);
  for (int n = 0; n <= nmax; ++n) {
    AnswerDegree d;
    d.n = n;
    d.stabilized = stab;
    auto take = [&](const Part& p, int k) {
      if (k < 0 || k > nmax) return;
      const auto s = recognize_shape(p.h[static_cast<std::size_t>(k)], fixed_ring);
      if (!s) {
        out.recognized = false;
        const auto& h = p.h[static_cast<std::size_t>(k)];
        add_summand(d.summands, {"unrecognized", h.empty() ? 0 : h.back()});
        return;
      }
      add_summand(d.summands, {tensor_torus(s->ring), s->rank});
    };
    if (coinv) take(*coinv, n);
    take(inv, n - 1);
    std::sort(d.summands.begin(), d.summands.end(), [](const Summand& a, const Summand& b) { return a.ring < b.ring; });
    out.answer.degrees.push_back(d);
  }
  return out;
}

std::string fixed_ring_name(const BaseRing& ring, const WeightGrading& g) {
  std::string names;
  for (std::size_t j = 0; j < ring.nvars(); ++j)
    if (g.fixed_vars[j]) {
      if (!names.empty()) names += ",";
      names += ring.vars()[j].name;
      if (ring.vars()[j].invertible) names += "^±";
    }
  return names.empty() ? "k" : "k[" + names + "]";
}

BettiTable to_table(const Ranks& lo, const Ranks& hi, int B, int nmax) {
  BettiTable t;
  t.bound = B;
  t.nmax = nmax;
  for (const auto& [k, r] : lo) {
    auto it = hi.find(k);
    t.entries[k] = {r, it != hi.end() && it->second == r};
  }
  return t;
}

// Invariant and coinvariant homology of CH(ring) at bound B.
struct Sector {
  Ranks inv, coinv;
};

Sector sector(const BaseRing& ring, const Endo& sigma, const WeightGrading& g, int B, int nmax, bool want_coinv) {
  Sector s;
  if (g.sigma_eigen) {
    ChainComplex C(ring, eigen_options(g, B, nmax + 1));
    s.inv = invariant_homology(C, sigma, g, nmax);
    s.coinv = s.inv;
  } else {
    ChainOptions o;
    o.bound = B;
    o.top = nmax + 1;
    ChainComplex C(ring, o);
    s.inv = invariant_homology(C, sigma, g, nmax);
    if (want_coinv) s.coinv = coinvariant_homology(C, sigma, g, nmax);
  }
  return s;
}

bool has_fixed(const WeightGrading& g) {
  return std::find(g.fixed_vars.begin(), g.fixed_vars.end(), true) != g.fixed_vars.end();
}


// H_*(model) = HH_*(k[fixed]) ⊗ H_*(weight-zero CH of the unit factor), with
// the first factor in closed form, so every fixed degree d <= B is exact.
Part model_part(const InvariantModel& m, int B, int nmax) {
  const WeightGrading mg = detect_grading(m.model, m.model_sigma);
  std::vector<VarSpec> fv, uv;
  std::vector<BasePoly> img, inv;
  for (std::size_t j = 0; j < m.model.nvars(); ++j)
    (mg.fixed_vars[j] ? fv : uv).push_back(m.model.vars()[j]);
  const ScalarMode mode = m.model.mode();
  const BaseRing F(fv, {}, mode), U(uv, {}, mode);
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.model.nvars(); ++j) {
    if (mg.fixed_vars[j]) continue;
    const Scalar c = m.model_sigma.images()[j].terms().begin()->second;
    img.push_back(BasePoly::variable(uv.size(), mode, k).scaled(c));
    inv.push_back(BasePoly::variable(uv.size(), mode, k).scaled(c.inverse()));
    ++k;
  }
  const Endo us(U, img, inv);
  const WeightGrading ug = detect_grading(U, us);
  auto rest = [&](int b) {
    std::vector<std::size_t> r(static_cast<std::size_t>(nmax) + 1, 0);
    for (const auto& [key, v] : invariant_homology(ChainComplex(U, eigen_options(ug, b, nmax + 1)), us, ug, nmax))
      r[static_cast<std::size_t>(key.first)] += v;
    return r;
  };
  const auto r = rest(B);
  Part p;
  p.stabilized = rest(B + 1) == r;
  const std::vector<bool> all(F.nvars() ? F.vars()[0].weight.size() : 0, true);
  std::vector<std::vector<std::size_t>> fh(static_cast<std::size_t>(nmax) + 1, std::vector<std::size_t>(1, 0));
  if (F.nvars() == 0) {
    fh[0][0] = 1;  // HH(k)
  } else {
    Ranks hk;
    for (const auto& [key, e] : hkr_oracle(F, B, nmax).entries) hk[key] = e.rank;
    fh = split(hk, all, nmax, B);
  }
  const std::size_t len = fh[0].size();
  p.h.assign(static_cast<std::size_t>(nmax) + 1, std::vector<std::size_t>(len, 0));
  for (int n = 0; n <= nmax; ++n)
    for (int i = 0; i <= n; ++i)
      for (std::size_t d = 0; d < len; ++d)
        p.h[static_cast<std::size_t>(n)][d] += fh[static_cast<std::size_t>(i)][d] * r[static_cast<std::size_t>(n - i)];
  return p;
}
}  // namespace

TorusResult hh_smash_torus(const BaseRing& ring, const Endo& sigma, int B, int nmax) {
  const WeightGrading g = detect_grading(ring, sigma);
  const Sector lo = sector(ring, sigma, g, B, nmax, true);
  const Sector hi = sector(ring, sigma, g, B + 1, nmax, true);
  const auto mask = g.fixed_mask(ring);
  const bool fx = has_fixed(g);
  const Part inv = compare_parts(lo.inv, hi.inv, mask, nmax, B, fx);
  const Part coinv = compare_parts(lo.coinv, hi.coinv, mask, nmax, B, fx);
  TorusResult r;
  r.invariants = to_table(lo.inv, hi.inv, B, nmax);
  r.coinvariants = to_table(lo.coinv, hi.coinv, B, nmax);
  r.answer = assemble(&coinv, inv, fixed_ring_name(ring, g), nmax).answer;
  return r;
}

SeparableResult hh_smash_separable(const BaseRing& ring, const Endo& sigma, int B, int nmax) {
  SeparableResult r;
  finite_order_signs(ring, sigma, &r.order);
  auto totals = [&](int bound) {
    std::vector<std::size_t> t(static_cast<std::size_t>(nmax) + 1, 0);
    for (const auto& [k, v] : block_homology(eigen_complex_CH1(ring, sigma, bound, nmax + 1), nmax))
      t[static_cast<std::size_t>(k.first)] += v;
    return t;
  };
  r.ch1 = totals(B);
  r.stabilized = totals(B + 1) == r.ch1;
  for (std::size_t n = 0; n < r.ch1.size(); ++n) {
    r.torus_ranks.push_back(r.ch1[n] + (n ? r.ch1[n - 1] : 0));
    r.finite_ranks.push_back(static_cast<std::size_t>(r.order) * r.ch1[n]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Localized pipeline

InvariantModel eigen_unit_analysis(const BaseRing& ring, const Endo& sigma, const OreSetSpec& S) {
  InvariantModel m;
  m.grading = detect_grading(ring, sigma);
  const auto& g = m.grading;
  const std::size_t nv = ring.nvars();

  // Monomial members of S whose variables are all eigen make those variables units.
  std::vector<bool> invert(nv, false);
  for (const auto& s : S.materialized()) {
    if (s.terms().size() != 1) continue;
    const Monomial& mono = s.lead_monomial();
    bool eigen = true;
    for (std::size_t j = 0; j < nv; ++j)
      if (mono.exps[j] != 0 && g.shift_vars[j]) eigen = false;
    if (!eigen) continue;
    for (std::size_t j = 0; j < nv; ++j)
      if (mono.exps[j] != 0) invert[j] = true;
  }
  std::vector<VarSpec> ext = ring.vars();
  bool changed = false;
  for (std::size_t j = 0; j < nv; ++j)
    if (invert[j] && !ext[j].invertible) {
      ext[j].invertible = true;
      changed = true;
    }
  if (changed && ring.has_relations()) throw Error(Errc::Unsupported, "cannot invert variables of a ring with relations");
  m.extended = changed ? BaseRing(ext, {}, ring.mode()) : ring;
  if (changed) {
    std::vector<BasePoly> inv_images = sigma.inverse_images();
    m.extended_sigma = Endo(m.extended, sigma.images(), inv_images);
  } else {
    m.extended_sigma = sigma;
  }

  // Model: fixed variables and, in the eigen case, units with nonzero pairing.
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& v = m.extended.vars()[j];
    if (g.fixed_vars[j]) {
      keep.push_back(j);
      m.fixed.push_back(v.name);
    } else if (g.sigma_eigen && v.invertible) {
      keep.push_back(j);
      m.eigen_units.push_back(v.name);
    }
  }
  if (ring.has_relations() && !keep.empty()) throw Error(Errc::Unsupported, "model subrings of rings with relations");
  std::vector<VarSpec> mv;
  for (std::size_t j : keep) mv.push_back(m.extended.vars()[j]);
  m.model = BaseRing(mv, {}, ring.mode());
  std::vector<BasePoly> img, inv;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const std::size_t j = keep[i];
    const BasePoly v = BasePoly::variable(keep.size(), ring.mode(), i);
    const BasePoly s = m.extended.reduce(sigma.images()[j]);
    const Scalar c = s.terms().begin()->second;
    img.push_back(v.scaled(c));
    inv.push_back(v.scaled(c.inverse()));
  }
  m.model_sigma = Endo(m.model, img, inv);
  m.fixed_ring = fixed_ring_name(ring, g);

  std::string vars;
  for (std::size_t j : keep) {
    if (!vars.empty()) vars += ",";
    vars += m.extended.vars()[j].name;
    if (m.extended.vars()[j].invertible) vars += "^±";
  }
  const std::string k = vars.empty() ? "k" : "k[" + vars + "]";
  m.description = m.eigen_units.empty() ? "CH(" + k + ")" : "CH^(0)(" + k + ")";
  return m;
}

LocalizedReport localized_gwa_report(const GwaDatum& D, const OreSetSpec& S0, const PipelineOptions& opts) {
  LocalizedReport rep;
  const int B = opts.bound, nmax = opts.nmax;
  const OreSetSpec S = S0.with_window(opts.window);
  const BaseRing& A = D.ring();
  const Endo& sigma = D.sigma();

  // (1) localization
  const LocalizedSmash L = localize_smash(D, S);
  if (!L.witness_holds) rep.diagnostics.push_back("a^{-1} * phi(y) != x^{-1} in the localized smash product");

  // (2) coinvariants of k<S>
  const SubalgebraGens gens = subalgebra_generators(S);
  rep.coinvariants = coinvariant_quotient(gens.gens, sigma, A);
  rep.model = eigen_unit_analysis(A, sigma, S);
  const InvariantModel next = eigen_unit_analysis(A, sigma, S.with_window(opts.window + 1));
  const bool window_stable = next.description == rep.model.description;
  if (!window_stable) rep.diagnostics.push_back("invariant model changes from window N to N+1");
  const auto& m = rep.model;
  const auto& g = m.grading;

  // (3) windowed invariants on A' against the model
  const auto mask = g.fixed_mask(A);
  const bool fx = has_fixed(g);
  const Sector w_lo = sector(m.extended, m.extended_sigma, g, B, nmax, !g.sigma_eigen);
  const Sector w_hi = sector(m.extended, m.extended_sigma, g, B + 1, nmax, !g.sigma_eigen);
  Part windowed = compare_parts(w_lo.inv, w_hi.inv, mask, nmax, B, fx);

  Part model = model_part(m, B, nmax);
  if (!model.stabilized) rep.diagnostics.push_back("unit factor of the model did not stabilize from B to B+1");

  const std::size_t len = windowed.h[0].size();
  windowed = trim_to(windowed, len);
  const Part model_cut = trim_to(model, len);
  rep.windowed_inv = windowed.h;
  rep.model_inv = model.h;
  rep.conclusive = len > 0;
  if (!rep.conclusive) rep.diagnostics.push_back("windowed invariants have no stabilized fixed degree");
  rep.validated = rep.conclusive && windowed.h == model_cut.h;
  if (!rep.validated) {
    std::ostringstream d;
    d << "windowed invariants on A' disagree with model " << m.description << ":";
    for (int n = 0; n <= nmax; ++n) {
      d << " H_" << n << " [";
      for (std::size_t i = 0; i < len; ++i) d << (i ? "," : "") << windowed.h[static_cast<std::size_t>(n)][i];
      d << "] vs [";
      for (std::size_t i = 0; i < len; ++i) d << (i ? "," : "") << model_cut.h[static_cast<std::size_t>(n)][i];
      d << "]";
    }
    rep.diagnostics.push_back(d.str());
  }
  const Part& inv = rep.validated ? model : windowed;

  // (4) coinvariant part
  auto in_fixed_vars = [&](const BasePoly& p) {
    if (p.terms().size() != 1) return false;
    const Monomial& mono = p.lead_monomial();
    for (std::size_t j = 0; j < A.nvars(); ++j)
      if (mono.exps[j] != 0 && !g.fixed_vars[j]) return false;
    return true;
  };
  const auto kind = rep.coinvariants.kind;
  Part coinv;
  const Part* coinv_ptr = nullptr;
  if (kind == CoinvKind::IsZero) {
    rep.coinvariant_part = "0";
  } else if (kind == CoinvKind::IsScalars ||
             std::all_of(rep.coinvariants.basis.begin(), rep.coinvariants.basis.end(), in_fixed_vars)) {
    if (g.sigma_eigen) {
      rep.coinvariant_part = "invariants";
      coinv = inv;
    } else {
      rep.coinvariant_part = "quotient";
      coinv = trim_to(compare_parts(w_lo.coinv, w_hi.coinv, mask, nmax, B, fx), len);
    }
    coinv_ptr = &coinv;
  } else {
    rep.coinvariant_part = "unrecognized";
    rep.recognized = false;
    rep.diagnostics.push_back("unrecognized shape of the coinvariant factor k<S>_T");
  }
  if (coinv_ptr) rep.coinv = coinv.h;

  Assembled as = assemble(coinv_ptr, inv, m.fixed_ring, nmax);
  rep.recognized = rep.recognized && as.recognized;
  rep.answer = as.answer;
  if (!window_stable || !rep.conclusive)
    for (auto& d : rep.answer.degrees) d.stabilized = false;
  return rep;
}

AnswerModule hh_localized_gwa(const GwaDatum& D, const OreSetSpec& S, const PipelineOptions& opts) {
  LocalizedReport rep = localized_gwa_report(D, S, opts);
  if (!rep.validated) throw Error(Errc::ValidationFailed, rep.diagnostics.empty() ? "model refuted" : rep.diagnostics.back());
  return rep.answer;
}

}  // namespace gwa
