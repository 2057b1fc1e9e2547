#include "gwa/ideal.hpp"

#include <algorithm>
#include <deque>

namespace gwa {

namespace {

BasePoly monic(const BasePoly& p) { return p.scaled(p.lead_coeff().inverse()); }

// Reduce p modulo a list of polynomials, full reduction (every term).
BasePoly reduce_by(BasePoly p, const std::vector<BasePoly>& gs) {
  BasePoly remainder(p.nvars(), p.mode());
  while (!p.is_zero()) {
    const Monomial m = p.lead_monomial();
    const Scalar c = p.lead_coeff();
    const BasePoly* hit = nullptr;
    for (const auto& g : gs)
      if (m.divisible_by(g.lead_monomial())) {
        hit = &g;
        break;
      }
    if (hit) {
      p -= hit->times_monomial(m / hit->lead_monomial()).scaled(c / hit->lead_coeff());
    } else {
      remainder.add_term(m, c);
      BasePoly t = BasePoly::term(m, c);
      p -= t;
    }
  }
  return remainder;
}

BasePoly s_polynomial(const BasePoly& f, const BasePoly& g) {
  const Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  BasePoly a = f.times_monomial(l / f.lead_monomial()).scaled(f.lead_coeff().inverse());
  BasePoly b = g.times_monomial(l / g.lead_monomial()).scaled(g.lead_coeff().inverse());
  return a - b;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > 0 && b.exps[i] > 0) return false;
  return true;
}

}  // namespace

bool IdealBasis::is_unit_ideal() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const BasePoly& g) { return g.is_constant() && !g.is_zero(); });
}

IdealBasis buchberger(const std::vector<BasePoly>& gens, std::size_t max_pairs) {
  std::vector<BasePoly> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    for (const auto& [m, c] : p.terms())
      if (std::any_of(m.exps.begin(), m.exps.end(), [](int e) { return e < 0; }))
        throw Error(Errc::InvalidArgument, "Groebner input has negative exponents");
    g.push_back(monic(p));
  }
  if (g.empty()) return IdealBasis({}, true);

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(g[i].lead_monomial(), g[j].lead_monomial())) continue;
    if (++processed > max_pairs) throw Error(Errc::ResourceBudgetExceeded, "Groebner pair budget exhausted");
    BasePoly r = reduce_by(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    r = monic(r);
    if (r.is_constant()) return IdealBasis({r}, true);
    g.push_back(r);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimize, then inter-reduce.
  std::vector<BasePoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const bool divides = g[i].lead_monomial().divisible_by(g[j].lead_monomial());
      const bool same = g[i].lead_monomial() == g[j].lead_monomial();
      if (divides && (!same || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<BasePoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasePoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    BasePoly lead = BasePoly::term(minimal[i].lead_monomial(), minimal[i].lead_coeff());
    BasePoly tail = reduce_by(minimal[i] - lead, others);
    reduced.push_back(monic(lead + tail));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const BasePoly& a, const BasePoly& b) { return GrlexLess{}(a.lead_monomial(), b.lead_monomial()); });
  return IdealBasis(std::move(reduced), true);
}

BasePoly ideal_reduce(const BasePoly& p, const IdealBasis& basis) {
  if (basis.is_zero_ideal()) return p;
  return reduce_by(p, basis.generators());
}

std::optional<BasePoly> poly_exact_div(const BasePoly& p, const BasePoly& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "exact division by zero polynomial");
  BasePoly quotient(p.nvars(), p.mode());
  BasePoly r = p;
  while (!r.is_zero()) {
    const Monomial m = r.lead_monomial();
    if (!m.divisible_by(g.lead_monomial())) return std::nullopt;
    const Monomial shift = m / g.lead_monomial();
    const Scalar c = r.lead_coeff() / g.lead_coeff();
    quotient.add_term(shift, c);
    r -= g.times_monomial(shift).scaled(c);
  }
  return quotient;
}

RingIdeal::RingIdeal(const BaseRing& ring, const std::vector<BasePoly>& gens) : ring_(ring) {
  const std::size_t n = ring.nvars();
  inverse_slot_.assign(n, static_cast<std::size_t>(-1));
  encoded_nvars_ = n;
  for (std::size_t j = 0; j < n; ++j)
    if (ring.vars()[j].invertible) inverse_slot_[j] = encoded_nvars_++;
  std::vector<BasePoly> all;
  for (const auto& g : gens) all.push_back(encode(g));
  for (std::size_t j = 0; j < n; ++j) {
    if (inverse_slot_[j] == static_cast<std::size_t>(-1)) continue;
    Monomial m(encoded_nvars_);
    m.exps[j] = 1;
    m.exps[inverse_slot_[j]] = 1;
    BasePoly rel = BasePoly::term(m, ring.scalar(1));
    rel.add_term(Monomial(encoded_nvars_), ring.scalar(-1));
    all.push_back(rel);
  }
  for (const auto& r : ring.relations()) all.push_back(encode(r));
  basis_ = buchberger(all);
}

BasePoly RingIdeal::encode(const BasePoly& p) const {
  BasePoly out(encoded_nvars_, ring_.mode());
  for (const auto& [m, c] : p.terms()) {
    Monomial e(encoded_nvars_);
    for (std::size_t j = 0; j < m.exps.size(); ++j) {
      if (m.exps[j] >= 0) {
        e.exps[j] = m.exps[j];
      } else {
        if (inverse_slot_[j] == static_cast<std::size_t>(-1))
          throw Error(Errc::InvalidArgument, "negative exponent on a non-invertible variable");
        e.exps[inverse_slot_[j]] = -m.exps[j];
      }
    }
    out.add_term(e, c);
  }
  return out;
}

BasePoly RingIdeal::reduce_encoded(const BasePoly& p) const { return ideal_reduce(encode(p), basis_); }

bool RingIdeal::contains(const BasePoly& p) const { return reduce_encoded(p).is_zero(); }

std::vector<Monomial> RingIdeal::standard_monomials(int bound, bool* finite) const {
  const auto& gs = basis_.generators();
  if (finite) {
    bool all = true;
    for (std::size_t v = 0; v < encoded_nvars_ && all; ++v) {
      bool pure = false;
      for (const auto& g : gs) {
        const Monomial& lm = g.lead_monomial();
        bool only_v = lm.exps[v] > 0;
        for (std::size_t w = 0; w < encoded_nvars_ && only_v; ++w)
          if (w != v && lm.exps[w] != 0) only_v = false;
        if (only_v) pure = true;
      }
      all = pure;
    }
    *finite = all;
  }
  std::vector<Monomial> out;
  if (basis_.is_unit_ideal()) return out;
  Monomial cur(encoded_nvars_);
  auto standard = [&](const Monomial& m) {
    return std::none_of(gs.begin(), gs.end(), [&](const BasePoly& g) { return m.divisible_by(g.lead_monomial()); });
  };
  // Enumerate exponent vectors of total degree <= bound; divisibility is
  // upward closed so pruning on non-standard prefixes is safe.
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == encoded_nvars_) {
      if (standard(cur)) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.exps[v] = e;
      if (!standard(cur)) break;
      self(self, v + 1, left - e);
    }
    cur.exps[v] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

BasePoly ideal_reduce(const BasePoly& p, const RingIdeal& ideal) { return ideal.reduce_encoded(p); }

}  // namespace gwa

namespace gwa {

std::optional<BasePoly> ring_exact_div(const BaseRing& ring, const BasePoly& p, const BasePoly& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "exact division by zero polynomial");
  if (p.is_zero()) return ring.zero();
  if (ring.has_relations()) throw Error(Errc::Unsupported, "exact division modulo relations");
  Monomial mp = p.min_exponents();
  Monomial mg = g.min_exponents();
  for (std::size_t j = 0; j < ring.nvars(); ++j)
    if (!ring.vars()[j].invertible) mp.exps[j] = mg.exps[j] = 0;
  Monomial inv_mp(ring.nvars()), inv_mg(ring.nvars());
  for (std::size_t j = 0; j < ring.nvars(); ++j) {
    inv_mp.exps[j] = -mp.exps[j];
    inv_mg.exps[j] = -mg.exps[j];
  }
  auto q = poly_exact_div(p.times_monomial(inv_mp), g.times_monomial(inv_mg));
  if (!q) return std::nullopt;
  return q->times_monomial(mp / mg);
}

}  // namespace gwa
