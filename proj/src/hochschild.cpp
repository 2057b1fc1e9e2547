#include "gwa/hochschild.hpp"

#include <algorithm>
#include <cstdlib>

namespace gwa {

namespace {

// First nonzero coordinate of each variable weight.
std::vector<std::size_t> lead_coords(const BaseRing& ring) {
  std::vector<std::size_t> out;
  for (const auto& v : ring.vars()) {
    std::size_t p = 0;
    while (p < v.weight.size() && v.weight[p] == 0) ++p;
    if (p == v.weight.size()) throw Error(Errc::Unsupported, "variable " + v.name + " has zero weight");
    out.push_back(p);
  }
  return out;
}

// Exponent vector of the monomial of weight w (weights have disjoint supports).
std::vector<int> exponents_of(const BaseRing& ring, const std::vector<std::size_t>& lead, const Weight& w) {
  std::vector<int> e(ring.nvars());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = w[lead[j]] / ring.vars()[j].weight[lead[j]];
  return e;
}

BasePoly var_poly(const BaseRing& ring, std::size_t j) {
  return BasePoly::variable(ring.nvars(), ring.mode(), j);
}

Weight masked(const Weight& w, const std::vector<bool>& mask) {
  Weight out = w;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!mask[i]) out[i] = 0;
  return out;
}

RatRow minus_identity(RatRow img, std::size_t j) {
  const int col = static_cast<int>(j);
  auto it = std::lower_bound(img.begin(), img.end(), col, [](const auto& e, int c) { return e.first < c; });
  if (it != img.end() && it->first == col) {
    it->second -= 1;
    if (it->second == 0) img.erase(it);
  } else {
    img.insert(it, {col, Rational(-1)});
  }
  return img;
}

}  // namespace

// ---------------------------------------------------------------------------
// Grading

int WeightGrading::pairing(const Weight& w) const {
  int s = 0;
  for (std::size_t i = 0; i < lambda.size() && i < w.size(); ++i) s += lambda[i] * w[i];
  return s;
}

std::vector<bool> WeightGrading::fixed_mask(const BaseRing& ring) const {
  const std::size_t wd = ring.nvars() ? ring.vars()[0].weight.size() : 0;
  std::vector<bool> mask(wd, false);
  for (std::size_t j = 0; j < ring.nvars(); ++j)
    if (fixed_vars[j])
      for (std::size_t k = 0; k < wd; ++k)
        if (ring.vars()[j].weight[k] != 0) mask[k] = true;
  return mask;
}

WeightGrading detect_grading(const BaseRing& ring, const Endo& sigma) {
  WeightGrading g;
  const std::size_t nv = ring.nvars();
  g.fixed_vars.assign(nv, false);
  g.shift_vars.assign(nv, false);
  std::vector<int> k(nv, 0);
  bool scaled = false;
  for (std::size_t j = 0; j < nv; ++j) {
    const BasePoly v = var_poly(ring, j);
    const BasePoly img = ring.reduce(sigma.images()[j]);
    if (img == v) {
      g.fixed_vars[j] = true;
      continue;
    }
    const BasePoly diff = img - v;
    if (diff.is_constant()) {
      g.shift_vars[j] = true;
      continue;
    }
    bool found = false;
    if (img.terms().size() == 1 && img.lead_monomial() == v.lead_monomial() && ring.mode() == ScalarMode::Qq) {
      const Scalar c = img.terms().begin()->second;
      for (int e = -64; e <= 64 && !found; ++e)
        if (e != 0 && c == Scalar::q_pow(e)) {
          k[j] = e;
          found = true;
        }
    }
    if (!found)
      throw Error(Errc::Unsupported, "sigma(" + ring.vars()[j].name + ") is neither a q-power scaling nor a translation");
    scaled = true;
  }
  const bool shifted = std::find(g.shift_vars.begin(), g.shift_vars.end(), true) != g.shift_vars.end();
  if (shifted && scaled) throw Error(Errc::Unsupported, "sigma mixes translations and q-scalings");
  g.sigma_eigen = !shifted;
  const std::size_t wd = nv ? ring.vars()[0].weight.size() : 0;
  g.lambda.assign(wd, 0);
  if (g.sigma_eigen && nv) {
    const auto lead = lead_coords(ring);
    for (std::size_t j = 0; j < nv; ++j) {
      const int wj = ring.vars()[j].weight[lead[j]];
      if (k[j] % wj != 0) throw Error(Errc::Unsupported, "q-exponent not divisible by the variable weight");
      g.lambda[lead[j]] = k[j] / wj;
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Tables

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(nmax) + 1, 0);
  for (const auto& [key, e] : entries)
    if (key.first <= nmax) out[static_cast<std::size_t>(key.first)] += e.rank;
  return out;
}

std::vector<std::size_t> BettiTable::totals_at(const Weight& w) const {
  std::vector<std::size_t> out(static_cast<std::size_t>(nmax) + 1, 0);
  for (const auto& [key, e] : entries)
    if (key.second == w && key.first <= nmax) out[static_cast<std::size_t>(key.first)] = e.rank;
  return out;
}

bool BettiTable::all_stabilized() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) { return kv.second.stabilized; });
}

namespace {

BettiTable flag_against(const std::map<std::pair<int, Weight>, std::size_t>& lo,
                        const std::map<std::pair<int, Weight>, std::size_t>& hi, int B, int nmax) {
  BettiTable t;
  t.bound = B;
  t.nmax = nmax;
  for (const auto& [key, r] : lo) {
    auto it = hi.find(key);
    t.entries[key] = {r, it != hi.end() && it->second == r};
  }
  return t;
}

}  // namespace

BettiTable truncated_hh(const BaseRing& ring, int B, int nmax, std::size_t cap) {
  ChainOptions o;
  o.bound = B;
  o.top = nmax + 1;
  o.cap = cap;
  const auto lo = block_homology(ChainComplex(ring, o), nmax);
  o.bound = B + 1;
  const auto hi = block_homology(ChainComplex(ring, o), nmax);
  return flag_against(lo, hi, B, nmax);
}

BettiTable hkr_oracle(const BaseRing& ring, int B, int nmax) {
  if (ring.has_relations()) throw Error(Errc::HasRelations, "HKR closed form needs a free (Laurent) polynomial ring");
  const MonomialTable T(ring, B);
  const std::size_t nv = ring.nvars();
  BettiTable t;
  t.bound = B;
  t.nmax = nmax;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const auto& m = T.monomial(static_cast<int>(i));
    for (int n = 0; n <= nmax; ++n) t.entries[{n, T.weight(static_cast<int>(i))}] = {0, true};
    // subsets I of the variables: f * dv_I with f = m / v_I
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
      const int n = __builtin_popcount(mask);
      if (n > nmax) continue;
      bool ok = true;
      for (std::size_t j = 0; j < nv && ok; ++j)
        if ((mask >> j) & 1u) ok = ring.vars()[j].invertible || m.exps[j] >= 1;
      if (ok) t.entries[{n, T.weight(static_cast<int>(i))}].rank += 1;
    }
  }
  return t;
}

std::vector<std::size_t> hkr_ranks(const BaseRing& ring, int nmax) {
  if (ring.has_relations()) throw Error(Errc::HasRelations, "HKR closed form needs a free (Laurent) polynomial ring");
  const std::size_t m = ring.nvars();
  std::vector<std::size_t> out;
  for (int n = 0; n <= nmax; ++n) {
    std::size_t c = 1;
    const std::size_t nn = static_cast<std::size_t>(n);
    if (nn > m) c = 0;
    else
      for (std::size_t i = 0; i < nn; ++i) c = c * (m - i) / (i + 1);
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants and coinvariants

ChainOptions eigen_options(const WeightGrading& grading, int B, int top) {
  ChainOptions o;
  o.bound = B;
  o.top = top;
  o.keep = [grading](const Weight& w) { return grading.pairing(w) == 0; };
  return o;
}

namespace {

// Tensor indices of degree n grouped by the fixed-variable part of their weight.
std::map<Weight, std::vector<std::size_t>> fixed_groups(const ChainComplex& C, int n, const std::vector<bool>& mask,
                                                        int max_norm) {
  std::map<Weight, std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < C.dim(n); ++j)
    if (C.tensor_norm(n, j) <= max_norm) out[masked(C.tensor_weight(n, j), mask)].push_back(j);
  return out;
}

}  // namespace

std::vector<std::vector<RatRow>> invariant_subcomplex(const ChainComplex& C, const Endo& sigma,
                                                      const WeightGrading& grading) {
  std::vector<std::vector<RatRow>> out(static_cast<std::size_t>(C.top()) + 1);
  for (int n = 0; n <= C.top(); ++n) {
    auto& K = out[static_cast<std::size_t>(n)];
    if (grading.sigma_eigen) {
      for (std::size_t j = 0; j < C.dim(n); ++j)
        if (grading.pairing(C.tensor_weight(n, j)) == 0) K.push_back({{static_cast<int>(j), Rational(1)}});
      continue;
    }
    const auto images = C.diagonal_action(sigma, n);
    const auto mask = grading.fixed_mask(C.ring());
    for (const auto& [key, members] : fixed_groups(C, n, mask, C.options().bound)) {
      RatEchelon e;
      for (std::size_t j : members) {
        RatRow rel = e.add(minus_identity(images[j], j), static_cast<int>(j));
        if (!rel.empty()) K.push_back(std::move(rel));
      }
    }
  }
  return out;
}

namespace {

struct Job {
  std::vector<IntRow> rows;
};

std::map<std::pair<int, Weight>, std::size_t> shift_invariant_homology(const ChainComplex& C, const Endo& sigma,
                                                                       const WeightGrading& grading, int nmax) {
  const auto K = invariant_subcomplex(C, sigma, grading);
  const auto mask = grading.fixed_mask(C.ring());
  // group kernel vectors by the fixed-variable key of their first tensor
  std::vector<std::map<Weight, std::vector<const RatRow*>>> groups(static_cast<std::size_t>(nmax) + 2);
  for (int n = 0; n <= nmax + 1; ++n)
    for (const auto& v : K[static_cast<std::size_t>(n)])
      groups[static_cast<std::size_t>(n)][masked(C.tensor_weight(n, static_cast<std::size_t>(v.front().first)), mask)]
          .push_back(&v);
  std::vector<std::vector<IntRow>> jobs;
  std::map<std::pair<int, Weight>, std::size_t> job_of;
  for (int n = 1; n <= nmax + 1; ++n)
    for (const auto& [key, vs] : groups[static_cast<std::size_t>(n)]) {
      std::vector<IntRow> rows;
      for (const RatRow* v : vs) rows.push_back(to_primitive(apply_differential(C, n, *v)));
      job_of[{n, key}] = jobs.size();
      jobs.push_back(std::move(rows));
    }
  const auto ranks = block_ranks(jobs);
  auto rank_of = [&](int n, const Weight& key) -> std::size_t {
    auto it = job_of.find({n, key});
    return it == job_of.end() ? 0 : ranks[it->second];
  };
  std::map<std::pair<int, Weight>, std::size_t> out;
  for (int n = 0; n <= nmax; ++n)
    for (const auto& [key, vs] : groups[static_cast<std::size_t>(n)])
      out[{n, key}] = vs.size() - (n == 0 ? 0 : rank_of(n, key)) - rank_of(n + 1, key);
  return out;
}

std::map<std::pair<int, Weight>, std::size_t> eigen_homology(const ChainComplex& C, const WeightGrading& grading,
                                                             int nmax) {
  std::map<std::pair<int, Weight>, std::size_t> out;
  for (const auto& [key, r] : block_homology(C, nmax))
    if (grading.pairing(key.second) == 0) out[key] = r;
  return out;
}

}  // namespace

std::map<std::pair<int, Weight>, std::size_t> invariant_homology(const ChainComplex& C, const Endo& sigma,
                                                                 const WeightGrading& grading, int nmax) {
  if (grading.sigma_eigen) return eigen_homology(C, grading, nmax);
  return shift_invariant_homology(C, sigma, grading, nmax);
}

std::map<std::pair<int, Weight>, std::size_t> coinvariant_homology(const ChainComplex& C, const Endo& sigma,
                                                                   const WeightGrading& grading, int nmax) {
  if (grading.sigma_eigen) return eigen_homology(C, grading, nmax);
  if (C.top() < nmax + 1) throw Error(Errc::InvalidArgument, "chain complex too short for requested degrees");
  const int B = C.options().bound;
  const auto mask = grading.fixed_mask(C.ring());
  // I_n = (sigma - 1) F_{n,B} inside F_{n,B-1}; Q_n = F_{n,B-1} / I_n.
  std::vector<std::vector<IntRow>> jobs;
  std::map<std::tuple<int, Weight, int>, std::size_t> job_of;  // (n, key, 0 = I_n, 1 = b(F) + I_{n-1})
  std::map<std::pair<int, Weight>, std::size_t> dimF;
  std::vector<std::map<Weight, std::vector<IntRow>>> I(static_cast<std::size_t>(nmax) + 2);
  for (int n = 0; n <= nmax + 1; ++n) {
    const auto images = C.diagonal_action(sigma, n);
    for (const auto& [key, members] : fixed_groups(C, n, mask, B)) {
      auto& rows = I[static_cast<std::size_t>(n)][key];
      for (std::size_t j : members) {
        RatRow r = minus_identity(images[j], j);
        for (const auto& [col, v] : r)
          if (C.tensor_norm(n, static_cast<std::size_t>(col)) > B - 1)
            throw Error(Errc::Unsupported, "sigma - 1 does not lower the filtration");
        if (!r.empty()) rows.push_back(to_primitive(r));
      }
      job_of[{n, key, 0}] = jobs.size();
      jobs.push_back(rows);
    }
    for (const auto& [key, members] : fixed_groups(C, n, mask, B - 1)) dimF[{n, key}] = members.size();
  }
  for (int n = 1; n <= nmax + 1; ++n)
    for (const auto& [key, members] : fixed_groups(C, n, mask, B - 1)) {
      std::vector<IntRow> rows;
      for (std::size_t j : members) rows.push_back(to_primitive(C.differential(n, j)));
      auto it = I[static_cast<std::size_t>(n - 1)].find(key);
      if (it != I[static_cast<std::size_t>(n - 1)].end()) rows.insert(rows.end(), it->second.begin(), it->second.end());
      job_of[{n, key, 1}] = jobs.size();
      jobs.push_back(std::move(rows));
    }
  const auto ranks = block_ranks(jobs);
  auto rank = [&](int n, const Weight& key, int kind) -> std::size_t {
    auto it = job_of.find({n, key, kind});
    return it == job_of.end() ? 0 : ranks[it->second];
  };
  std::map<std::pair<int, Weight>, std::size_t> out;
  for (int n = 0; n <= nmax; ++n)
    for (const auto& [key, members] : fixed_groups(C, n, mask, B - 1)) {
      const std::size_t dimQ = members.size() - rank(n, key, 0);
      const std::size_t out_rank = n == 0 ? 0 : rank(n, key, 1) - rank(n - 1, key, 0);
      const std::size_t in_rank = rank(n + 1, key, 1) - rank(n, key, 0);
      out[{n, key}] = dimQ - out_rank - in_rank;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-order automorphisms

std::vector<int> finite_order_signs(const BaseRing& ring, const Endo& sigma, int* order) {
  std::vector<int> signs;
  bool diagonal = true;
  for (std::size_t j = 0; j < ring.nvars() && diagonal; ++j) {
    const BasePoly v = var_poly(ring, j);
    const BasePoly img = ring.reduce(sigma.images()[j]);
    if (img == v)
      signs.push_back(1);
    else if (img == v.scaled(ring.scalar(-1)))
      signs.push_back(-1);
    else
      diagonal = false;
  }
  if (!diagonal) {
    Endo p = sigma;
    for (int k = 2; k <= 24; ++k) {
      p = p.compose(sigma);
      if (p.is_identity())
        throw Error(Errc::Unsupported, "finite-order sigma that is not diagonal with eigenvalues +-1");
    }
    throw Error(Errc::NotFiniteOrder, "sigma has no finite order up to 24");
  }
  if (order) *order = std::find(signs.begin(), signs.end(), -1) != signs.end() ? 2 : 1;
  return signs;
}

ChainComplex eigen_complex_CH1(const BaseRing& ring, const Endo& sigma, int B, int top) {
  const auto signs = finite_order_signs(ring, sigma);
  const auto lead = lead_coords(ring);
  ChainOptions o;
  o.bound = B;
  o.top = top;
  o.keep = [ring, signs, lead](const Weight& w) {
    const auto e = exponents_of(ring, lead, w);
    int s = 1;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (signs[j] < 0 && (std::abs(e[j]) % 2 == 1)) s = -s;
    return s == 1;
  };
  return ChainComplex(ring, o);
}

// ---------------------------------------------------------------------------
// Finite-dimensional algebras

namespace {

std::vector<Monomial> finite_basis(const BaseRing& ring, std::size_t cap) {
  for (int b = 0;; ++b) {
    std::size_t lo = 0, hi = 0;
    const MonomialTable T0(ring, b), T1(ring, b + 1);
    lo = T0.size();
    hi = T1.size();
    if (lo > cap) throw Error(Errc::DimensionCap, "algebra dimension exceeds " + std::to_string(cap));
    if (lo == hi) {
      std::vector<Monomial> out;
      for (std::size_t i = 0; i < T0.size(); ++i) out.push_back(T0.monomial(static_cast<int>(i)));
      return out;
    }
  }
}

}  // namespace

FiniteAlgebra finite_algebra(const BaseRing& ring) { return finite_smash(ring, Endo::identity(ring), 1); }

FiniteAlgebra finite_smash(const BaseRing& ring, const Endo& sigma, int d) {
  for (const auto& v : ring.vars())
    if (v.invertible) throw Error(Errc::Unsupported, "finite algebras cannot have invertible variables");
  if (d < 1) throw Error(Errc::InvalidArgument, "order must be positive");
  const auto monos = finite_basis(ring, 64);
  const MonomialTable T(ring, 0);
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i].exps] = i;
  const std::size_t nm = monos.size();
  const std::size_t ud = static_cast<std::size_t>(d);
  FiniteAlgebra A;
  A.dim = nm * ud;
  A.mult.assign(A.dim, std::vector<RatRow>(A.dim));
  std::vector<Endo> powers{Endo::identity(ring)};
  for (int j = 1; j < d; ++j) powers.push_back(powers.back().compose(sigma));
  auto idx = [&](std::size_t m, std::size_t j) { return m * ud + j; };
  for (std::size_t m1 = 0; m1 < nm; ++m1)
    for (std::size_t j = 0; j < ud; ++j)
      for (std::size_t m2 = 0; m2 < nm; ++m2)
        for (std::size_t l = 0; l < ud; ++l) {
          const BasePoly left = BasePoly::term(monos[m1], ring.scalar(1));
          const BasePoly right = powers[j].apply(BasePoly::term(monos[m2], ring.scalar(1)));
          const BasePoly prod = ring.mul(left, right);
          std::map<int, Rational> acc;
          for (const auto& [mm, c] : prod.terms())
            acc[static_cast<int>(idx(pos.at(mm.exps), (j + l) % ud))] += rational_coefficient(c);
          RatRow row;
          for (const auto& [col, v] : acc)
            if (v != 0) row.emplace_back(col, v);
          A.mult[idx(m1, j)][idx(m2, l)] = std::move(row);
        }
  A.moduli.assign(T.weight_dim(), 0);
  A.moduli.push_back(d);
  for (std::size_t m = 0; m < nm; ++m)
    for (std::size_t j = 0; j < ud; ++j) {
      Weight w = T.weight_of(monos[m]);
      w.push_back(static_cast<int>(j));
      A.grade.push_back(w);
    }
  return A;
}

std::vector<std::size_t> hh_finite_dim(const FiniteAlgebra& alg, int nmax, std::size_t cap) {
  const std::size_t d = alg.dim;
  if (d > cap) throw Error(Errc::DimensionCap, "algebra dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  if (d == 0) return std::vector<std::size_t>(static_cast<std::size_t>(nmax) + 1, 0);
  // Normalized complex A ⊗ Ā^{⊗n}, Ā spanned by e_1..e_{d-1}.
  const std::size_t top = static_cast<std::size_t>(nmax) + 1;
  auto grade_add = [&](Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] += b[i];
      if (alg.moduli.size() > i && alg.moduli[i] > 0) a[i] %= alg.moduli[i];
    }
    return a;
  };
  const bool graded = !alg.grade.empty();
  std::vector<std::vector<std::vector<std::size_t>>> tensors(top + 1);
  std::vector<std::map<std::vector<std::size_t>, int>> index(top + 1);
  std::vector<std::map<Weight, std::vector<std::size_t>>> blocks(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<std::size_t> cur(n + 1);
    auto rec = [&](auto&& self, std::size_t s) -> void {
      if (s == n + 1) {
        Weight w = graded ? Weight(alg.grade[0].size(), 0) : Weight{};
        if (graded)
          for (std::size_t v : cur) w = grade_add(w, alg.grade[v]);
        const std::size_t id = tensors[n].size();
        index[n][cur] = static_cast<int>(id);
        tensors[n].push_back(cur);
        blocks[n][w].push_back(id);
        return;
      }
      for (std::size_t v = (s == 0 ? 0 : 1); v < d; ++v) {
        cur[s] = v;
        self(self, s + 1);
      }
    };
    rec(rec, 0);
  }
  auto boundary = [&](std::size_t n, const std::vector<std::size_t>& t) {
    std::map<int, Rational> acc;
    std::vector<std::size_t> face(n);
    for (std::size_t i = 0; i <= n; ++i) {
      const Rational sign = i % 2 == 0 ? 1 : -1;
      const RatRow& prod = i < n ? alg.mult[t[i]][t[i + 1]] : alg.mult[t[n]][t[0]];
      for (const auto& [col, c] : prod) {
        const std::size_t m = static_cast<std::size_t>(col);
        if (i < n) {
          if (i > 0 && m == 0) continue;  // unit in a bar slot vanishes
          std::size_t k = 0;
          for (std::size_t s = 0; s <= n; ++s) {
            if (s == i + 1) continue;
            face[k++] = s == i ? m : t[s];
          }
        } else {
          face[0] = m;
          for (std::size_t s = 1; s < n; ++s) face[s] = t[s];
        }
        const int target = index[n - 1].at(face);
        auto [it, ins] = acc.try_emplace(target, sign * c);
        if (!ins) it->second += sign * c;
      }
    }
    RatRow row;
    for (const auto& [col, v] : acc)
      if (v != 0) row.emplace_back(col, v);
    return to_primitive(row);
  };
  std::vector<std::vector<IntRow>> jobs;
  std::map<std::pair<std::size_t, Weight>, std::size_t> job_of;
  for (std::size_t n = 1; n <= top; ++n)
    for (const auto& [w, members] : blocks[n]) {
      std::vector<IntRow> rows;
      for (std::size_t id : members) rows.push_back(boundary(n, tensors[n][id]));
      job_of[{n, w}] = jobs.size();
      jobs.push_back(std::move(rows));
    }
  const auto ranks = block_ranks(jobs);
  auto rank = [&](std::size_t n, const Weight& w) -> std::size_t {
    auto it = job_of.find({n, w});
    return it == job_of.end() ? 0 : ranks[it->second];
  };
  std::vector<std::size_t> out(static_cast<std::size_t>(nmax) + 1, 0);
  for (std::size_t n = 0; n + 1 <= top; ++n)
    for (const auto& [w, members] : blocks[n]) out[n] += members.size() - rank(n, w) - rank(n + 1, w);
  return out;
}

}  // namespace gwa
