#include "gwa/chains.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

namespace gwa {

namespace {

std::mutex g_product_mu;

}  // namespace

Rational rational_coefficient(const Scalar& c) {
  if (!c.is_rational()) throw Error(Errc::Unsupported, "chain coefficient " + c.to_string() + " is not rational");
  return c.to_rational();
}

// ---------------------------------------------------------------------------
// MonomialTable

MonomialTable::MonomialTable(const BaseRing& ring, int bound) {
  const std::size_t nv = ring.nvars();
  weight_dim_ = nv == 0 ? 0 : ring.vars()[0].weight.size();
  std::vector<int> owner(weight_dim_, -1);
  for (std::size_t j = 0; j < nv; ++j) {
    const Weight& w = ring.vars()[j].weight;
    if (w.size() != weight_dim_) throw Error(Errc::InvalidArgument, "weights of different lengths");
    int norm = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      norm += std::abs(w[k]);
      if (w[k] != 0) {
        if (owner[k] >= 0) throw Error(Errc::Unsupported, "variable weights must have disjoint supports");
        owner[k] = static_cast<int>(j);
      }
    }
    if (norm == 0) throw Error(Errc::Unsupported, "variable " + ring.vars()[j].name + " has zero weight");
    var_weights_.push_back(w);
    var_norms_.push_back(norm);
  }
  for (const auto& r : ring.relations()) {
    const Weight w0 = weight_of(r.lead_monomial());
    for (const auto& [m, c] : r.terms())
      if (weight_of(m) != w0) throw Error(Errc::Unsupported, "relations must be weight-homogeneous");
  }

  Monomial cur(nv);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == nv) {
      if (ring.is_standard(cur)) monos_.push_back(cur);
      return;
    }
    const int maxe = left / var_norms_[j];
    const int mine = ring.vars()[j].invertible ? -maxe : 0;
    for (int e = mine; e <= maxe; ++e) {
      cur.exps[j] = e;
      self(self, j + 1, left - std::abs(e) * var_norms_[j]);
    }
    cur.exps[j] = 0;
  };
  rec(rec, 0, bound);
  std::stable_sort(monos_.begin(), monos_.end(), [&](const Monomial& a, const Monomial& b) {
    const int na = norm_of(a), nb = norm_of(b);
    if (na != nb) return na < nb;
    return GrlexLess{}(a, b);
  });
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    index_.emplace(monos_[i].exps, static_cast<int>(i));
    weights_.push_back(weight_of(monos_[i]));
    norms_.push_back(norm_of(monos_[i]));
    if (monos_[i].is_one()) one_ = static_cast<int>(i);
  }
}

int MonomialTable::find(const Monomial& m) const {
  auto it = index_.find(m.exps);
  return it == index_.end() ? -1 : it->second;
}

Weight MonomialTable::weight_of(const Monomial& m) const {
  Weight w(weight_dim_, 0);
  for (std::size_t j = 0; j < m.exps.size(); ++j)
    for (std::size_t k = 0; k < weight_dim_; ++k) w[k] += m.exps[j] * var_weights_[j][k];
  return w;
}

int MonomialTable::norm_of(const Monomial& m) const {
  int n = 0;
  for (std::size_t j = 0; j < m.exps.size(); ++j) n += std::abs(m.exps[j]) * var_norms_[j];
  return n;
}

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex::ChainComplex(const BaseRing& ring, ChainOptions opts)
    : ring_(ring), opts_(std::move(opts)), table_(std::make_shared<MonomialTable>(ring, opts_.bound)) {
  if (opts_.top < 0) throw Error(Errc::InvalidArgument, "negative top degree");
  if (opts_.block_mask.empty()) opts_.block_mask.assign(table_->weight_dim(), true);
  enumerate();
  build_differentials();
}

Weight ChainComplex::block_key(const Weight& w) const {
  Weight k;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (opts_.block_mask[i]) k.push_back(w[i]);
  return k;
}

int ChainComplex::index(int n, const std::vector<int>& t) const {
  const auto& idx = index_[static_cast<std::size_t>(n)];
  auto it = idx.find(t);
  return it == idx.end() ? -1 : it->second;
}

void ChainComplex::enumerate() {
  const MonomialTable& T = *table_;
  const int nm = static_cast<int>(T.size());
  const std::size_t wd = T.weight_dim();
  basis_.resize(static_cast<std::size_t>(opts_.top) + 1);
  index_.resize(basis_.size());
  tweight_.resize(basis_.size());
  tnorm_.resize(basis_.size());
  blocks_.resize(basis_.size());
  for (int n = 0; n <= opts_.top; ++n) {
    const std::size_t slots = static_cast<std::size_t>(n) + 1;
    std::vector<int> cur(slots);
    Weight w(wd, 0);
    auto& out = basis_[static_cast<std::size_t>(n)];
    auto rec = [&](auto&& self, std::size_t s, int left) -> void {
      if (s == slots) {
        if (opts_.keep && !opts_.keep(w)) return;
        if (out.size() >= opts_.cap)
          throw Error(Errc::ResourceBudgetExceeded, "chain basis in degree " + std::to_string(n) + " exceeds cap");
        out.push_back(cur);
        tweight_[static_cast<std::size_t>(n)].push_back(w);
        tnorm_[static_cast<std::size_t>(n)].push_back(opts_.bound - left);
        return;
      }
      for (int i = 0; i < nm && T.norm(i) <= left; ++i) {
        cur[s] = i;
        for (std::size_t k = 0; k < wd; ++k) w[k] += T.weight(i)[k];
        self(self, s + 1, left - T.norm(i));
        for (std::size_t k = 0; k < wd; ++k) w[k] -= T.weight(i)[k];
      }
    };
    rec(rec, 0, opts_.bound);
    auto& idx = index_[static_cast<std::size_t>(n)];
    idx.reserve(out.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
      idx.emplace(out[j], static_cast<int>(j));
      blocks_[static_cast<std::size_t>(n)][block_key(tweight_[static_cast<std::size_t>(n)][j])].push_back(j);
    }
  }
}

const BasePoly& ChainComplex::product(int a, int b) const {
  if (a > b) std::swap(a, b);
  std::lock_guard<std::mutex> lock(g_product_mu);
  auto it = products_.find({a, b});
  if (it != products_.end()) return it->second;
  const BasePoly pa = BasePoly::term(table_->monomial(a), ring_.scalar(1));
  const BasePoly pb = BasePoly::term(table_->monomial(b), ring_.scalar(1));
  return products_.emplace(std::make_pair(a, b), ring_.mul(pa, pb)).first->second;
}

namespace {

void add_entry(std::map<int, Rational>& acc, int col, const Rational& v) {
  auto [it, inserted] = acc.try_emplace(col, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) acc.erase(it);
  }
}

RatRow to_row(const std::map<int, Rational>& acc) {
  RatRow r;
  r.reserve(acc.size());
  for (const auto& [c, v] : acc)
    if (v != 0) r.emplace_back(c, v);
  return r;
}

}  // namespace

void ChainComplex::build_differentials() {
  diff_.resize(basis_.size());
  for (int n = 1; n <= opts_.top; ++n) {
    auto& rows = diff_[static_cast<std::size_t>(n)];
    const auto& B = basis_[static_cast<std::size_t>(n)];
    rows.resize(B.size());
    std::vector<int> face(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < B.size(); ++j) {
      const auto& t = B[j];
      std::map<int, Rational> acc;
      for (int i = 0; i <= n; ++i) {
        // d_i merges slots i, i+1; d_n moves a_n to the front.
        const int sign = (i % 2 == 0) ? 1 : -1;
        const BasePoly& prod = i < n ? product(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i) + 1])
                                     : product(t[static_cast<std::size_t>(n)], t[0]);
        for (const auto& [m, c] : prod.terms()) {
          const int mi = table_->find(m);
          if (mi < 0) throw Error(Errc::Unsupported, "product left the monomial table");
          if (i < n) {
            std::size_t k = 0;
            for (int s = 0; s <= n; ++s) {
              if (s == i + 1) continue;
              face[k++] = s == i ? mi : t[static_cast<std::size_t>(s)];
            }
          } else {
            face[0] = mi;
            for (int s = 1; s < n; ++s) face[static_cast<std::size_t>(s)] = t[static_cast<std::size_t>(s)];
          }
          const int col = index(n - 1, face);
          if (col < 0) throw Error(Errc::Unsupported, "face left the truncated chain space");
          add_entry(acc, col, Rational(sign) * rational_coefficient(c));
        }
      }
      rows[j] = to_row(acc);
    }
  }
}

std::vector<RatRow> ChainComplex::diagonal_action(const Endo& sigma, int n) const {
  std::map<int, std::vector<std::pair<int, Rational>>> images;
  auto image_of = [&](int m) -> const std::vector<std::pair<int, Rational>>& {
    auto it = images.find(m);
    if (it != images.end()) return it->second;
    std::vector<std::pair<int, Rational>> img;
    const BasePoly image = sigma.apply(BasePoly::term(table_->monomial(m), ring_.scalar(1)));
    for (const auto& [mm, c] : image.terms()) {
      const int k = table_->find(mm);
      if (k < 0) throw Error(Errc::Unsupported, "sigma image leaves the monomial table");
      img.emplace_back(k, rational_coefficient(c));
    }
    return images.emplace(m, std::move(img)).first->second;
  };
  const auto& B = basis_[static_cast<std::size_t>(n)];
  std::vector<RatRow> out(B.size());
  const std::size_t slots = static_cast<std::size_t>(n) + 1;
  std::vector<int> cur(slots);
  for (std::size_t j = 0; j < B.size(); ++j) {
    std::map<int, Rational> acc;
    auto rec = [&](auto&& self, std::size_t s, const Rational& coeff) -> void {
      if (s == slots) {
        const int col = index(n, cur);
        if (col < 0) throw Error(Errc::Unsupported, "sigma image leaves the truncated chain space");
        add_entry(acc, col, coeff);
        return;
      }
      for (const auto& [k, c] : image_of(B[j][s])) {
        cur[s] = k;
        self(self, s + 1, coeff * c);
      }
    };
    rec(rec, 0, Rational(1));
    out[j] = to_row(acc);
  }
  return out;
}

RatRow apply_differential(const ChainComplex& C, int n, const RatRow& v) {
  std::map<int, Rational> acc;
  for (const auto& [j, c] : v)
    for (const auto& [col, x] : C.differential(n, static_cast<std::size_t>(j))) add_entry(acc, col, c * x);
  return to_row(acc);
}

std::map<std::pair<int, Weight>, std::size_t> block_homology(const ChainComplex& C, int nmax) {
  if (C.top() < nmax + 1) throw Error(Errc::InvalidArgument, "chain complex too short for requested degrees");
  // rank of b_n on each block, n = 1..nmax+1
  std::vector<std::vector<IntRow>> jobs;
  std::vector<std::pair<int, Weight>> keys;
  for (int n = 1; n <= nmax + 1; ++n)
    for (const auto& [key, members] : C.blocks(n)) {
      std::vector<IntRow> rows;
      rows.reserve(members.size());
      for (std::size_t j : members) rows.push_back(to_primitive(C.differential(n, j)));
      jobs.push_back(std::move(rows));
      keys.emplace_back(n, key);
    }
  const auto ranks = block_ranks(jobs);
  std::map<std::pair<int, Weight>, std::size_t> rk;
  for (std::size_t i = 0; i < keys.size(); ++i) rk[keys[i]] = ranks[i];
  std::map<std::pair<int, Weight>, std::size_t> out;
  for (int n = 0; n <= nmax; ++n)
    for (const auto& [key, members] : C.blocks(n)) {
      const std::size_t out_rank = n == 0 ? 0 : rk[{n, key}];
      auto it = rk.find({n + 1, key});
      const std::size_t in_rank = it == rk.end() ? 0 : it->second;
      out[{n, key}] = members.size() - out_rank - in_rank;
    }
  return out;
}

std::vector<std::size_t> subcomplex_homology(const ChainComplex& C, const std::vector<std::vector<RatRow>>& basis,
                                             int nmax) {
  std::vector<std::vector<IntRow>> jobs;
  for (int n = 1; n <= nmax + 1; ++n) {
    std::vector<IntRow> rows;
    for (const auto& v : basis[static_cast<std::size_t>(n)]) rows.push_back(to_primitive(apply_differential(C, n, v)));
    jobs.push_back(std::move(rows));
  }
  const auto ranks = block_ranks(jobs);
  std::vector<std::size_t> out;
  for (int n = 0; n <= nmax; ++n) {
    const std::size_t dim = basis[static_cast<std::size_t>(n)].size();
    const std::size_t out_rank = n == 0 ? 0 : ranks[static_cast<std::size_t>(n - 1)];
    const std::size_t in_rank = ranks[static_cast<std::size_t>(n)];
    out.push_back(dim - out_rank - in_rank);
  }
  return out;
}

}  // namespace gwa
