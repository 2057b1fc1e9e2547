#include "gwa/ore.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace gwa {

namespace {

// Evaluates an affine integer expression in n such as "2n+1", "-n", "4*n-3".
int eval_affine(std::string_view text, int n) {
  int total = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw Error(Errc::Parse, "bad index expression '" + std::string(text) + "'");
    }
    first = false;
    long coeff = 1;
    bool have_digits = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coeff = std::stol(std::string(text.substr(start, i - start)));
      have_digits = true;
    }
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i < text.size() && text[i] == 'n') {
      ++i;
      total += sign * static_cast<int>(coeff) * n;
    } else {
      if (!have_digits) throw Error(Errc::Parse, "bad index expression '" + std::string(text) + "'");
      total += sign * static_cast<int>(coeff);
    }
  }
  return total;
}

std::string substitute_index(const std::string& tmpl, int n) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    const std::size_t close = tmpl.find('}', i);
    if (close == std::string::npos) throw Error(Errc::Parse, "unclosed '{' in template '" + tmpl + "'");
    const int value = eval_affine(std::string_view(tmpl).substr(i + 1, close - i - 1), n);
    std::size_t back = out.find_last_not_of(' ');
    if (back != std::string::npos && out[back] == '^')
      out += std::to_string(value);
    else
      out += "(" + std::to_string(value) + ")";
    i = close;
  }
  return out;
}

// Incremental reduced row echelon form over Scalar, on polynomial vectors,
// with a record of which inputs make up each row.
class SpanReducer {
 public:
  struct Reduced {
    BasePoly remainder;
    std::map<int, Scalar> combo;
  };

  // Returns false if v is already in the span.
  bool add(const BasePoly& v, int tag) {
    Reduced r = reduce(v);
    if (r.remainder.is_zero()) return false;
    // remainder = input_tag - sum combo[k] * input_k
    const Scalar inv = r.remainder.lead_coeff().inverse();
    Row row{r.remainder.scaled(inv), {}};
    for (const auto& [k, c] : r.combo) accumulate(row.combo, k, -c * inv);
    accumulate(row.combo, tag, inv);
    const Monomial piv = row.vec.lead_monomial();
    for (auto& other : rows_) {
      const Scalar c = other.vec.coeff(piv);
      if (c.is_zero()) continue;
      other.vec -= row.vec.scaled(c);
      for (const auto& [k, x] : row.combo) accumulate(other.combo, k, -x * c);
    }
    rows_.push_back(std::move(row));
    return true;
  }

  // Writes v = remainder + sum combo[k] * input_k.
  Reduced reduce(const BasePoly& v) const {
    Reduced r{v, {}};
    for (const auto& row : rows_) {
      const Scalar c = r.remainder.coeff(row.vec.lead_monomial());
      if (c.is_zero()) continue;
      r.remainder -= row.vec.scaled(c);
      for (const auto& [k, x] : row.combo) accumulate(r.combo, k, x * c);
    }
    return r;
  }

  std::size_t rank() const { return rows_.size(); }
  std::vector<BasePoly> rows() const {
    std::vector<BasePoly> out;
    for (const auto& r : rows_) out.push_back(r.vec);
    return out;
  }

 private:
  struct Row {
    BasePoly vec;
    std::map<int, Scalar> combo;
  };
  static void accumulate(std::map<int, Scalar>& m, int k, const Scalar& x) {
    auto [it, inserted] = m.try_emplace(k, x);
    if (!inserted) it->second += x;
    if (it->second.is_zero()) m.erase(it);
  }
  std::vector<Row> rows_;
};

bool proportional_unit(const BaseRing& ring, const BasePoly& img, const BasePoly& g, BasePoly* unit) {
  if (img.size() != g.size() || g.is_zero()) return false;
  const Monomial shift = img.lead_monomial() / g.lead_monomial();
  BasePoly u = BasePoly::term(shift, img.lead_coeff() / g.lead_coeff());
  if (!ring.is_unit(u)) return false;
  if (ring.mul(u, g) != img) return false;
  *unit = u;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// OreSetSpec

OreSetSpec::OreSetSpec(const BaseRing& ring, std::vector<std::string> templates, int window)
    : ring_(ring), templates_(std::move(templates)), window_(window) {
  if (window < 0) throw Error(Errc::InvalidArgument, "negative window");
  if (templates_.empty()) throw Error(Errc::InvalidArgument, "Ore set without templates");
  for (std::size_t tid = 0; tid < templates_.size(); ++tid)
    for (int n : indices(tid))
      if (generator(tid, n).is_zero()) throw Error(Errc::InvalidArgument, "zero element in Ore set");
}

bool OreSetSpec::is_indexed(std::size_t tid) const { return templates_.at(tid).find('{') != std::string::npos; }

std::vector<int> OreSetSpec::indices(std::size_t tid) const {
  if (!is_indexed(tid)) return {0};
  std::vector<int> out;
  for (int n = -window_; n <= window_; ++n) out.push_back(n);
  return out;
}

bool OreSetSpec::in_window(std::size_t tid, int n) const {
  if (tid >= templates_.size()) return false;
  return is_indexed(tid) ? (n >= -window_ && n <= window_) : n == 0;
}

BasePoly OreSetSpec::generator(std::size_t tid, int n) const {
  return ring_.parse(substitute_index(templates_.at(tid), n));
}

std::vector<BasePoly> OreSetSpec::materialized() const {
  std::vector<BasePoly> out;
  for (std::size_t tid = 0; tid < templates_.size(); ++tid)
    for (int n : indices(tid)) out.push_back(generator(tid, n));
  return out;
}

GeneratorImage generator_image(const OreSetSpec& S, const Endo& sigma, std::size_t tid, int n) {
  const BaseRing& ring = S.ring();
  const BasePoly img = sigma.apply(S.generator(tid, n));
  for (std::size_t t2 = 0; t2 < S.templates().size(); ++t2) {
    std::vector<int> cands = S.is_indexed(t2) ? std::vector<int>{n - 1, n, n + 1} : std::vector<int>{0};
    if (S.is_indexed(t2) && !S.is_indexed(tid)) cands = {-1, 0, 1};
    for (int n2 : cands) {
      BasePoly unit;
      if (proportional_unit(ring, img, S.generator(t2, n2), &unit)) return {t2, n2, unit};
    }
  }
  throw Error(Errc::NotSigmaStable,
              "image of " + ring.format(S.generator(tid, n)) + " is " + ring.format(img) + ", not a unit multiple of a neighbour");
}

void verify_sigma_stable(const OreSetSpec& S, const Endo& sigma) {
  const Endo inv = sigma.inverse();
  for (std::size_t tid = 0; tid < S.templates().size(); ++tid) {
    for (int n : S.indices(tid)) {
      if (S.is_indexed(tid) && (n == -S.window() || n == S.window())) continue;
      generator_image(S, sigma, tid, n);
      generator_image(S, inv, tid, n);
    }
  }
}

// ---------------------------------------------------------------------------
// LocalRing

LocalRing::LocalRing(const OreSetSpec& S) : S_(S) {
  if (S.ring().has_relations()) throw Error(Errc::Unsupported, "fractions over rings with relations");
}

BasePoly LocalRing::den_poly(const std::map<Fraction::Key, int>& den) const {
  BasePoly p = ring().one();
  for (const auto& [key, mult] : den) p = ring().mul(p, ring().pow(S_.generator(key.first, key.second), mult));
  return p;
}

Fraction LocalRing::normalize(Fraction f) const {
  if (f.num.is_zero()) {
    f.den.clear();
    return f;
  }
  for (auto it = f.den.begin(); it != f.den.end();) {
    const BasePoly g = S_.generator(it->first.first, it->first.second);
    while (it->second > 0) {
      auto q = ring_exact_div(ring(), f.num, g);
      if (!q) break;
      f.num = *q;
      --it->second;
    }
    it = it->second == 0 ? f.den.erase(it) : std::next(it);
  }
  return f;
}

Fraction LocalRing::generator_inverse(std::size_t tid, int n) const {
  if (!S_.in_window(tid, n))
    throw Error(Errc::WindowExceeded, "index " + std::to_string(n) + " outside window " + std::to_string(S_.window()));
  return normalize({ring().one(), {{{tid, n}, 1}}});
}

Fraction LocalRing::add(const Fraction& f, const Fraction& g) const {
  std::map<Fraction::Key, int> d = f.den;
  for (const auto& [k, m] : g.den) d[k] = std::max(d[k], m);
  auto rest = [&](const std::map<Fraction::Key, int>& part) {
    std::map<Fraction::Key, int> r;
    for (const auto& [k, m] : d) {
      auto it = part.find(k);
      const int have = it == part.end() ? 0 : it->second;
      if (m > have) r[k] = m - have;
    }
    return den_poly(r);
  };
  Fraction out{ring().mul(f.num, rest(f.den)) + ring().mul(g.num, rest(g.den)), d};
  return normalize(std::move(out));
}

Fraction LocalRing::neg(const Fraction& f) const { return {-f.num, f.den}; }

Fraction LocalRing::sub(const Fraction& f, const Fraction& g) const { return add(f, neg(g)); }

Fraction LocalRing::mul(const Fraction& f, const Fraction& g) const {
  Fraction out{ring().mul(f.num, g.num), f.den};
  for (const auto& [k, m] : g.den) out.den[k] += m;
  return normalize(std::move(out));
}

bool LocalRing::equal(const Fraction& f, const Fraction& g) const {
  return ring().mul(f.num, den_poly(g.den)) == ring().mul(g.num, den_poly(f.den));
}

Fraction LocalRing::apply(const Endo& sigma, int k, const Fraction& f) const {
  Fraction cur = f;
  const Endo step = k >= 0 ? sigma : sigma.inverse();
  for (int i = 0; i < std::abs(k); ++i) {
    Fraction next{step.apply(cur.num), {}};
    for (const auto& [key, mult] : cur.den) {
      GeneratorImage gi = generator_image(S_, step, key.first, key.second);
      if (!S_.in_window(gi.tid, gi.index))
        throw Error(Errc::WindowExceeded, "denominator moved outside window " + std::to_string(S_.window()));
      next.num = ring().mul(next.num, ring().pow(ring().unit_inverse(gi.unit), mult));
      next.den[{gi.tid, gi.index}] += mult;
    }
    cur = normalize(std::move(next));
  }
  return cur;
}

std::optional<Fraction> LocalRing::inverse(const BasePoly& p) const {
  if (p.is_zero()) return std::nullopt;
  BasePoly rest = p;
  std::map<Fraction::Key, int> den;
  for (std::size_t tid = 0; tid < S_.templates().size(); ++tid)
    for (int n : S_.indices(tid)) {
      const BasePoly g = S_.generator(tid, n);
      if (ring().is_unit(g) || g.is_constant()) continue;
      while (auto q = ring_exact_div(ring(), rest, g)) {
        rest = *q;
        ++den[{tid, n}];
      }
    }
  if (!ring().is_unit(rest)) return std::nullopt;
  return normalize({ring().unit_inverse(rest), den});
}

std::string LocalRing::format(const Fraction& f) const {
  if (f.den.empty()) return ring().format(f.num);
  std::string d;
  for (const auto& [key, mult] : f.den) {
    if (!d.empty()) d += "*";
    d += "(" + ring().format(S_.generator(key.first, key.second)) + ")";
    if (mult != 1) d += "^" + std::to_string(mult);
  }
  return "(" + ring().format(f.num) + ")/(" + d + ")";
}

Fraction frac_arith(char op, const Fraction& f, const Fraction& g, const LocalRing& ctx) {
  switch (op) {
    case '+':
      return ctx.add(f, g);
    case '-':
      return ctx.sub(f, g);
    case '*':
      return ctx.mul(f, g);
    default:
      throw Error(Errc::InvalidArgument, std::string("unknown fraction operation ") + op);
  }
}

// ---------------------------------------------------------------------------
// The subalgebra k<S> and its coinvariants

SubalgebraGens subalgebra_generators(const OreSetSpec& S, int degree) {
  const BaseRing& ring = S.ring();
  std::vector<BasePoly> base;
  for (const auto& g : S.materialized())
    if (std::find(base.begin(), base.end(), g) == base.end()) base.push_back(g);

  SpanReducer span;
  span.add(ring.one(), 0);
  std::vector<BasePoly> layer{ring.one()};
  for (int d = 1; d <= degree; ++d) {
    std::vector<BasePoly> next;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) {
        BasePoly p = ring.mul(layer[i], base[j]);
        if (span.add(p, 0)) next.push_back(p);
      }
    layer = std::move(next);
    if (layer.empty()) break;
  }

  SubalgebraGens out;
  bool whole = true;
  for (std::size_t j = 0; j < ring.nvars() && whole; ++j) {
    const BasePoly v = BasePoly::variable(ring.nvars(), ring.mode(), j);
    if (!span.reduce(v).remainder.is_zero()) whole = false;
    if (ring.vars()[j].invertible && !span.reduce(BasePoly::variable(ring.nvars(), ring.mode(), j, -1)).remainder.is_zero())
      whole = false;
  }
  if (whole) {
    out.whole_ring = true;
    for (std::size_t j = 0; j < ring.nvars(); ++j) out.gens.push_back(BasePoly::variable(ring.nvars(), ring.mode(), j));
    return out;
  }

  std::vector<Monomial> monos;
  for (const auto& row : span.rows()) {
    BasePoly nonconst = row - ring.constant(row.constant_term());
    if (nonconst.is_zero()) continue;
    if (nonconst.size() != 1)
      throw Error(Errc::Unsupported, "subalgebra generated by S is neither A nor a monomial subalgebra: " + ring.format(row));
    monos.push_back(nonconst.lead_monomial());
  }
  std::sort(monos.begin(), monos.end(), GrlexLess{});
  std::vector<Monomial> kept;
  for (const auto& m : monos) {
    bool decomposable = false;
    for (const auto& k : kept)
      if (m.divisible_by(k)) {
        const Monomial rest = m / k;
        if (std::find(monos.begin(), monos.end(), rest) != monos.end()) decomposable = true;
      }
    if (!decomposable) kept.push_back(m);
  }
  for (const auto& m : kept) out.gens.push_back(BasePoly::term(m, ring.scalar(1)));
  return out;
}

const char* coinv_name(CoinvKind kind) {
  switch (kind) {
    case CoinvKind::IsZero:
      return "IsZero";
    case CoinvKind::IsScalars:
      return "IsScalars";
    case CoinvKind::Basis:
      return "Basis";
  }
  return "?";
}

namespace {

// Exponent vectors of total degree <= d in r variables.
std::vector<Monomial> exponents_up_to(std::size_t r, int d) {
  std::vector<Monomial> out;
  Monomial cur(r);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == r) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.exps[v] = e;
      self(self, v + 1, left - e);
    }
    cur.exps[v] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

CoinvResult classify(const RingIdeal& ideal, int bound, const std::function<BasePoly(const Monomial&)>& decode) {
  if (ideal.is_unit_ideal()) return {CoinvKind::IsZero, {}};
  bool finite = false;
  const auto std_monos = ideal.standard_monomials(bound, &finite);
  if (std_monos.size() == 1 && std_monos[0].is_one()) return {CoinvKind::IsScalars, {}};
  CoinvResult r{CoinvKind::Basis, {}};
  for (const auto& m : std_monos) r.basis.push_back(decode(m));
  return r;
}

}  // namespace

CoinvResult coinvariant_quotient(const std::vector<BasePoly>& gens, const Endo& sigma, const BaseRing& ring,
                                 int degree_bound) {
  bool are_vars = gens.size() == ring.nvars();
  for (std::size_t j = 0; j < gens.size() && are_vars; ++j)
    if (gens[j] != BasePoly::variable(ring.nvars(), ring.mode(), j)) are_vars = false;

  if (are_vars) {
    std::vector<BasePoly> rels;
    for (std::size_t j = 0; j < ring.nvars(); ++j) rels.push_back(sigma.images()[j] - gens[j]);
    RingIdeal ideal(ring, rels);
    std::vector<std::size_t> owner;  // encoded slot -> ring variable
    for (std::size_t j = 0; j < ring.nvars(); ++j)
      if (ring.vars()[j].invertible) owner.push_back(j);
    auto decode = [&](const Monomial& m) {
      Monomial out(ring.nvars());
      for (std::size_t j = 0; j < ring.nvars(); ++j) out.exps[j] = m.exps[j];
      for (std::size_t k = 0; k < owner.size(); ++k) out.exps[owner[k]] -= m.exps[ring.nvars() + k];
      return BasePoly::term(out, ring.scalar(1));
    };
    return classify(ideal, degree_bound, decode);
  }

  const std::size_t r = gens.size();
  if (r == 0) return {CoinvKind::IsScalars, {}};
  std::vector<VarSpec> zvars;
  for (std::size_t i = 0; i < r; ++i) zvars.push_back({"z" + std::to_string(i + 1), false, {}});
  BaseRing zring(zvars, {}, ring.mode());

  const auto alphas = exponents_up_to(r, degree_bound);
  SpanReducer span;
  std::vector<BasePoly> images;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    BasePoly p = ring.one();
    for (std::size_t i = 0; i < r; ++i) p = ring.mul(p, ring.pow(gens[i], alphas[k].exps[i]));
    images.push_back(p);
    if (!span.add(p, static_cast<int>(k)))
      throw Error(Errc::Unsupported, "generators of k<S> are algebraically dependent");
  }
  std::vector<BasePoly> rels;
  for (std::size_t i = 0; i < r; ++i) {
    auto red = span.reduce(sigma.apply(gens[i]));
    if (!red.remainder.is_zero())
      throw Error(Errc::DegreeBoundTooSmall, "sigma(" + ring.format(gens[i]) + ") is not a polynomial of degree <= " +
                                                 std::to_string(degree_bound) + " in the generators");
    BasePoly f = zring.zero();
    for (const auto& [k, c] : red.combo) f.add_term(alphas[static_cast<std::size_t>(k)], c);
    rels.push_back(f - BasePoly::variable(r, ring.mode(), i));
  }
  RingIdeal ideal(zring, rels);
  auto decode = [&](const Monomial& m) {
    BasePoly p = ring.one();
    for (std::size_t i = 0; i < r; ++i) p = ring.mul(p, ring.pow(gens[i], m.exps[i]));
    return p;
  };
  return classify(ideal, degree_bound, decode);
}

}  // namespace gwa
