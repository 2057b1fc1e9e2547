#include "gwa/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gwa/expr_parser.hpp"
#include "gwa/ideal.hpp"

namespace gwa {

// ---------------------------------------------------------------------------
// Monomial

int Monomial::total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < o.exps[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::max(exps[i], o.exps[i]);
  return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

// ---------------------------------------------------------------------------
// BasePoly

BasePoly BasePoly::constant(std::size_t nvars, const Scalar& c) {
  BasePoly p(nvars, c.mode());
  p.add_term(Monomial(nvars), c);
  return p;
}

BasePoly BasePoly::term(const Monomial& m, const Scalar& c) {
  BasePoly p(m.exps.size(), c.mode());
  p.add_term(m, c);
  return p;
}

BasePoly BasePoly::variable(std::size_t nvars, ScalarMode mode, std::size_t index, int power) {
  Monomial m(nvars);
  m.exps[index] = power;
  return term(m, Scalar(mode, 1));
}

Scalar BasePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(mode_, 0) : it->second;
}

bool BasePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar BasePoly::constant_term() const { return coeff(Monomial(nvars_)); }

void BasePoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BasePoly operator+(const BasePoly& a, const BasePoly& b) {
  BasePoly r = a.terms_.size() >= b.terms_.size() ? a : b;
  const BasePoly& other = a.terms_.size() >= b.terms_.size() ? b : a;
  if (r.nvars_ == 0 && other.nvars_ != 0) {
    r.nvars_ = other.nvars_;
    r.mode_ = other.mode_;
  }
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

BasePoly BasePoly::operator-() const {
  BasePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BasePoly operator-(const BasePoly& a, const BasePoly& b) { return a + (-b); }

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  BasePoly r(std::max(a.nvars_, b.nvars_), a.terms_.empty() ? b.mode_ : a.mode_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

BasePoly BasePoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return BasePoly(nvars_, mode_);
  BasePoly r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

BasePoly BasePoly::times_monomial(const Monomial& m) const {
  BasePoly r(nvars_, mode_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

Monomial BasePoly::min_exponents() const {
  Monomial r(nvars_);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      r.exps[i] = first ? m.exps[i] : std::min(r.exps[i], m.exps[i]);
    first = false;
  }
  return r;
}

int BasePoly::max_total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

// ---------------------------------------------------------------------------
// BaseRing

BaseRing::BaseRing(std::vector<VarSpec> vars, std::vector<BasePoly> relations, ScalarMode mode)
    : vars_(std::move(vars)), relations_(std::move(relations)), mode_(mode) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto& v = vars_[i];
    if (v.name.empty() || v.name == "q" || v.name == "x" || v.name == "y")
      throw Error(Errc::InvalidArgument, "reserved or empty variable name '" + v.name + "'");
    if (!names.insert(v.name).second) throw Error(Errc::InvalidArgument, "duplicate variable " + v.name);
    if (v.weight.empty()) {
      v.weight.assign(vars_.size(), 0);
      v.weight[i] = 1;
    }
  }
  for (const auto& r : relations_) {
    if (r.is_zero()) throw Error(Errc::InvalidArgument, "zero relation");
    if (r.nvars() != vars_.size()) throw Error(Errc::InvalidArgument, "relation has wrong arity");
  }
  if (!relations_.empty()) {
    if (has_laurent())
      throw Error(Errc::Unsupported, "relations on rings with invertible variables");
    relation_basis_ = std::make_shared<IdealBasis>(buchberger(relations_));
    if (relation_basis_->is_unit_ideal()) throw Error(Errc::InvalidArgument, "relations generate the unit ideal");
  }
}

bool BaseRing::has_laurent() const {
  return std::any_of(vars_.begin(), vars_.end(), [](const VarSpec& v) { return v.invertible; });
}

std::optional<std::size_t> BaseRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t BaseRing::require_var(std::string_view name) const {
  auto idx = var_index(name);
  if (!idx) throw Error(Errc::UndefinedVariable, std::string(name));
  return *idx;
}

BasePoly BaseRing::var(std::string_view name, int power) const {
  const std::size_t i = require_var(name);
  if (power < 0 && !vars_[i].invertible)
    throw Error(Errc::InvalidArgument, "negative power of non-invertible " + std::string(name));
  return reduce(BasePoly::variable(nvars(), mode_, i, power));
}

namespace {

struct PolyOps {
  const BaseRing& ring;
  BasePoly number(const Integer& n) const { return ring.constant(Scalar(ring.mode(), Rational(n))); }
  BasePoly identifier(std::string_view name) const {
    if (name == "q") {
      if (ring.mode() != ScalarMode::Qq) throw Error(Errc::Parse, "q used in a Q-mode ring");
      return ring.constant(Scalar::q_pow(1));
    }
    auto idx = ring.var_index(name);
    if (!idx) throw Error(Errc::UndefinedVariable, std::string(name));
    return BasePoly::variable(ring.nvars(), ring.mode(), *idx);
  }
  BasePoly divide(const BasePoly& a, const BasePoly& b) const {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (b.is_constant()) return a.scaled(b.constant_term().inverse());
    if (ring.is_unit(b)) return ring.mul(a, ring.unit_inverse(b));
    throw Error(Errc::Parse, "division by a non-unit polynomial");
  }
  BasePoly power(const BasePoly& a, int e) const {
    if (e >= 0) return ring.pow(a, e);
    if (a.is_constant() && !a.is_zero()) return ring.constant(a.constant_term().pow(e));
    if (!ring.is_unit(a)) throw Error(Errc::Parse, "negative power of a non-unit");
    return ring.pow(ring.unit_inverse(a), -e);
  }
};

std::string monomial_string(const BaseRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars()[i].name;
    if (m.exps[i] != 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s;
}

}  // namespace

BasePoly BaseRing::parse(std::string_view text) const {
  PolyOps ops{*this};
  BasePoly p = detail::ExprParser<BasePoly, PolyOps>(text, ops).parse_all();
  if (p.nvars() != nvars()) p = p + zero();
  return reduce(p);
}

std::string BaseRing::format(const BasePoly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string mono = monomial_string(*this, m);
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.to_rational();
      negative = r < 0;
      Rational mag = abs(r);
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

BasePoly BaseRing::reduce(const BasePoly& p) const {
  if (!relation_basis_) return p;
  return ideal_reduce(p, *relation_basis_);
}

BasePoly BaseRing::mul(const BasePoly& p, const BasePoly& r) const { return reduce(p * r); }

BasePoly BaseRing::pow(const BasePoly& p, int k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative power");
  BasePoly result = one();
  BasePoly base = p;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

bool BaseRing::admissible(const Monomial& m) const {
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] < 0 && !vars_[i].invertible) return false;
  return true;
}

bool BaseRing::admissible(const BasePoly& p) const {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return admissible(t.first); });
}

bool BaseRing::is_unit(const BasePoly& p) const {
  if (p.size() != 1) return false;
  const Monomial& m = p.terms().begin()->first;
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] != 0 && !vars_[i].invertible) return false;
  return true;
}

BasePoly BaseRing::unit_inverse(const BasePoly& p) const {
  if (!is_unit(p)) throw Error(Errc::InvalidArgument, "not a unit: " + format(p));
  const auto& [m, c] = *p.terms().begin();
  Monomial inv(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) inv.exps[i] = -m.exps[i];
  return BasePoly::term(inv, c.inverse());
}

bool BaseRing::is_standard(const Monomial& m) const {
  if (!relation_basis_) return true;
  for (const auto& g : relation_basis_->generators())
    if (m.divisible_by(g.lead_monomial())) return false;
  return true;
}

bool operator==(const BaseRing& a, const BaseRing& b) {
  if (a.mode_ != b.mode_ || a.vars_.size() != b.vars_.size() || a.relations_ != b.relations_) return false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i)
    if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].invertible != b.vars_[i].invertible) return false;
  return true;
}

BasePoly poly_mul(const BasePoly& p, const BasePoly& r, const BaseRing& ring) { return ring.mul(p, r); }

// ---------------------------------------------------------------------------
// Endo

Endo::Endo(const BaseRing& ring, std::vector<BasePoly> images, std::vector<BasePoly> inverse_images)
    : ring_(std::make_shared<BaseRing>(ring)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (images_.size() != ring.nvars()) throw Error(Errc::InvalidArgument, "endomorphism needs one image per variable");
  if (!inverse_images_.empty() && inverse_images_.size() != ring.nvars())
    throw Error(Errc::InvalidArgument, "inverse needs one image per variable");
  for (auto* list : {&images_, &inverse_images_})
    for (auto& p : *list) {
      if (p.nvars() != ring.nvars()) p = p + ring.zero();
      p = ring.reduce(p);
    }
}

Endo Endo::identity(const BaseRing& ring) {
  std::vector<BasePoly> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.reduce(BasePoly::variable(ring.nvars(), ring.mode(), i)));
  return Endo(ring, vars, vars);
}

Endo Endo::from_strings(const BaseRing& ring, const std::map<std::string, std::string>& images,
                        const std::map<std::string, std::string>& inverse_images) {
  for (const auto& [name, expr] : images) ring.require_var(name);
  for (const auto& [name, expr] : inverse_images) ring.require_var(name);
  std::vector<BasePoly> img;
  std::vector<BasePoly> inv;
  for (const auto& v : ring.vars()) {
    auto it = images.find(v.name);
    img.push_back(it == images.end() ? ring.var(v.name) : ring.parse(it->second));
    if (!inverse_images.empty()) {
      auto jt = inverse_images.find(v.name);
      inv.push_back(jt == inverse_images.end() ? ring.var(v.name) : ring.parse(jt->second));
    }
  }
  return Endo(ring, std::move(img), std::move(inv));
}

BasePoly Endo::apply(const BasePoly& p) const {
  const BaseRing& ring = *ring_;
  if (p.nvars() != ring.nvars() && !p.is_zero()) throw Error(Errc::UndefinedVariable, "polynomial from another ring");
  std::vector<std::vector<BasePoly>> pos(ring.nvars());
  std::vector<std::vector<BasePoly>> neg(ring.nvars());
  auto power_of = [&](std::size_t j, int e) -> const BasePoly& {
    auto& cache = e >= 0 ? pos[j] : neg[j];
    const std::size_t k = static_cast<std::size_t>(e >= 0 ? e : -e);
    if (cache.empty()) {
      cache.push_back(ring.one());
      cache.push_back(e >= 0 ? images_[j] : ring.unit_inverse(images_[j]));
    }
    while (cache.size() <= k) cache.push_back(ring.mul(cache.back(), cache[1]));
    return cache[k];
  };
  BasePoly result = ring.zero();
  for (const auto& [m, c] : p.terms()) {
    BasePoly t = ring.constant(c);
    for (std::size_t j = 0; j < ring.nvars(); ++j)
      if (m.exps[j] != 0) t = ring.mul(t, power_of(j, m.exps[j]));
    result += t;
  }
  return result;
}

Endo Endo::inverse() const {
  if (!has_inverse()) throw Error(Errc::NotAnAutomorphism, "no inverse supplied");
  Endo r = *this;
  std::swap(r.images_, r.inverse_images_);
  return r;
}

Endo Endo::power(int k) const {
  if (k < 0) return inverse().power(-k);
  Endo result = identity(*ring_);
  for (int i = 0; i < k; ++i) result = result.compose(*this);
  return result;
}

Endo Endo::compose(const Endo& after) const {
  Endo r = *this;
  for (std::size_t j = 0; j < images_.size(); ++j) r.images_[j] = after.apply(images_[j]);
  if (has_inverse() && after.has_inverse()) {
    Endo inv_this = inverse();
    for (std::size_t j = 0; j < images_.size(); ++j) r.inverse_images_[j] = inv_this.apply(after.inverse_images_[j]);
  } else {
    r.inverse_images_.clear();
  }
  return r;
}

bool Endo::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != ring_->reduce(BasePoly::variable(ring_->nvars(), ring_->mode(), j))) return false;
  return true;
}

BasePoly endo_apply(const Endo& sigma, const BasePoly& p) { return sigma.apply(p); }

Endo endo_verify(const Endo& sigma, const BaseRing& ring) {
  if (!(sigma.ring() == ring)) throw Error(Errc::InvalidArgument, "endomorphism defined on another ring");
  if (!sigma.has_inverse()) throw Error(Errc::NotAnAutomorphism, "no inverse images supplied");
  const Endo inv = sigma.inverse();
  for (const auto& r : ring.relations()) {
    if (!ring.reduce(sigma.apply(r)).is_zero() || !ring.reduce(inv.apply(r)).is_zero())
      throw Error(Errc::RelationNotPreserved, ring.format(r));
  }
  for (std::size_t j = 0; j < ring.nvars(); ++j) {
    const auto& name = ring.vars()[j].name;
    for (const Endo* e : {&sigma, &inv}) {
      const BasePoly& img = e->images()[j];
      if (!ring.admissible(img)) throw Error(Errc::NotAnAutomorphism, "image of " + name + " leaves the ring");
      if (ring.vars()[j].invertible && !ring.is_unit(img))
        throw Error(Errc::NotAnAutomorphism, "image of invertible " + name + " is not a unit");
    }
    const BasePoly v = ring.var(name);
    if (sigma.apply(inv.apply(v)) != v || inv.apply(sigma.apply(v)) != v)
      throw Error(Errc::NotAnAutomorphism, "composition with the claimed inverse is not the identity on " + name);
  }
  return sigma;
}

}  // namespace gwa
