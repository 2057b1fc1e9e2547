#include "gwa/modules.hpp"

#include <algorithm>

#include "gwa/errors.hpp"

namespace gwa {

namespace {

std::vector<std::size_t> pivots(const Matrix& rref) {
  std::vector<std::size_t> out;
  for (const auto& row : rref) {
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    out.push_back(c);
  }
  return out;
}

Matrix mat_inverse(const Matrix& a, ScalarMode mode) {
  const std::size_t n = a.size();
  Matrix aug = mat_zero(n, 2 * n, mode);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Scalar(mode, 1);
  }
  const Matrix r = row_basis(aug);
  const auto piv = pivots(r);
  for (std::size_t i = 0; i < n; ++i)
    if (piv[i] != i) throw Error(Errc::InvalidArgument, "matrix of a Laurent variable is singular");
  Matrix inv = mat_zero(n, n, mode);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
  return inv;
}

Matrix mat_power(const Matrix& m, int k, ScalarMode mode) {
  Matrix out = mat_identity(m.size(), mode);
  for (int i = 0; i < k; ++i) out = mat_mul(out, m, mode);
  return out;
}

bool square(const Matrix& m, std::size_t n) {
  return m.size() == n && std::all_of(m.begin(), m.end(), [n](const auto& row) { return row.size() == n; });
}

// Rows of `sub` lie in the span of `basis`.
bool row_span_contains(const Matrix& basis, const Matrix& sub) {
  if (sub.empty()) return true;
  Matrix both = basis;
  both.insert(both.end(), sub.begin(), sub.end());
  return mat_rank(both) == basis.size();
}

}  // namespace

Matrix eval_at(const BasePoly& p, const FiniteModule& M, const BaseRing& ring) {
  const std::size_t nv = ring.nvars();
  std::vector<Matrix> pos(nv), neg(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    auto it = M.action.find(ring.vars()[i].name);
    if (it == M.action.end()) throw Error(Errc::InvalidArgument, "module has no matrix for " + ring.vars()[i].name);
    pos[i] = it->second;
  }
  Matrix out = mat_zero(M.dim, M.dim, M.mode);
  for (const auto& [mono, c] : p.terms()) {
    Matrix term = mat_identity(M.dim, M.mode);
    for (std::size_t i = 0; i < nv; ++i) {
      const int e = mono.exps[i];
      if (e > 0) {
        term = mat_mul(term, mat_power(pos[i], e, M.mode), M.mode);
      } else if (e < 0) {
        if (neg[i].empty() && M.dim > 0) neg[i] = mat_inverse(pos[i], M.mode);
        term = mat_mul(term, mat_power(neg[i], -e, M.mode), M.mode);
      }
    }
    out = mat_add(out, mat_scale(term, c));
  }
  return out;
}

std::vector<ModuleCheck> verify_module(const FiniteModule& M, const GwaDatum& D) {
  const BaseRing& ring = D.ring();
  std::vector<ModuleCheck> out;
  std::vector<std::string> gens;
  for (const auto& v : ring.vars()) gens.push_back(v.name);
  gens.push_back("x");
  gens.push_back("y");

  bool shapes = true;
  for (const auto& g : gens) {
    auto it = M.action.find(g);
    shapes = shapes && it != M.action.end() && square(it->second, M.dim);
  }
  out.push_back({"shapes", shapes});
  if (!shapes) return out;

  const auto& mx = M.action.at("x");
  const auto& my = M.action.at("y");
  auto mul = [&](const Matrix& a, const Matrix& b) { return mat_mul(a, b, M.mode); };

  bool commute = true;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    for (std::size_t j = i + 1; j < ring.nvars(); ++j) {
      const auto& a = M.action.at(ring.vars()[i].name);
      const auto& b = M.action.at(ring.vars()[j].name);
      commute = commute && mat_equal(mul(a, b), mul(b, a));
    }
  out.push_back({"ring variables commute", commute});

  bool rels = true;
  for (const auto& r : ring.relations()) rels = rels && mat_equal(eval_at(r, M, ring), mat_zero(M.dim, M.dim, M.mode));
  out.push_back({"ring relations", rels});

  out.push_back({"yx-a", mat_equal(mul(my, mx), eval_at(D.a(), M, ring))});
  out.push_back({"xy-sigma(a)", mat_equal(mul(mx, my), eval_at(D.sigma().apply(D.a()), M, ring))});
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    const std::string& u = ring.vars()[i].name;
    const Matrix mu = M.action.at(u);
    const Matrix msu = eval_at(D.sigma().images()[i], M, ring);
    out.push_back({"x" + u + "-sigma(" + u + ")x", mat_equal(mul(mx, mu), mul(msu, mx))});
    out.push_back({"y sigma(" + u + ")-" + u + "y", mat_equal(mul(my, msu), mul(mu, my))});
  }
  return out;
}

bool module_ok(const std::vector<ModuleCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ModuleCheck& c) { return c.pass; });
}

HeightFiltration height_filtration(const FiniteModule& M, const GwaDatum& D, int cap) {
  if (cap <= 0) cap = static_cast<int>(M.dim) + 8;
  HeightFiltration h;
  for (int l = 0; l <= cap; ++l) {
    const Matrix P = eval_at(orbit_product(D, l), M, D.ring());
    h.subspaces.push_back(M.dim == 0 ? Matrix{} : left_kernel(P, M.mode));
  }
  const auto& top = h.subspaces.back();
  h.height = cap;
  while (h.height > 0 && h.subspaces[static_cast<std::size_t>(h.height - 1)].size() == top.size()) --h.height;
  // Growth within the last dim + 1 steps means the cap may be too small.
  h.capped = M.dim > 0 && h.height > cap - static_cast<int>(M.dim) - 1 && h.height > 0;

  const Matrix& W = h.subspaces[static_cast<std::size_t>(h.height)];
  for (const auto& [name, mat] : M.action) h.submodule = h.submodule && row_span_contains(W, mat_mul(W, mat, M.mode));
  return h;
}

FiniteModule quotient_module(const FiniteModule& M, const Matrix& W) {
  const Matrix basis = row_basis(W);
  const auto piv = pivots(basis);
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < M.dim; ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back(c);

  // Coordinates of v modulo W: clear the pivot columns, read the free ones.
  auto coords = [&](std::vector<Scalar> v) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Scalar f = v[piv[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < M.dim; ++j) v[j] -= f * basis[r][j];
    }
    std::vector<Scalar> out;
    for (std::size_t c : free) out.push_back(v[c]);
    return out;
  };

  FiniteModule Q;
  Q.dim = free.size();
  Q.mode = M.mode;
  for (const auto& [name, mat] : M.action) {
    Matrix q;
    for (std::size_t c : free) q.push_back(coords(mat[c]));
    Q.action[name] = q;
  }
  return Q;
}

FiniteModule direct_sum(const FiniteModule& A, const FiniteModule& B) {
  FiniteModule S;
  S.dim = A.dim + B.dim;
  S.mode = A.mode;
  for (const auto& [name, ma] : A.action) {
    auto it = B.action.find(name);
    if (it == B.action.end()) throw Error(Errc::InvalidArgument, "direct sum: missing generator " + name);
    Matrix m = mat_zero(S.dim, S.dim, S.mode);
    for (std::size_t i = 0; i < A.dim; ++i)
      for (std::size_t j = 0; j < A.dim; ++j) m[i][j] = ma[i][j];
    for (std::size_t i = 0; i < B.dim; ++i)
      for (std::size_t j = 0; j < B.dim; ++j) m[A.dim + i][A.dim + j] = it->second[i][j];
    S.action[name] = m;
  }
  return S;
}

LocalizationReport localized_module_check(const FiniteModule& M, const GwaDatum& D, const OreSetSpec& S) {
  LocalizationReport rep;
  const HeightFiltration h = height_filtration(M, D);
  rep.height = h.height;
  const Matrix& W = h.subspaces[static_cast<std::size_t>(h.height)];
  rep.torsion_dim = W.size();
  const FiniteModule Q = quotient_module(M, W);
  rep.quotient_dim = Q.dim;
  rep.quotient_relations = module_ok(verify_module(Q, D));
  for (const auto& s : S.materialized()) {
    const Matrix ms = eval_at(s, Q, D.ring());
    const std::size_t r = mat_rank(ms);
    if (r == Q.dim) continue;
    if (rep.singular.empty()) rep.witness_dim = Q.dim - r;
    rep.singular.push_back(D.ring().format(s));
  }
  if (!rep.singular.empty() || h.capped || !h.submodule) rep.status = LocalizationStatus::Inconclusive;
  return rep;
}

FiniteModule shift_module(const GwaDatum& D, const std::vector<Scalar>& taus) {
  const BaseRing& ring = D.ring();
  if (ring.nvars() != 1) throw Error(Errc::InvalidArgument, "shift_module needs a base ring in one variable");
  const ScalarMode mode = ring.mode();
  const std::size_t n = taus.size();
  FiniteModule M;
  M.dim = n;
  M.mode = mode;
  Matrix t = mat_zero(n, n, mode), x = mat_zero(n, n, mode), y = mat_zero(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) t[i][i] = taus[i];
  M.action[ring.vars()[0].name] = t;
  const Matrix a = eval_at(D.a(), M, ring);
  for (std::size_t i = 0; i + 1 < n; ++i) x[i][i + 1] = Scalar(mode, 1);
  for (std::size_t i = 1; i < n; ++i) y[i][i - 1] = a[i][i];
  M.action["x"] = x;
  M.action["y"] = y;
  return M;
}

}  // namespace gwa
