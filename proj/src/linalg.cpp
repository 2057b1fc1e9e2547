#include "gwa/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace gwa {

namespace {

std::atomic<bool> g_parallel{true};

void set_pivot(std::vector<int>& pivots, int col, int row) {
  if (static_cast<std::size_t>(col) >= pivots.size()) pivots.resize(static_cast<std::size_t>(col) + 1, -1);
  pivots[static_cast<std::size_t>(col)] = row;
}

int pivot_at(const std::vector<int>& pivots, int col) {
  return static_cast<std::size_t>(col) < pivots.size() ? pivots[static_cast<std::size_t>(col)] : -1;
}

// a*x - b*y on sparse rows.
template <class T>
std::vector<std::pair<int, T>> combine(const T& a, const std::vector<std::pair<int, T>>& x, const T& b,
                                       const std::vector<std::pair<int, T>>& y) {
  std::vector<std::pair<int, T>> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      T v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

IntRow to_primitive(const RatRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer x = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  make_primitive(out);
  return out;
}

RatRow to_rational(const IntRow& row) {
  RatRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, Rational(v));
  return out;
}

IntRow IntEchelon::reduce(IntRow row) const {
  while (!row.empty()) {
    const int r = pivot_at(pivot_of_col_, row.front().first);
    if (r < 0) break;
    const IntRow& p = rows_[static_cast<std::size_t>(r)];
    // p.front() and row.front() share a column; cancel after dividing by the gcd.
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    const Integer a = p.front().second / g;
    const Integer b = row.front().second / g;
    row = combine<Integer>(a, row, b, p);
    make_primitive(row);
  }
  return row;
}

bool IntEchelon::add(IntRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  set_pivot(pivot_of_col_, row.front().first, static_cast<int>(rows_.size()));
  rows_.push_back(std::move(row));
  return true;
}

bool IntEchelon::contains(IntRow row) const { return reduce(std::move(row)).empty(); }

std::size_t int_rank(std::vector<IntRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
  IntEchelon e;
  for (auto& r : rows) {
    if (r.empty()) continue;
    make_primitive(r);
    e.add(std::move(r));
  }
  return e.rank();
}

RatRow RatEchelon::add(RatRow row, int tag) {
  RatRow combo{{tag, Rational(1)}};
  while (!row.empty()) {
    const int r = pivot_at(pivot_of_col_, row.front().first);
    if (r < 0) break;
    const Entry& p = rows_[static_cast<std::size_t>(r)];
    const Rational c = row.front().second;  // p is normalized to leading 1
    row = combine<Rational>(Rational(1), row, c, p.vec);
    combo = combine<Rational>(Rational(1), combo, c, p.combo);
  }
  if (row.empty()) return combo;
  const Rational inv = 1 / row.front().second;
  for (auto& [k, v] : row) v *= inv;
  for (auto& [k, v] : combo) v *= inv;
  set_pivot(pivot_of_col_, row.front().first, static_cast<int>(rows_.size()));
  rows_.push_back({std::move(row), std::move(combo)});
  return {};
}

std::vector<RatRow> kernel_basis(const std::vector<RatRow>& images) {
  RatEchelon e;
  std::vector<RatRow> out;
  for (std::size_t j = 0; j < images.size(); ++j) {
    RatRow rel = e.add(images[j], static_cast<int>(j));
    if (!rel.empty()) out.push_back(std::move(rel));
  }
  return out;
}

std::vector<std::size_t> block_ranks_serial(const std::vector<std::vector<IntRow>>& blocks) {
  std::vector<std::size_t> out(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) out[i] = int_rank(blocks[i]);
  return out;
}

std::vector<std::size_t> block_ranks_parallel(const std::vector<std::vector<IntRow>>& blocks) {
  std::vector<std::size_t> out(blocks.size());
  const long n = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = int_rank(blocks[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::size_t> block_ranks(const std::vector<std::vector<IntRow>>& blocks) {
  return g_parallel.load() ? block_ranks_parallel(blocks) : block_ranks_serial(blocks);
}

void set_parallel_enabled(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

// ---------------------------------------------------------------------------
// Dense Scalar matrices

Matrix mat_identity(std::size_t n, ScalarMode mode) {
  Matrix m = mat_zero(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(mode, 1);
  return m;
}

Matrix mat_zero(std::size_t rows, std::size_t cols, ScalarMode mode) {
  return Matrix(rows, std::vector<Scalar>(cols, Scalar(mode, 0)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b, ScalarMode mode) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  Matrix out = mat_zero(n, m, mode);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

Matrix mat_scale(const Matrix& a, const Scalar& c) {
  Matrix out = a;
  for (auto& row : out)
    for (auto& v : row) v *= c;
  return out;
}

bool mat_equal(const Matrix& a, const Matrix& b) { return a == b; }

Matrix row_basis(const Matrix& a) {
  Matrix m = a;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::size_t mat_rank(const Matrix& a) { return row_basis(a).size(); }

Matrix left_kernel(const Matrix& a, ScalarMode mode) {
  // v A = 0  <=>  A^T v^T = 0: null space of the transpose.
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  Matrix t = mat_zero(m, n, mode);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  Matrix rref = row_basis(t);
  std::vector<int> pivot_col;
  for (const auto& row : rref) {
    std::size_t c = 0;
    while (c < n && row[c].is_zero()) ++c;
    pivot_col.push_back(static_cast<int>(c));
  }
  Matrix out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Scalar> v(n, Scalar(mode, 0));
    v[free] = Scalar(mode, 1);
    for (std::size_t r = 0; r < rref.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = -rref[r][free];
    out.push_back(std::move(v));
  }
  return row_basis(out);
}

}  // namespace gwa
