#pragma once

// Truncated Hochschild chain spaces CH_n(A) = A^{(n+1)} spanned by tensors of
// basis monomials, graded by total weight, with the bar differential.

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gwa/linalg.hpp"
#include "gwa/poly.hpp"

namespace gwa {

using Weight = std::vector<int>;

/// Basis monomials of a ring whose weight norm is at most B.
class MonomialTable {
 public:
  MonomialTable(const BaseRing& ring, int bound);

  std::size_t size() const { return monos_.size(); }
  const Monomial& monomial(int i) const { return monos_[static_cast<std::size_t>(i)]; }
  const Weight& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  int norm(int i) const { return norms_[static_cast<std::size_t>(i)]; }
  /// Index of a monomial, or -1.
  int find(const Monomial& m) const;
  int one_index() const { return one_; }
  std::size_t weight_dim() const { return weight_dim_; }
  Weight weight_of(const Monomial& m) const;
  int norm_of(const Monomial& m) const;

 private:
  std::vector<Monomial> monos_;
  std::vector<Weight> weights_;
  std::vector<int> norms_;
  std::map<std::vector<int>, int> index_;
  std::vector<Weight> var_weights_;
  std::vector<int> var_norms_;
  std::size_t weight_dim_ = 0;
  int one_ = -1;
};

struct TensorHash {
  std::size_t operator()(const std::vector<int>& t) const noexcept {
    std::size_t h = t.size();
    for (int v : t) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct ChainOptions {
  int bound = 4;        // total weight norm of a tensor
  int top = 4;          // highest homological degree materialized
  std::size_t cap = 400000;  // tensors per degree
  /// Keeps a block of the given total weight (default: all).
  std::function<bool(const Weight&)> keep;
  /// Coordinates of the weight used to group blocks (default: all).
  std::vector<bool> block_mask;
};

/// The truncated chain spaces C_0..C_top with their differentials.
class ChainComplex {
 public:
  ChainComplex(const BaseRing& ring, ChainOptions opts);

  const BaseRing& ring() const { return ring_; }
  const MonomialTable& table() const { return *table_; }
  const ChainOptions& options() const { return opts_; }
  int top() const { return opts_.top; }

  std::size_t dim(int n) const { return basis_[static_cast<std::size_t>(n)].size(); }
  const std::vector<int>& tensor(int n, std::size_t j) const { return basis_[static_cast<std::size_t>(n)][j]; }
  int index(int n, const std::vector<int>& t) const;
  const Weight& tensor_weight(int n, std::size_t j) const { return tweight_[static_cast<std::size_t>(n)][j]; }
  int tensor_norm(int n, std::size_t j) const { return tnorm_[static_cast<std::size_t>(n)][j]; }
  /// Block key (masked weight) -> basis indices, for degree n.
  const std::map<Weight, std::vector<std::size_t>>& blocks(int n) const { return blocks_[static_cast<std::size_t>(n)]; }
  Weight block_key(const Weight& w) const;

  /// b_n(e_j) as a row over the basis of C_{n-1} (n >= 1).
  const RatRow& differential(int n, std::size_t j) const { return diff_[static_cast<std::size_t>(n)][j]; }
  /// Images of all basis tensors of degree n under the diagonal action of an
  /// endomorphism with rational coefficients on basis monomials.
  std::vector<RatRow> diagonal_action(const Endo& sigma, int n) const;

 private:
  void enumerate();
  void build_differentials();
  const BasePoly& product(int a, int b) const;

  BaseRing ring_;
  ChainOptions opts_;
  std::shared_ptr<MonomialTable> table_;
  std::vector<std::vector<std::vector<int>>> basis_;
  std::vector<std::unordered_map<std::vector<int>, int, TensorHash>> index_;
  std::vector<std::vector<Weight>> tweight_;
  std::vector<std::vector<int>> tnorm_;
  std::vector<std::map<Weight, std::vector<std::size_t>>> blocks_;
  std::vector<std::vector<RatRow>> diff_;
  mutable std::map<std::pair<int, int>, BasePoly> products_;
};

/// Rational value of a scalar; throws Unsupported if it involves q.
Rational rational_coefficient(const Scalar& c);

/// Homology ranks per (degree, block) of a chain complex, degrees 0..nmax
/// (requires top >= nmax + 1). Blocks are ranked concurrently.
std::map<std::pair<int, Weight>, std::size_t> block_homology(const ChainComplex& C, int nmax);

/// Homology of a subcomplex K_n = span(basis[n]) (rows over C_n), degrees 0..nmax.
std::vector<std::size_t> subcomplex_homology(const ChainComplex& C, const std::vector<std::vector<RatRow>>& basis, int nmax);

/// Image of a combination of basis tensors under b_n.
RatRow apply_differential(const ChainComplex& C, int n, const RatRow& v);

}  // namespace gwa
