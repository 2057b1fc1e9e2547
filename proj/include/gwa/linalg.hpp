#pragma once

// Exact sparse linear algebra over Z and Q: ranks by fraction-free
// elimination, kernels, and block-parallel rank evaluation.

#include <cstddef>
#include <utility>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// Sparse row, sorted by column, no zero entries.
using IntRow = std::vector<std::pair<int, Integer>>;
using RatRow = std::vector<std::pair<int, Rational>>;

/// Clears denominators and divides by the content. The zero row stays empty.
IntRow to_primitive(const RatRow& row);
RatRow to_rational(const IntRow& row);

/// Row echelon form over Z built one row at a time (Bareiss-style
/// cross-multiplication followed by content division).
class IntEchelon {
 public:
  /// Returns true when the row was independent of those already added.
  bool add(IntRow row);
  std::size_t rank() const { return rows_.size(); }
  /// True iff the row lies in the span.
  bool contains(IntRow row) const;

 private:
  IntRow reduce(IntRow row) const;
  std::vector<IntRow> rows_;
  std::vector<int> pivot_of_col_;  // column -> row index or -1
};

/// Rank of a set of rows; processes sparser rows first.
std::size_t int_rank(std::vector<IntRow> rows);

/// Echelon form over Q with a record of input combinations, for kernels.
class RatEchelon {
 public:
  /// Adds `row` labelled by `tag`. Returns the kernel relation (a combination
  /// of tags summing to zero) if the row was dependent, else an empty row.
  RatRow add(RatRow row, int tag);
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Entry {
    RatRow vec;
    RatRow combo;
  };
  std::vector<Entry> rows_;
  std::vector<int> pivot_of_col_;
};

/// Basis of {alpha : sum_j alpha_j images[j] = 0}.
std::vector<RatRow> kernel_basis(const std::vector<RatRow>& images);

/// Ranks of independent blocks. The serial version is kept as the reference
/// implementation; the parallel one distributes blocks with OpenMP and writes
/// each result to its own slot, so output does not depend on scheduling.
std::vector<std::size_t> block_ranks_serial(const std::vector<std::vector<IntRow>>& blocks);
std::vector<std::size_t> block_ranks_parallel(const std::vector<std::vector<IntRow>>& blocks);
std::vector<std::size_t> block_ranks(const std::vector<std::vector<IntRow>>& blocks);

/// Switch used by tests to force the serial path.
void set_parallel_enabled(bool on);
bool parallel_enabled();

/// Dense matrices over Scalar (small module matrices).
using Matrix = std::vector<std::vector<Scalar>>;

Matrix mat_identity(std::size_t n, ScalarMode mode);
Matrix mat_zero(std::size_t rows, std::size_t cols, ScalarMode mode);
Matrix mat_mul(const Matrix& a, const Matrix& b, ScalarMode mode);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& c);
bool mat_equal(const Matrix& a, const Matrix& b);
std::size_t mat_rank(const Matrix& a);
/// Basis (as rows) of the left kernel {v : v A = 0}, in reduced echelon form.
Matrix left_kernel(const Matrix& a, ScalarMode mode);
/// Reduced row echelon basis of the row space.
Matrix row_basis(const Matrix& a);

}  // namespace gwa
