#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "agelab/scalar.hpp"

namespace agelab {

using RatVec = std::vector<Scalar>;

/// Dense exact-rational matrix, rows stored as vectors.
struct RatMat {
  std::size_t cols = 0;
  std::vector<RatVec> rows;

  explicit RatMat(std::size_t ncols = 0) : cols(ncols) {}
  void add_row(RatVec r) { rows.push_back(std::move(r)); }
};

/// In-place reduced row echelon form. Pivot rule: within the current column,
/// pick the candidate with the smallest absolute value (ties: lowest row
/// index), so reductions are deterministic and coefficient growth stays tame.
/// Returns the pivot column of each retained row, in order.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

/// Canonical kernel basis from the RREF: one vector per free column, with a 1
/// in that column, ordered by free column index.
std::vector<RatVec> kernel_basis(RatMat m);

/// True if v lies in the row span of `rows` (all of width `cols`).
bool in_span(const std::vector<RatVec>& rows, const RatVec& v, std::size_t cols);

/// Incremental row-space builder over sparse rows; used where constraint
/// systems are huge but each row touches a handful of columns.
class SparseEliminator {
 public:
  /// Reduces the row against current pivots; if nonzero remains, stores it as
  /// a new pivot row and returns true (rank grew).
  bool add_row(std::map<std::size_t, Scalar> row);
  std::size_t rank() const { return pivots_.size(); }
  const std::map<std::size_t, std::map<std::size_t, Scalar>>& pivot_rows() const {
    return pivots_;
  }
  /// Reduces an arbitrary (dense) vector by the stored pivot rows, in place.
  void reduce(RatVec& v) const;
  /// Same over a sparse vector; empties it exactly when it lies in the span.
  void reduce_sparse(std::map<std::size_t, Scalar>& v) const;

 private:
  // pivot column -> row (normalized so the pivot entry is 1)
  std::map<std::size_t, std::map<std::size_t, Scalar>> pivots_;
};

}  // namespace agelab
