#pragma once

#include <optional>
#include <vector>

#include "ncb/rational.hpp"

namespace ncb {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row major

/// Divide a row by the gcd of its entries' numerators over the lcm of
/// denominators, keeping the first nonzero entry positive. Controls
/// coefficient growth during elimination.
void row_normalize(QVec& row);

/// In-place reduced row echelon form. Returns pivot column per pivot row.
std::vector<long> rref(QMat& m);

long rank(QMat m);

/// Basis of the right kernel {v : m v = 0}; rows of the result are the
/// kernel vectors.
QMat kernel_basis(const QMat& m, long ncols);

/// Row-space membership: can v be written as a combination of the rows of
/// rr (which must already be in rref with the given pivot columns)?
bool in_row_space(const QMat& rr, const std::vector<long>& pivots, QVec v);

/// Reduce v modulo the row space; returns the remainder.
QVec reduce_mod_rows(const QMat& rr, const std::vector<long>& pivots, QVec v);

/// Exact solver for a fixed m-by-n matrix A of full column rank n (m >= n).
/// Precomputes an inverse of an invertible n-by-n row selection; solve()
/// returns x with A x = b, checking all m rows, or nullopt when b is not in
/// the column space.
class ColumnSolver {
 public:
  ColumnSolver() = default;
  explicit ColumnSolver(const QMat& a);

  long cols() const { return n_; }
  long rows() const { return m_; }
  bool ok() const { return ok_; }  // full column rank found

  std::optional<QVec> solve(const QVec& b) const;

 private:
  QMat a_;
  QMat inv_;                 // n x n inverse of the selected row block
  std::vector<long> sel_;    // selected row indices
  long m_ = 0, n_ = 0;
  bool ok_ = false;
};

/// Incrementally grown row space with exact rank tracking.
class RowSpace {
 public:
  explicit RowSpace(long ncols) : ncols_(ncols) {}

  /// Returns true when the row was independent (rank grew). `tag` is the
  /// caller's identifier for the row, reported by independent_tags().
  bool add(QVec row, long tag);

  long rank() const { return static_cast<long>(rr_.size()); }
  long ncols() const { return ncols_; }
  bool contains(QVec v) const;
  const std::vector<long>& independent_tags() const { return tags_; }
  const QMat& reduced_rows() const { return rr_; }
  const std::vector<long>& pivots() const { return piv_; }

 private:
  long ncols_;
  QMat rr_;                // rref rows
  std::vector<long> piv_;  // pivot col per row
  std::vector<long> tags_;
};

}  // namespace ncb
