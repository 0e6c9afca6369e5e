#include "ncb/linalg.hpp"

#include <algorithm>

namespace ncb {

void row_normalize(QVec& row) {
  Z num_gcd = 0, den_lcm = 1;
  for (const auto& v : row) {
    if (v == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return;
  Q scale(den_lcm, num_gcd);
  scale.canonicalize();
  bool flip = false;
  for (const auto& v : row) {
    if (v != 0) {
      flip = (v < 0);
      break;
    }
  }
  if (flip) scale = -scale;
  for (auto& v : row) v *= scale;
}

std::vector<long> rref(QMat& m) {
  std::vector<long> pivots;
  if (m.empty()) return pivots;
  const long ncols = static_cast<long>(m[0].size());
  long row = 0;
  for (long col = 0; col < ncols && row < static_cast<long>(m.size()); ++col) {
    long piv = -1;
    for (long r = row; r < static_cast<long>(m.size()); ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    Q inv_p = Q(1) / m[row][col];
    for (long c = col; c < ncols; ++c) m[row][c] *= inv_p;
    for (long r = 0; r < static_cast<long>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Q f = m[r][col];
      for (long c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
      row_normalize(m[r]);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size());
  return pivots;
}

long rank(QMat m) { return static_cast<long>(rref(m).size()); }

QMat kernel_basis(const QMat& m, long ncols) {
  QMat rr = m;
  std::vector<long> piv = rref(rr);
  std::vector<bool> is_piv(ncols, false);
  for (long p : piv) is_piv[p] = true;
  QMat out;
  for (long free = 0; free < ncols; ++free) {
    if (is_piv[free]) continue;
    QVec v(ncols, Q(0));
    v[free] = 1;
    for (size_t r = 0; r < rr.size(); ++r) v[piv[r]] = -rr[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

QVec reduce_mod_rows(const QMat& rr, const std::vector<long>& pivots, QVec v) {
  for (size_t r = 0; r < rr.size(); ++r) {
    const Q& f = v[pivots[r]];
    if (f == 0) continue;
    Q factor = f;  // pivot entries are 1
    for (size_t c = pivots[r]; c < v.size(); ++c) v[c] -= factor * rr[r][c];
  }
  return v;
}

bool in_row_space(const QMat& rr, const std::vector<long>& pivots, QVec v) {
  v = reduce_mod_rows(rr, pivots, std::move(v));
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

ColumnSolver::ColumnSolver(const QMat& a) : a_(a) {
  m_ = static_cast<long>(a.size());
  n_ = m_ ? static_cast<long>(a[0].size()) : 0;
  if (n_ == 0) {
    ok_ = true;
    return;
  }
  // Row-reduce [A | I_m] tracking which original rows carry the pivots.
  QMat work(m_);
  for (long r = 0; r < m_; ++r) {
    work[r] = a[r];
    work[r].resize(n_ + m_, Q(0));
    work[r][n_ + r] = 1;
  }
  std::vector<long> pivot_row_of_col;
  long row = 0;
  for (long col = 0; col < n_ && row < m_; ++col) {
    long piv = -1;
    for (long r = row; r < m_; ++r)
      if (work[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return;  // rank deficient
    std::swap(work[row], work[piv]);
    Q inv_p = Q(1) / work[row][col];
    for (long c = col; c < n_ + m_; ++c) work[row][c] *= inv_p;
    for (long r = 0; r < m_; ++r) {
      if (r == row || work[r][col] == 0) continue;
      Q f = work[r][col];
      for (long c = col; c < n_ + m_; ++c) work[r][c] -= f * work[row][c];
    }
    ++row;
  }
  if (row < n_) return;
  // Rows 0..n-1 of `work` now read x_i = sum_j inv[i][j] b_j.
  inv_.assign(n_, QVec(m_, Q(0)));
  for (long i = 0; i < n_; ++i)
    for (long j = 0; j < m_; ++j) inv_[i][j] = work[i][n_ + j];
  ok_ = true;
}

std::optional<QVec> ColumnSolver::solve(const QVec& b) const {
  if (!ok_) throw consistency_error("solver built on rank-deficient matrix");
  QVec x(n_, Q(0));
  for (long i = 0; i < n_; ++i)
    for (long j = 0; j < m_; ++j)
      if (inv_[i][j] != 0 && b[j] != 0) x[i] += inv_[i][j] * b[j];
  // verify on every row, not just the selected block
  for (long r = 0; r < m_; ++r) {
    Q acc = 0;
    for (long c = 0; c < n_; ++c)
      if (a_[r][c] != 0 && x[c] != 0) acc += a_[r][c] * x[c];
    if (acc != b[r]) return std::nullopt;
  }
  return x;
}

bool RowSpace::add(QVec row, long tag) {
  row = reduce_mod_rows(rr_, piv_, std::move(row));
  long col = -1;
  for (long c = 0; c < ncols_; ++c)
    if (row[c] != 0) {
      col = c;
      break;
    }
  if (col < 0) return false;
  Q inv_p = Q(1) / row[col];
  for (auto& v : row) v *= inv_p;
  // keep existing rows reduced against the new one
  for (size_t r = 0; r < rr_.size(); ++r) {
    if (rr_[r][col] == 0) continue;
    Q f = rr_[r][col];
    for (long c = 0; c < ncols_; ++c) rr_[r][c] -= f * row[c];
  }
  // insert keeping pivot order
  size_t pos = 0;
  while (pos < piv_.size() && piv_[pos] < col) ++pos;
  rr_.insert(rr_.begin() + pos, std::move(row));
  piv_.insert(piv_.begin() + pos, col);
  tags_.push_back(tag);
  return true;
}

bool RowSpace::contains(QVec v) const { return in_row_space(rr_, piv_, std::move(v)); }

}  // namespace ncb
