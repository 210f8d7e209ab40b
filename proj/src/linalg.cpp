#include "agelab/linalg.hpp"

#include <utility>

namespace agelab {

namespace {
Scalar rat_abs(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }
}  // namespace

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows.size(); ++col) {
    // pick pivot: smallest nonzero |entry| in this column at or below `row`
    std::size_t best = m.rows.size();
    for (std::size_t r = row; r < m.rows.size(); ++r) {
      if (m.rows[r][col] == 0) continue;
      if (best == m.rows.size() || rat_abs(m.rows[r][col]) < rat_abs(m.rows[best][col]))
        best = r;
    }
    if (best == m.rows.size()) continue;
    std::swap(m.rows[row], m.rows[best]);
    const Scalar inv = Scalar(1) / m.rows[row][col];
    for (std::size_t c = col; c < m.cols; ++c) m.rows[row][c] *= inv;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (r == row || m.rows[r][col] == 0) continue;
      const Scalar f = m.rows[r][col];
      for (std::size_t c = col; c < m.cols; ++c) m.rows[r][c] -= f * m.rows[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  m.rows.resize(row);  // drop zero rows
  return pivot_cols;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> kernel_basis(RatMat m) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<RatVec>& rows, const RatVec& v, std::size_t cols) {
  RatMat m(cols);
  m.rows = rows;
  const std::size_t base = rref(m).size();
  m.add_row(v);
  return rank(std::move(m)) == base;
}

bool SparseEliminator::add_row(std::map<std::size_t, Scalar> row) {
  while (!row.empty()) {
    const std::size_t lead = row.begin()->first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Scalar inv = Scalar(1) / row.begin()->second;
      for (auto& [c, val] : row) val *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Scalar f = row.begin()->second;
    for (const auto& [c, val] : it->second) {
      auto [jt, fresh] = row.try_emplace(c, Scalar(0));
      jt->second -= f * val;
      if (jt->second == 0) row.erase(jt);
    }
  }
  return false;
}

void SparseEliminator::reduce(RatVec& v) const {
  // Each stored row's entries all sit at or right of its leading column, so a
  // single ascending pass clears every pivot column for good.
  for (const auto& [lead, prow] : pivots_) {
    if (lead >= v.size() || v[lead] == 0) continue;
    const Scalar f = v[lead];
    for (const auto& [c, val] : prow)
      if (c < v.size()) v[c] -= f * val;
  }
}

void SparseEliminator::reduce_sparse(std::map<std::size_t, Scalar>& v) const {
  for (const auto& [lead, prow] : pivots_) {
    auto it = v.find(lead);
    if (it == v.end()) continue;
    const Scalar f = it->second;
    for (const auto& [c, val] : prow) {
      auto [jt, fresh] = v.try_emplace(c, Scalar(0));
      jt->second -= f * val;
      if (jt->second == 0) v.erase(jt);
    }
  }
}

}  // namespace agelab
