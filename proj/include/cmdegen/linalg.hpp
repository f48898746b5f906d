#pragma once

#include <map>
#include <utility>
#include <vector>

namespace cmdegen {

// Sparse row: column index -> coefficient.
template <class E>
using SparseRow = std::map<int, E>;

// Exact rank of the span of `rows` by Gaussian elimination. Rows are reduced
// one at a time against a growing echelon basis keyed by pivot column.
template <class E>
std::size_t rank(std::vector<SparseRow<E>> rows) {
  std::map<int, SparseRow<E>> basis;  // pivot column -> row with leading 1
  for (auto& row : rows) {
    while (!row.empty()) {
      auto [col, lead] = *row.begin();
      auto it = basis.find(col);
      if (it == basis.end()) {
        E inv = lead.inverse();
        for (auto& [c, v] : row) v *= inv;
        basis.emplace(col, std::move(row));
        break;
      }
      E factor = lead;
      for (const auto& [c, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(c, -(factor * v));
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
    }
  }
  return basis.size();
}

// Basis of the null space {v : A v = 0} of a dense matrix with `cols` columns.
template <class E>
std::vector<std::vector<E>> nullspace(std::vector<std::vector<E>> a, std::size_t cols, const E& zero, const E& one) {
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    E inv = a[r][c].inverse();
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      E f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<E>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<E> v(cols, zero);
    v[free] = one;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cmdegen
