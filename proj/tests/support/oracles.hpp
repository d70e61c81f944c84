#pragma once

// Reference implementations that share no code with the library algorithms
// they check. All are deliberately naive.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relalg/poset.hpp"
#include "relalg/relation.hpp"

namespace relalg::testing {

using Grid = std::vector<std::vector<bool>>;

/// reach[u][v]: a path of length ≥ 1 (or ≥ 0 when reflexive) from u to v.
inline Grid bfs_reachability(const BoolMatrix& r, bool reflexive) {
  const std::size_t n = r.size();
  Grid reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> frontier;
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (r(s, v) && !seen[v]) {
        seen[v] = true;
        frontier.push(v);
      }
    }
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (r(u, v) && !seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    if (reflexive) seen[s] = true;
    reach[s] = seen;
  }
  return reach;
}

inline Grid to_grid(const BoolMatrix& m) {
  Grid g(m.size(), std::vector<bool>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) g[i][j] = m(i, j);
  }
  return g;
}

/// Shortest path lengths (≥ 0 edges) with non-negative weights; -1 = none.
inline std::vector<std::vector<std::int64_t>> dijkstra_all_pairs(const TropicalMatrix& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
      const auto [d, u] = pq.top();
      pq.pop();
      if (dist[s][u] != -1) continue;
      dist[s][u] = d;
      for (std::size_t v = 0; v < n; ++v) {
        if (!w(u, v).is_infinite() && dist[s][v] == -1) pq.push({d + w(u, v).value(), v});
      }
    }
  }
  return dist;
}

/// Largest pairwise-incomparable subset by enumerating all 2^n subsets.
inline std::size_t brute_force_width(const Grid& leq) {
  const std::size_t n = leq.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        if ((mask >> b & 1U) && (leq[a][b] || leq[b][a])) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Jordan basis of a nilpotent rational matrix, built chain by chain from
// kernel layers and checked by A·P = P·J with P invertible.

using Q = boost::multiprecision::cpp_rational;
using QMatrix = std::vector<std::vector<Q>>;
using QVector = std::vector<Q>;

inline QMatrix q_multiply(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  QMatrix out(n, QVector(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline QVector q_apply(const QMatrix& a, const QVector& v) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

/// Rank of a list of row vectors by plain Gaussian elimination.
inline std::size_t q_rank(std::vector<QVector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Q f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Basis of {x : a·x = 0} from the reduced row echelon form.
inline std::vector<QVector> q_nullspace(QMatrix a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Q inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Q f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    QVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Jordan block sizes (descending) of a nilpotent 0/1 matrix. Returns an
/// empty vector if the constructed basis fails its own verification.
inline std::vector<std::size_t> jordan_sizes_by_basis(const BoolMatrix& r) {
  const std::size_t n = r.size();
  if (n == 0) return {};
  QMatrix a(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = r(i, j) ? 1 : 0;
  }
  // kernels[s] = basis of ker(A^s); stop at the nilpotency index.
  std::vector<std::vector<QVector>> kernels{{}};
  QMatrix power = a;
  while (kernels.back().size() < n) {
    kernels.push_back(q_nullspace(power));
    power = q_multiply(power, a);
    if (kernels.size() > n + 1) return {};  // not nilpotent
  }
  const std::size_t index = kernels.size() - 1;

  std::vector<std::vector<QVector>> level(index + 1);  // chain vectors per height
  std::vector<std::vector<QVector>> chains;            // bottom (eigenvector) first
  for (std::size_t s = index; s >= 1; --s) {
    for (const auto& candidate : kernels[s]) {
      std::vector<QVector> span = kernels[s - 1];
      span.insert(span.end(), level[s].begin(), level[s].end());
      const std::size_t before = q_rank(span);
      span.push_back(candidate);
      if (q_rank(span) == before) continue;
      std::vector<QVector> chain;
      QVector v = candidate;
      for (std::size_t h = s; h >= 1; --h) {
        level[h].push_back(v);
        chain.push_back(v);
        v = q_apply(a, v);
      }
      std::reverse(chain.begin(), chain.end());
      chains.push_back(std::move(chain));
    }
  }

  // Columns of P: each chain bottom-up, so A p_{k+1} = p_k and A p_first = 0.
  std::vector<QVector> columns;
  std::vector<std::size_t> sizes;
  for (const auto& chain : chains) {
    sizes.push_back(chain.size());
    columns.insert(columns.end(), chain.begin(), chain.end());
  }
  if (columns.size() != n || q_rank(columns) != n) return {};
  std::size_t col = 0;
  for (const auto& chain : chains) {
    for (std::size_t k = 0; k < chain.size(); ++k, ++col) {
      const QVector image = q_apply(a, columns[col]);
      const QVector expected = k == 0 ? QVector(n) : columns[col - 1];
      if (image != expected) return {};
    }
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace relalg::testing
