#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relalg/error.hpp"
#include "relalg/semiring.hpp"

namespace relalg {

/// A (type, data) tuple naming one row/column of a relation matrix.
struct TypedNode {
  std::string type_tag;
  std::string attribute;

  std::string label() const { return type_tag + ":" + attribute; }

  friend bool operator==(const TypedNode&, const TypedNode&) = default;
  friend auto operator<=>(const TypedNode&, const TypedNode&) = default;
};

/// Relational compatibility of a producer output with a consumer input is
/// decided locally by matching type tags.
bool check_compatibility(const TypedNode& producer, const TypedNode& consumer);

/// Ordered node list with unique (type, attribute) pairs.
class NodeIndex {
 public:
  NodeIndex() = default;
  explicit NodeIndex(std::vector<TypedNode> nodes);

  /// n untyped nodes labelled ("node", "1") .. ("node", "n").
  static NodeIndex numbered(std::size_t n);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const TypedNode& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<TypedNode>& nodes() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  std::optional<std::size_t> find(const TypedNode& node) const;
  std::size_t index_of(const TypedNode& node) const;  // throws kUnknownNode

  /// Accepts a decimal index or a "type:attr" label.
  std::size_t resolve(std::string_view spec) const;

  NodeIndex subset(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const NodeIndex& a, const NodeIndex& b) { return a.nodes_ == b.nodes_; }

 private:
  std::vector<TypedNode> nodes_;
  std::unordered_map<std::string, std::size_t> by_label_;
};

/// Square n×n matrix over a closed semiring, indexed by typed nodes. Entries
/// are stored dense in row-major order; node order is preserved by every
/// operation.
template <ClosedSemiring S>
class RelationMatrix {
 public:
  using semiring = S;
  using value_type = typename S::value_type;

  RelationMatrix() = default;

  /// Zero matrix over `nodes`.
  explicit RelationMatrix(NodeIndex nodes)
      : nodes_(std::move(nodes)), cells_(nodes_.size() * nodes_.size(), to_cell(S::zero())) {}

  static RelationMatrix identity(NodeIndex nodes) {
    RelationMatrix m(std::move(nodes));
    for (std::size_t i = 0; i < m.size(); ++i) m.set(i, i, S::one());
    return m;
  }

  /// Builds from nested rows; throws kStructure on a non-square shape.
  static RelationMatrix from_rows(NodeIndex nodes, const std::vector<std::vector<value_type>>& rows) {
    RelationMatrix m(std::move(nodes));
    if (rows.size() != m.size()) {
      throw Error(ErrorCode::kStructure, "row count " + std::to_string(rows.size()) +
                                             " does not match node count " +
                                             std::to_string(m.size()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.size()) {
        throw Error(ErrorCode::kStructure, "row " + std::to_string(i) + " has " +
                                               std::to_string(rows[i].size()) + " entries, expected " +
                                               std::to_string(m.size()));
      }
      for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t size() const { return nodes_.size(); }
  const NodeIndex& nodes() const { return nodes_; }

  value_type operator()(std::size_t i, std::size_t j) const {
    return from_cell(cells_[i * size() + j]);
  }
  void set(std::size_t i, std::size_t j, value_type v) { cells_[i * size() + j] = to_cell(v); }

  bool is_zero(std::size_t i, std::size_t j) const { return (*this)(i, j) == S::zero(); }

  /// Number of entries different from the semiring zero.
  std::size_t nonzero_count() const {
    std::size_t count = 0;
    for (const auto& c : cells_) count += from_cell(c) == S::zero() ? 0 : 1;
    return count;
  }

  friend bool operator==(const RelationMatrix& a, const RelationMatrix& b) {
    return a.nodes_ == b.nodes_ && a.cells_ == b.cells_;
  }

 private:
  // Booleans are stored as bytes rather than in a bit-packed vector<bool>.
  using cell_type = std::conditional_t<std::is_same_v<value_type, bool>, std::uint8_t, value_type>;
  static cell_type to_cell(value_type v) { return static_cast<cell_type>(v); }
  static value_type from_cell(cell_type c) { return static_cast<value_type>(c); }

  NodeIndex nodes_;
  std::vector<cell_type> cells_;
};

using BoolMatrix = RelationMatrix<BooleanSemiring>;
using TropicalMatrix = RelationMatrix<TropicalSemiring>;
using CountingMatrix = RelationMatrix<CountingSemiring>;

enum class Reflexivity { kNonReflexive, kReflexive };

namespace detail {

template <class S>
void require_same_shape(const RelationMatrix<S>& a, const RelationMatrix<S>& b, const char* op) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kStructure, std::string(op) + ": dimension mismatch " +
                                           std::to_string(a.size()) + " vs " +
                                           std::to_string(b.size()));
  }
  if (!(a.nodes() == b.nodes())) {
    throw Error(ErrorCode::kStructure, std::string(op) + ": node index mismatch");
  }
}

template <class S>
typename S::value_type pivot_star(typename S::value_type v, std::size_t pivot) {
  try {
    return S::star(v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUndefinedClosure) throw;
    throw Error(ErrorCode::kClosureDivergence,
                "closure diverges at pivot " + std::to_string(pivot) + ": " + e.what());
  }
}

template <class S>
struct Rect {
  using V = std::conditional_t<std::is_same_v<typename S::value_type, bool>, std::uint8_t,
                               typename S::value_type>;
  std::size_t rows = 0, cols = 0;
  std::vector<V> cells;

  Rect(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c, S::zero()) {}
  V& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
  const V& at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
};

template <class S>
Rect<S> multiply(const Rect<S>& a, const Rect<S>& b) {
  Rect<S> out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto aik = a.at(i, k);
      if (aik == S::zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) = S::oplus(out.at(i, j), S::otimes(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

template <class S>
Rect<S> add(const Rect<S>& a, const Rect<S>& b) {
  Rect<S> out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.cells.size(); ++i) out.cells[i] = S::oplus(a.cells[i], b.cells[i]);
  return out;
}

template <class S>
Rect<S> slice(const Rect<S>& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  Rect<S> out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t j = c0; j < c1; ++j) out.at(i - r0, j - c0) = m.at(i, j);
  }
  return out;
}

// Reflexive closure of a square block via the 2×2 block-star identity:
//   [A B; C D]* = [A* ⊕ A*B E C A*,  A*B E;  E C A*,  E],  E = (D ⊕ C A* B)*
template <class S>
Rect<S> block_star(const Rect<S>& m, std::size_t offset) {
  const std::size_t n = m.rows;
  if (n == 0) return m;
  if (n == 1) {
    Rect<S> out(1, 1);
    out.at(0, 0) = pivot_star<S>(m.at(0, 0), offset);
    return out;
  }
  const std::size_t h = n / 2;
  const Rect<S> a_star = block_star<S>(slice(m, 0, h, 0, h), offset);
  const Rect<S> b = slice(m, 0, h, h, n);
  const Rect<S> c = slice(m, h, n, 0, h);
  const Rect<S> d = slice(m, h, n, h, n);
  const Rect<S> a_star_b = multiply(a_star, b);
  const Rect<S> c_a_star = multiply(c, a_star);
  const Rect<S> e = block_star<S>(add(d, multiply(c, a_star_b)), offset + h);
  const Rect<S> top_right = multiply(a_star_b, e);
  const Rect<S> bottom_left = multiply(e, c_a_star);
  const Rect<S> top_left = add(a_star, multiply(top_right, c_a_star));

  Rect<S> out(n, n);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) out.at(i, j) = top_left.at(i, j);
    for (std::size_t j = h; j < n; ++j) out.at(i, j) = top_right.at(i, j - h);
  }
  for (std::size_t i = h; i < n; ++i) {
    for (std::size_t j = 0; j < h; ++j) out.at(i, j) = bottom_left.at(i - h, j);
    for (std::size_t j = h; j < n; ++j) out.at(i, j) = e.at(i - h, j - h);
  }
  return out;
}

}  // namespace detail

/// Entrywise ⊕ (union of edges).
template <ClosedSemiring S>
RelationMatrix<S> unite(const RelationMatrix<S>& a, const RelationMatrix<S>& b) {
  detail::require_same_shape(a, b, "union");
  RelationMatrix<S> out(a.nodes());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, S::oplus(a(i, j), b(i, j)));
  }
  return out;
}

/// Semiring matrix product (relational chaining).
template <ClosedSemiring S>
RelationMatrix<S> compose(const RelationMatrix<S>& a, const RelationMatrix<S>& b) {
  detail::require_same_shape(a, b, "compose");
  const std::size_t n = a.size();
  std::vector<typename S::value_type> acc(n);
  RelationMatrix<S> out(a.nodes());
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), S::zero());
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == S::zero()) continue;
      for (std::size_t j = 0; j < n; ++j) acc[j] = S::oplus(acc[j], S::otimes(aik, b(k, j)));
    }
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, acc[j]);
  }
  return out;
}

/// R^k by repeated composition; k = 0 yields the identity matrix.
template <ClosedSemiring S>
RelationMatrix<S> power(const RelationMatrix<S>& r, std::size_t k) {
  if (k == 0) return RelationMatrix<S>::identity(r.nodes());
  RelationMatrix<S> out = r;
  for (std::size_t i = 1; i < k; ++i) out = compose(out, r);
  return out;
}

/// R ⊕ R² ⊕ ... ⊕ Rⁿ. Stops early once a power vanishes (all later powers do too).
template <ClosedSemiring S>
RelationMatrix<S> transitive_closure_powers(const RelationMatrix<S>& r) {
  RelationMatrix<S> acc = r;
  RelationMatrix<S> pw = r;
  for (std::size_t k = 2; k <= r.size(); ++k) {
    pw = compose(pw, r);
    if (pw.nonzero_count() == 0) break;
    acc = unite(acc, pw);
  }
  return acc;
}

/// Generic algebraic-path closure. For each pivot k every entry becomes
///   a[i][j] ⊕ a[i][k] ⊗ star(a[k][k]) ⊗ a[k][j]
/// using the pre-pivot row and column k. With kReflexive the identity is
/// ⊕-merged onto the diagonal afterwards.
template <ClosedSemiring S>
RelationMatrix<S> closure_floyd_warshall(const RelationMatrix<S>& r,
                                         Reflexivity reflexive = Reflexivity::kReflexive) {
  using V = typename S::value_type;
  const std::size_t n = r.size();
  std::vector<V> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = r(i, j);
  }
  std::vector<V> row(n), col(n);
  for (std::size_t k = 0; k < n; ++k) {
    const V s = detail::pivot_star<S>(a[k * n + k], k);
    for (std::size_t t = 0; t < n; ++t) {
      row[t] = a[k * n + t];
      col[t] = a[t * n + k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (col[i] == S::zero()) continue;
      const V left = S::otimes(col[i], s);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j] == S::zero()) continue;
        a[i * n + j] = S::oplus(a[i * n + j], S::otimes(left, row[j]));
      }
    }
  }
  RelationMatrix<S> out(r.nodes());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      V v = a[i * n + j];
      if (reflexive == Reflexivity::kReflexive && i == j) v = S::oplus(S::one(), v);
      out.set(i, j, v);
    }
  }
  return out;
}

/// Recursive 2×2 block closure. The reflexive form is the block-star itself;
/// the non-reflexive form is R ⊗ R*.
template <ClosedSemiring S>
RelationMatrix<S> closure_lehmann(const RelationMatrix<S>& r,
                                  Reflexivity reflexive = Reflexivity::kReflexive) {
  const std::size_t n = r.size();
  detail::Rect<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = r(i, j);
  }
  const detail::Rect<S> star = detail::block_star<S>(m, 0);
  RelationMatrix<S> out(r.nodes());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, star.at(i, j));
  }
  if (reflexive == Reflexivity::kReflexive) return out;
  return compose(r, out);
}

/// Boolean view of the nonzero pattern of any matrix.
template <ClosedSemiring S>
BoolMatrix support(const RelationMatrix<S>& r) {
  BoolMatrix out(r.nodes());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) out.set(i, j, !r.is_zero(i, j));
  }
  return out;
}

/// Edge list of a boolean matrix in row-major order.
std::vector<std::pair<std::size_t, std::size_t>> edges(const BoolMatrix& r);

/// Finds one directed cycle in the nonzero pattern, empty if the graph is acyclic.
std::vector<std::size_t> find_cycle(const BoolMatrix& r);

/// Kahn order with smallest-index tie-break; throws kNotADag naming a cycle.
std::vector<std::size_t> topological_order(const BoolMatrix& r);

std::string describe_cycle(const NodeIndex& nodes, const std::vector<std::size_t>& cycle);

}  // namespace relalg
