#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relalg/poset.hpp"
#include "relalg/relation.hpp"

namespace relalg {

using BigInt = boost::multiprecision::cpp_int;

/// J_size(eigenvalue); eigenvalue is exactly 0 for a DAG adjacency matrix.
struct JordanBlockSpec {
  Rational eigenvalue{0};
  std::size_t size = 0;
};

struct PartitionBlock {
  JordanBlockSpec spec;
  std::vector<std::size_t> chain;  // consecutive nodes joined by DAG edges

  std::size_t source() const { return chain.front(); }
  std::size_t sink() const { return chain.back(); }
};

/// How the chain cover was found.
enum class CoverMethod {
  kGreedyLongestPath,  // plain longest-path extraction matched the block sizes
  kSizeGuided,         // longest paths truncated to the prescribed sizes
  kExhaustive,         // backtracking search (small graphs only)
};

std::string_view cover_method_name(CoverMethod method);

/// Disjoint node chains covering the DAG, one per Jordan block.
class JordanPartition {
 public:
  JordanPartition(NodeIndex nodes, std::vector<PartitionBlock> blocks, CoverMethod method);

  const NodeIndex& nodes() const { return nodes_; }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const PartitionBlock& block(std::size_t id) const { return blocks_.at(id); }
  CoverMethod method() const { return method_; }

  /// Containing block of `node`; throws kUnknownNode.
  std::size_t block_of(std::size_t node) const;
  /// Position of `node` inside its chain.
  std::size_t position_of(std::size_t node) const;

 private:
  NodeIndex nodes_;
  std::vector<PartitionBlock> blocks_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> position_;
  CoverMethod method_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> m);

/// rank(A⁰), rank(A¹), ... down to the first zero rank, in exact integer
/// arithmetic. Throws kNotNilpotent on cyclic input.
std::vector<std::size_t> rank_sequence(const BoolMatrix& r);

/// Jordan block sizes of a nilpotent DAG adjacency matrix, descending. The
/// number of blocks of size ≥ k equals rank(A^{k−1}) − rank(A^k).
std::vector<std::size_t> jordan_block_sizes(const BoolMatrix& r);

/// Path cover of the DAG whose chain-length multiset equals `sizes`.
///
/// Repeatedly extracts the longest directed path among the remaining nodes
/// (ties: smallest source index, then lexicographically smallest sequence).
/// If that cover does not realise `sizes`, the same extraction is retried
/// with every path truncated to the next prescribed size, and for n ≤ 20 an
/// exhaustive search follows. If nothing matches, kInvariantViolation.
JordanPartition chain_decomposition(const BoolMatrix& r, const std::vector<std::size_t>& sizes);

/// jordan_block_sizes followed by chain_decomposition.
JordanPartition partition_dag(const BoolMatrix& r);

struct EntryExit {
  std::size_t block = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
};

std::vector<EntryExit> entry_exit_points(const JordanPartition& p);

inline std::size_t block_of(const JordanPartition& p, std::size_t node) { return p.block_of(node); }

inline constexpr std::size_t kExhaustiveCoverLimit = 20;

}  // namespace relalg
