#include "relalg/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace relalg {

std::string_view cover_method_name(CoverMethod method) {
  switch (method) {
    case CoverMethod::kGreedyLongestPath: return "greedy-longest-path";
    case CoverMethod::kSizeGuided: return "size-guided";
    case CoverMethod::kExhaustive: return "exhaustive";
  }
  return "unknown";
}

JordanPartition::JordanPartition(NodeIndex nodes, std::vector<PartitionBlock> blocks,
                                 CoverMethod method)
    : nodes_(std::move(nodes)),
      blocks_(std::move(blocks)),
      owner_(nodes_.size(), static_cast<std::size_t>(-1)),
      position_(nodes_.size(), 0),
      method_(method) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].chain.empty()) {
      throw Error(ErrorCode::kInvariantViolation, "empty chain in block " + std::to_string(b));
    }
    for (std::size_t pos = 0; pos < blocks_[b].chain.size(); ++pos) {
      const std::size_t v = blocks_[b].chain[pos];
      if (v >= owner_.size() || owner_[v] != static_cast<std::size_t>(-1)) {
        throw Error(ErrorCode::kInvariantViolation,
                    "node " + std::to_string(v) + " is not covered exactly once");
      }
      owner_[v] = b;
      position_[v] = pos;
    }
  }
  for (std::size_t v = 0; v < owner_.size(); ++v) {
    if (owner_[v] == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::kInvariantViolation, "node " + std::to_string(v) + " is uncovered");
    }
  }
}

std::size_t JordanPartition::block_of(std::size_t node) const {
  if (node >= owner_.size()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(node) + " out of range");
  }
  return owner_[node];
}

std::size_t JordanPartition::position_of(std::size_t node) const {
  block_of(node);
  return position_[node];
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

using BigRows = std::vector<std::vector<BigInt>>;

BigRows to_big(const BoolMatrix& r) {
  BigRows out(r.size(), std::vector<BigInt>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) out[i][j] = r(i, j) ? 1 : 0;
  }
  return out;
}

BigRows big_multiply(const BigRows& a, const BigRows& b) {
  const std::size_t n = a.size();
  BigRows out(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

void require_nilpotent(const BoolMatrix& r) {
  const auto cycle = find_cycle(r);
  if (!cycle.empty()) {
    throw Error(ErrorCode::kNotNilpotent,
                "adjacency matrix has a cycle: " + describe_cycle(r.nodes(), cycle));
  }
}

}  // namespace

std::vector<std::size_t> rank_sequence(const BoolMatrix& r) {
  require_nilpotent(r);
  const BigRows a = to_big(r);
  std::vector<std::size_t> ranks{r.size()};
  BigRows pw = a;
  while (ranks.back() != 0) {
    if (ranks.size() > r.size() + 1) {
      throw Error(ErrorCode::kNotNilpotent, "power sequence did not reach zero");
    }
    ranks.push_back(exact_rank(pw));
    if (ranks.back() != 0) pw = big_multiply(pw, a);
  }
  return ranks;
}

std::vector<std::size_t> jordan_block_sizes(const BoolMatrix& r) {
  const auto ranks = rank_sequence(r);
  // at_least[k] = #blocks of size >= k = rank(A^{k-1}) - rank(A^k), k >= 1.
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    sizes.insert(sizes.end(), at_least - at_least_next, k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

namespace {

// Longest path among the `alive` nodes; ties go to the smallest source and
// then to the lexicographically smallest node sequence.
std::vector<std::size_t> longest_path(const BoolMatrix& r, const std::vector<std::size_t>& topo,
                                      const std::vector<bool>& alive) {
  const std::size_t n = r.size();
  std::vector<std::size_t> length(n, 0), next(n, n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t v = *it;
    if (!alive[v]) continue;
    length[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (!alive[w] || !r(v, w)) continue;
      if (length[w] + 1 > length[v]) {
        length[v] = length[w] + 1;
        next[v] = w;
      }
    }
  }
  std::size_t best = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && (best == n || length[v] > length[best])) best = v;
  }
  std::vector<std::size_t> path;
  for (std::size_t v = best; v != n; v = next[v]) path.push_back(v);
  return path;
}

std::vector<std::size_t> sorted_lengths(const std::vector<std::vector<std::size_t>>& chains) {
  std::vector<std::size_t> out;
  for (const auto& c : chains) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::vector<std::size_t>> greedy_cover(const BoolMatrix& r,
                                                   const std::vector<std::size_t>& topo) {
  std::vector<bool> alive(r.size(), true);
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t left = r.size(); left > 0;) {
    auto path = longest_path(r, topo, alive);
    for (const auto v : path) alive[v] = false;
    left -= path.size();
    chains.push_back(std::move(path));
  }
  return chains;
}

std::vector<std::vector<std::size_t>> size_guided_cover(const BoolMatrix& r,
                                                        const std::vector<std::size_t>& topo,
                                                        const std::vector<std::size_t>& sizes) {
  std::vector<bool> alive(r.size(), true);
  std::vector<std::vector<std::size_t>> chains;
  for (const std::size_t k : sizes) {
    auto path = longest_path(r, topo, alive);
    if (path.size() < k) return {};
    path.resize(k);
    for (const auto v : path) alive[v] = false;
    chains.push_back(std::move(path));
  }
  return chains;
}

class ExhaustiveCover {
 public:
  ExhaustiveCover(const BoolMatrix& r, const std::vector<std::size_t>& sizes) : r_(r) {
    for (const auto k : sizes) ++remaining_[k];
  }

  std::vector<std::vector<std::size_t>> solve() {
    const std::uint32_t all = r_.size() == 32 ? ~0u : ((1u << r_.size()) - 1);
    if (search(all)) return chains_;
    return {};
  }

 private:
  bool search(std::uint32_t mask) {
    if (mask == 0) return true;
    const std::string key = state_key(mask);
    if (failed_.contains(key)) return false;
    const std::size_t u = static_cast<std::size_t>(__builtin_ctz(mask));
    std::vector<std::vector<std::size_t>> candidates;
    // Every path through u = (backward extension) + u + (forward extension).
    std::vector<std::size_t> back{u};
    extend_back(mask & ~(1u << u), back, candidates, mask);
    for (auto& path : candidates) {
      const std::size_t k = path.size();
      auto it = remaining_.find(k);
      if (it == remaining_.end() || it->second == 0) continue;
      std::uint32_t used = 0;
      for (const auto v : path) used |= 1u << v;
      --it->second;
      chains_.push_back(path);
      if (search(mask & ~used)) return true;
      chains_.pop_back();
      ++it->second;
    }
    failed_.insert(key);
    return false;
  }

  void extend_back(std::uint32_t free, std::vector<std::size_t>& reversed_prefix,
                   std::vector<std::vector<std::size_t>>& out, std::uint32_t mask) {
    std::vector<std::size_t> path(reversed_prefix.rbegin(), reversed_prefix.rend());
    extend_forward(free, path, out);
    const std::size_t head = reversed_prefix.back();
    for (std::size_t v = 0; v < r_.size(); ++v) {
      if (!((free >> v) & 1u) || !r_(v, head)) continue;
      reversed_prefix.push_back(v);
      extend_back(free & ~(1u << v), reversed_prefix, out, mask);
      reversed_prefix.pop_back();
    }
  }

  void extend_forward(std::uint32_t free, std::vector<std::size_t>& path,
                      std::vector<std::vector<std::size_t>>& out) {
    out.push_back(path);
    const std::size_t tail = path.back();
    for (std::size_t v = 0; v < r_.size(); ++v) {
      if (!((free >> v) & 1u) || !r_(tail, v)) continue;
      path.push_back(v);
      extend_forward(free & ~(1u << v), path, out);
      path.pop_back();
    }
  }

  std::string state_key(std::uint32_t mask) const {
    std::string key = std::to_string(mask);
    for (const auto& [k, count] : remaining_) key += "," + std::to_string(k) + "x" + std::to_string(count);
    return key;
  }

  const BoolMatrix& r_;
  std::map<std::size_t, std::size_t> remaining_;
  std::vector<std::vector<std::size_t>> chains_;
  std::set<std::string> failed_;
};

void validate_chains(const BoolMatrix& r, const std::vector<std::vector<std::size_t>>& chains) {
  for (const auto& chain : chains) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (!r(chain[i - 1], chain[i])) {
        throw Error(ErrorCode::kInvariantViolation,
                    "chain step " + std::to_string(chain[i - 1]) + "->" + std::to_string(chain[i]) +
                        " is not an edge");
      }
    }
  }
}

}  // namespace

JordanPartition chain_decomposition(const BoolMatrix& r, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> target = sizes;
  std::sort(target.rbegin(), target.rend());
  std::size_t total = 0;
  for (const auto k : target) total += k;
  if (total != r.size() || std::find(target.begin(), target.end(), 0) != target.end()) {
    throw Error(ErrorCode::kInvariantViolation, "block sizes do not sum to the node count");
  }
  const auto topo = topological_order(r);

  CoverMethod method = CoverMethod::kGreedyLongestPath;
  auto chains = greedy_cover(r, topo);
  if (sorted_lengths(chains) != target) {
    method = CoverMethod::kSizeGuided;
    chains = size_guided_cover(r, topo, target);
  }
  if (chains.empty() || sorted_lengths(chains) != target) {
    chains.clear();
    if (r.size() <= kExhaustiveCoverLimit) {
      method = CoverMethod::kExhaustive;
      chains = ExhaustiveCover(r, target).solve();
      std::stable_sort(chains.begin(), chains.end(),
                       [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }
  }
  if (chains.empty() || sorted_lengths(chains) != target) {
    throw Error(ErrorCode::kInvariantViolation,
                "no path cover realises the Jordan block sizes of this DAG");
  }
  validate_chains(r, chains);

  std::vector<PartitionBlock> blocks;
  for (auto& chain : chains) {
    PartitionBlock block;
    block.spec.size = chain.size();
    block.chain = std::move(chain);
    blocks.push_back(std::move(block));
  }
  return JordanPartition(r.nodes(), std::move(blocks), method);
}

JordanPartition partition_dag(const BoolMatrix& r) {
  return chain_decomposition(r, jordan_block_sizes(r));
}

std::vector<EntryExit> entry_exit_points(const JordanPartition& p) {
  std::vector<EntryExit> out;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    out.push_back({b, p.block(b).source(), p.block(b).sink()});
  }
  return out;
}

}  // namespace relalg
