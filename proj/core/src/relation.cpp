#include "relalg/relation.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace relalg {

bool check_compatibility(const TypedNode& producer, const TypedNode& consumer) {
  return producer.type_tag == consumer.type_tag;
}

NodeIndex::NodeIndex(std::vector<TypedNode> nodes) : nodes_(std::move(nodes)) {
  by_label_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto [it, inserted] = by_label_.emplace(nodes_[i].label(), i);
    if (!inserted) {
      throw Error(ErrorCode::kStructure, "duplicate node " + nodes_[i].label() + " at positions " +
                                             std::to_string(it->second) + " and " +
                                             std::to_string(i));
    }
  }
}

NodeIndex NodeIndex::numbered(std::size_t n) {
  std::vector<TypedNode> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({"node", std::to_string(i + 1)});
  return NodeIndex(std::move(nodes));
}

std::optional<std::size_t> NodeIndex::find(const TypedNode& node) const {
  const auto it = by_label_.find(node.label());
  if (it == by_label_.end() || !(nodes_[it->second] == node)) return std::nullopt;
  return it->second;
}

std::size_t NodeIndex::index_of(const TypedNode& node) const {
  if (auto idx = find(node)) return *idx;
  throw Error(ErrorCode::kUnknownNode, "unknown node " + node.label());
}

std::size_t NodeIndex::resolve(std::string_view spec) const {
  std::size_t value = 0;
  const auto* first = spec.data();
  const auto* last = spec.data() + spec.size();
  if (!spec.empty()) {
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last) {
      if (value >= nodes_.size()) {
        throw Error(ErrorCode::kUnknownNode, "node index " + std::string(spec) +
                                                 " out of range (n=" + std::to_string(size()) + ")");
      }
      return value;
    }
  }
  const auto it = by_label_.find(std::string(spec));
  if (it == by_label_.end()) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + std::string(spec) + "'");
  }
  return it->second;
}

NodeIndex NodeIndex::subset(const std::vector<std::size_t>& indices) const {
  std::vector<TypedNode> out;
  out.reserve(indices.size());
  for (const auto i : indices) out.push_back(nodes_.at(i));
  return NodeIndex(std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const BoolMatrix& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> find_cycle(const BoolMatrix& r) {
  const std::size_t n = r.size();
  enum class Mark : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<Mark> mark(n, Mark::kWhite);
  std::vector<std::size_t> parent(n, n);
  // Iterative DFS; the explicit stack holds (node, next successor to try).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::kWhite) continue;
    stack.emplace_back(root, 0);
    mark[root] = Mark::kGrey;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == n) {
        mark[u] = Mark::kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t v = next++;
      if (!r(u, v)) continue;
      if (mark[v] == Mark::kGrey) {
        std::vector<std::size_t> cycle{v};
        for (std::size_t w = u; w != v; w = parent[w]) cycle.push_back(w);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (mark[v] == Mark::kWhite) {
        mark[v] = Mark::kGrey;
        parent[v] = u;
        stack.emplace_back(v, 0);
      }
    }
  }
  return {};
}

std::string describe_cycle(const NodeIndex& nodes, const std::vector<std::size_t>& cycle) {
  std::string text;
  for (const auto v : cycle) {
    text += std::to_string(v) + "(" + nodes[v].label() + ") -> ";
  }
  if (!cycle.empty()) text += std::to_string(cycle.front());
  return text;
}

std::vector<std::size_t> topological_order(const BoolMatrix& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += r(i, j) ? 1 : 0;
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t u = ready.top();
    ready.pop();
    order.push_back(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (r(u, v) && --indegree[v] == 0) ready.push(v);
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kNotADag,
                "relation is not acyclic; cycle: " + describe_cycle(r.nodes(), find_cycle(r)));
  }
  return order;
}

}  // namespace relalg
