#include "relalg/query.hpp"

namespace relalg {

std::string_view direction_name(Direction d) {
  return d == Direction::kForward ? "forward" : "backward";
}

namespace {

void require_node(const BoolMatrix& closure, std::size_t v) {
  if (v >= closure.size()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range (n=" +
                                             std::to_string(closure.size()) + ")");
  }
}

}  // namespace

QueryResult forward_query(const BoolMatrix& closure, std::size_t origin) {
  require_node(closure, origin);
  QueryResult result{origin, Direction::kForward, {}};
  for (std::size_t j = 0; j < closure.size(); ++j) {
    if (j != origin && closure(origin, j)) result.hits.push_back(j);
  }
  return result;
}

QueryResult backward_query(const BoolMatrix& closure, std::size_t target) {
  require_node(closure, target);
  QueryResult result{target, Direction::kBackward, {}};
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i != target && closure(i, target)) result.hits.push_back(i);
  }
  return result;
}

bool NodePredicate::matches(const TypedNode& node) const {
  return (!type_tag || *type_tag == node.type_tag) && (!attribute || *attribute == node.attribute);
}

NodePredicate NodePredicate::parse(std::string_view text) {
  NodePredicate out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "filter item '" + std::string(item) +
                                                   "' is not key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string value(item.substr(eq + 1));
    if (key == "type") {
      out.type_tag = value;
    } else if (key == "attr") {
      out.attribute = value;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown filter key '" + std::string(key) + "'");
    }
  }
  return out;
}

std::vector<std::size_t> choice(const NodeIndex& nodes, std::span<const std::size_t> candidates,
                                const NodePredicate& predicate) {
  return choice(nodes, candidates,
                [&predicate](const TypedNode& n) { return predicate.matches(n); });
}

std::vector<std::size_t> choice(const NodeIndex& nodes, std::span<const std::size_t> candidates,
                                const std::function<bool(const TypedNode&)>& predicate) {
  std::vector<std::size_t> out;
  for (const auto v : candidates) {
    if (v >= nodes.size()) {
      throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
    }
    if (predicate(nodes[v])) out.push_back(v);
  }
  return out;
}

}  // namespace relalg
