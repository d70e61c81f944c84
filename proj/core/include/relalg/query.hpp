#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

enum class Direction { kForward, kBackward };

std::string_view direction_name(Direction d);

struct QueryResult {
  std::size_t origin = 0;
  Direction direction = Direction::kForward;
  std::vector<std::size_t> hits;  // node-index order; may be empty
};

/// Nodes strictly reachable from `origin` (the reflexive self-hit is dropped).
/// `closure` must be a reflexive transitive closure.
QueryResult forward_query(const BoolMatrix& closure, std::size_t origin);

/// Nodes from which `target` is reachable, excluding `target` itself.
QueryResult backward_query(const BoolMatrix& closure, std::size_t target);

/// (type, attr) filter; an unset field matches anything, so the default
/// predicate is the identity of `choice`.
struct NodePredicate {
  std::optional<std::string> type_tag;
  std::optional<std::string> attribute;

  bool matches(const TypedNode& node) const;
  bool is_identity() const { return !type_tag && !attribute; }

  /// Parses "type=<t>[,attr=<a>]" (either key may appear alone).
  static NodePredicate parse(std::string_view text);
};

/// View selection: the candidates whose labels satisfy the predicate. An
/// empty result is valid.
std::vector<std::size_t> choice(const NodeIndex& nodes, std::span<const std::size_t> candidates,
                                const NodePredicate& predicate);

std::vector<std::size_t> choice(const NodeIndex& nodes, std::span<const std::size_t> candidates,
                                const std::function<bool(const TypedNode&)>& predicate);

}  // namespace relalg
