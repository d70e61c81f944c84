#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "relalg/partition.hpp"
#include "relalg/poset.hpp"
#include "relalg/query.hpp"

namespace relalg {

/// A relation edge that crosses two partition blocks. `enabled` is the λ
/// toggle; the pre/postconditions describe what the endpoints must satisfy.
struct Connector {
  std::size_t id = 0;
  std::size_t from_block = 0;
  std::size_t to_block = 0;
  std::size_t source = 0;  // edge tail, inside from_block
  std::size_t target = 0;  // edge head, inside to_block
  bool enabled = true;
  NodePredicate precondition;
  NodePredicate postcondition;
};

/// One connector per edge (u, v) with block_of(u) != block_of(v), in
/// row-major edge order. Conditions default to the endpoints' own labels.
std::vector<Connector> find_connectors(const BoolMatrix& r, const JordanPartition& p);

/// Connector id → λ. Connectors missing from the map keep their own state.
using ConnectorToggles = std::map<std::size_t, bool>;

/// Reflexive transitive closure of `r` with every disabled connector edge
/// removed. Unknown ids in `toggles` raise kUnknownConnector.
BoolMatrix what_if(const BoolMatrix& r, const std::vector<Connector>& connectors,
                   const ConnectorToggles& toggles);

/// δ-style probe: the what-if closure with exactly one connector flipped.
BoolMatrix what_if_single(const BoolMatrix& r, const std::vector<Connector>& connectors,
                          std::size_t connector_id, bool enabled);

enum class ChainPosition { kSource, kInterior, kSink, kSourceAndSink };

std::string_view chain_position_name(ChainPosition pos);

struct OverlapMember {
  std::size_t node = 0;
  std::size_t block = 0;
  ChainPosition position = ChainPosition::kInterior;
};

struct OverlapBlock {
  std::size_t block = 0;
  std::size_t size = 0;
  std::size_t antichain_members = 0;  // members anywhere in the chain
  bool sink_in_antichain = false;
};

struct OverlapReport {
  std::vector<OverlapMember> members;
  std::vector<OverlapBlock> blocks;
};

/// Places each antichain member inside its chain (source / interior / sink).
OverlapReport antichain_overlap(const JordanPartition& p, const Antichain& a);

}  // namespace relalg
