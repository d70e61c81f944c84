#include "relalg/connector.hpp"

namespace relalg {

std::vector<Connector> find_connectors(const BoolMatrix& r, const JordanPartition& p) {
  if (!(r.nodes() == p.nodes())) {
    throw Error(ErrorCode::kStructure, "partition was computed on a different node index");
  }
  std::vector<Connector> out;
  for (const auto& [u, v] : edges(r)) {
    const std::size_t bu = p.block_of(u);
    const std::size_t bv = p.block_of(v);
    if (bu == bv) continue;
    Connector c;
    c.id = out.size();
    c.from_block = bu;
    c.to_block = bv;
    c.source = u;
    c.target = v;
    c.precondition = {r.nodes()[u].type_tag, r.nodes()[u].attribute};
    c.postcondition = {r.nodes()[v].type_tag, r.nodes()[v].attribute};
    out.push_back(std::move(c));
  }
  return out;
}

BoolMatrix what_if(const BoolMatrix& r, const std::vector<Connector>& connectors,
                   const ConnectorToggles& toggles) {
  std::vector<bool> enabled;
  for (const auto& c : connectors) enabled.push_back(c.enabled);
  for (const auto& [id, on] : toggles) {
    if (id >= connectors.size()) {
      throw Error(ErrorCode::kUnknownConnector, "unknown connector id " + std::to_string(id));
    }
    enabled[id] = on;
  }
  BoolMatrix pruned = r;
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    const auto& c = connectors[i];
    if (c.source >= r.size() || c.target >= r.size() || !r(c.source, c.target)) {
      throw Error(ErrorCode::kStructure,
                  "connector " + std::to_string(c.id) + " is not an edge of the relation");
    }
    if (!enabled[i]) pruned.set(c.source, c.target, false);
  }
  return closure_floyd_warshall(pruned, Reflexivity::kReflexive);
}

BoolMatrix what_if_single(const BoolMatrix& r, const std::vector<Connector>& connectors,
                          std::size_t connector_id, bool enabled) {
  return what_if(r, connectors, {{connector_id, enabled}});
}

std::string_view chain_position_name(ChainPosition pos) {
  switch (pos) {
    case ChainPosition::kSource: return "source";
    case ChainPosition::kInterior: return "interior";
    case ChainPosition::kSink: return "sink";
    case ChainPosition::kSourceAndSink: return "source-and-sink";
  }
  return "unknown";
}

OverlapReport antichain_overlap(const JordanPartition& p, const Antichain& a) {
  OverlapReport report;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    report.blocks.push_back({b, p.block(b).chain.size(), 0, false});
  }
  for (const auto v : a.members) {
    if (v >= p.nodes().size()) {
      throw Error(ErrorCode::kStructure,
                  "antichain member " + std::to_string(v) + " is outside the partition index");
    }
    const std::size_t b = p.block_of(v);
    const auto& block = p.block(b);
    ChainPosition pos = ChainPosition::kInterior;
    if (block.chain.size() == 1) {
      pos = ChainPosition::kSourceAndSink;
    } else if (v == block.source()) {
      pos = ChainPosition::kSource;
    } else if (v == block.sink()) {
      pos = ChainPosition::kSink;
    }
    report.members.push_back({v, b, pos});
    ++report.blocks[b].antichain_members;
    if (v == block.sink()) report.blocks[b].sink_in_antichain = true;
  }
  return report;
}

}  // namespace relalg
