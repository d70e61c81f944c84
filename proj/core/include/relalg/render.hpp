#pragma once

/// Text renderings and versioned JSON reports shared by the CLI and tests.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "relalg/connector.hpp"
#include "relalg/partition.hpp"
#include "relalg/poset.hpp"
#include "relalg/query.hpp"
#include "relalg/relation.hpp"

namespace relalg {

/// Character-cell heatmap: `█` for 1, `·` for 0. Two header rows carry the
/// first letter of each column's type and attribute; rows are labelled
/// "index type:attr". With a partition, nodes are listed chain by chain and
/// block boundaries get `|` column rulers and horizontal rule lines.
std::string render_heatmap(const BoolMatrix& m, const JordanPartition* partition = nullptr);

/// DOT digraph with one cluster per block; intra-block chain edges are bold.
std::string partition_to_dot(const BoolMatrix& r, const JordanPartition& p);

nlohmann::json partition_to_json(const JordanPartition& p);
nlohmann::json antichain_to_json(const NodeIndex& nodes, const Antichain& a);
nlohmann::json connectors_to_json(const NodeIndex& nodes, const std::vector<Connector>& connectors);
nlohmann::json query_to_json(const NodeIndex& nodes, const QueryResult& q);

/// Integer matrix (zeta or Möbius) with the two-row type/attr CSV header.
std::string int_rows_to_csv(const NodeIndex& nodes, const IntRows& rows);

}  // namespace relalg
