#include "relalg/render.hpp"

#include <algorithm>
#include <sstream>

#include "relalg/matrix_io.hpp"

namespace relalg {

using nlohmann::json;

namespace {

constexpr const char* kFull = "█";
constexpr const char* kEmpty = "·";
constexpr const char* kRule = "\u2014";

json predicate_json(const NodePredicate& p) {
  json j = json::object();
  if (p.type_tag) j["type"] = *p.type_tag;
  if (p.attribute) j["attr"] = *p.attribute;
  return j;
}

std::string initial(const std::string& s) { return s.empty() ? std::string(" ") : s.substr(0, 1); }

}  // namespace

std::string render_heatmap(const BoolMatrix& m, const JordanPartition* partition) {
  const NodeIndex& nodes = m.nodes();
  const std::size_t n = m.size();
  std::vector<std::size_t> order;
  std::vector<bool> boundary_after(n, false);  // ruler after this display position
  if (partition != nullptr) {
    if (partition->nodes().size() != n) {
      throw Error(ErrorCode::kLengthMismatch, "partition does not match the matrix size");
    }
    for (const auto& block : partition->blocks()) {
      order.insert(order.end(), block.chain.begin(), block.chain.end());
      if (!order.empty()) boundary_after[order.size() - 1] = true;
    }
    if (n > 0) boundary_after[n - 1] = false;
  } else {
    for (std::size_t i = 0; i < n; ++i) order.push_back(i);
  }

  std::vector<std::string> labels;
  std::size_t label_width = 0;
  for (const auto v : order) {
    labels.push_back(std::to_string(v) + " " + nodes[v].label());
    label_width = std::max(label_width, labels.back().size());
  }
  const std::string pad(label_width + 1, ' ');

  std::ostringstream out;
  const auto header = [&](bool type_row) {
    out << pad;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& node = nodes[order[c]];
      out << initial(type_row ? node.type_tag : node.attribute);
      out << (boundary_after[c] ? " | " : " ");
    }
    out << '\n';
  };
  std::size_t display_cells = 0;
  for (std::size_t c = 0; c < n; ++c) display_cells += boundary_after[c] ? 4 : 2;
  const auto rule = [&] {
    out << pad;
    for (std::size_t i = 0; i < display_cells; ++i) out << kRule;
    out << '\n';
  };

  header(true);
  header(false);
  for (std::size_t r = 0; r < n; ++r) {
    out << labels[r] << std::string(label_width + 1 - labels[r].size(), ' ');
    for (std::size_t c = 0; c < n; ++c) {
      out << (m(order[r], order[c]) ? kFull : kEmpty);
      out << (boundary_after[c] ? " | " : " ");
    }
    out << '\n';
    if (boundary_after[r]) rule();
  }
  // Cell separators leave a trailing blank on every line.
  std::string text = out.str();
  std::string trimmed;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
    start = end + 1;
  }
  return trimmed;
}

std::string partition_to_dot(const BoolMatrix& r, const JordanPartition& p) {
  const NodeIndex& nodes = r.nodes();
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (const char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph partition {\n  rankdir=LR;\n";
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const auto& block = p.block(b);
    out << "  subgraph cluster_" << b << " {\n    label=" << quote("block " + std::to_string(b) +
                                                               " (J" + std::to_string(block.spec.size) +
                                                               ")")
        << ";\n";
    for (const auto v : block.chain) {
      out << "    n" << v << " [label=" << quote(nodes[v].label()) << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& [i, j] : edges(r)) {
    const std::size_t bi = p.block_of(i);
    const bool chain_edge = bi == p.block_of(j) && p.position_of(j) == p.position_of(i) + 1;
    out << "  n" << i << " -> n" << j;
    if (chain_edge) {
      out << " [style=bold]";
    } else if (bi != p.block_of(j)) {
      out << " [style=dashed]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

json partition_to_json(const JordanPartition& p) {
  const NodeIndex& nodes = p.nodes();
  json blocks = json::array();
  std::vector<std::size_t> sizes;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const auto& block = p.block(b);
    sizes.push_back(block.spec.size);
    json chain = json::array();
    for (const auto v : block.chain) chain.push_back(node_ref_json(nodes, v));
    blocks.push_back({{"id", b},
                      {"size", block.spec.size},
                      {"eigenvalue", block.spec.eigenvalue.str()},
                      {"chain", std::move(chain)},
                      {"source", node_ref_json(nodes, block.source())},
                      {"sink", node_ref_json(nodes, block.sink())}});
  }
  return {{"format_version", kFormatVersion},
          {"block_sizes", sizes},
          {"cover_method", std::string(cover_method_name(p.method()))},
          {"blocks", std::move(blocks)}};
}

json antichain_to_json(const NodeIndex& nodes, const Antichain& a) {
  json members = json::array();
  for (const auto v : a.members) members.push_back(node_ref_json(nodes, v));
  return {{"format_version", kFormatVersion}, {"size", a.size()}, {"members", std::move(members)}};
}

json connectors_to_json(const NodeIndex& nodes, const std::vector<Connector>& connectors) {
  json list = json::array();
  for (const auto& c : connectors) {
    list.push_back({{"id", c.id},
                    {"from_block", c.from_block},
                    {"to_block", c.to_block},
                    {"source", node_ref_json(nodes, c.source)},
                    {"target", node_ref_json(nodes, c.target)},
                    {"precondition", predicate_json(c.precondition)},
                    {"postcondition", predicate_json(c.postcondition)},
                    {"lambda", c.enabled}});
  }
  return {{"format_version", kFormatVersion}, {"connectors", std::move(list)}};
}

json query_to_json(const NodeIndex& nodes, const QueryResult& q) {
  json hits = json::array();
  for (const auto v : q.hits) hits.push_back(node_ref_json(nodes, v));
  return {{"format_version", kFormatVersion},
          {"origin", node_ref_json(nodes, q.origin)},
          {"direction", std::string(direction_name(q.direction))},
          {"hits", std::move(hits)}};
}

std::string int_rows_to_csv(const NodeIndex& nodes, const IntRows& rows) {
  if (rows.size() != nodes.size()) {
    throw Error(ErrorCode::kLengthMismatch, "row count does not match node count");
  }
  std::ostringstream out;
  for (int header = 0; header < 2; ++header) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      out << (j ? "," : "") << (header == 0 ? nodes[j].type_tag : nodes[j].attribute);
    }
    out << '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace relalg
