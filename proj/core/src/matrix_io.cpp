#include "relalg/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace relalg {

using nlohmann::json;

SemiringKind kind_of(const AnyMatrix& m) {
  return std::visit(
      []<class S>(const RelationMatrix<S>&) { return parse_semiring_kind(S::name); }, m);
}

const NodeIndex& nodes_of(const AnyMatrix& m) {
  return std::visit([](const auto& r) -> const NodeIndex& { return r.nodes(); }, m);
}

json nodes_to_json(const NodeIndex& nodes) {
  json out = json::array();
  for (const auto& n : nodes) out.push_back({{"type", n.type_tag}, {"attr", n.attribute}});
  return out;
}

NodeIndex nodes_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "\"nodes\" must be an array");
  std::vector<TypedNode> nodes;
  for (const auto& n : j) {
    if (!n.is_object() || !n.contains("type") || !n.contains("attr")) {
      throw Error(ErrorCode::kParse, "node entries need \"type\" and \"attr\"");
    }
    nodes.push_back({n.at("type").get<std::string>(), n.at("attr").get<std::string>()});
  }
  return NodeIndex(std::move(nodes));
}

json node_ref_json(const NodeIndex& nodes, std::size_t index) {
  return {{"index", index}, {"type", nodes[index].type_tag}, {"attr", nodes[index].attribute}};
}

namespace {

json cell_to_json(bool v) { return v ? 1 : 0; }
json cell_to_json(Weight w) { return w.is_infinite() ? json("inf") : json(w.value()); }
json cell_to_json(std::uint64_t v) { return v; }

template <class S>
typename S::value_type cell_from_json(const json& j);

template <>
bool cell_from_json<BooleanSemiring>(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v == 0 || v == 1) return v == 1;
  }
  throw Error(ErrorCode::kParse, "boolean entries must be 0 or 1, got " + j.dump());
}

template <>
Weight cell_from_json<TropicalSemiring>(const json& j) {
  if (j.is_null()) return Weight::infinity();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity" || s == "∞") return Weight::infinity();
    throw Error(ErrorCode::kParse, "bad tropical entry " + j.dump());
  }
  if (j.is_number_integer()) return Weight(j.get<std::int64_t>());
  throw Error(ErrorCode::kParse, "tropical entries must be integers or \"inf\", got " + j.dump());
}

template <>
std::uint64_t cell_from_json<CountingSemiring>(const json& j) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    return j.get<std::uint64_t>();
  }
  throw Error(ErrorCode::kParse, "counting entries must be nonnegative integers, got " + j.dump());
}

template <class S>
RelationMatrix<S> typed_from_json(const json& j) {
  NodeIndex nodes = nodes_from_json(j.at("nodes"));
  const auto& rows = j.at("rows");
  if (!rows.is_array()) throw Error(ErrorCode::kParse, "\"rows\" must be an array");
  std::vector<std::vector<typename S::value_type>> cells;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::kParse, "each row must be an array");
    auto& out = cells.emplace_back();
    for (const auto& c : row) out.push_back(cell_from_json<S>(c));
  }
  return RelationMatrix<S>::from_rows(std::move(nodes), cells);
}

std::string cell_to_text(bool v) { return v ? "1" : "0"; }
std::string cell_to_text(Weight w) { return to_string(w); }
std::string cell_to_text(std::uint64_t v) { return std::to_string(v); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class S>
RelationMatrix<S> typed_from_csv(const std::vector<std::vector<std::string>>& lines) {
  const auto& types = lines[0];
  const auto& attrs = lines[1];
  if (types.size() != attrs.size()) {
    throw Error(ErrorCode::kParse, "type and attribute header rows differ in length");
  }
  std::vector<TypedNode> nodes;
  for (std::size_t i = 0; i < types.size(); ++i) nodes.push_back({types[i], attrs[i]});
  std::vector<std::vector<typename S::value_type>> cells;
  for (std::size_t r = 2; r < lines.size(); ++r) {
    auto& row = cells.emplace_back();
    for (const auto& field : lines[r]) {
      json value;
      if (field == "inf") {
        value = "inf";
      } else {
        try {
          value = json::parse(field);
        } catch (const json::exception&) {
          throw Error(ErrorCode::kParse, "bad CSV entry '" + field + "'");
        }
      }
      row.push_back(cell_from_json<S>(value));
    }
  }
  return RelationMatrix<S>::from_rows(NodeIndex(std::move(nodes)), cells);
}

}  // namespace

template <ClosedSemiring S>
json matrix_to_json(const RelationMatrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(cell_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"format_version", kFormatVersion},
          {"semiring", std::string(S::name)},
          {"nodes", nodes_to_json(m.nodes())},
          {"rows", std::move(rows)}};
}

template json matrix_to_json(const BoolMatrix&);
template json matrix_to_json(const TropicalMatrix&);
template json matrix_to_json(const CountingMatrix&);

json any_matrix_to_json(const AnyMatrix& m) {
  return std::visit([](const auto& r) { return matrix_to_json(r); }, m);
}

AnyMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "matrix document must be a JSON object");
  if (j.contains("format_version") && j.at("format_version") != kFormatVersion) {
    throw Error(ErrorCode::kParse, "unsupported format_version " + j.at("format_version").dump());
  }
  if (!j.contains("nodes") || !j.contains("rows")) {
    throw Error(ErrorCode::kParse, "matrix document needs \"nodes\" and \"rows\"");
  }
  const auto kind = parse_semiring_kind(j.value("semiring", std::string("boolean")));
  try {
    switch (kind) {
      case SemiringKind::kBoolean: return typed_from_json<BooleanSemiring>(j);
      case SemiringKind::kTropical: return typed_from_json<TropicalSemiring>(j);
      case SemiringKind::kCounting: return typed_from_json<CountingSemiring>(j);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  throw Error(ErrorCode::kParse, "bad semiring");
}

BoolMatrix bool_matrix_from_json(const json& j) {
  auto any = matrix_from_json(j);
  if (auto* b = std::get_if<BoolMatrix>(&any)) return std::move(*b);
  throw Error(ErrorCode::kType, "expected a boolean relation matrix, got semiring " +
                                    std::string(semiring_name(kind_of(any))));
}

std::string matrix_to_csv(const AnyMatrix& m) {
  return std::visit(
      [](const auto& r) {
        std::string out;
        const auto header = [&](auto field) {
          for (std::size_t i = 0; i < r.size(); ++i) {
            out += (i ? "," : "") + field(r.nodes()[i]);
          }
          out += "\n";
        };
        header([](const TypedNode& n) { return n.type_tag; });
        header([](const TypedNode& n) { return n.attribute; });
        for (std::size_t i = 0; i < r.size(); ++i) {
          for (std::size_t j = 0; j < r.size(); ++j) {
            out += (j ? "," : "") + cell_to_text(r(i, j));
          }
          out += "\n";
        }
        return out;
      },
      m);
}

AnyMatrix matrix_from_csv(const std::string& text, SemiringKind kind) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(split_csv_line(line));
  }
  if (lines.size() < 2) throw Error(ErrorCode::kParse, "CSV needs type and attribute header rows");
  switch (kind) {
    case SemiringKind::kBoolean: return typed_from_csv<BooleanSemiring>(lines);
    case SemiringKind::kTropical: return typed_from_csv<TropicalSemiring>(lines);
    case SemiringKind::kCounting: return typed_from_csv<CountingSemiring>(lines);
  }
  throw Error(ErrorCode::kParse, "bad semiring");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string matrix_to_dot(const AnyMatrix& m, const std::string& graph_name) {
  return std::visit(
      [&](const auto& r) {
        std::ostringstream out;
        out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
        for (std::size_t i = 0; i < r.size(); ++i) {
          out << "  n" << i << " [label=\"" << dot_escape(r.nodes()[i].label()) << "\"];\n";
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
          for (std::size_t j = 0; j < r.size(); ++j) {
            if (r.is_zero(i, j)) continue;
            out << "  n" << i << " -> n" << j;
            if constexpr (!std::is_same_v<typename std::decay_t<decltype(r)>::value_type, bool>) {
              out << " [label=\"" << cell_to_text(r(i, j)) << "\"]";
            }
            out << ";\n";
          }
        }
        out << "}\n";
        return out.str();
      },
      m);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
}

AnyMatrix read_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".csv") return matrix_from_csv(text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return matrix_from_json(doc);
}

BoolMatrix read_bool_matrix_file(const std::filesystem::path& path) {
  auto any = read_matrix_file(path);
  if (auto* b = std::get_if<BoolMatrix>(&any)) return std::move(*b);
  throw Error(ErrorCode::kType, path.string() + ": expected a boolean relation matrix");
}

}  // namespace relalg
