#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "relalg/relation.hpp"

namespace relalg {

inline constexpr int kFormatVersion = 1;

/// A relation matrix whose semiring was chosen at run time (file header).
using AnyMatrix = std::variant<BoolMatrix, TropicalMatrix, CountingMatrix>;

SemiringKind kind_of(const AnyMatrix& m);
const NodeIndex& nodes_of(const AnyMatrix& m);

nlohmann::json nodes_to_json(const NodeIndex& nodes);
NodeIndex nodes_from_json(const nlohmann::json& j);
nlohmann::json node_ref_json(const NodeIndex& nodes, std::size_t index);

// JSON: {"format_version":1,"semiring":"boolean","nodes":[{"type":..,"attr":..}],"rows":[[..]]}
// Tropical infinity is written as the string "inf" (null is accepted on input).
template <ClosedSemiring S>
nlohmann::json matrix_to_json(const RelationMatrix<S>& m);
nlohmann::json any_matrix_to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const nlohmann::json& j);
BoolMatrix bool_matrix_from_json(const nlohmann::json& j);

// CSV: row 1 holds the type tag of every column, row 2 the attribute, then
// one row of entries per node (0/1 for boolean, "inf" allowed for tropical).
std::string matrix_to_csv(const AnyMatrix& m);
AnyMatrix matrix_from_csv(const std::string& text, SemiringKind kind = SemiringKind::kBoolean);

/// Directed edge per nonzero entry, nodes labelled "type:attr".
std::string matrix_to_dot(const AnyMatrix& m, const std::string& graph_name = "relation");

/// Reads .json or .csv by extension; throws kIo / kParse.
AnyMatrix read_matrix_file(const std::filesystem::path& path);
BoolMatrix read_bool_matrix_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace relalg
