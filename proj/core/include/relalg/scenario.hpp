#pragma once

/// Feasible-relation matrices for a multi-room key/door maze.
///
/// Node enumeration is fixed: rooms in spec order, then entities sorted by
/// kind (door, key, box, ball), then color, then room. Entity nodes carry
/// type = kind and attr = "<color>@<room>".
///
/// Edge conventions (chosen so the feasible graph is a DAG):
///   in_room      ball/box/loose key -> its room (boxed keys sit in the box)
///   is_adj       loose movables of one room, each to the next in node order
///   can_be_moved loose movables of one room, every earlier to every later
///   can_contain  box -> the key it contains
///   open_door    key -> locked door of the same color;
///                room -> unlocked door, from the room that holds the door only
///                (a room edge on both sides makes the room rows of any room
///                component linearly dependent, and the Jordan type then has
///                no path cover)

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "relalg/connector.hpp"
#include "relalg/partition.hpp"
#include "relalg/poset.hpp"
#include "relalg/relation.hpp"

namespace relalg {

enum class EntityKind { kBall, kBox, kKey, kDoor };

std::string_view entity_kind_name(EntityKind kind);
EntityKind parse_entity_kind(std::string_view name);

struct MazeEntity {
  std::string id;
  EntityKind kind = EntityKind::kBall;
  std::string color;
  std::string room;
  bool locked = false;                  // doors only
  std::optional<std::string> contains;  // boxes only: id of a key
  std::optional<std::string> connects;  // doors only: room on the far side
};

struct MazeSpec {
  std::vector<std::string> rooms;
  std::vector<MazeEntity> entities;
  std::vector<std::pair<std::string, std::string>> adjacency;
};

MazeSpec maze_spec_from_json(const nlohmann::json& j);
nlohmann::json maze_spec_to_json(const MazeSpec& spec);
MazeSpec read_maze_spec_file(const std::filesystem::path& path);

/// Throws kSpecValidation listing every offending reference.
void validate_maze_spec(const MazeSpec& spec);

enum class FeasibleRelation { kInRoom, kIsAdj, kCanBeMoved, kCanContain, kOpenDoor };

inline constexpr std::array<FeasibleRelation, 5> kFeasibleRelations = {
    FeasibleRelation::kInRoom, FeasibleRelation::kIsAdj, FeasibleRelation::kCanBeMoved,
    FeasibleRelation::kCanContain, FeasibleRelation::kOpenDoor};

std::string_view feasible_relation_name(FeasibleRelation rel);

struct RelationInstance {
  FeasibleRelation relation;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct FeasibleRelationSet {
  NodeIndex nodes;
  std::vector<RelationInstance> instances;  // grouped in kFeasibleRelations order

  std::size_t count(FeasibleRelation rel) const;
  bool has(FeasibleRelation rel, std::size_t from, std::size_t to) const;
};

FeasibleRelationSet feasible_relations(const MazeSpec& spec);

/// Boolean union of all relation instances over the attribute nodes.
BoolMatrix build_feasible_matrix(const MazeSpec& spec);
BoolMatrix to_matrix(const FeasibleRelationSet& set);

/// Reachability of one antichain member inside the closure (a highlighted
/// row and column of the zeta matrix).
struct ZetaHighlight {
  std::size_t node = 0;
  std::vector<std::size_t> up_set;    // y with node ⪯ y
  std::vector<std::size_t> down_set;  // x with x ⪯ node
};

struct AnalysisReport {
  FeasibleRelationSet relations;
  BoolMatrix feasible;
  BoolMatrix closure;  // reflexive transitive closure (= zeta matrix)
  std::vector<std::size_t> rank_sequence;
  std::vector<std::size_t> block_sizes;
  JordanPartition partition;
  Antichain antichain;
  OverlapReport overlap;
  std::vector<Connector> connectors;
  std::vector<ZetaHighlight> zeta_highlights;
  std::vector<std::size_t> locked_doors;
};

/// Builds the feasible matrix and runs closure, Jordan partition, maximum
/// antichain, overlap and connector discovery. A cyclic feasible matrix
/// raises kNotADag.
AnalysisReport analyze(const MazeSpec& spec);

nlohmann::json analysis_to_json(const AnalysisReport& report);

}  // namespace relalg
