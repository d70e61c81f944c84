#include "relalg/scenario.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relalg/matrix_io.hpp"

namespace relalg {

using nlohmann::json;

std::string_view entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::kBall: return "ball";
    case EntityKind::kBox: return "box";
    case EntityKind::kKey: return "key";
    case EntityKind::kDoor: return "door";
  }
  return "unknown";
}

EntityKind parse_entity_kind(std::string_view name) {
  if (name == "ball") return EntityKind::kBall;
  if (name == "box") return EntityKind::kBox;
  if (name == "key") return EntityKind::kKey;
  if (name == "door") return EntityKind::kDoor;
  throw Error(ErrorCode::kSpecValidation, "unknown entity kind '" + std::string(name) + "'");
}

std::string_view feasible_relation_name(FeasibleRelation rel) {
  switch (rel) {
    case FeasibleRelation::kInRoom: return "in_room";
    case FeasibleRelation::kIsAdj: return "is_adj";
    case FeasibleRelation::kCanBeMoved: return "can_be_moved";
    case FeasibleRelation::kCanContain: return "can_contain";
    case FeasibleRelation::kOpenDoor: return "open_door";
  }
  return "unknown";
}

MazeSpec maze_spec_from_json(const json& j) {
  try {
    if (j.contains("format_version") && j.at("format_version") != kFormatVersion) {
      throw Error(ErrorCode::kParse, "unsupported format_version " + j.at("format_version").dump());
    }
    MazeSpec spec;
    spec.rooms = j.at("rooms").get<std::vector<std::string>>();
    for (const auto& e : j.at("entities")) {
      MazeEntity ent;
      ent.id = e.at("id").get<std::string>();
      ent.kind = parse_entity_kind(e.at("kind").get<std::string>());
      ent.color = e.at("color").get<std::string>();
      ent.room = e.at("room").get<std::string>();
      ent.locked = e.value("locked", false);
      if (e.contains("contains") && !e.at("contains").is_null()) {
        ent.contains = e.at("contains").get<std::string>();
      }
      if (e.contains("connects") && !e.at("connects").is_null()) {
        ent.connects = e.at("connects").get<std::string>();
      }
      spec.entities.push_back(std::move(ent));
    }
    if (j.contains("adjacency")) {
      for (const auto& pair : j.at("adjacency")) {
        const auto rooms = pair.get<std::vector<std::string>>();
        if (rooms.size() != 2) throw Error(ErrorCode::kParse, "adjacency entries are room pairs");
        spec.adjacency.emplace_back(rooms[0], rooms[1]);
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("maze spec: ") + e.what());
  }
}

json maze_spec_to_json(const MazeSpec& spec) {
  json entities = json::array();
  for (const auto& e : spec.entities) {
    json item = {{"id", e.id},
                 {"kind", std::string(entity_kind_name(e.kind))},
                 {"color", e.color},
                 {"room", e.room}};
    if (e.kind == EntityKind::kDoor) item["locked"] = e.locked;
    if (e.contains) item["contains"] = *e.contains;
    if (e.connects) item["connects"] = *e.connects;
    entities.push_back(std::move(item));
  }
  json adjacency = json::array();
  for (const auto& [a, b] : spec.adjacency) adjacency.push_back({a, b});
  return {{"format_version", kFormatVersion},
          {"rooms", spec.rooms},
          {"entities", std::move(entities)},
          {"adjacency", std::move(adjacency)}};
}

MazeSpec read_maze_spec_file(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return maze_spec_from_json(doc);
}

void validate_maze_spec(const MazeSpec& spec) {
  std::vector<std::string> problems;
  const std::set<std::string> rooms(spec.rooms.begin(), spec.rooms.end());
  if (rooms.size() != spec.rooms.size()) problems.push_back("duplicate room id");
  std::map<std::string, const MazeEntity*> by_id;
  for (const auto& e : spec.entities) {
    if (!by_id.emplace(e.id, &e).second) problems.push_back("duplicate entity id '" + e.id + "'");
  }
  std::set<std::pair<std::string, std::string>> adjacent;
  for (const auto& [a, b] : spec.adjacency) {
    for (const auto& r : {a, b}) {
      if (!rooms.contains(r)) problems.push_back("adjacency references unknown room '" + r + "'");
    }
    adjacent.emplace(a, b);
    adjacent.emplace(b, a);
  }
  std::set<std::string> contained;
  std::set<std::tuple<EntityKind, std::string, std::string>> attributes;
  for (const auto& e : spec.entities) {
    if (!rooms.contains(e.room)) {
      problems.push_back("entity '" + e.id + "' is in unknown room '" + e.room + "'");
    }
    if (e.color.empty()) problems.push_back("entity '" + e.id + "' has no color");
    if (!attributes.emplace(e.kind, e.color, e.room).second) {
      problems.push_back("entity '" + e.id + "' duplicates another " +
                         std::string(entity_kind_name(e.kind)) + " of color " + e.color + " in " +
                         e.room);
    }
    if (e.locked && e.kind != EntityKind::kDoor) {
      problems.push_back("only doors can be locked ('" + e.id + "')");
    }
    if (e.contains) {
      if (e.kind != EntityKind::kBox) {
        problems.push_back("only boxes can contain entities ('" + e.id + "')");
      }
      const auto it = by_id.find(*e.contains);
      if (it == by_id.end()) {
        problems.push_back("box '" + e.id + "' contains unknown entity '" + *e.contains + "'");
      } else if (it->second->kind != EntityKind::kKey) {
        problems.push_back("box '" + e.id + "' must contain a key, not '" + *e.contains + "'");
      } else {
        if (it->second->room != e.room) {
          problems.push_back("key '" + *e.contains + "' is not in the room of box '" + e.id + "'");
        }
        if (!contained.insert(*e.contains).second) {
          problems.push_back("key '" + *e.contains + "' is inside two boxes");
        }
      }
    }
    if (e.connects) {
      if (e.kind != EntityKind::kDoor) {
        problems.push_back("only doors connect rooms ('" + e.id + "')");
      } else if (!rooms.contains(*e.connects)) {
        problems.push_back("door '" + e.id + "' connects unknown room '" + *e.connects + "'");
      } else if (!adjacent.contains({e.room, *e.connects})) {
        problems.push_back("door '" + e.id + "' joins non-adjacent rooms " + e.room + " and " +
                           *e.connects);
      }
    }
  }
  if (!problems.empty()) {
    std::string text = "invalid maze spec: ";
    for (std::size_t i = 0; i < problems.size(); ++i) text += (i ? "; " : "") + problems[i];
    throw Error(ErrorCode::kSpecValidation, text);
  }
}

std::size_t FeasibleRelationSet::count(FeasibleRelation rel) const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [rel](const auto& i) { return i.relation == rel; }));
}

bool FeasibleRelationSet::has(FeasibleRelation rel, std::size_t from, std::size_t to) const {
  return std::any_of(instances.begin(), instances.end(), [&](const auto& i) {
    return i.relation == rel && i.from == from && i.to == to;
  });
}

namespace {

struct Enumeration {
  NodeIndex nodes;
  std::map<std::string, std::size_t> room_node;
  std::map<std::string, std::size_t> entity_node;
  std::vector<const MazeEntity*> entity_order;
};

// Obstacles before the objects that clear them: a locked door precedes its
// key and box, so the lexicographic maximum antichain keeps the door.
int enumeration_rank(EntityKind kind) {
  switch (kind) {
    case EntityKind::kDoor: return 0;
    case EntityKind::kKey: return 1;
    case EntityKind::kBox: return 2;
    case EntityKind::kBall: return 3;
  }
  return 4;
}

Enumeration enumerate(const MazeSpec& spec) {
  Enumeration out;
  std::vector<TypedNode> nodes;
  for (const auto& r : spec.rooms) {
    out.room_node[r] = nodes.size();
    nodes.push_back({"room", r});
  }
  std::vector<const MazeEntity*> ents;
  for (const auto& e : spec.entities) ents.push_back(&e);
  std::stable_sort(ents.begin(), ents.end(), [](const MazeEntity* a, const MazeEntity* b) {
    const int ka = enumeration_rank(a->kind);
    const int kb = enumeration_rank(b->kind);
    return std::tie(ka, a->color, a->room) < std::tie(kb, b->color, b->room);
  });
  for (const auto* e : ents) {
    out.entity_node[e->id] = nodes.size();
    nodes.push_back({std::string(entity_kind_name(e->kind)), e->color + "@" + e->room});
  }
  out.entity_order = std::move(ents);
  out.nodes = NodeIndex(std::move(nodes));
  return out;
}

}  // namespace

FeasibleRelationSet feasible_relations(const MazeSpec& spec) {
  validate_maze_spec(spec);
  const Enumeration en = enumerate(spec);
  std::set<std::string> boxed;
  for (const auto& e : spec.entities) {
    if (e.contains) boxed.insert(*e.contains);
  }
  const auto loose_movable = [&](const MazeEntity& e) {
    return e.kind != EntityKind::kDoor && !boxed.contains(e.id);
  };

  // Loose movables per room, in node order.
  std::map<std::string, std::vector<std::size_t>> movables;
  for (const auto* e : en.entity_order) {
    if (loose_movable(*e)) movables[e->room].push_back(en.entity_node.at(e->id));
  }

  FeasibleRelationSet set;
  set.nodes = en.nodes;
  const auto add = [&](FeasibleRelation rel, std::size_t from, std::size_t to) {
    set.instances.push_back({rel, from, to});
  };

  for (const auto* e : en.entity_order) {
    if (loose_movable(*e)) {
      add(FeasibleRelation::kInRoom, en.entity_node.at(e->id), en.room_node.at(e->room));
    }
  }
  for (const auto& room : spec.rooms) {
    const auto it = movables.find(room);
    if (it == movables.end()) continue;
    for (std::size_t i = 0; i + 1 < it->second.size(); ++i) {
      add(FeasibleRelation::kIsAdj, it->second[i], it->second[i + 1]);
    }
  }
  for (const auto& room : spec.rooms) {
    const auto it = movables.find(room);
    if (it == movables.end()) continue;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      for (std::size_t j = i + 1; j < it->second.size(); ++j) {
        add(FeasibleRelation::kCanBeMoved, it->second[i], it->second[j]);
      }
    }
  }
  for (const auto* e : en.entity_order) {
    if (e->contains) {
      add(FeasibleRelation::kCanContain, en.entity_node.at(e->id), en.entity_node.at(*e->contains));
    }
  }
  for (const auto* door : en.entity_order) {
    if (door->kind != EntityKind::kDoor) continue;
    const std::size_t d = en.entity_node.at(door->id);
    if (door->locked) {
      for (const auto* key : en.entity_order) {
        if (key->kind == EntityKind::kKey && key->color == door->color) {
          add(FeasibleRelation::kOpenDoor, en.entity_node.at(key->id), d);
        }
      }
    } else {
      add(FeasibleRelation::kOpenDoor, en.room_node.at(door->room), d);
    }
  }
  std::stable_sort(set.instances.begin(), set.instances.end(), [](const auto& a, const auto& b) {
    return static_cast<int>(a.relation) < static_cast<int>(b.relation);
  });
  return set;
}

BoolMatrix to_matrix(const FeasibleRelationSet& set) {
  BoolMatrix m(set.nodes);
  for (const auto& inst : set.instances) m.set(inst.from, inst.to, true);
  return m;
}

BoolMatrix build_feasible_matrix(const MazeSpec& spec) { return to_matrix(feasible_relations(spec)); }

AnalysisReport analyze(const MazeSpec& spec) {
  FeasibleRelationSet relations = feasible_relations(spec);
  BoolMatrix feasible = to_matrix(relations);
  const auto cycle = find_cycle(feasible);
  if (!cycle.empty()) {
    throw Error(ErrorCode::kNotADag, "feasible relation matrix is cyclic: " +
                                         describe_cycle(feasible.nodes(), cycle));
  }
  const Poset poset = poset_from_dag(feasible);
  auto ranks = rank_sequence(feasible);
  auto sizes = jordan_block_sizes(feasible);
  JordanPartition partition = chain_decomposition(feasible, sizes);
  Antichain antichain = maximum_antichain(poset);
  OverlapReport overlap = antichain_overlap(partition, antichain);
  auto connectors = find_connectors(feasible, partition);

  std::vector<ZetaHighlight> highlights;
  for (const auto a : antichain.members) {
    ZetaHighlight h{a, {}, {}};
    for (std::size_t v = 0; v < poset.size(); ++v) {
      if (poset.leq(a, v)) h.up_set.push_back(v);
      if (poset.leq(v, a)) h.down_set.push_back(v);
    }
    highlights.push_back(std::move(h));
  }
  std::vector<std::size_t> locked;
  for (std::size_t v = 0; v < feasible.size(); ++v) {
    const auto& node = feasible.nodes()[v];
    if (node.type_tag != "door") continue;
    for (const auto& e : spec.entities) {
      if (e.kind == EntityKind::kDoor && e.locked && e.color + "@" + e.room == node.attribute) {
        locked.push_back(v);
      }
    }
  }
  return AnalysisReport{std::move(relations), std::move(feasible), poset.leq_matrix(),
                        std::move(ranks),     std::move(sizes),    std::move(partition),
                        std::move(antichain), std::move(overlap),  std::move(connectors),
                        std::move(highlights), std::move(locked)};
}

json analysis_to_json(const AnalysisReport& r) {
  const NodeIndex& nodes = r.feasible.nodes();
  json relations = json::object();
  for (const auto rel : kFeasibleRelations) {
    json list = json::array();
    for (const auto& inst : r.relations.instances) {
      if (inst.relation == rel) list.push_back({inst.from, inst.to});
    }
    relations[std::string(feasible_relation_name(rel))] = std::move(list);
  }
  json blocks = json::array();
  for (std::size_t b = 0; b < r.partition.block_count(); ++b) {
    const auto& blk = r.partition.block(b);
    blocks.push_back({{"id", b},
                      {"size", blk.spec.size},
                      {"eigenvalue", blk.spec.eigenvalue.str()},
                      {"chain", blk.chain},
                      {"source", node_ref_json(nodes, blk.source())},
                      {"sink", node_ref_json(nodes, blk.sink())}});
  }
  json antichain = json::array();
  for (const auto v : r.antichain.members) antichain.push_back(node_ref_json(nodes, v));
  json overlap_members = json::array();
  for (const auto& m : r.overlap.members) {
    overlap_members.push_back({{"node", m.node},
                               {"block", m.block},
                               {"position", std::string(chain_position_name(m.position))}});
  }
  json overlap_blocks = json::array();
  for (const auto& b : r.overlap.blocks) {
    overlap_blocks.push_back({{"block", b.block},
                              {"size", b.size},
                              {"antichain_members", b.antichain_members},
                              {"sink_in_antichain", b.sink_in_antichain}});
  }
  json connectors = json::array();
  for (const auto& c : r.connectors) {
    connectors.push_back({{"id", c.id},
                          {"from_block", c.from_block},
                          {"to_block", c.to_block},
                          {"source", node_ref_json(nodes, c.source)},
                          {"target", node_ref_json(nodes, c.target)},
                          {"lambda", c.enabled}});
  }
  json highlights = json::array();
  for (const auto& h : r.zeta_highlights) {
    highlights.push_back({{"node", h.node}, {"up_set", h.up_set}, {"down_set", h.down_set}});
  }
  return {{"format_version", kFormatVersion},
          {"nodes", nodes_to_json(nodes)},
          {"relations", std::move(relations)},
          {"feasible", matrix_to_json(r.feasible)},
          {"closure", matrix_to_json(r.closure)},
          {"rank_sequence", r.rank_sequence},
          {"block_sizes", r.block_sizes},
          {"cover_method", std::string(cover_method_name(r.partition.method()))},
          {"blocks", std::move(blocks)},
          {"antichain", std::move(antichain)},
          {"overlap", {{"members", std::move(overlap_members)}, {"blocks", std::move(overlap_blocks)}}},
          {"connectors", std::move(connectors)},
          {"zeta_highlights", std::move(highlights)},
          {"locked_doors", r.locked_doors}};
}

}  // namespace relalg
