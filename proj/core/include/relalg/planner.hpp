#pragma once

/// Boolean forward-reachability planning on synthetic partitioned MDPs,
/// instrumented with multiply-accumulate counters.
///
/// Instance layout: states are split into p uniform blocks of n/p
/// consecutive states. Actions [0, m − m̄) are block-local; the last m̄
/// actions carry only connector edges between adjacent blocks.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

struct BenchmarkConfig {
  std::size_t n = 8;        // states
  std::size_t m = 2;        // actions
  std::size_t p = 2;        // blocks
  std::size_t horizon = 1;  // planning steps
  std::size_t c = 1;        // connector edges
  std::size_t mbar = 1;     // inter-block actions
  double epsilon = 0.0;     // fraction of blocks recomputed per episode
  std::uint64_t seed = 0;
};

/// Throws kConfig when p ∤ n, m̄ > m, c < p − 1, or the instance cannot be
/// realised (no block-local action for blocks larger than one state, more
/// connectors than distinct adjacent-block edges, connectors without an
/// inter-block action).
void validate(const BenchmarkConfig& cfg);

struct ConnectorEdge {
  std::size_t action = 0;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct PartitionedMdp {
  BenchmarkConfig config;
  std::vector<BoolMatrix> transitions;  // one n×n matrix per action
  std::vector<std::size_t> block_of;    // state -> block
  std::vector<ConnectorEdge> connectors;

  std::size_t state_count() const { return block_of.size(); }
  std::size_t block_count() const { return config.p; }
  std::size_t block_size() const { return config.n / config.p; }
  std::size_t local_action_count() const { return config.m - config.mbar; }
  std::size_t block_begin(std::size_t block) const { return block * block_size(); }
};

class OpCounter {
 public:
  void add(std::uint64_t ops = 1) { count_ += ops; }
  void reset() { count_ = 0; }
  std::uint64_t count() const { return count_; }
  /// Integer division; 0 when steps == 0.
  std::uint64_t per_step(std::size_t steps) const { return steps == 0 ? 0 : count_ / steps; }

 private:
  std::uint64_t count_ = 0;
};

PartitionedMdp generate_benchmark(const BenchmarkConfig& cfg);

using StateSet = std::vector<bool>;

struct PlanResult {
  std::vector<StateSet> reachable;  // reachable[t]: states reachable within t steps
  OpCounter ops;
  std::size_t steps = 0;
};

/// Dense propagation over all m actions; exactly m·n² counted operations
/// per step. The initial set is {0} when `initial` is empty.
PlanResult flat_forward_plan(const PartitionedMdp& mdp, std::size_t horizon,
                             const StateSet& initial = {});

/// Precomputes per-block closures of the block-local actions, then plans on
/// the p×p block graph. Each step costs p² counted operations per
/// inter-block action that carries a connector; intra-block reachability is
/// a lookup in the precomputed closures. Reachable sets therefore run ahead
/// of the flat planner step-wise and agree with it once both converge
/// (horizon ≥ n suffices). With p = 1 there is no block graph and planning
/// falls back to flat propagation.
class PartitionedPlanner {
 public:
  explicit PartitionedPlanner(const PartitionedMdp& mdp);

  std::uint64_t precompute_ops() const { return precompute_ops_; }
  PlanResult plan(std::size_t horizon, const StateSet& initial = {}) const;

  /// Recomputes one block's closure; returns the counted delta (n_i³).
  /// Throws kUnknownBlock.
  std::uint64_t recompute_block(std::size_t block);

  const BoolMatrix& block_closure(std::size_t block) const;
  std::uint64_t closure_digest(std::size_t block) const;

 private:
  BoolMatrix compute_closure(std::size_t block, OpCounter& ops) const;

  const PartitionedMdp& mdp_;
  std::vector<BoolMatrix> closures_;       // per block, reflexive, local indices
  std::vector<std::size_t> active_actions_;  // inter-block actions with connectors
  std::uint64_t precompute_ops_ = 0;
};

struct PartitionedPlanResult {
  PlanResult plan;
  std::uint64_t precompute_ops = 0;
};

PartitionedPlanResult partitioned_forward_plan(const PartitionedMdp& mdp, std::size_t horizon,
                                               const StateSet& initial = {});

/// Standalone counted recompute on a freshly precomputed planner.
std::uint64_t recompute_block(const PartitionedMdp& mdp, std::size_t block);

struct BenchmarkRow {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0, p = 0;
  std::uint64_t flat_ops_per_step = 0;
  std::uint64_t part_ops_per_step = 0;
  std::uint64_t precompute_ops = 0;
  std::uint64_t recompute_ops = 0;
  bool reachable_equal = false;  // final sets of both planners
};

/// One episode: generate, plan flat and partitioned, then recompute
/// ⌈εp⌉ distinct seeded blocks.
BenchmarkRow run_benchmark(const BenchmarkConfig& cfg);

inline constexpr const char* kBenchmarkCsvHeader =
    "seed,n,m,p,flat_ops_per_step,part_ops_per_step,precompute_ops,recompute_ops";

std::string benchmark_csv_row(const BenchmarkRow& row);

}  // namespace relalg
