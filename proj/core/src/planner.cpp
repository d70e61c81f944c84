#include "relalg/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace relalg {

void validate(const BenchmarkConfig& cfg) {
  const auto fail = [](const std::string& what) { throw Error(ErrorCode::kConfig, what); };
  if (cfg.n == 0 || cfg.m == 0 || cfg.p == 0) fail("n, m and p must be positive");
  if (cfg.n % cfg.p != 0) {
    fail("p=" + std::to_string(cfg.p) + " does not divide n=" + std::to_string(cfg.n));
  }
  if (cfg.mbar > cfg.m) fail("mbar exceeds m");
  if (cfg.c + 1 < cfg.p) {
    fail("c=" + std::to_string(cfg.c) + " connectors cannot join p=" + std::to_string(cfg.p) +
         " blocks (need at least p-1)");
  }
  const std::size_t s = cfg.n / cfg.p;
  if (s > 1 && cfg.mbar == cfg.m) fail("blocks larger than one state need a block-local action");
  if (cfg.c > 0 && cfg.mbar == 0) fail("connectors need at least one inter-block action");
  const std::size_t max_connectors = 2 * (cfg.p - 1) * s * s;
  if (cfg.c > max_connectors) {
    fail("c=" + std::to_string(cfg.c) + " exceeds the " + std::to_string(max_connectors) +
         " distinct edges between adjacent blocks");
  }
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) fail("epsilon must lie in [0, 1]");
}

PartitionedMdp generate_benchmark(const BenchmarkConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = cfg.n;
  const std::size_t s = n / cfg.p;
  const NodeIndex nodes = NodeIndex::numbered(n);

  PartitionedMdp mdp;
  mdp.config = cfg;
  mdp.block_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) mdp.block_of[v] = v / s;
  mdp.transitions.assign(cfg.m, BoolMatrix(nodes));

  // Action 0 cycles through every block; further local actions add sparse
  // random intra-block edges.
  std::bernoulli_distribution extra(0.25);
  for (std::size_t a = 0; a < mdp.local_action_count(); ++a) {
    for (std::size_t b = 0; b < cfg.p; ++b) {
      const std::size_t base = b * s;
      for (std::size_t i = 0; i < s; ++i) {
        if (a == 0 && s > 1) mdp.transitions[a].set(base + i, base + (i + 1) % s, true);
        for (std::size_t j = 0; j < s; ++j) {
          if (a > 0 && i != j && extra(rng)) mdp.transitions[a].set(base + i, base + j, true);
        }
      }
    }
  }

  std::uniform_int_distribution<std::size_t> pick_state(0, s - 1);
  std::set<std::pair<std::size_t, std::size_t>> used;
  const auto place = [&](std::size_t from_block, std::size_t to_block) {
    const std::size_t u = from_block * s + pick_state(rng);
    const std::size_t v = to_block * s + pick_state(rng);
    if (!used.emplace(u, v).second) return false;
    const std::size_t action = mdp.local_action_count() + mdp.connectors.size() % cfg.mbar;
    mdp.connectors.push_back({action, u, v});
    mdp.transitions[action].set(u, v, true);
    return true;
  };
  // The first p−1 connectors chain block i to block i+1.
  for (std::size_t b = 0; b + 1 < cfg.p; ++b) {
    while (!place(b, b + 1)) {
    }
  }
  if (cfg.p > 1) {
    std::uniform_int_distribution<std::size_t> pick_pair(0, cfg.p - 2);
    std::bernoulli_distribution backward(0.5);
    while (mdp.connectors.size() < cfg.c) {
      const std::size_t b = pick_pair(rng);
      if (backward(rng)) {
        place(b + 1, b);
      } else {
        place(b, b + 1);
      }
    }
  }
  return mdp;
}

namespace {

StateSet initial_set(const PartitionedMdp& mdp, const StateSet& initial) {
  if (initial.empty()) {
    StateSet out(mdp.state_count(), false);
    out[0] = true;
    return out;
  }
  if (initial.size() != mdp.state_count()) {
    throw Error(ErrorCode::kLengthMismatch, "initial state set has length " +
                                                std::to_string(initial.size()) + ", expected " +
                                                std::to_string(mdp.state_count()));
  }
  return initial;
}

}  // namespace

PlanResult flat_forward_plan(const PartitionedMdp& mdp, std::size_t horizon,
                             const StateSet& initial) {
  const std::size_t n = mdp.state_count();
  PlanResult result;
  result.reachable.push_back(initial_set(mdp, initial));
  for (std::size_t t = 0; t < horizon; ++t) {
    const StateSet& cur = result.reachable.back();
    StateSet next = cur;
    for (const auto& T : mdp.transitions) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          result.ops.add();
          if (cur[i] && T(i, j)) next[j] = true;
        }
      }
    }
    result.reachable.push_back(std::move(next));
  }
  result.steps = horizon;
  return result;
}

PartitionedPlanner::PartitionedPlanner(const PartitionedMdp& mdp) : mdp_(mdp) {
  if (mdp.block_count() == 1) return;
  OpCounter ops;
  for (std::size_t b = 0; b < mdp.block_count(); ++b) closures_.push_back(compute_closure(b, ops));
  precompute_ops_ = ops.count();
  std::set<std::size_t> active;
  for (const auto& c : mdp.connectors) active.insert(c.action);
  active_actions_.assign(active.begin(), active.end());
}

BoolMatrix PartitionedPlanner::compute_closure(std::size_t block, OpCounter& ops) const {
  const std::size_t s = mdp_.block_size();
  const std::size_t base = mdp_.block_begin(block);
  auto local = BoolMatrix::identity(NodeIndex::numbered(s));
  for (std::size_t a = 0; a < mdp_.local_action_count(); ++a) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (mdp_.transitions[a](base + i, base + j)) local.set(i, j, true);
      }
    }
  }
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        ops.add();
        if (local(i, k) && local(k, j)) local.set(i, j, true);
      }
    }
  }
  return local;
}

PlanResult PartitionedPlanner::plan(std::size_t horizon, const StateSet& initial) const {
  if (mdp_.block_count() == 1) return flat_forward_plan(mdp_, horizon, initial);
  const std::size_t p = mdp_.block_count();
  const std::size_t s = mdp_.block_size();

  // cells[a][I·p + J]: connectors of active action a from block I to block J.
  std::vector<std::vector<std::vector<std::size_t>>> cells(
      active_actions_.size(), std::vector<std::vector<std::size_t>>(p * p));
  for (std::size_t k = 0; k < mdp_.connectors.size(); ++k) {
    const auto& c = mdp_.connectors[k];
    const auto slot = static_cast<std::size_t>(
        std::find(active_actions_.begin(), active_actions_.end(), c.action) -
        active_actions_.begin());
    cells[slot][mdp_.block_of[c.from] * p + mdp_.block_of[c.to]].push_back(k);
  }

  const auto enter = [&](std::size_t v, StateSet& set) {
    const std::size_t b = mdp_.block_of[v];
    const std::size_t base = mdp_.block_begin(b);
    for (std::size_t j = 0; j < s; ++j) {
      if (closures_[b](v - base, j)) set[base + j] = true;
    }
  };

  PlanResult result;
  const StateSet start = initial_set(mdp_, initial);
  StateSet resolved = start;
  for (std::size_t v = 0; v < start.size(); ++v) {
    if (start[v]) enter(v, resolved);
  }
  result.reachable.push_back(std::move(resolved));
  for (std::size_t t = 0; t < horizon; ++t) {
    const StateSet& cur = result.reachable.back();
    StateSet next = cur;
    for (const auto& action_cells : cells) {
      for (std::size_t cell = 0; cell < p * p; ++cell) {
        result.ops.add();
        for (const auto k : action_cells[cell]) {
          const auto& c = mdp_.connectors[k];
          if (cur[c.from] && !next[c.to]) enter(c.to, next);
        }
      }
    }
    result.reachable.push_back(std::move(next));
  }
  result.steps = horizon;
  return result;
}

std::uint64_t PartitionedPlanner::recompute_block(std::size_t block) {
  if (block >= mdp_.block_count()) {
    throw Error(ErrorCode::kUnknownBlock, "block " + std::to_string(block) + " out of range (" +
                                              std::to_string(mdp_.block_count()) + " blocks)");
  }
  OpCounter ops;
  if (mdp_.block_count() == 1) {
    // No stored closures in the flat fallback; the count is still n_i³.
    compute_closure(block, ops);
  } else {
    closures_[block] = compute_closure(block, ops);
  }
  return ops.count();
}

const BoolMatrix& PartitionedPlanner::block_closure(std::size_t block) const {
  if (block >= closures_.size()) {
    throw Error(ErrorCode::kUnknownBlock, "no stored closure for block " + std::to_string(block));
  }
  return closures_[block];
}

std::uint64_t PartitionedPlanner::closure_digest(std::size_t block) const {
  const BoolMatrix& c = block_closure(block);
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      h ^= c(i, j) ? 1U : 0U;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

PartitionedPlanResult partitioned_forward_plan(const PartitionedMdp& mdp, std::size_t horizon,
                                               const StateSet& initial) {
  const PartitionedPlanner planner(mdp);
  return {planner.plan(horizon, initial), planner.precompute_ops()};
}

std::uint64_t recompute_block(const PartitionedMdp& mdp, std::size_t block) {
  PartitionedPlanner planner(mdp);
  return planner.recompute_block(block);
}

BenchmarkRow run_benchmark(const BenchmarkConfig& cfg) {
  const PartitionedMdp mdp = generate_benchmark(cfg);
  const PlanResult flat = flat_forward_plan(mdp, cfg.horizon);
  PartitionedPlanner planner(mdp);
  const PlanResult part = planner.plan(cfg.horizon);

  BenchmarkRow row;
  row.seed = cfg.seed;
  row.n = cfg.n;
  row.m = cfg.m;
  row.p = cfg.p;
  row.flat_ops_per_step = flat.ops.per_step(flat.steps);
  row.part_ops_per_step = part.ops.per_step(part.steps);
  row.precompute_ops = planner.precompute_ops();
  row.reachable_equal = flat.reachable.back() == part.reachable.back();

  const auto k = std::min<std::size_t>(
      cfg.p, static_cast<std::size_t>(std::ceil(cfg.epsilon * static_cast<double>(cfg.p))));
  std::vector<std::size_t> blocks(cfg.p);
  std::iota(blocks.begin(), blocks.end(), 0);
  std::vector<std::size_t> chosen;
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::sample(blocks.begin(), blocks.end(), std::back_inserter(chosen), k, rng);
  for (const auto b : chosen) row.recompute_ops += planner.recompute_block(b);
  return row;
}

std::string benchmark_csv_row(const BenchmarkRow& row) {
  std::ostringstream out;
  out << row.seed << ',' << row.n << ',' << row.m << ',' << row.p << ',' << row.flat_ops_per_step
      << ',' << row.part_ops_per_step << ',' << row.precompute_ops << ',' << row.recompute_ops;
  return out.str();
}

}  // namespace relalg
