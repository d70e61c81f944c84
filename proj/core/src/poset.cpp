#include "relalg/poset.hpp"

#include <algorithm>

namespace relalg {

bool Antichain::contains(std::size_t v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Poset poset_from_dag(const BoolMatrix& r) {
  auto order = topological_order(r);  // throws kNotADag
  return Poset(closure_floyd_warshall(r, Reflexivity::kReflexive), std::move(order));
}

ZetaMatrix zeta_matrix(const Poset& p) {
  const std::size_t n = p.size();
  ZetaMatrix z{IntRows(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z.entries[i][j] = p.leq(i, j) ? 1 : 0;
  }
  return z;
}

namespace {

void require_length(const Poset& p, std::size_t len, const char* what) {
  if (len != p.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::string(what) + ": vector length " +
                                                std::to_string(len) + " but poset has " +
                                                std::to_string(p.size()) + " elements");
  }
}

}  // namespace

std::vector<Rational> zeta_transform(const Poset& p, std::span<const Rational> f) {
  require_length(p, f.size(), "zeta_transform");
  const std::size_t n = p.size();
  std::vector<Rational> out(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (p.leq(x, y)) out[y] += f[x];
    }
  }
  return out;
}

IntRows multiply(const IntRows& a, const IntRows& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  IntRows out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

MobiusMatrix mobius_matrix(const Poset& p) {
  const std::size_t n = p.size();
  const auto& order = p.linear_extension();
  IntRows mu(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    mu[x][x] = 1;
    // Visiting y in linear-extension order guarantees every z ≺ y is final.
    for (const std::size_t y : order) {
      if (!p.less(x, y)) continue;
      std::int64_t sum = 0;
      for (const std::size_t z : order) {
        if (z == y) break;
        if (p.leq(x, z) && p.less(z, y)) sum += mu[x][z];
      }
      mu[x][y] = -sum;
    }
  }
  const IntRows check = multiply(zeta_matrix(p).entries, mu);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (check[i][j] != (i == j ? 1 : 0)) {
        throw Error(ErrorCode::kInvariantViolation, "Z*M != I at (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ")");
      }
    }
  }
  return MobiusMatrix{std::move(mu)};
}

std::vector<Rational> mobius_transform(const Poset& p, const MobiusMatrix& m,
                                       std::span<const Rational> F) {
  require_length(p, F.size(), "mobius_transform");
  const std::size_t n = p.size();
  std::vector<Rational> out(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (p.leq(x, y) && m.entries[x][y] != 0) out[y] += Rational(m.entries[x][y]) * F[x];
    }
  }
  return out;
}

std::vector<Rational> mobius_transform(const Poset& p, std::span<const Rational> F) {
  require_length(p, F.size(), "mobius_transform");
  return mobius_transform(p, mobius_matrix(p), F);
}

bool is_antichain(const Poset& p, std::span<const std::size_t> members) {
  for (const auto v : members) {
    if (v >= p.size()) {
      throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
    }
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a] == members[b] || p.comparable(members[a], members[b])) return false;
    }
  }
  return true;
}

namespace {

// Kuhn's augmenting-path matching on x_L → y_R for x ≺ y, scanning left
// vertices and their candidates in index order.
class ComparabilityMatching {
 public:
  ComparabilityMatching(const Poset& p, const std::vector<bool>& active)
      : p_(p),
        n_(p.size()),
        active_(active.empty() ? std::vector<bool>(n_, true) : active),
        match_left_(n_, kNone),
        match_right_(n_, kNone) {
    for (std::size_t x = 0; x < n_; ++x) {
      if (!active_[x]) continue;
      seen_.assign(n_, false);
      if (augment(x)) ++size_;
    }
  }

  std::size_t size() const { return size_; }
  std::size_t successor(std::size_t x) const { return match_left_[x]; }
  std::size_t predecessor(std::size_t y) const { return match_right_[y]; }
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (!active_[y] || !p_.less(x, y) || seen_[y]) continue;
      seen_[y] = true;
      if (match_right_[y] == kNone || augment(match_right_[y])) {
        match_left_[x] = y;
        match_right_[y] = x;
        return true;
      }
    }
    return false;
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<bool> active_;
  std::vector<std::size_t> match_left_, match_right_;
  std::vector<bool> seen_;
  std::size_t size_ = 0;
};

}  // namespace

std::size_t comparability_matching_size(const Poset& p, const std::vector<bool>& active) {
  if (!active.empty() && active.size() != p.size()) {
    throw Error(ErrorCode::kLengthMismatch, "active mask length mismatch");
  }
  return ComparabilityMatching(p, active).size();
}

std::vector<std::vector<std::size_t>> minimum_chain_cover(const Poset& p) {
  const ComparabilityMatching matching(p, {});
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (matching.predecessor(x) != ComparabilityMatching::kNone) continue;
    auto& chain = chains.emplace_back();
    for (std::size_t v = x; v != ComparabilityMatching::kNone; v = matching.successor(v)) {
      chain.push_back(v);
    }
  }
  return chains;
}

std::size_t width(const Poset& p) { return p.size() - comparability_matching_size(p); }

Antichain maximum_antichain(const Poset& p) {
  const std::size_t n = p.size();
  const std::size_t target = width(p);
  Antichain chosen;
  // candidate[v]: v is outside the choice and incomparable to every chosen element.
  std::vector<bool> candidate(n, true);
  for (std::size_t x = 0; x < n && chosen.size() < target; ++x) {
    if (!candidate[x]) continue;
    std::vector<bool> rest = candidate;
    std::size_t rest_count = 0;
    for (std::size_t y = 0; y < n; ++y) {
      rest[y] = rest[y] && y != x && !p.comparable(x, y);
      rest_count += rest[y] ? 1 : 0;
    }
    // Widest antichain inside `rest` is rest_count minus its matching size.
    const std::size_t extendable =
        chosen.size() + 1 + rest_count - comparability_matching_size(p, rest);
    if (extendable == target) {
      chosen.members.push_back(x);
      candidate = std::move(rest);
    } else {
      candidate[x] = false;
    }
  }
  if (chosen.size() != target) {
    throw Error(ErrorCode::kInvariantViolation, "antichain construction fell short of the width");
  }
  return chosen;
}

}  // namespace relalg
