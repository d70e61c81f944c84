#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relalg/relation.hpp"

namespace relalg {

using Rational = boost::multiprecision::cpp_rational;
using IntRows = std::vector<std::vector<std::int64_t>>;

/// Z[i][j] = 1 iff x_i ⪯ x_j.
struct ZetaMatrix {
  IntRows entries;
};

/// M[i][j] = μ(x_i, x_j); the integer inverse of the zeta matrix.
struct MobiusMatrix {
  IntRows entries;
};

struct Antichain {
  std::vector<std::size_t> members;  // ascending node indices

  std::size_t size() const { return members.size(); }
  bool contains(std::size_t v) const;
};

/// Partial order given by the reflexive transitive closure of a DAG.
class Poset {
 public:
  const NodeIndex& nodes() const { return leq_.nodes(); }
  std::size_t size() const { return leq_.size(); }

  bool leq(std::size_t x, std::size_t y) const { return leq_(x, y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq_(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq_(x, y) || leq_(y, x); }

  const BoolMatrix& leq_matrix() const { return leq_; }
  /// Topological order of the underlying DAG (smallest index first on ties).
  const std::vector<std::size_t>& linear_extension() const { return order_; }

 private:
  friend Poset poset_from_dag(const BoolMatrix& r);
  Poset(BoolMatrix leq, std::vector<std::size_t> order)
      : leq_(std::move(leq)), order_(std::move(order)) {}

  BoolMatrix leq_;
  std::vector<std::size_t> order_;
};

/// Throws kNotADag (naming one cycle) when the relation has a cycle.
Poset poset_from_dag(const BoolMatrix& r);

ZetaMatrix zeta_matrix(const Poset& p);

/// F(y) = Σ_{x ⪯ y} f(x).
std::vector<Rational> zeta_transform(const Poset& p, std::span<const Rational> f);

/// μ(x,x) = 1, μ(x,y) = −Σ_{x ⪯ z ≺ y} μ(x,z), evaluated along a linear
/// extension. Checks Z·M = I before returning (kInvariantViolation otherwise).
MobiusMatrix mobius_matrix(const Poset& p);

/// f(y) = Σ_{x ⪯ y} μ(x,y) F(x); inverts zeta_transform exactly.
std::vector<Rational> mobius_transform(const Poset& p, std::span<const Rational> F);
std::vector<Rational> mobius_transform(const Poset& p, const MobiusMatrix& m,
                                       std::span<const Rational> F);

/// Integer matrix product, used for the Z·M = I identity.
IntRows multiply(const IntRows& a, const IntRows& b);

bool is_antichain(const Poset& p, std::span<const std::size_t> members);

/// Size of a maximum matching in the bipartite graph x_L → y_R for x ≺ y,
/// restricted to the `active` elements (all when empty).
std::size_t comparability_matching_size(const Poset& p, const std::vector<bool>& active = {});

/// Minimum chain cover (Dilworth) obtained from a maximum matching; chains are
/// listed by their least element.
std::vector<std::vector<std::size_t>> minimum_chain_cover(const Poset& p);

/// Width of the poset: n minus the comparability matching size.
std::size_t width(const Poset& p);

/// A maximum-cardinality antichain. Among all maximum antichains the
/// lexicographically smallest member set is returned: elements are admitted
/// in index order whenever the matching-derived width of the remaining
/// incomparable elements shows a maximum antichain still extends the choice.
Antichain maximum_antichain(const Poset& p);

}  // namespace relalg
