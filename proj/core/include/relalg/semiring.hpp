#pragma once

/// Closed semirings (S, ⊕, ⊗, *, 0, 1) used as the carrier algebra of every
/// relation matrix in the library.
///
/// A semiring is a stateless policy type exposing a `value_type` plus static
/// `zero`, `one`, `oplus`, `otimes` and (for closed semirings) `star`. All
/// matrix algorithms are templated on the policy, so new carriers plug in by
/// satisfying `ClosedSemiring`.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "relalg/error.hpp"

namespace relalg {

template <class S>
concept Semiring = requires(typename S::value_type a, typename S::value_type b) {
  typename S::value_type;
  { S::name } -> std::convertible_to<std::string_view>;
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { S::oplus(a, b) } -> std::same_as<typename S::value_type>;
  { S::otimes(a, b) } -> std::same_as<typename S::value_type>;
  { a == b } -> std::convertible_to<bool>;
};

template <class S>
concept ClosedSemiring = Semiring<S> && requires(typename S::value_type a) {
  { S::star(a) } -> std::same_as<typename S::value_type>;
};

/// Extended weight for the min-plus semiring: an integer or +infinity.
/// Arithmetic with infinity saturates.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::int64_t value) : value_(value) {}

  static constexpr Weight infinity() { return Weight(kInf); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(Weight, Weight) = default;
  friend constexpr auto operator<=>(Weight, Weight) = default;

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

std::string to_string(Weight w);

struct BooleanSemiring {
  using value_type = bool;
  static constexpr std::string_view name = "boolean";

  static constexpr bool zero() { return false; }
  static constexpr bool one() { return true; }
  static constexpr bool oplus(bool a, bool b) { return a || b; }
  static constexpr bool otimes(bool a, bool b) { return a && b; }
  static constexpr bool star(bool) { return true; }

  static std::vector<bool> default_samples() { return {false, true}; }
  static std::string format(bool v) { return v ? "1" : "0"; }
};

/// Min-plus: ⊕ = min, ⊗ = saturating +, 0 = +inf, 1 = 0.
/// star(a) = 0 for a ≥ 0; negative weights have no finite closure.
struct TropicalSemiring {
  using value_type = Weight;
  static constexpr std::string_view name = "tropical";

  static constexpr Weight zero() { return Weight::infinity(); }
  static constexpr Weight one() { return Weight(0); }
  static constexpr Weight oplus(Weight a, Weight b) { return a < b ? a : b; }
  static Weight otimes(Weight a, Weight b);
  static Weight star(Weight a);

  static std::vector<Weight> default_samples();
  static std::string format(Weight w) { return to_string(w); }
};

/// Path counting over the naturals. Scalar star is only defined at 0 (the
/// geometric series of a nonzero count diverges); matrix closure is finite
/// exactly on nilpotent (acyclic) matrices.
struct CountingSemiring {
  using value_type = std::uint64_t;
  static constexpr std::string_view name = "counting";

  static constexpr std::uint64_t zero() { return 0; }
  static constexpr std::uint64_t one() { return 1; }
  static std::uint64_t oplus(std::uint64_t a, std::uint64_t b);
  static std::uint64_t otimes(std::uint64_t a, std::uint64_t b);
  static std::uint64_t star(std::uint64_t a);

  static std::vector<std::uint64_t> default_samples() { return {0, 1, 2, 5}; }
  static std::string format(std::uint64_t v) { return std::to_string(v); }
};

// ---------------------------------------------------------------------------
// Runtime-selected instances (CLI flags and file headers carry the name).

enum class SemiringKind { kBoolean, kTropical, kCounting };

SemiringKind parse_semiring_kind(std::string_view name);
std::string_view semiring_name(SemiringKind kind);

using CarrierValue = std::variant<bool, Weight, std::uint64_t>;

/// Dynamic counterparts of the static policy operations. Operands must carry
/// the alternative that belongs to `kind`, otherwise `ErrorCode::kType`.
CarrierValue oplus(SemiringKind kind, const CarrierValue& a, const CarrierValue& b);
CarrierValue otimes(SemiringKind kind, const CarrierValue& a, const CarrierValue& b);
CarrierValue star(SemiringKind kind, const CarrierValue& a);
CarrierValue semiring_zero(SemiringKind kind);
CarrierValue semiring_one(SemiringKind kind);

// ---------------------------------------------------------------------------
// Axiom audit.

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failing tuple, empty when passed
};

struct AxiomReport {
  std::string semiring;
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult* find(std::string_view axiom) const;
};

namespace detail {

template <class S>
std::string format_value(const typename S::value_type& v) {
  if constexpr (requires { S::format(v); }) {
    return S::format(v);
  } else {
    return "?";
  }
}

template <class S>
class AxiomTally {
 public:
  explicit AxiomTally(std::string name) { result_.axiom = std::move(name); }

  template <class... Vs>
  void record(bool ok, const Vs&... values) {
    ++result_.cases;
    if (ok || !result_.passed) return;
    result_.passed = false;
    std::string text = "(";
    bool first = true;
    ((text += (first ? "" : ", ") + format_value<S>(values), first = false), ...);
    result_.counterexample = text + ")";
  }

  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

}  // namespace detail

/// Exhaustive audit of the semiring laws over every sample pair/triple, plus
/// the closure law a* = 1 ⊕ a⊗a* = 1 ⊕ a*⊗a wherever star is defined. Failures
/// are reported, never thrown.
template <Semiring S>
AxiomReport check_axioms(std::span<const typename S::value_type> samples) {
  using V = typename S::value_type;
  if (samples.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "axiom check needs at least one sample");
  }
  const V zero = S::zero();
  const V one = S::one();

  detail::AxiomTally<S> plus_comm("oplus_commutative");
  detail::AxiomTally<S> plus_assoc("oplus_associative");
  detail::AxiomTally<S> plus_ident("oplus_identity");
  detail::AxiomTally<S> times_assoc("otimes_associative");
  detail::AxiomTally<S> times_ident("otimes_identity");
  detail::AxiomTally<S> left_dist("left_distributive");
  detail::AxiomTally<S> right_dist("right_distributive");
  detail::AxiomTally<S> absorbing("zero_absorbing");
  detail::AxiomTally<S> closure_left("closure_left");
  detail::AxiomTally<S> closure_right("closure_right");

  for (const V& a : samples) {
    plus_ident.record(S::oplus(zero, a) == a && S::oplus(a, zero) == a, a);
    times_ident.record(S::otimes(one, a) == a && S::otimes(a, one) == a, a);
    absorbing.record(S::otimes(zero, a) == zero && S::otimes(a, zero) == zero, a);
    if constexpr (ClosedSemiring<S>) {
      try {
        const V s = S::star(a);
        closure_left.record(S::oplus(one, S::otimes(a, s)) == s, a);
        closure_right.record(S::oplus(one, S::otimes(s, a)) == s, a);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kUndefinedClosure) throw;
      }
    }
    for (const V& b : samples) {
      plus_comm.record(S::oplus(a, b) == S::oplus(b, a), a, b);
      for (const V& c : samples) {
        plus_assoc.record(S::oplus(S::oplus(a, b), c) == S::oplus(a, S::oplus(b, c)), a, b, c);
        times_assoc.record(S::otimes(S::otimes(a, b), c) == S::otimes(a, S::otimes(b, c)), a, b, c);
        left_dist.record(
            S::otimes(a, S::oplus(b, c)) == S::oplus(S::otimes(a, b), S::otimes(a, c)), a, b, c);
        right_dist.record(
            S::otimes(S::oplus(a, b), c) == S::oplus(S::otimes(a, c), S::otimes(b, c)), a, b, c);
      }
    }
  }

  AxiomReport report;
  report.semiring = std::string(S::name);
  for (auto* tally : {&plus_comm, &plus_assoc, &plus_ident, &times_assoc, &times_ident,
                      &left_dist, &right_dist, &absorbing}) {
    report.results.push_back(tally->take());
  }
  if constexpr (ClosedSemiring<S>) {
    report.results.push_back(closure_left.take());
    report.results.push_back(closure_right.take());
  }
  return report;
}

template <Semiring S>
AxiomReport check_axioms(const std::vector<typename S::value_type>& samples) {
  if constexpr (std::is_same_v<typename S::value_type, bool>) {
    // std::vector<bool> is bit-packed, so it cannot back a span.
    const auto values = std::make_unique<bool[]>(samples.size());
    std::copy(samples.begin(), samples.end(), values.get());
    return check_axioms<S>(std::span<const bool>(values.get(), samples.size()));
  } else {
    return check_axioms<S>(std::span<const typename S::value_type>(samples));
  }
}

/// Audit with the instance's built-in sample set.
AxiomReport check_default_axioms(SemiringKind kind);

}  // namespace relalg
