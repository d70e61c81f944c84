#include "relalg/semiring.hpp"

#include <string>

namespace relalg {

std::string to_string(Weight w) {
  return w.is_infinite() ? std::string("inf") : std::to_string(w.value());
}

Weight TropicalSemiring::otimes(Weight a, Weight b) {
  if (a.is_infinite() || b.is_infinite()) return Weight::infinity();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
    return a.value() < 0 ? Weight(std::numeric_limits<std::int64_t>::min()) : Weight::infinity();
  }
  return Weight(sum);
}

Weight TropicalSemiring::star(Weight a) {
  if (!a.is_infinite() && a.value() < 0) {
    throw Error(ErrorCode::kUndefinedClosure,
                "tropical star of negative weight " + to_string(a) + " diverges");
  }
  return Weight(0);
}

std::vector<Weight> TropicalSemiring::default_samples() {
  return {Weight(0), Weight(1), Weight(3), Weight(7), Weight::infinity()};
}

std::uint64_t CountingSemiring::oplus(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "path count overflow in oplus");
  }
  return out;
}

std::uint64_t CountingSemiring::otimes(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "path count overflow in otimes");
  }
  return out;
}

std::uint64_t CountingSemiring::star(std::uint64_t a) {
  if (a != 0) {
    throw Error(ErrorCode::kUndefinedClosure,
                "counting star of nonzero value " + std::to_string(a) + " diverges");
  }
  return 1;
}

SemiringKind parse_semiring_kind(std::string_view name) {
  if (name == BooleanSemiring::name) return SemiringKind::kBoolean;
  if (name == TropicalSemiring::name) return SemiringKind::kTropical;
  if (name == CountingSemiring::name) return SemiringKind::kCounting;
  throw Error(ErrorCode::kInvalidArgument, "unknown semiring '" + std::string(name) + "'");
}

std::string_view semiring_name(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::kBoolean: return BooleanSemiring::name;
    case SemiringKind::kTropical: return TropicalSemiring::name;
    case SemiringKind::kCounting: return CountingSemiring::name;
  }
  return "unknown";
}

namespace {

template <class S, class F>
CarrierValue apply_binary(const CarrierValue& a, const CarrierValue& b, F op) {
  using V = typename S::value_type;
  const V* x = std::get_if<V>(&a);
  const V* y = std::get_if<V>(&b);
  if (x == nullptr || y == nullptr) {
    throw Error(ErrorCode::kType,
                "operand carrier does not match semiring " + std::string(S::name));
  }
  return CarrierValue(op(*x, *y));
}

template <class F>
CarrierValue dispatch_binary(SemiringKind kind, const CarrierValue& a, const CarrierValue& b,
                             F&& op) {
  switch (kind) {
    case SemiringKind::kBoolean:
      return apply_binary<BooleanSemiring>(a, b, op.template operator()<BooleanSemiring>());
    case SemiringKind::kTropical:
      return apply_binary<TropicalSemiring>(a, b, op.template operator()<TropicalSemiring>());
    case SemiringKind::kCounting:
      return apply_binary<CountingSemiring>(a, b, op.template operator()<CountingSemiring>());
  }
  throw Error(ErrorCode::kInvalidArgument, "bad semiring kind");
}

template <class S>
CarrierValue star_as(const CarrierValue& a) {
  using V = typename S::value_type;
  const V* x = std::get_if<V>(&a);
  if (x == nullptr) {
    throw Error(ErrorCode::kType,
                "operand carrier does not match semiring " + std::string(S::name));
  }
  return CarrierValue(S::star(*x));
}

}  // namespace

CarrierValue oplus(SemiringKind kind, const CarrierValue& a, const CarrierValue& b) {
  return dispatch_binary(kind, a, b, []<class S>() {
    return [](auto x, auto y) { return S::oplus(x, y); };
  });
}

CarrierValue otimes(SemiringKind kind, const CarrierValue& a, const CarrierValue& b) {
  return dispatch_binary(kind, a, b, []<class S>() {
    return [](auto x, auto y) { return S::otimes(x, y); };
  });
}

CarrierValue star(SemiringKind kind, const CarrierValue& a) {
  switch (kind) {
    case SemiringKind::kBoolean: return star_as<BooleanSemiring>(a);
    case SemiringKind::kTropical: return star_as<TropicalSemiring>(a);
    case SemiringKind::kCounting: return star_as<CountingSemiring>(a);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad semiring kind");
}

CarrierValue semiring_zero(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::kBoolean: return BooleanSemiring::zero();
    case SemiringKind::kTropical: return TropicalSemiring::zero();
    case SemiringKind::kCounting: return CountingSemiring::zero();
  }
  throw Error(ErrorCode::kInvalidArgument, "bad semiring kind");
}

CarrierValue semiring_one(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::kBoolean: return BooleanSemiring::one();
    case SemiringKind::kTropical: return TropicalSemiring::one();
    case SemiringKind::kCounting: return CountingSemiring::one();
  }
  throw Error(ErrorCode::kInvalidArgument, "bad semiring kind");
}

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(std::string_view axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

AxiomReport check_default_axioms(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::kBoolean:
      return check_axioms<BooleanSemiring>(BooleanSemiring::default_samples());
    case SemiringKind::kTropical:
      return check_axioms<TropicalSemiring>(TropicalSemiring::default_samples());
    case SemiringKind::kCounting:
      return check_axioms<CountingSemiring>(CountingSemiring::default_samples());
  }
  throw Error(ErrorCode::kInvalidArgument, "bad semiring kind");
}

}  // namespace relalg
