#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>

#include "bilat/four.hpp"
#include "bilat/interval.hpp"

namespace bilat {

// One abstract value interface; every operator module downstream is written
// once against this concept and instantiated per kind. Mixing kinds inside a
// computation is then a type error, not a runtime check.
template <typename V>
concept BilatticeValue = requires(const V a, const V b) {
  { V::f() } -> std::convertible_to<V>;
  { V::t() } -> std::convertible_to<V>;
  { V::bot() } -> std::convertible_to<V>;
  { V::top() } -> std::convertible_to<V>;
  { meet_t(a, b) } -> std::convertible_to<V>;
  { join_t(a, b) } -> std::convertible_to<V>;
  { meet_k(a, b) } -> std::convertible_to<V>;
  { join_k(a, b) } -> std::convertible_to<V>;
  { neg(a) } -> std::convertible_to<V>;
  { leq_t(a, b) } -> std::convertible_to<bool>;
  { leq_k(a, b) } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  { kind_name(a) } -> std::convertible_to<std::string_view>;
};

static_assert(BilatticeValue<four::Value>);
static_assert(BilatticeValue<interval::Value>);

// Set bounds fold the binary operation; the empty set yields the identity
// (the order's bottom for a lub, its top for a glb).
template <BilatticeValue V>
V big_lub_t(std::span<const V> s) {
  V acc = V::f();
  for (const V& v : s) acc = join_t(acc, v);
  return acc;
}

template <BilatticeValue V>
V big_glb_t(std::span<const V> s) {
  V acc = V::t();
  for (const V& v : s) acc = meet_t(acc, v);
  return acc;
}

template <BilatticeValue V>
V big_lub_k(std::span<const V> s) {
  V acc = V::bot();
  for (const V& v : s) acc = join_k(acc, v);
  return acc;
}

template <BilatticeValue V>
V big_glb_k(std::span<const V> s) {
  V acc = V::top();
  for (const V& v : s) acc = meet_k(acc, v);
  return acc;
}

// FOUR sits inside the interval bilattice; the map commutes with all five
// operations (tested exhaustively).
inline interval::Value embed(four::Value v) {
  return interval::Value(rat(v.has_true() ? 1 : 0), rat(v.has_false() ? 0 : 1));
}

enum class Kind { four, unit_interval };

inline std::string_view kind_to_string(Kind k) {
  return k == Kind::four ? "four" : "interval";
}

}  // namespace bilat
