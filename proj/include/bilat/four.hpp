#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bilat::four {

// Belnap's four truth values as the power set of {false, true}:
// bot = {}, f = {false}, t = {true}, top = {false, true}.
// bit 0 holds "contains true", bit 1 holds "contains false".
class Value {
 public:
  constexpr Value() : bits_(0) {}

  static constexpr Value f() { return Value(0b10); }
  static constexpr Value t() { return Value(0b01); }
  static constexpr Value bot() { return Value(0b00); }
  static constexpr Value top() { return Value(0b11); }

  friend constexpr bool operator==(Value a, Value b) = default;

  constexpr bool has_true() const { return bits_ & 0b01; }
  constexpr bool has_false() const { return bits_ & 0b10; }

  // Knowledge order is set inclusion; truth order grows the true part and
  // shrinks the false part.
  friend constexpr bool leq_k(Value a, Value b) { return (a.bits_ & b.bits_) == a.bits_; }
  friend constexpr bool leq_t(Value a, Value b) {
    return a.has_true() <= b.has_true() && b.has_false() <= a.has_false();
  }

  friend constexpr Value meet_k(Value a, Value b) { return Value(a.bits_ & b.bits_); }
  friend constexpr Value join_k(Value a, Value b) { return Value(a.bits_ | b.bits_); }
  friend constexpr Value meet_t(Value a, Value b) {
    return make(a.has_true() && b.has_true(), a.has_false() || b.has_false());
  }
  friend constexpr Value join_t(Value a, Value b) {
    return make(a.has_true() || b.has_true(), a.has_false() && b.has_false());
  }

  // Swaps the roles of true and false: fixes bot and top.
  friend constexpr Value neg(Value a) {
    return make(a.has_false(), a.has_true());
  }

  // Canonical enumeration order bot < f < t < top, the digit order of
  // interpretation indexing and table rows.
  static constexpr std::array<Value, 4> all() {
    return {bot(), f(), t(), top()};
  }
  constexpr int enum_index() const {
    constexpr int idx[4] = {0, 2, 1, 3};  // bits -> position in all()
    return idx[bits_];
  }

 private:
  explicit constexpr Value(std::uint8_t bits) : bits_(bits) {}
  static constexpr Value make(bool has_t, bool has_f) {
    return Value(static_cast<std::uint8_t>((has_t ? 0b01 : 0) | (has_f ? 0b10 : 0)));
  }

  std::uint8_t bits_;
};

inline std::string to_string(Value v) {
  if (v == Value::f()) return "f";
  if (v == Value::t()) return "t";
  if (v == Value::bot()) return "bot";
  return "top";
}

inline std::optional<Value> from_string(std::string_view s) {
  if (s == "f") return Value::f();
  if (s == "t") return Value::t();
  if (s == "bot") return Value::bot();
  if (s == "top") return Value::top();
  return std::nullopt;
}

inline constexpr std::string_view kind_name(Value) { return "four"; }

}  // namespace bilat::four
