#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "bilat/rational.hpp"

namespace bilat::interval {

// Interval bilattice over the unit interval: a pair <lo,hi> of exact
// rationals in [0,1]. lo > hi is a legitimate value (the inconsistent side;
// top = <1,0>), not an error.
class Value {
 public:
  Value() : lo_(0), hi_(1) {}
  Value(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    lo_.canonicalize();
    hi_.canonicalize();
  }

  static Value f() { return Value(rat(0), rat(0)); }
  static Value t() { return Value(rat(1), rat(1)); }
  static Value bot() { return Value(rat(0), rat(1)); }
  static Value top() { return Value(rat(1), rat(0)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool in_unit_range() const {
    return lo_ >= 0 && lo_ <= 1 && hi_ >= 0 && hi_ <= 1;
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  // Truth grows both endpoints; knowledge tightens the interval.
  friend bool leq_t(const Value& a, const Value& b) {
    return a.lo_ <= b.lo_ && a.hi_ <= b.hi_;
  }
  friend bool leq_k(const Value& a, const Value& b) {
    return a.lo_ <= b.lo_ && b.hi_ <= a.hi_;
  }

  friend Value meet_t(const Value& a, const Value& b) {
    return Value(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
  }
  friend Value join_t(const Value& a, const Value& b) {
    return Value(std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }
  friend Value meet_k(const Value& a, const Value& b) {
    return Value(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }
  friend Value join_k(const Value& a, const Value& b) {
    return Value(std::max(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
  }

  friend Value neg(const Value& a) {
    return Value(1 - a.hi_, 1 - a.lo_);
  }

 private:
  Rational lo_;
  Rational hi_;
};

inline std::string to_string(const Value& v) {
  return "[" + rational_to_string(v.lo()) + "," + rational_to_string(v.hi()) + "]";
}

// Parses "[<lo>,<hi>]" with decimal or p/q endpoints.
inline std::optional<Value> from_string(std::string_view s) {
  if (s.size() < 5 || s.front() != '[' || s.back() != ']') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto lo = parse_rational(s.substr(0, comma));
  auto hi = parse_rational(s.substr(comma + 1));
  if (!lo || !hi) return std::nullopt;
  return Value(*lo, *hi);
}

inline constexpr std::string_view kind_name(const Value&) { return "interval"; }

}  // namespace bilat::interval
