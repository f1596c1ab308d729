// Energy levels and time budgets.
//
// Energy ranges over the lattice {bottom} u [0, inf) u {inf}; bottom stands
// for "no run exists". Durations range over [0, inf].

#pragma once

#include "rtea/rational.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace rtea {

class Energy {
 public:
  enum class Kind : std::uint8_t { Bottom, Finite, Infinity };

  /// Bottom.
  Energy() = default;

  static Energy bottom() { return Energy(); }
  static Energy infinity() { return Energy(Kind::Infinity, Rational(0)); }
  /// Throws std::invalid_argument if `value` is negative.
  static Energy finite(Rational value);

  Kind kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinity; }

  /// Payload of a finite energy; zero for the other kinds.
  const Rational& value() const { return value_; }

  friend bool operator==(const Energy& a, const Energy& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Energy& a, const Energy& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return compare(a.value_, b.value_);
  }

 private:
  Energy(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_ = Kind::Bottom;
  Rational value_ = 0;
};

/// "bot", "inf" or the canonical rational.
std::string to_string(const Energy& e);
std::ostream& operator<<(std::ostream& os, const Energy& e);

inline Energy max(const Energy& a, const Energy& b) { return a < b ? b : a; }

class Duration {
 public:
  /// Zero.
  Duration() = default;

  static Duration infinity() {
    Duration d;
    d.infinite_ = true;
    return d;
  }
  /// Throws std::invalid_argument if `value` is negative.
  static Duration finite(Rational value);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  const Rational& value() const { return value_; }

  friend bool operator==(const Duration& a, const Duration& b) {
    return a.infinite_ == b.infinite_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Duration& a, const Duration& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
    return compare(a.value_, b.value_);
  }

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

std::string to_string(const Duration& d);
std::ostream& operator<<(std::ostream& os, const Duration& d);

}  // namespace rtea
