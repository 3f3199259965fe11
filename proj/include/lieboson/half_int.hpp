#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace lieboson {

/// Non-negative or signed half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Only meaningful when is_integer().
  constexpr int as_int() const { return twice_ / 2; }
  double value() const { return twice_ / 2.0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "1", "-1/2", ...
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_ = 0;
};

constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

/// True when a and b differ by an integer.
constexpr bool same_parity(HalfInt a, HalfInt b) { return (a.twice() - b.twice()) % 2 == 0; }

}  // namespace lieboson
