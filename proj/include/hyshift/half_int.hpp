#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace hyshift {

/// Integer or half-integer quantum number stored as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return !is_integer(); }
  constexpr bool same_character(HalfInt other) const {
    return (twice_ - other.twice_) % 2 == 0;
  }

  /// Value as an integer; only meaningful when is_integer().
  constexpr int as_int() const { return twice_ / 2; }
  constexpr double to_double() const { return 0.5 * twice_; }

  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "2".
  std::string to_string() const {
    if (is_integer()) return std::to_string(as_int());
    return std::to_string(twice_) + "/2";
  }

private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// (-1)^k for an integer-valued HalfInt k.
constexpr int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

}  // namespace hyshift
