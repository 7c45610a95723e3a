#pragma once

#include <cstdint>
#include <string>

namespace artin {

/// Exact element a + b*phi of Z[phi], phi^2 = phi + 1. Integers are the b == 0 case.
class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr Scalar(std::int64_t a) : a_(a) {}  // NOLINT: integers embed implicitly
  constexpr Scalar(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

  static constexpr Scalar phi() { return Scalar(0, 1); }

  constexpr std::int64_t rational_part() const { return a_; }
  constexpr std::int64_t phi_part() const { return b_; }
  constexpr bool is_integer() const { return b_ == 0; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend constexpr Scalar operator+(Scalar x, Scalar y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend constexpr Scalar operator-(Scalar x, Scalar y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend constexpr Scalar operator-(Scalar x) { return {-x.a_, -x.b_}; }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend constexpr Scalar operator*(Scalar x, Scalar y) {
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  Scalar& operator+=(Scalar y) { return *this = *this + y; }
  Scalar& operator-=(Scalar y) { return *this = *this - y; }
  Scalar& operator*=(Scalar y) { return *this = *this * y; }

  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;  // structural, not numeric

  std::string to_string() const;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

}  // namespace artin
