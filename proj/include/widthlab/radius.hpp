#pragma once

#include <cassert>
#include <limits>
#include <string>

namespace widthlab {

// A radius or distance over the extended naturals: a finite count or
// infinity. Infinity compares greater than every finite value; arithmetic
// saturates at infinity.
class Radius {
 public:
  constexpr Radius() = default;
  constexpr Radius(int value) : v_(value) { assert(value >= 0); }

  static constexpr Radius infinity() {
    Radius r;
    r.v_ = kInf;
    return r;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  constexpr int finite_value() const {
    assert(is_finite());
    return v_;
  }

  constexpr Radius plus(int d) const {
    if (is_infinite()) return *this;
    return Radius(v_ + d);
  }

  // Requires d <= value; infinity stays infinite.
  constexpr Radius minus(int d) const {
    if (is_infinite()) return *this;
    assert(v_ >= d);
    return Radius(v_ - d);
  }

  constexpr Radius times(int f) const {
    assert(f >= 0);
    if (is_infinite()) return *this;
    return Radius(v_ * f);
  }

  // *this > threshold, where a threshold of infinity is read as
  // "unreachable": a distance exceeds infinity iff it is itself infinite.
  constexpr bool exceeds(Radius threshold) const {
    if (threshold.is_infinite()) return is_infinite();
    return is_infinite() || v_ > threshold.v_;
  }

  friend constexpr bool operator==(Radius a, Radius b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Radius a, Radius b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Radius a, Radius b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Radius a, Radius b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Radius a, Radius b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Radius a, Radius b) { return a.v_ >= b.v_; }

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(v_);
  }

 private:
  // Infinity is the int maximum, so the default comparisons already order
  // it above every finite value.
  static constexpr int kInf = std::numeric_limits<int>::max();
  int v_ = 0;
};

}  // namespace widthlab
