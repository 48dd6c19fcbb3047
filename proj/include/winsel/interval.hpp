#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace winsel {

// Closed segment [left, right] tagged with its 0-based stream position.
struct Interval {
  double left = 0.0;
  double right = 0.0;
  std::uint64_t arrival = 0;

  // Throws std::invalid_argument when left > right or a coordinate is NaN.
  static Interval make(double left, double right, std::uint64_t arrival);

  double length() const { return right - left; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalSet = std::vector<Interval>;

std::ostream& operator<<(std::ostream& os, const Interval& iv);

// Closed-interval intersection: touching endpoints intersect.
inline bool intersects(const Interval& a, const Interval& b) {
  return (a.left > b.left ? a.left : b.left) <= (a.right < b.right ? a.right : b.right);
}

// [inner] lies inside [outer] (both closed).
inline bool contains(const Interval& outer, const Interval& inner) {
  return outer.left <= inner.left && inner.right <= outer.right;
}

bool is_independent(std::span<const Interval> set);

// Exact maximum independent set via the earliest-right-endpoint greedy.
// Ties are broken by (right, left, arrival), so the result is reproducible.
IntervalSet max_independent_set(std::span<const Interval> set);

// Size-only variant of max_independent_set; avoids building the result.
std::size_t max_independent_set_size(std::span<const Interval> set);

}  // namespace winsel
