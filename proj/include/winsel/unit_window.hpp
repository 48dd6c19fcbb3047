#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "winsel/interval.hpp"

namespace winsel {

// 2-approximation for unit-length intervals in a window of the L most recent
// arrivals. Keeps, for every integer r, the newest active interval whose left
// endpoint lies in [r, r+1).
class UnitWindow {
 public:
  // Absolute slack accepted on right - left == 1 for parsed coordinates.
  static constexpr double kUnitTolerance = 1e-9;

  explicit UnitWindow(std::size_t window);

  // Throws NonUnitInterval for intervals that are not unit length and
  // OutOfOrderArrival when interval.arrival is not the next stream position.
  void observe(const Interval& interval);

  // Exact OPT over the stored slots.
  IntervalSet solution() const;

  const std::map<std::int64_t, Interval>& slots() const { return slots_; }
  std::size_t stored_intervals() const { return slots_.size(); }
  std::uint64_t time() const { return time_; }
  std::size_t window() const { return window_; }

  // Slot ownership, side index consistency, and no expired survivors.
  void check_invariants() const;

  static std::int64_t slot_of(double left);

 private:
  std::size_t window_;
  std::uint64_t time_ = 0;
  std::map<std::int64_t, Interval> slots_;
  std::unordered_map<std::uint64_t, std::int64_t> slot_by_arrival_;
};

}  // namespace winsel
