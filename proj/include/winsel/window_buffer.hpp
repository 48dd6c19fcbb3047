#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>

#include "winsel/interval.hpp"

namespace winsel {

// Full copy of the current sliding window. This is the ground truth that the
// approximation engines are measured against, so it deliberately keeps every
// active interval.
class WindowBuffer {
 public:
  explicit WindowBuffer(std::size_t capacity);

  // Appends an interval, evicting the oldest one when the window is full.
  // Throws OutOfOrderArrival unless interval.arrival == next_arrival().
  void push(const Interval& interval);

  IntervalSet window_opt() const;
  std::size_t window_opt_size() const;

  const std::deque<Interval>& contents() const { return contents_; }
  std::size_t capacity() const { return capacity_; }
  std::uint64_t next_arrival() const { return next_arrival_; }

 private:
  std::size_t capacity_;
  std::deque<Interval> contents_;
  std::uint64_t next_arrival_ = 0;
};

}  // namespace winsel
