#include "winsel/window_buffer.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "winsel/errors.hpp"

namespace winsel {

WindowBuffer::WindowBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("window capacity must be positive");
}

void WindowBuffer::push(const Interval& interval) {
  if (interval.arrival != next_arrival_) {
    throw OutOfOrderArrival("window buffer expected arrival " + std::to_string(next_arrival_) +
                            ", got " + std::to_string(interval.arrival));
  }
  contents_.push_back(interval);
  if (contents_.size() > capacity_) contents_.pop_front();
  ++next_arrival_;
}

IntervalSet WindowBuffer::window_opt() const {
  std::vector<Interval> flat(contents_.begin(), contents_.end());
  return max_independent_set(flat);
}

std::size_t WindowBuffer::window_opt_size() const {
  std::vector<Interval> flat(contents_.begin(), contents_.end());
  return max_independent_set_size(flat);
}

}  // namespace winsel
