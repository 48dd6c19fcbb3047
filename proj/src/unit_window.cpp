#include "winsel/unit_window.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "winsel/errors.hpp"

namespace winsel {

UnitWindow::UnitWindow(std::size_t window) : window_(window) {
  if (window == 0) throw std::invalid_argument("window length must be positive");
}

std::int64_t UnitWindow::slot_of(double left) {
  return static_cast<std::int64_t>(std::floor(left));
}

void UnitWindow::observe(const Interval& interval) {
  if (interval.arrival != time_) {
    std::ostringstream msg;
    msg << "unit window expected arrival " << time_ << ", got " << interval.arrival;
    throw OutOfOrderArrival(msg.str());
  }
  if (std::abs(interval.length() - 1.0) > kUnitTolerance) {
    std::ostringstream msg;
    msg << "interval " << interval << " is not unit length";
    throw NonUnitInterval(msg.str());
  }

  const std::int64_t slot = slot_of(interval.left);
  auto [it, inserted] = slots_.try_emplace(slot, interval);
  if (!inserted) {
    slot_by_arrival_.erase(it->second.arrival);
    it->second = interval;
  }
  slot_by_arrival_[interval.arrival] = slot;

  // Exactly one interval leaves the window per arrival.
  if (time_ >= window_) {
    const std::uint64_t expired = time_ - window_;
    if (auto hit = slot_by_arrival_.find(expired); hit != slot_by_arrival_.end()) {
      slots_.erase(hit->second);
      slot_by_arrival_.erase(hit);
    }
  }
  ++time_;
}

IntervalSet UnitWindow::solution() const {
  std::vector<Interval> stored;
  stored.reserve(slots_.size());
  for (const auto& [slot, iv] : slots_) stored.push_back(iv);
  return max_independent_set(stored);
}

void UnitWindow::check_invariants() const {
  if (slots_.size() != slot_by_arrival_.size()) {
    throw InvariantViolation("unit window: slot index out of sync");
  }
  const std::uint64_t oldest_active = time_ > window_ ? time_ - window_ : 0;
  for (const auto& [slot, iv] : slots_) {
    if (slot_of(iv.left) != slot) {
      throw InvariantViolation("unit window: interval stored in the wrong slot");
    }
    if (iv.arrival < oldest_active) {
      throw InvariantViolation("unit window: expired interval still stored");
    }
    auto hit = slot_by_arrival_.find(iv.arrival);
    if (hit == slot_by_arrival_.end() || hit->second != slot) {
      throw InvariantViolation("unit window: slot index disagrees with slots");
    }
  }
}

}  // namespace winsel
