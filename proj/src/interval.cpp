#include "winsel/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace winsel {

Interval Interval::make(double left, double right, std::uint64_t arrival) {
  if (std::isnan(left) || std::isnan(right)) {
    throw std::invalid_argument("interval coordinate is NaN");
  }
  if (left > right) {
    std::ostringstream msg;
    msg << "interval has left > right: [" << left << ", " << right << "]";
    throw std::invalid_argument(msg.str());
  }
  return Interval{left, right, arrival};
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.left << ", " << iv.right << "]#" << iv.arrival;
}

bool is_independent(std::span<const Interval> set) {
  std::vector<Interval> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  // After sorting by left endpoint, a set is pairwise disjoint iff every
  // neighbour pair is.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].left <= sorted[i - 1].right) return false;
  }
  return true;
}

namespace {

std::vector<const Interval*> by_right_endpoint(std::span<const Interval> set) {
  std::vector<const Interval*> order;
  order.reserve(set.size());
  for (const auto& iv : set) order.push_back(&iv);
  std::sort(order.begin(), order.end(), [](const Interval* a, const Interval* b) {
    if (a->right != b->right) return a->right < b->right;
    if (a->left != b->left) return a->left < b->left;
    return a->arrival < b->arrival;
  });
  return order;
}

}  // namespace

IntervalSet max_independent_set(std::span<const Interval> set) {
  IntervalSet out;
  bool any = false;
  double last_right = 0.0;
  for (const Interval* iv : by_right_endpoint(set)) {
    if (!any || iv->left > last_right) {
      out.push_back(*iv);
      last_right = iv->right;
      any = true;
    }
  }
  return out;
}

std::size_t max_independent_set_size(std::span<const Interval> set) {
  std::size_t count = 0;
  double last_right = 0.0;
  for (const Interval* iv : by_right_endpoint(set)) {
    if (count == 0 || iv->left > last_right) {
      last_right = iv->right;
      ++count;
    }
  }
  return count;
}

}  // namespace winsel
