#include "winsel/cp_engine.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "winsel/errors.hpp"

namespace winsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x lies at or below the upper end of a region.
bool below(const Bound& high, double x) {
  return x < high.pos || (x == high.pos && high.closed);
}

bool above(const Bound& low, double x) {
  return x > low.pos || (x == low.pos && low.closed);
}

}  // namespace

Region Region::whole_line() {
  return Region{Bound{-kInf, false}, Bound{kInf, false}, std::nullopt, std::nullopt};
}

bool Region::contains_point(double x) const { return above(low, x) && below(high, x); }

std::size_t Region::stored_intervals() const {
  if (!leftmost) return 0;
  return leftmost->arrival == rightmost->arrival ? 1 : 2;
}

CpEngine::CpEngine() : regions_{Region::whole_line()} {}

CpEngine::CpEngine(const Region& domain)
    : regions_{Region{domain.low, domain.high, std::nullopt, std::nullopt}} {}

std::optional<std::size_t> locate(std::span<const Region> regions, double x) {
  auto it = std::partition_point(regions.begin(), regions.end(),
                                 [x](const Region& r) { return !below(r.high, x); });
  if (it == regions.end() || !above(it->low, x)) return std::nullopt;
  return static_cast<std::size_t>(it - regions.begin());
}

std::optional<std::size_t> CpEngine::locate(double x) const { return winsel::locate(regions_, x); }

std::optional<std::size_t> CpEngine::region_containing(const Interval& iv) const {
  auto index = locate(iv.left);
  if (!index || !below(regions_[*index].high, iv.right)) return std::nullopt;
  return index;
}

void CpEngine::process(const Interval& interval) {
  ++processed_;
  auto index = region_containing(interval);
  if (!index) return;  // crosses an owned boundary or leaves the domain

  Region& region = regions_[*index];
  if (region.virgin()) {
    region.leftmost = interval;
    region.rightmost = interval;
    ++witnessed_;
    return;
  }

  const Interval& lm = *region.leftmost;
  const Interval& rm = *region.rightmost;
  // Witnesses overlap, and lm ∩ rm = [rm.left, lm.right], so the triple
  // intersection is I ∩ [rm.left, lm.right].
  const bool meets_both = interval.left <= lm.right && interval.right >= rm.left;
  if (meets_both) {
    const bool new_leftmost = interval.right <= lm.right;
    const bool new_rightmost = interval.left >= rm.left;
    if (new_leftmost) region.leftmost = interval;
    if (new_rightmost) region.rightmost = interval;
    return;
  }
  split(*index, interval);
}

// The two disjoint intervals (I and one witness) end up in different halves.
// The cut sits at the right endpoint of whichever of the two lies further
// left, and that point belongs to the left half.
void CpEngine::split(std::size_t index, const Interval& interval) {
  const Region old = regions_[index];
  Region left_half{old.low, Bound{0.0, true}, std::nullopt, std::nullopt};
  Region right_half{Bound{0.0, false}, old.high, std::nullopt, std::nullopt};

  // The half that keeps the old witnesses keeps both when both still fit in
  // it; otherwise the one that fits stands in for the other.
  if (interval.right < old.rightmost->left) {
    left_half.high.pos = right_half.low.pos = interval.right;
    left_half.leftmost = left_half.rightmost = interval;
    right_half.rightmost = old.rightmost;
    right_half.leftmost = right_half.contains(*old.leftmost) ? old.leftmost : old.rightmost;
  } else {
    // interval.left > leftmost.right
    left_half.high.pos = right_half.low.pos = old.leftmost->right;
    left_half.leftmost = old.leftmost;
    left_half.rightmost = left_half.contains(*old.rightmost) ? old.rightmost : old.leftmost;
    right_half.leftmost = right_half.rightmost = interval;
  }

  regions_[index] = left_half;
  regions_.insert(regions_.begin() + static_cast<std::ptrdiff_t>(index) + 1, right_half);
  ++witnessed_;
}

IntervalSet CpEngine::solution() const {
  IntervalSet out;
  out.reserve(witnessed_);
  for (const auto& r : regions_) {
    if (r.leftmost) out.push_back(*r.leftmost);
  }
  return out;
}

std::size_t CpEngine::stored_intervals() const {
  std::size_t total = 0;
  for (const auto& r : regions_) total += r.stored_intervals();
  return total;
}

void CpEngine::check_invariants() const {
  auto fail = [](std::size_t i, const char* what) {
    std::ostringstream msg;
    msg << "cp engine region " << i << ": " << what;
    throw InvariantViolation(msg.str());
  };
  std::size_t witnessed = 0;
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const Region& r = regions_[i];
    const bool nonempty =
        r.low.pos < r.high.pos || (r.low.pos == r.high.pos && r.low.closed && r.high.closed);
    if (!nonempty) fail(i, "empty region");
    if (i > 0) {
      const Region& prev = regions_[i - 1];
      if (prev.high.pos != r.low.pos) fail(i, "gap or overlap with previous region");
      if (prev.high.closed == r.low.closed) fail(i, "shared boundary needs exactly one owner");
    }
    if (r.leftmost.has_value() != r.rightmost.has_value()) fail(i, "half-populated witnesses");
    if (!r.leftmost) continue;
    ++witnessed;
    const Interval& lm = *r.leftmost;
    const Interval& rm = *r.rightmost;
    if (!r.contains(lm) || !r.contains(rm)) fail(i, "witness outside region");
    if (lm.right > rm.right || lm.left > rm.left) fail(i, "witness order");
    if (!intersects(lm, rm)) fail(i, "witnesses are disjoint");
  }
  if (witnessed != witnessed_) throw InvariantViolation("cp engine: witness count out of sync");
}

}  // namespace winsel
