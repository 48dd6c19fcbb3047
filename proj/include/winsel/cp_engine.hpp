#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "winsel/interval.hpp"

namespace winsel {

// One end of a region. `closed` says whether the region itself owns the
// boundary point; the neighbour on the other side owns it otherwise.
// Unbounded ends use +/-infinity and are never closed.
struct Bound {
  double pos;
  bool closed;

  friend bool operator==(const Bound&, const Bound&) = default;
};

// A cell of the region partition together with its two witnesses.
// leftmost: contained interval with the smallest right endpoint seen so far.
// rightmost: contained interval with the largest left endpoint seen so far.
struct Region {
  Bound low;
  Bound high;
  std::optional<Interval> leftmost;
  std::optional<Interval> rightmost;

  static Region whole_line();

  bool virgin() const { return !leftmost.has_value(); }
  bool contains_point(double x) const;
  bool contains(const Interval& iv) const {
    return contains_point(iv.left) && contains_point(iv.right);
  }
  // Number of distinct intervals held as witnesses (0, 1 or 2).
  std::size_t stored_intervals() const;
};

// Index of the region of a tiling that contains point x, or nullopt when x
// falls outside every region.
std::optional<std::size_t> locate(std::span<const Region> regions, double x);

// Streaming 2-approximation for interval selection on arbitrary lengths.
// Maintains a partition of the domain into regions such that no two disjoint
// processed intervals fall inside one region, and outputs one witness per
// non-virgin region.
class CpEngine {
 public:
  CpEngine();
  // Engine restricted to a single region of the line; intervals not fully
  // inside `domain` are ignored. Witnesses of `domain` are discarded.
  explicit CpEngine(const Region& domain);

  void process(const Interval& interval);

  // One leftmost witness per non-virgin region, left to right.
  IntervalSet solution() const;
  std::size_t solution_size() const { return witnessed_; }

  std::span<const Region> regions() const { return regions_; }
  std::size_t region_count() const { return regions_.size(); }
  std::size_t stored_intervals() const;
  std::size_t processed() const { return processed_; }

  // Index of the region containing point x, or nullopt when x is outside the
  // domain.
  std::optional<std::size_t> locate(double x) const;
  // Index of the region containing the whole interval, if any.
  std::optional<std::size_t> region_containing(const Interval& iv) const;

  // Tiling, witness containment, witness ordering and the pairwise-overlap
  // property of witnesses. Throws InvariantViolation.
  void check_invariants() const;

 private:
  void split(std::size_t index, const Interval& interval);

  std::vector<Region> regions_;
  std::size_t witnessed_ = 0;
  std::size_t processed_ = 0;
};

}  // namespace winsel
