#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "winsel/cp_engine.hpp"
#include "winsel/interval.hpp"
#include "winsel/smooth_histogram.hpp"

namespace winsel {

// A successor-run solution interval, classified against the predecessor's
// regions at the moment the two runs became adjacent.
struct SnapshotEntry {
  enum class Kind { inside, crossing };

  Interval interval;
  Kind kind;
  // inside: index of the region holding the interval.
  // crossing: index p of the leftmost boundary it covers, i.e. the boundary
  // between regions p and p+1.
  std::size_t index;
  // crossing only: the interval lies inside regions p and p+1 merged.
  bool within_pair = false;
};

struct AdjacencySnapshot {
  std::vector<Region> regions;
  std::vector<SnapshotEntry> entries;
};

// Domain-restricted CP runs attached to a successor run: one per predecessor
// region and one per pair of consecutive regions.
class AssociatedRunSet {
 public:
  AssociatedRunSet(const CpEngine& predecessor, const CpEngine& successor);

  // Routes the interval to the engines whose domain contains it: at most one
  // single and at most two pairs.
  void feed(const Interval& interval);

  const AdjacencySnapshot& snapshot() const { return snapshot_; }
  const std::vector<CpEngine>& singles() const { return singles_; }
  const std::vector<CpEngine>& pairs() const { return pairs_; }
  // Intervals held by the associated engines (snapshot excluded).
  std::size_t engine_stored_intervals() const;
  std::size_t stored_intervals() const {
    return engine_stored_intervals() + snapshot_.entries.size();
  }

  void check_invariants() const;

 private:
  AdjacencySnapshot snapshot_;
  std::vector<CpEngine> singles_;
  std::vector<CpEngine> pairs_;
};

// The four candidate solutions assembled from the oldest run.
struct OutputCandidates {
  IntervalSet own;        // the oldest run's CP solution
  IntervalSet singles;    // per-region runs with inside-snapshot fallback
  IntervalSet even_pairs; // pairs (R_p, R_p+1), p even, plus leftover regions
  IntervalSet odd_pairs;  // pairs with p odd, plus leftover regions
};

OutputCandidates assemble_candidates(const CpEngine& oldest, const AssociatedRunSet* associated);

// Largest candidate; ties prefer the order own, singles, even, odd.
IntervalSet assemble_output(const CpEngine& oldest, const AssociatedRunSet* associated);

// Smooth histogram with associated runs. beta is fixed to delta / 2.
class ImprovedWindow {
 public:
  ImprovedWindow(std::size_t window, double delta);

  void observe(const Interval& interval);
  IntervalSet output() const;
  OutputCandidates candidates() const;

  const SmoothHistogram& histogram() const { return histogram_; }
  const AssociatedRunSet* associated(std::uint64_t successor_start) const;
  std::size_t associated_count() const { return associated_.size(); }
  double delta() const { return delta_; }
  std::size_t stored_intervals() const;

  void check_invariants() const;

 private:
  double delta_;
  SmoothHistogram histogram_;
  std::map<std::uint64_t, AssociatedRunSet> associated_;
};

}  // namespace winsel
