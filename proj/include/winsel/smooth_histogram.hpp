#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "winsel/cp_engine.hpp"
#include "winsel/interval.hpp"

namespace winsel {

// Two runs that became neighbours in the stack during one observe() call.
struct AdjacencyEvent {
  std::uint64_t predecessor_start;
  std::uint64_t successor_start;

  friend bool operator==(const AdjacencyEvent&, const AdjacencyEvent&) = default;
};

// Sizes recorded at the moment a run acquired its current predecessor.
struct AdjacencyRecord {
  std::uint64_t predecessor_start = 0;
  std::size_t predecessor_size = 0;
  std::size_t own_size = 0;
};

struct Run {
  std::uint64_t start;
  CpEngine engine;
  // Present once the run has had a predecessor.
  std::optional<AdjacencyRecord> adjacency;
};

// |a| <= (1 + beta) * |b|, the comparison used by clean-up and by S1/S2.
bool within_factor(std::size_t a, std::size_t b, double beta);

// Smooth histogram over CP runs: a new run starts at every arrival, the
// oldest run is dropped once its start leaves the window, and clean-up keeps
// only runs whose solution sizes are spread by factors of (1 + beta).
class SmoothHistogram {
 public:
  SmoothHistogram(std::size_t window, double beta);

  // Returns the run pairs that are adjacent after this step but were not
  // adjacent before it (from run creation or from clean-up).
  std::vector<AdjacencyEvent> observe(const Interval& interval);

  // Clean-up pass over the whole stack; returns pairs that became adjacent.
  std::vector<AdjacencyEvent> cleanup();

  // Solution of the oldest stored run; empty when there are no runs.
  IntervalSet output() const;

  std::span<const Run> runs() const { return runs_; }
  const Run* find(std::uint64_t start) const;
  std::size_t window() const { return window_; }
  double beta() const { return beta_; }
  std::uint64_t time() const { return time_; }
  std::size_t stored_intervals() const;

  // 2 * ceil(log_{1+beta} L) + 4.
  std::size_t run_count_bound() const;

  // S1 over current sizes, S2 at adjacency time, unique increasing starts,
  // newest run started at the latest arrival, no expired run, run-count
  // bound. Throws InvariantViolation.
  void check_invariants() const;

 private:
  void record_adjacency(std::size_t index);

  std::size_t window_;
  double beta_;
  std::uint64_t time_ = 0;
  std::vector<Run> runs_;
};

// S2 evaluated on current sizes for every adjacent pair. Returns the index of
// the first offending pair or runs.size() when none.
std::size_t first_current_s2_violation(std::span<const Run> runs, double beta);

}  // namespace winsel
