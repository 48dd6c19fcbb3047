#include "winsel/improved_window.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "winsel/errors.hpp"

namespace winsel {

namespace {

Region merged(const Region& a, const Region& b) {
  return Region{a.low, b.high, std::nullopt, std::nullopt};
}

void append(IntervalSet& out, const IntervalSet& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

AssociatedRunSet::AssociatedRunSet(const CpEngine& predecessor, const CpEngine& successor) {
  const auto regions = predecessor.regions();
  snapshot_.regions.assign(regions.begin(), regions.end());

  for (const Interval& iv : successor.solution()) {
    const auto at = predecessor.locate(iv.left);
    if (!at) throw InvariantViolation("predecessor regions do not tile the line");
    if (regions[*at].contains_point(iv.right)) {
      snapshot_.entries.push_back({iv, SnapshotEntry::Kind::inside, *at, false});
    } else {
      const bool within_pair = *at + 1 < regions.size() && regions[*at + 1].contains_point(iv.right);
      snapshot_.entries.push_back({iv, SnapshotEntry::Kind::crossing, *at, within_pair});
    }
  }

  singles_.reserve(regions.size());
  for (const auto& r : regions) singles_.emplace_back(r);
  if (regions.size() > 1) pairs_.reserve(regions.size() - 1);
  for (std::size_t p = 0; p + 1 < regions.size(); ++p) {
    pairs_.emplace_back(merged(regions[p], regions[p + 1]));
  }
}

void AssociatedRunSet::feed(const Interval& interval) {
  const auto& regions = snapshot_.regions;
  const auto found = locate(regions, interval.left);
  if (!found) return;
  const std::size_t at = *found;
  if (regions[at].contains_point(interval.right)) {
    singles_[at].process(interval);
    if (at > 0) pairs_[at - 1].process(interval);
    if (at < pairs_.size()) pairs_[at].process(interval);
  } else if (at < pairs_.size() && regions[at + 1].contains_point(interval.right)) {
    pairs_[at].process(interval);
  }
}

std::size_t AssociatedRunSet::engine_stored_intervals() const {
  std::size_t total = 0;
  for (const auto& e : singles_) total += e.stored_intervals();
  for (const auto& e : pairs_) total += e.stored_intervals();
  return total;
}

void AssociatedRunSet::check_invariants() const {
  if (singles_.size() != snapshot_.regions.size()) {
    throw InvariantViolation("associated runs: one single per region expected");
  }
  if (!singles_.empty() && pairs_.size() != singles_.size() - 1) {
    throw InvariantViolation("associated runs: |pairs| must be |singles| - 1");
  }
  for (std::size_t i = 0; i < singles_.size(); ++i) {
    singles_[i].check_invariants();
    for (const auto& iv : singles_[i].solution()) {
      if (!snapshot_.regions[i].contains(iv)) {
        throw InvariantViolation("associated runs: single holds an interval outside its region");
      }
    }
  }
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    pairs_[p].check_invariants();
    const Region domain = merged(snapshot_.regions[p], snapshot_.regions[p + 1]);
    for (const auto& iv : pairs_[p].solution()) {
      if (!domain.contains(iv)) {
        throw InvariantViolation("associated runs: pair holds an interval outside its domain");
      }
    }
  }
}

OutputCandidates assemble_candidates(const CpEngine& oldest, const AssociatedRunSet* associated) {
  OutputCandidates out;
  out.own = oldest.solution();
  if (associated == nullptr) return out;

  const auto& singles = associated->singles();
  const auto& pairs = associated->pairs();
  const auto& entries = associated->snapshot().entries;
  const std::size_t n = singles.size();

  auto region_part = [&](std::size_t r) -> IntervalSet {
    IntervalSet sol = singles[r].solution();
    if (!sol.empty()) return sol;
    for (const auto& e : entries) {
      if (e.kind == SnapshotEntry::Kind::inside && e.index == r) return {e.interval};
    }
    return {};
  };
  auto pair_part = [&](std::size_t p) -> IntervalSet {
    IntervalSet sol = pairs[p].solution();
    if (!sol.empty()) return sol;
    for (const auto& e : entries) {
      if (e.kind == SnapshotEntry::Kind::crossing && e.index == p && e.within_pair) {
        return {e.interval};
      }
    }
    return {};
  };
  auto paired = [&](std::size_t parity) {
    IntervalSet cand;
    std::size_t r = 0;
    while (r < n) {
      if (r % 2 == parity && r + 1 < n) {
        append(cand, pair_part(r));
        r += 2;
      } else {
        append(cand, region_part(r));
        ++r;
      }
    }
    return cand;
  };

  for (std::size_t r = 0; r < n; ++r) append(out.singles, region_part(r));
  out.even_pairs = paired(0);
  out.odd_pairs = paired(1);
  return out;
}

IntervalSet assemble_output(const CpEngine& oldest, const AssociatedRunSet* associated) {
  OutputCandidates c = assemble_candidates(oldest, associated);
  IntervalSet* best = &c.own;
  for (IntervalSet* other : {&c.singles, &c.even_pairs, &c.odd_pairs}) {
    if (other->size() > best->size()) best = other;
  }
  return std::move(*best);
}

ImprovedWindow::ImprovedWindow(std::size_t window, double delta)
    : delta_(delta), histogram_(window, delta / 2.0) {}

void ImprovedWindow::observe(const Interval& interval) {
  // Sets that exist before this arrival see it; sets created by this step's
  // adjacency events only see later arrivals.
  for (auto& [start, set] : associated_) set.feed(interval);

  const auto events = histogram_.observe(interval);

  std::erase_if(associated_, [&](const auto& kv) { return histogram_.find(kv.first) == nullptr; });
  for (const auto& ev : events) {
    const Run* pred = histogram_.find(ev.predecessor_start);
    const Run* succ = histogram_.find(ev.successor_start);
    associated_.insert_or_assign(ev.successor_start, AssociatedRunSet(pred->engine, succ->engine));
  }
}

const AssociatedRunSet* ImprovedWindow::associated(std::uint64_t successor_start) const {
  auto it = associated_.find(successor_start);
  return it == associated_.end() ? nullptr : &it->second;
}

OutputCandidates ImprovedWindow::candidates() const {
  const auto runs = histogram_.runs();
  if (runs.empty()) return {};
  return assemble_candidates(runs.front().engine, associated(runs.front().start));
}

IntervalSet ImprovedWindow::output() const {
  const auto runs = histogram_.runs();
  if (runs.empty()) return {};
  return assemble_output(runs.front().engine, associated(runs.front().start));
}

std::size_t ImprovedWindow::stored_intervals() const {
  std::size_t total = histogram_.stored_intervals();
  for (const auto& [start, set] : associated_) total += set.stored_intervals();
  return total;
}

void ImprovedWindow::check_invariants() const {
  histogram_.check_invariants();
  const auto runs = histogram_.runs();
  for (const auto& run : runs) run.engine.check_invariants();
  for (const auto& [start, set] : associated_) {
    if (histogram_.find(start) == nullptr) {
      throw InvariantViolation("improved window: associated runs outlived their run");
    }
    set.check_invariants();
  }
  // Every run past the oldest has a set built from its current predecessor.
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (associated(runs[i].start) == nullptr) {
      throw InvariantViolation("improved window: adjacent run lacks associated runs");
    }
  }
  const IntervalSet out = output();
  if (!is_independent(out)) throw InvariantViolation("improved window: output not independent");
  if (!runs.empty() && out.size() < runs.front().engine.solution_size()) {
    throw InvariantViolation("improved window: output smaller than oldest run");
  }
}

}  // namespace winsel
