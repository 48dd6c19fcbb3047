#include "winsel/smooth_histogram.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "winsel/errors.hpp"

namespace winsel {

bool within_factor(std::size_t a, std::size_t b, double beta) {
  return static_cast<double>(a) <= (1.0 + beta) * static_cast<double>(b);
}

SmoothHistogram::SmoothHistogram(std::size_t window, double beta)
    : window_(window), beta_(beta) {
  if (window == 0) throw std::invalid_argument("window length must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

std::vector<AdjacencyEvent> SmoothHistogram::observe(const Interval& interval) {
  if (interval.arrival != time_) {
    std::ostringstream msg;
    msg << "smooth histogram expected arrival " << time_ << ", got " << interval.arrival;
    throw OutOfOrderArrival(msg.str());
  }

  std::set<std::pair<std::uint64_t, std::uint64_t>> before;
  for (std::size_t i = 1; i < runs_.size(); ++i) before.emplace(runs_[i - 1].start, runs_[i].start);

  runs_.push_back(Run{time_, CpEngine{}, std::nullopt});
  for (auto& run : runs_) run.engine.process(interval);
  if (runs_.size() >= 2) record_adjacency(runs_.size() - 1);

  // The window now holds arrivals [time_ + 1 - L, time_].
  if (time_ + 1 > window_ && runs_.front().start < time_ + 1 - window_) {
    runs_.erase(runs_.begin());
    if (!runs_.empty() && runs_.front().start < time_ + 1 - window_) {
      throw InvariantViolation("smooth histogram: more than one run expired in one step");
    }
  }

  cleanup();
  ++time_;

  std::vector<AdjacencyEvent> events;
  for (std::size_t i = 1; i < runs_.size(); ++i) {
    if (!before.contains({runs_[i - 1].start, runs_[i].start})) {
      events.push_back(AdjacencyEvent{runs_[i - 1].start, runs_[i].start});
    }
  }
  return events;
}

std::vector<AdjacencyEvent> SmoothHistogram::cleanup() {
  std::vector<AdjacencyEvent> events;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    const std::size_t size_i = runs_[i].engine.solution_size();
    std::size_t j = i;
    for (std::size_t k = runs_.size(); k-- > i + 1;) {
      if (within_factor(size_i, runs_[k].engine.solution_size(), beta_)) {
        j = k;
        break;
      }
    }
    if (j > i + 1) {
      runs_.erase(runs_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  runs_.begin() + static_cast<std::ptrdiff_t>(j));
      record_adjacency(i + 1);
      events.push_back(AdjacencyEvent{runs_[i].start, runs_[i + 1].start});
    }
  }
  return events;
}

void SmoothHistogram::record_adjacency(std::size_t index) {
  runs_[index].adjacency = AdjacencyRecord{runs_[index - 1].start,
                                           runs_[index - 1].engine.solution_size(),
                                           runs_[index].engine.solution_size()};
}

IntervalSet SmoothHistogram::output() const {
  if (runs_.empty()) return {};
  return runs_.front().engine.solution();
}

const Run* SmoothHistogram::find(std::uint64_t start) const {
  auto it = std::lower_bound(runs_.begin(), runs_.end(), start,
                             [](const Run& r, std::uint64_t s) { return r.start < s; });
  return it != runs_.end() && it->start == start ? &*it : nullptr;
}

std::size_t SmoothHistogram::stored_intervals() const {
  std::size_t total = 0;
  for (const auto& run : runs_) total += run.engine.stored_intervals();
  return total;
}

std::size_t SmoothHistogram::run_count_bound() const {
  const double logs = std::ceil(std::log(static_cast<double>(window_)) / std::log1p(beta_));
  return 2 * static_cast<std::size_t>(std::max(0.0, logs)) + 4;
}

std::size_t first_current_s2_violation(std::span<const Run> runs, double beta) {
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const bool close = within_factor(runs[i].engine.solution_size(),
                                     runs[i + 1].engine.solution_size(), beta);
    if (!close && runs[i + 1].start != runs[i].start + 1) return i;
  }
  return runs.size();
}

void SmoothHistogram::check_invariants() const {
  auto fail = [](const std::string& what) {
    throw InvariantViolation("smooth histogram: " + what);
  };
  if (time_ > 0 && (runs_.empty() || runs_.back().start != time_ - 1)) {
    fail("newest run does not start at the latest arrival");
  }
  const std::uint64_t window_start = time_ > window_ ? time_ - window_ : 0;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i > 0 && runs_[i - 1].start >= runs_[i].start) fail("run starts not strictly increasing");
    if (runs_[i].start < window_start) fail("expired run retained");
    if (runs_[i].engine.processed() != time_ - runs_[i].start) {
      fail("run has not processed exactly the intervals since its start");
    }
  }
  for (std::size_t i = 0; i + 2 < runs_.size(); ++i) {
    const std::size_t a = runs_[i].engine.solution_size();
    const std::size_t c = runs_[i + 2].engine.solution_size();
    if (!(static_cast<double>(a) >= (1.0 + beta_) * static_cast<double>(c))) {
      std::ostringstream msg;
      msg << "S1 violated between runs " << runs_[i].start << " (" << a << ") and "
          << runs_[i + 2].start << " (" << c << ")";
      fail(msg.str());
    }
  }
  for (std::size_t i = 1; i < runs_.size(); ++i) {
    const auto& rec = runs_[i].adjacency;
    if (!rec || rec->predecessor_start != runs_[i - 1].start) {
      fail("adjacency record does not name the current predecessor");
    }
    const bool close = within_factor(rec->predecessor_size, rec->own_size, beta_);
    if (!close && runs_[i].start != runs_[i - 1].start + 1) {
      fail("S2 violated at the moment runs became adjacent");
    }
  }
  if (runs_.size() > run_count_bound()) fail("run count above 2*ceil(log_{1+beta} L)+4");
}

}  // namespace winsel
