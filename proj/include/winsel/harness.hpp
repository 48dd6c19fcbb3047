#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "winsel/interval.hpp"

namespace winsel {

class StreamError : public std::runtime_error {
 public:
  explicit StreamError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// One interval per line as "left right"; blank lines and lines starting with
// '#' are skipped. Arrival indices are assigned from 0 in file order.
IntervalSet parse_stream(std::istream& in);
IntervalSet parse_stream_file(const std::string& path);
void write_stream(std::ostream& out, const IntervalSet& stream);

// A generator spec (see gadgets.hpp) or a path to a stream file.
IntervalSet load_stream(const std::string& source);

enum class Algorithm { unit, cp, smooth, improved, oracle };
enum class OutputFormat { csv, jsonl };

Algorithm parse_algorithm(const std::string& name);
OutputFormat parse_format(const std::string& name);

struct HarnessConfig {
  Algorithm algorithm = Algorithm::improved;
  std::size_t window = 0;
  std::optional<double> beta;
  std::optional<double> delta;
  std::string stream;
  // nullopt: on when window <= kOracleAutoLimit.
  std::optional<bool> oracle;
  std::size_t sample_every = 1;
  OutputFormat format = OutputFormat::csv;

  static constexpr std::size_t kOracleAutoLimit = 10000;
  static constexpr double kDefaultBeta = 0.1;

  // Checks the invariants and returns the effective (beta, delta) pair.
  // For the improved algorithm beta must equal delta / 2.
  std::pair<double, double> resolve_parameters() const;
  bool oracle_enabled() const;
};

struct MetricsRecord {
  std::uint64_t step = 0;
  std::size_t alg_size = 0;
  std::optional<std::size_t> opt_size;
  std::optional<double> ratio;
  std::size_t stored_intervals = 0;
  std::size_t run_count = 0;
};

struct RunSummary {
  std::uint64_t steps = 0;
  std::optional<double> max_ratio;
  std::size_t max_stored_intervals = 0;
};

inline constexpr char kCsvHeader[] = "step,alg_size,opt_size,ratio,stored_intervals,run_count";

void write_header(std::ostream& out, OutputFormat format);
void write_record(std::ostream& out, OutputFormat format, const MetricsRecord& rec);
void write_summary(std::ostream& out, OutputFormat format, const RunSummary& summary);

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitStream = 3;
inline constexpr int kExitInvariant = 4;

// Drives `stream` through the configured engine (and the oracle when
// enabled), checking engine invariants after every step. `on_step` sees
// every record, sampled or not.
RunSummary drive(const HarnessConfig& config, const IntervalSet& stream, std::ostream& out,
                 const std::function<void(const MetricsRecord&)>& on_step = {});

// Full pipeline: loads the stream, writes metrics to `out`, diagnostics to
// `diag`, returns one of the exit statuses above.
int run(const HarnessConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace winsel
