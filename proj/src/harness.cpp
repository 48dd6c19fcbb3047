#include "winsel/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include "winsel/cp_engine.hpp"
#include "winsel/errors.hpp"
#include "winsel/gadgets.hpp"
#include "winsel/improved_window.hpp"
#include "winsel/smooth_histogram.hpp"
#include "winsel/unit_window.hpp"
#include "winsel/window_buffer.hpp"

namespace winsel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view text, double& value) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

IntervalSet parse_stream(std::istream& in) {
  IntervalSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    auto fail = [&](const std::string& why) {
      throw StreamError("line " + std::to_string(line_no) + ": " + why);
    };
    const auto gap = body.find_first_of(" \t");
    if (gap == std::string_view::npos) fail("expected 'left right'");
    const std::string_view left_text = body.substr(0, gap);
    const std::string_view right_text = trim(body.substr(gap));
    double left = 0;
    double right = 0;
    if (!parse_number(left_text, left) || !parse_number(right_text, right)) {
      fail("expected two decimal numbers, got '" + std::string(body) + "'");
    }
    if (std::isnan(left) || std::isnan(right)) fail("NaN coordinate");
    if (left > right) fail("left endpoint exceeds right endpoint");
    out.push_back(Interval{left, right, out.size()});
  }
  return out;
}

IntervalSet parse_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StreamError("cannot open stream file '" + path + "'");
  try {
    return parse_stream(in);
  } catch (const StreamError& e) {
    throw StreamError(path + ": " + e.what());
  }
}

void write_stream(std::ostream& out, const IntervalSet& stream) {
  const auto old_precision = out.precision(17);
  for (const auto& iv : stream) out << iv.left << ' ' << iv.right << '\n';
  out.precision(old_precision);
}

IntervalSet load_stream(const std::string& source) {
  if (is_generator_spec(source)) {
    try {
      return generate(source);
    } catch (const GeneratorError& e) {
      throw ConfigError(std::string("generator spec: ") + e.what());
    }
  }
  return parse_stream_file(source);
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "unit") return Algorithm::unit;
  if (name == "cp") return Algorithm::cp;
  if (name == "smooth") return Algorithm::smooth;
  if (name == "improved") return Algorithm::improved;
  if (name == "oracle") return Algorithm::oracle;
  throw ConfigError("unknown algorithm '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw ConfigError("unknown output format '" + name + "'");
}

std::pair<double, double> HarnessConfig::resolve_parameters() const {
  if (window < 2) throw ConfigError("window length must be at least 2");
  if (sample_every == 0) throw ConfigError("sample-every must be positive");
  if (beta && !(*beta > 0.0)) throw ConfigError("beta must be positive");
  if (delta && !(*delta > 0.0)) throw ConfigError("delta must be positive");
  if (algorithm == Algorithm::improved) {
    if (delta && beta && *beta != *delta / 2.0) {
      throw ConfigError("the improved algorithm requires beta = delta / 2");
    }
    const double d = delta ? *delta : beta ? 2.0 * *beta : 2.0 * kDefaultBeta;
    return {d / 2.0, d};
  }
  const double b = beta ? *beta : kDefaultBeta;
  return {b, delta ? *delta : 2.0 * b};
}

bool HarnessConfig::oracle_enabled() const { return oracle.value_or(window <= kOracleAutoLimit); }

void write_header(std::ostream& out, OutputFormat format) {
  if (format == OutputFormat::csv) out << kCsvHeader << '\n';
}

namespace {

std::string format_ratio(double ratio) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << ratio;
  return s.str();
}

}  // namespace

void write_record(std::ostream& out, OutputFormat format, const MetricsRecord& rec) {
  if (format == OutputFormat::csv) {
    out << rec.step << ',' << rec.alg_size << ',';
    if (rec.opt_size) out << *rec.opt_size;
    out << ',';
    if (rec.ratio) out << format_ratio(*rec.ratio);
    out << ',' << rec.stored_intervals << ',' << rec.run_count << '\n';
    return;
  }
  out << "{\"step\":" << rec.step << ",\"alg_size\":" << rec.alg_size << ",\"opt_size\":";
  if (rec.opt_size) out << *rec.opt_size;
  else out << "null";
  out << ",\"ratio\":" << (rec.ratio ? format_ratio(*rec.ratio) : "null")
      << ",\"stored_intervals\":" << rec.stored_intervals << ",\"run_count\":" << rec.run_count
      << "}\n";
}

void write_summary(std::ostream& out, OutputFormat format, const RunSummary& summary) {
  const std::string ratio = summary.max_ratio ? format_ratio(*summary.max_ratio) : "";
  if (format == OutputFormat::csv) {
    out << "# summary steps=" << summary.steps << " max_ratio=" << ratio
        << " max_stored_intervals=" << summary.max_stored_intervals << '\n';
    return;
  }
  out << "{\"summary\":true,\"steps\":" << summary.steps
      << ",\"max_ratio\":" << (ratio.empty() ? "null" : ratio)
      << ",\"max_stored_intervals\":" << summary.max_stored_intervals << "}\n";
}

namespace {

// Common surface over the five engines.
class Engine {
 public:
  Engine(Algorithm algorithm, std::size_t window, double beta, double delta) {
    switch (algorithm) {
      case Algorithm::unit: impl_.emplace<UnitWindow>(window); break;
      case Algorithm::cp: impl_.emplace<CpEngine>(); break;
      case Algorithm::smooth: impl_.emplace<SmoothHistogram>(window, beta); break;
      case Algorithm::improved: impl_.emplace<ImprovedWindow>(window, delta); break;
      case Algorithm::oracle: impl_.emplace<WindowBuffer>(window); break;
    }
  }

  void observe(const Interval& iv) {
    std::visit(
        [&](auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, CpEngine>) e.process(iv);
          else if constexpr (std::is_same_v<T, WindowBuffer>) e.push(iv);
          else if constexpr (std::is_same_v<T, std::monostate>) {}
          else e.observe(iv);
        },
        impl_);
  }

  std::size_t solution_size() const {
    return std::visit(
        [](const auto& e) -> std::size_t {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, UnitWindow>) return e.solution().size();
          else if constexpr (std::is_same_v<T, CpEngine>) return e.solution_size();
          else if constexpr (std::is_same_v<T, SmoothHistogram>) return e.output().size();
          else if constexpr (std::is_same_v<T, ImprovedWindow>) return e.output().size();
          else if constexpr (std::is_same_v<T, WindowBuffer>) return e.window_opt_size();
          else return 0;
        },
        impl_);
  }

  std::size_t stored_intervals() const {
    return std::visit(
        [](const auto& e) -> std::size_t {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, WindowBuffer>) return e.contents().size();
          else if constexpr (std::is_same_v<T, std::monostate>) return 0;
          else return e.stored_intervals();
        },
        impl_);
  }

  std::size_t run_count() const {
    if (auto* s = std::get_if<SmoothHistogram>(&impl_)) return s->runs().size();
    if (auto* w = std::get_if<ImprovedWindow>(&impl_)) return w->histogram().runs().size();
    return 1;
  }

  void check_invariants() const {
    std::visit(
        [](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, UnitWindow> || std::is_same_v<T, CpEngine> ||
                        std::is_same_v<T, ImprovedWindow>) {
            e.check_invariants();
          } else if constexpr (std::is_same_v<T, SmoothHistogram>) {
            e.check_invariants();
            for (const auto& run : e.runs()) run.engine.check_invariants();
          }
        },
        impl_);
  }

 private:
  std::variant<std::monostate, UnitWindow, CpEngine, SmoothHistogram, ImprovedWindow, WindowBuffer>
      impl_;
};

}  // namespace

RunSummary drive(const HarnessConfig& config, const IntervalSet& stream, std::ostream& out,
                 const std::function<void(const MetricsRecord&)>& on_step) {
  const auto [beta, delta] = config.resolve_parameters();
  Engine engine(config.algorithm, config.window, beta, delta);
  std::optional<WindowBuffer> oracle;
  if (config.oracle_enabled()) oracle.emplace(config.window);

  RunSummary summary;
  write_header(out, config.format);
  for (const Interval& iv : stream) {
    engine.observe(iv);
    engine.check_invariants();

    MetricsRecord rec;
    rec.step = iv.arrival + 1;
    rec.alg_size = engine.solution_size();
    rec.stored_intervals = engine.stored_intervals();
    rec.run_count = engine.run_count();
    if (oracle) {
      oracle->push(iv);
      rec.opt_size = oracle->window_opt_size();
      if (rec.alg_size > 0) {
        rec.ratio = static_cast<double>(*rec.opt_size) / static_cast<double>(rec.alg_size);
      }
    }

    summary.steps = rec.step;
    summary.max_stored_intervals = std::max(summary.max_stored_intervals, rec.stored_intervals);
    if (rec.ratio && (!summary.max_ratio || *rec.ratio > *summary.max_ratio)) {
      summary.max_ratio = rec.ratio;
    }
    if (rec.step % config.sample_every == 0) write_record(out, config.format, rec);
    if (on_step) on_step(rec);
  }
  write_summary(out, config.format, summary);
  return summary;
}

int run(const HarnessConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    config.resolve_parameters();
    if (!config.oracle && config.window > HarnessConfig::kOracleAutoLimit) {
      diag << "warning: window " << config.window << " exceeds "
           << HarnessConfig::kOracleAutoLimit << "; oracle disabled (pass --oracle to force)\n";
    }
    const IntervalSet stream = load_stream(config.stream);
    drive(config, stream, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const StreamError& e) {
    diag << "stream error: " << e.what() << '\n';
    return kExitStream;
  } catch (const OutOfOrderArrival& e) {
    diag << "stream error: " << e.what() << '\n';
    return kExitStream;
  } catch (const NonUnitInterval& e) {
    diag << "stream error: " << e.what() << '\n';
    return kExitStream;
  } catch (const InvariantViolation& e) {
    diag << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace winsel
