#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "winsel/gadgets.hpp"
#include "winsel/harness.hpp"

using namespace winsel;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

HarnessConfig config(Algorithm alg, std::size_t window, const std::string& stream) {
  HarnessConfig c;
  c.algorithm = alg;
  c.window = window;
  c.stream = stream;
  return c;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("parse_stream") {
  std::istringstream two("0 1\n2 3\n");
  const auto s = parse_stream(two);
  REQUIRE(s.size() == 2);
  CHECK(s[1] == Interval{2, 3, 1});

  std::istringstream commented("# c\n0.5 1.5\n");
  const auto c = parse_stream(commented);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Interval{0.5, 1.5, 0});

  std::istringstream spaced("  \n\t1e-3\t  2.5  \r\n\n");
  CHECK(parse_stream(spaced).size() == 1);
}

TEST_CASE("parse_stream errors name the line") {
  std::istringstream reversed("0 1\n1 0\n");
  try {
    parse_stream(reversed);
    FAIL("expected an error");
  } catch (const StreamError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream garbage("0 1 2\n");
  CHECK_THROWS_AS(parse_stream(garbage), StreamError);
  std::istringstream single("5\n");
  CHECK_THROWS_AS(parse_stream(single), StreamError);
  CHECK_THROWS_AS(parse_stream_file("/nonexistent/stream.txt"), StreamError);
}

TEST_CASE("write_stream round-trips") {
  const auto s = gen_random_arbitrary(50, -5, 5, 0.01, 3, 8);
  std::stringstream buf;
  write_stream(buf, s);
  CHECK(parse_stream(buf) == s);
}

TEST_CASE("config validation") {
  auto c = config(Algorithm::unit, 1, "random_unit:n=4");
  CHECK_THROWS_AS(c.resolve_parameters(), ConfigError);
  c.window = 2;
  c.beta = 0.0;
  CHECK_THROWS_AS(c.resolve_parameters(), ConfigError);

  auto improved = config(Algorithm::improved, 10, "random_unit:n=4");
  improved.delta = 0.2;
  CHECK(improved.resolve_parameters() == std::pair{0.1, 0.2});
  improved.beta = 0.3;
  CHECK_THROWS_AS(improved.resolve_parameters(), ConfigError);
  improved.beta = 0.1;
  CHECK_NOTHROW(improved.resolve_parameters());

  CHECK(config(Algorithm::oracle, 10000, "").oracle_enabled());
  CHECK_FALSE(config(Algorithm::oracle, 10001, "").oracle_enabled());
  CHECK_THROWS_AS(parse_algorithm("fast"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("exit statuses") {
  std::ostringstream out, diag;
  CHECK(run(config(Algorithm::unit, 1, "random_unit:n=4"), out, diag) == kExitConfig);
  CHECK(run(config(Algorithm::unit, 4, "random_unit:n=x"), out, diag) == kExitConfig);
  CHECK(run(config(Algorithm::unit, 4, "/nonexistent/file"), out, diag) == kExitStream);
  CHECK(run(config(Algorithm::unit, 4, "random_arbitrary:n=10,len=2..3"), out, diag) ==
        kExitStream);
  CHECK(run(config(Algorithm::cp, 4, "random_arbitrary:n=10"), out, diag) == kExitOk);
}

TEST_CASE("empty stream") {
  std::ostringstream out, diag;
  const auto path = std::string(WINSEL_GOLDEN_DIR) + "/empty.txt";
  CHECK(run(config(Algorithm::improved, 8, path), out, diag) == kExitOk);
  CHECK(out.str() == std::string(kCsvHeader) + "\n# summary steps=0 max_ratio= max_stored_intervals=0\n");
}

TEST_CASE("sampling and formats") {
  auto c = config(Algorithm::smooth, 20, "random_arbitrary:n=50,seed=2");
  c.sample_every = 10;
  std::ostringstream csv, diag;
  CHECK(run(c, csv, diag) == kExitOk);
  CHECK(count_lines(csv.str()) == 1 + 5 + 1);

  c.format = OutputFormat::jsonl;
  std::ostringstream jsonl;
  CHECK(run(c, jsonl, diag) == kExitOk);
  CHECK(count_lines(jsonl.str()) == 5 + 1);
  CHECK(jsonl.str().rfind("{\"step\":10,", 0) == 0);

  c.oracle = false;
  std::ostringstream no_oracle;
  CHECK(run(c, no_oracle, diag) == kExitOk);
  CHECK(no_oracle.str().find("\"opt_size\":null,\"ratio\":null") != std::string::npos);
}

TEST_CASE("ratio is present only with the oracle and a non-empty output") {
  auto c = config(Algorithm::unit, 5, "random_unit:n=30,range=0..20,seed=1");
  std::ostringstream out;
  drive(c, generate(c.stream), out, [](const MetricsRecord& r) {
    REQUIRE(r.opt_size.has_value());
    CHECK(r.ratio.has_value() == (r.alg_size > 0));
    if (r.ratio) CHECK(*r.ratio <= 2.0);
  });
}

TEST_CASE("unit window ratio stays within 2") {
  auto c = config(Algorithm::unit, 200, "random_unit:n=2000,range=0..100,seed=5");
  std::ostringstream out;
  const auto summary = drive(c, generate(c.stream), out);
  REQUIRE(summary.max_ratio.has_value());
  CHECK(*summary.max_ratio <= 2.0);
  CHECK(summary.steps == 2000);
}

TEST_CASE("runs are reproducible") {
  auto c = config(Algorithm::improved, 40, "random_arbitrary:n=200,seed=3");
  std::ostringstream a, b, diag;
  run(c, a, diag);
  run(c, b, diag);
  CHECK(a.str() == b.str());
}

TEST_CASE("golden CSV output") {
  const std::pair<Algorithm, const char*> cases[] = {
      {Algorithm::unit, "metrics_unit.csv"},
      {Algorithm::cp, "metrics_cp.csv"},
      {Algorithm::smooth, "metrics_smooth.csv"},
      {Algorithm::improved, "metrics_improved.csv"},
      {Algorithm::oracle, "metrics_oracle.csv"},
  };
  for (const auto& [alg, file] : cases) {
    CAPTURE(file);
    auto c = config(alg, 8, "random_unit:n=30,range=0..12,seed=7");
    std::ostringstream out, diag;
    CHECK(run(c, out, diag) == kExitOk);
    CHECK(out.str() == read_file(std::string(WINSEL_GOLDEN_DIR) + "/" + file));
  }
}
