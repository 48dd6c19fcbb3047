#include <doctest.h>

#include "support/brute_force.hpp"
#include "winsel/errors.hpp"
#include "winsel/gadgets.hpp"
#include "winsel/window_buffer.hpp"

using namespace winsel;

TEST_CASE("FIFO eviction") {
  WindowBuffer w(2);
  const Interval a{0, 1, 0}, b{2, 3, 1}, c{4, 5, 2};
  w.push(a);
  CHECK(w.contents().size() == 1);
  CHECK(w.contents().front() == a);
  w.push(b);
  w.push(c);
  REQUIRE(w.contents().size() == 2);
  CHECK(w.contents()[0] == b);
  CHECK(w.contents()[1] == c);
}

TEST_CASE("capacity bound") {
  WindowBuffer w(100);
  for (std::uint64_t i = 0; i < 1000; ++i) w.push(Interval{0, 1, i});
  CHECK(w.contents().size() == 100);
  CHECK(w.next_arrival() == 1000);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(WindowBuffer(0), std::invalid_argument);
  WindowBuffer w(3);
  CHECK_THROWS_AS(w.push(Interval{0, 1, 1}), OutOfOrderArrival);
  w.push(Interval{0, 1, 0});
  CHECK_THROWS_AS(w.push(Interval{0, 1, 0}), OutOfOrderArrival);
}

TEST_CASE("window OPT") {
  WindowBuffer w(5);
  CHECK(w.window_opt_size() == 0);
  CHECK(w.window_opt().empty());
}

TEST_CASE("window OPT on the unit index gadget") {
  const std::size_t L = 16;
  BitString x(L - 2, false);
  x[4] = true;
  for (std::size_t j : {5u, 6u}) {
    WindowBuffer w(L);
    for (const auto& i : gen_unit_index(x, j, L)) w.push(i);
    CHECK(w.window_opt_size() == (x[j - 1] ? 2u : 1u));
  }
}

TEST_CASE("window OPT on the chained gadget with answer bit 0") {
  const std::size_t L = 20;  // n = 6
  BitString x1(6, true), x2(6, true);
  x1[1] = false;
  x2[3] = false;
  WindowBuffer w(L);
  for (const auto& i : gen_chain3(x1, x2, 2, 4, L)) w.push(i);
  CHECK(w.window_opt_size() == 2);
}

TEST_CASE("window OPT agrees with brute force on every prefix") {
  const auto stream = gen_random_arbitrary(60, 0, 30, 0.2, 5, 11);
  WindowBuffer w(10);
  for (std::size_t t = 0; t < stream.size(); ++t) {
    w.push(stream[t]);
    const auto win = testing::window_at(stream, t + 1, 10);
    CHECK(w.window_opt_size() == testing::brute_force_mis_size(win));
  }
}
