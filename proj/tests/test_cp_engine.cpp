#include <doctest.h>

#include <cmath>

#include "support/brute_force.hpp"
#include "winsel/cp_engine.hpp"
#include "winsel/errors.hpp"
#include "winsel/gadgets.hpp"

using namespace winsel;

namespace {

CpEngine feed(CpEngine cp, const IntervalSet& stream) {
  for (const auto& i : stream) {
    cp.process(i);
    cp.check_invariants();
  }
  return cp;
}

CpEngine feed(const IntervalSet& stream) { return feed(CpEngine{}, stream); }

}  // namespace

TEST_CASE("fresh engine covers the line") {
  CpEngine cp;
  CHECK(cp.solution_size() == 0);
  CHECK(cp.solution().empty());
  REQUIRE(cp.region_count() == 1);
  CHECK(std::isinf(cp.regions()[0].low.pos));
  CHECK(std::isinf(cp.regions()[0].high.pos));
  CHECK(cp.regions()[0].virgin());
}

TEST_CASE("nested then disjoint intervals") {
  const IntervalSet s{{0, 10, 0}, {0, 1, 1}, {9, 10, 2}};
  const auto cp = feed(s);
  REQUIRE(cp.region_count() == 2);
  CHECK(cp.solution() == IntervalSet{{0, 1, 1}, {9, 10, 2}});
  CHECK(cp.solution_size() == testing::brute_force_mis_size(s));
  // The cut sits on the right end of [0,1] and belongs to the left region.
  CHECK(cp.regions()[0].high == Bound{1.0, true});
  CHECK(cp.regions()[1].low == Bound{1.0, false});
}

TEST_CASE("split to the left of the witnesses") {
  const auto cp = feed(IntervalSet{{5, 6, 0}, {1, 2, 1}});
  REQUIRE(cp.region_count() == 2);
  CHECK(cp.regions()[0].high.pos == 2.0);
  CHECK(cp.solution() == IntervalSet{{1, 2, 1}, {5, 6, 0}});
}

TEST_CASE("intervals crossing a boundary are ignored") {
  auto cp = feed(IntervalSet{{0, 1, 0}, {2, 3, 1}});
  REQUIRE(cp.region_count() == 2);
  const auto before = cp.stored_intervals();
  cp.process({0.5, 2.5, 2});
  CHECK(cp.region_count() == 2);
  CHECK(cp.stored_intervals() == before);
  CHECK(cp.processed() == 3);
}

TEST_CASE("touching intervals do not split") {
  const auto cp = feed(IntervalSet{{0, 1, 0}, {1, 2, 1}});
  CHECK(cp.region_count() == 1);
  CHECK(cp.solution_size() == 1);
}

TEST_CASE("point intervals") {
  const auto cp = feed(IntervalSet{{1, 1, 0}, {1, 1, 1}, {0, 0, 2}, {2, 2, 3}});
  CHECK(cp.solution_size() == 3);
}

TEST_CASE("witness updates inside the triple intersection") {
  const auto cp = feed(IntervalSet{{0, 10, 0}, {2, 8, 1}, {1, 4, 2}, {3, 5, 3}});
  REQUIRE(cp.region_count() == 1);
  CHECK(cp.regions()[0].leftmost == Interval{1, 4, 2});
  CHECK(cp.regions()[0].rightmost == Interval{3, 5, 3});
}

TEST_CASE("a split keeps old witnesses that still fit") {
  // Witnesses [24,30] and [30,38]; [21,22] splits off the left, and both old
  // witnesses remain inside the right half.
  auto cp = feed(IntervalSet{{20, 40, 0}, {24, 30, 1}, {30, 38, 2}, {21, 22, 3}});
  REQUIRE(cp.region_count() == 2);
  CHECK(cp.regions()[1].leftmost == Interval{24, 30, 1});
  CHECK(cp.regions()[1].rightmost == Interval{30, 38, 2});
  // Disjoint from [24,30], so it must not join that region's witnesses.
  cp.process({33, 35, 4});
  CHECK(cp.region_count() == 3);

  // A witness that sticks out of the half is replaced by the other one.
  const auto out = feed(IntervalSet{{10, 20, 0}, {5, 11, 1}, {4, 6, 2}});
  REQUIRE(out.region_count() == 2);
  CHECK(out.regions()[1].leftmost == Interval{10, 20, 0});
  CHECK(out.regions()[1].rightmost == Interval{10, 20, 0});
}

TEST_CASE("restricted domain ignores outside intervals") {
  Region domain{Bound{0, true}, Bound{5, false}, Interval{1, 2, 0}, Interval{1, 2, 0}};
  CpEngine cp(domain);
  CHECK(cp.region_count() == 1);
  CHECK(cp.regions()[0].virgin());
  cp.process({4, 5, 0});
  cp.process({-1, 1, 1});
  CHECK(cp.solution_size() == 0);
  cp.process({1, 2, 2});
  cp.process({3, 4, 3});
  CHECK(cp.solution_size() == 2);
  cp.check_invariants();
}

TEST_CASE("locate") {
  const auto cp = feed(IntervalSet{{0, 1, 0}, {2, 3, 1}});
  CHECK(cp.locate(1.0) == 0u);
  CHECK(cp.locate(1.0000001) == 1u);
  CHECK(cp.locate(-1e300) == 0u);
  CHECK(cp.region_containing({0, 1.5, 9}) == std::nullopt);
  Region domain{Bound{0, true}, Bound{5, false}, std::nullopt, std::nullopt};
  CpEngine restricted(domain);
  CHECK(restricted.locate(5.0) == std::nullopt);
  CHECK(restricted.locate(0.0) == 0u);
}

TEST_CASE("hard instance stream A") {
  const auto s = gen_appendix_hard(3);
  // A1 alone gives the unit regions ending at 2, 3 and the unbounded rest.
  CHECK(feed(s.a1).region_count() == 3);
  // A3's last interval is disjoint from A2's last one within the final
  // region, so any partition obeying C1 must cut there as well.
  const auto a = feed(s.a());
  CHECK(a.region_count() == 4);
  CHECK(feed(a, s.b).solution_size() == a.solution_size());
}

TEST_CASE("hard instance stream B alone") {
  for (std::size_t l : {3u, 30u}) {
    const auto s = gen_appendix_hard(l);
    const auto b = feed(s.b);
    CHECK(b.solution_size() == l);
    CHECK(feed(b, s.c()).solution_size() == l);
  }
}

TEST_CASE("region partition properties on random streams") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto stream = gen_random_arbitrary(16, 0, 40, 0.1, 12, seed);
    CpEngine cp;
    std::size_t regions = 1;
    for (std::size_t t = 0; t < stream.size(); ++t) {
      cp.process(stream[t]);
      cp.check_invariants();
      CHECK(cp.region_count() >= regions);
      regions = cp.region_count();

      for (const auto& r : cp.regions()) {
        REQUIRE_FALSE(r.virgin());
        CHECK(intersects(*r.leftmost, *r.rightmost));
        CHECK(r.contains(*r.leftmost));
        CHECK(r.contains(*r.rightmost));
      }
    }
    const auto opt = testing::brute_force_mis_size(stream);
    const auto sol = cp.solution();
    CHECK(is_independent(sol));
    CHECK(2 * sol.size() >= opt + 1);
    CHECK(cp.stored_intervals() <= 2 * sol.size());
  }
}
