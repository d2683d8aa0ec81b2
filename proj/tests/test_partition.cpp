#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mergesplit/engine.hpp"
#include "mergesplit/error.hpp"
#include "mergesplit/partition.hpp"
#include "support/oracles.hpp"

using namespace mergesplit;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("player sets") {
  const PlayerSet s = PlayerSet::of({4, 1, 2});
  CHECK(s.mask() == 0b1011u);
  CHECK(s.size() == 3);
  CHECK(s.min_player() == 1);
  CHECK(s.max_player() == 4);
  CHECK(s.str() == "1,2,4");
  CHECK(s.members() == std::vector<PlayerId>{1, 2, 4});
  CHECK(PlayerSet::grand(3) == PlayerSet::of({1, 2, 3}));
  CHECK((s - PlayerSet::singleton(2)) == PlayerSet::of({1, 4}));
  CHECK(PlayerSet::singleton(3).subset_of(PlayerSet::grand(3)));
  CHECK_FALSE(PlayerSet::singleton(4).subset_of(PlayerSet::grand(3)));
  CHECK(PlayerSet{}.min_player() == 0);
}

TEST_CASE("collections are canonical regardless of input order") {
  const Collection a = make_collection({{3}, {2, 1}}, 3);
  const Collection b = make_collection({{1, 2}, {3}}, 3);
  CHECK(a == b);
  CHECK(a.literal() == "1,2|3");
  CHECK(make_collection({{5, 4}, {3, 1}, {2}}, 5).literal() == "1,3|2|4,5");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition p = oracle::random_partition(rng, 6);
    std::vector<PlayerSet> shuffled(p.blocks().begin(), p.blocks().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(Collection::from_sets(shuffled) == p);
  }
}

TEST_CASE("collection validation") {
  CHECK(code_of([] { (void)make_collection({{1}, {}}, 3); }) == Errc::empty_block);
  CHECK(code_of([] { (void)make_collection({{1, 2}, {2, 3}}, 3); }) == Errc::overlap);
  CHECK(code_of([] { (void)make_collection({{1, 4}}, 3); }) == Errc::out_of_range);
  CHECK(code_of([] { (void)make_collection({{0}}, 3); }) == Errc::out_of_range);
  CHECK(code_of([] { require_partition_of(make_collection({{1}}, 2), PlayerSet::grand(2)); }) ==
        Errc::not_a_partition);
  CHECK(code_of([] { check_player_count(17); }) == Errc::too_many_players);
  CHECK(code_of([] { check_player_count(0); }) == Errc::invalid_argument);
}

TEST_CASE("block lookup and support") {
  const Collection c = make_collection({{1, 2}, {4}}, 4);
  CHECK(c.support() == PlayerSet::of({1, 2, 4}));
  CHECK(support(c) == c.support());
  CHECK(c.block_of(2) == PlayerSet::of({1, 2}));
  CHECK(c.block_of(3).empty());
  CHECK(c.contains_block(PlayerSet::singleton(4)));
  CHECK_FALSE(c.contains_block(PlayerSet::singleton(1)));
}

TEST_CASE("literal parsing") {
  CHECK(parse_collection_literal(" 1 , 2 | 3 ", 3) == make_collection({{1, 2}, {3}}, 3));
  CHECK(parse_collection_literal("2", 3).literal() == "2");
  CHECK(parse_partition_literal("3|1,2", 3).literal() == "1,2|3");
  CHECK(code_of([] { (void)parse_collection_literal("1,|2", 3); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_collection_literal("1;2", 3); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_collection_literal("", 3); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_collection_literal("1|1", 3); }) == Errc::overlap);
  CHECK(code_of([] { (void)parse_collection_literal("1|7", 3); }) == Errc::out_of_range);
  CHECK(code_of([] { (void)parse_partition_literal("1|2", 3); }) == Errc::not_a_partition);
}

TEST_CASE("literal round-trip over every collection of 4 players") {
  for (const Collection& c : all_collections(4)) {
    CHECK(parse_collection_literal(c.literal(), 4) == c);
  }
}

TEST_CASE("join of disjoint collections") {
  const Collection a = make_collection({{1, 3}}, 4);
  const Collection b = make_collection({{2}, {4}}, 4);
  CHECK(join(a, b).literal() == "1,3|2|4");
  CHECK(code_of([&] { (void)join(a, a); }) == Errc::invalid_argument);
}

TEST_CASE("frame intersects partition blocks with the support") {
  const Partition p = make_collection({{1, 2}, {3, 4}}, 4);
  CHECK(frame(make_collection({{1, 3}}, 4), p).literal() == "1|3");
  CHECK(frame(make_collection({{1}, {2}}, 4), p).literal() == "1,2");
  CHECK(frame(make_collection({{1, 2, 3, 4}}, 4), p) == p);
  CHECK(frame(make_collection({{3}}, 4), p).literal() == "3");
}

TEST_CASE("compatibility") {
  const Partition p = make_collection({{1, 2}, {3}}, 3);
  CHECK(is_compatible(PlayerSet::of({1, 2}), p));
  CHECK(is_compatible(PlayerSet::of({2}), p));
  CHECK_FALSE(is_compatible(PlayerSet::of({2, 3}), p));
}

TEST_CASE("partition enumeration order") {
  const auto parts = all_partitions(PlayerSet::grand(3));
  REQUIRE(parts.size() == 5);
  CHECK(parts.front().literal() == "1,2,3");
  CHECK(parts.back().literal() == "1|2|3");
  CHECK(all_partitions(PlayerSet::of({2, 5})).front().literal() == "2,5");
}

TEST_CASE("partition counts are Bell numbers and match the recursive oracle") {
  const std::uint64_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto parts = all_partitions(PlayerSet::grand(n));
    CHECK(parts.size() == bell[n - 1]);
    CHECK(bell_number(n) == bell[n - 1]);
    CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
    if (n <= 6) {
      std::set<Partition> expected;
      for (const auto& blocks : oracle::set_partitions(oracle::range(n))) {
        expected.insert(make_collection(blocks, n));
      }
      CHECK(std::set<Partition>(parts.begin(), parts.end()) == expected);
    }
  }
  CHECK(bell_number(0) == 1);
  CHECK(code_of([] { (void)bell_number(26); }) == Errc::overflow);
}

TEST_CASE("collection counts are B(n+1) - 1") {
  CHECK(all_collections(1).size() == 1);
  CHECK(all_collections(2).size() == 4);
  CHECK(all_collections(3).size() == 14);
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_collections(n);
    CHECK(all.size() == bell_number(n + 1) - 1);
    CHECK(std::set<Collection>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("frame fixes exactly the collections whose blocks sit in distinct blocks") {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = all_partitions(PlayerSet::grand(n));
    const auto colls = all_collections(n);
    for (const Partition& p : parts) {
      for (const Collection& c : colls) {
        REQUIRE((frame(c, p) == c) == oracle::blocks_in_distinct_blocks(c, p));
      }
    }
  }
}
