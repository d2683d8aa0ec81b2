#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "mergesplit/partition.hpp"
#include "mergesplit/relation.hpp"

namespace mergesplit {

enum class MoveKind { merge, split };

std::string_view to_string(MoveKind kind) noexcept;

/// One rule application. `parts` are the coalitions T_1..T_k of the rule:
/// for a merge, the (at least two) current blocks that fuse; for a split,
/// the (at least two) pieces the block union(parts) breaks into.
struct Move {
  MoveKind kind = MoveKind::merge;
  std::vector<PlayerSet> parts;

  PlayerSet merged() const noexcept;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Every applicable merge and split, merges first. Merges are ordered by the
/// lexicographic order of their block-index lists, splits by block and then
/// by the restricted-growth order of the pieces.
/// Errors: inadmissible_order, not_a_partition.
std::vector<Move> applicable_moves(const Partition& p, const ComparisonRelation& rel);

/// Applies a move without checking the relation. Errors: invalid_move when
/// the move does not match the blocks of p.
Partition apply_move(const Partition& p, const Move& move);

struct Schedule {
  enum class Kind { first, random };
  Kind kind = Kind::first;
  std::uint64_t seed = 0;

  static Schedule first_applicable() { return {Kind::first, 0}; }
  static Schedule random(std::uint64_t seed) { return {Kind::random, seed}; }
};

struct TraceStep {
  Move move;
  Partition result;
};

struct MoveTrace {
  Partition start;
  std::vector<TraceStep> steps;
  Partition terminal;
};

/// Bell number B(n); B(0) = 1. Errors: overflow above n = 25.
std::uint64_t bell_number(int n);

/// Applies moves chosen by `schedule` until none is applicable.
///
/// A comparison relation makes every run strictly descending, so it ends
/// within B(n) - 1 steps; `cap` defaults to that bound and a revisited
/// partition or a longer run raises Errc::cap_exceeded, which signals a
/// relation that is not a comparison relation.
MoveTrace iterate(const Partition& start, const ComparisonRelation& rel, Schedule schedule = {},
                  std::optional<std::uint64_t> cap = std::nullopt);

/// Every terminal partition reachable from `start`, sorted. Exhaustive DFS
/// over the move graph, memoized on partitions.
std::vector<Partition> all_terminal_outcomes(const Partition& start, const ComparisonRelation& rel);

/// Checks a trace against the relation: consecutive partitions related by
/// the move, each rewrite locally preferred ({union} over the merged blocks,
/// the pieces over the split block), each result preferred to its
/// predecessor as a whole partition, no repeats, and a terminal with no
/// applicable move. Under m2 local preference implies the whole-partition
/// one; `descending` reports the latter directly.
struct TraceCheck {
  bool repeat_free = true;
  bool locally_descending = true;
  bool descending = true;
  bool moves_consistent = true;
  bool terminal_closed = true;

  bool ok() const noexcept {
    return repeat_free && locally_descending && descending && moves_consistent && terminal_closed;
  }
};
TraceCheck check_trace(const MoveTrace& trace, const ComparisonRelation& rel);

/// JSON lines: {"start":...}, one {"move","blocks","result"} per step, then
/// {"terminal":...,"steps":K}.
void write_trace_jsonl(std::ostream& out, const MoveTrace& trace);

}  // namespace mergesplit
